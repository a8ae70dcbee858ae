"""Built-in example library.

Every dataset here was derived by hand from an explicit resolution and is
re-verified by the test suite through independent oracles (per-level
enumeration, Euler specialization, limit formulas).  Derivation notes live in
the README.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .io import (DataDocument, EllDocument, HadamardDocument, IdentityDocument,
                 UnitDocument)
from .laurent import LaurentPoly
from .resolution import EXPLICIT, GELFAND_LERAY, ResolutionData, StratumDatum
from .ring import GeneratorSymbol, MotivicClass, pt

ONE = LaurentPoly.one()


def _cls(base, *terms):
    """Class from (name, mu, coeff) triples over `base`."""
    return MotivicClass(base, {GeneratorSymbol(n, m, base): c for n, m, c in terms})


@dataclass(frozen=True)
class ExampleSpec:
    name: str
    document: object  # DataDocument or one of the verification documents
    expected: dict = field(default_factory=dict)  # output name -> MotivicClass
    expected_euler: int | None = None
    note: str = ""


# ---------------------------------------------------------------------------
# balls
# ---------------------------------------------------------------------------


def ball_open(d: int) -> DataDocument:
    """Open unit polydisc of dimension d: trivial resolution, one stratum."""
    data = ResolutionData(
        d, "k",
        (StratumDatum("e", N=1, nu=1, alpha=0),),
        {("e",): _cls("k", ("pt", 1, ONE))})
    return DataDocument(data, EXPLICIT)


def ball_closed(d: int, p: int = 1) -> DataDocument:
    """Closed polydisc of radius |t^p|: the d-fold product contributes L^d
    points over the base and a gauge-form order of d*p."""
    base = f"A^{d}"
    data = ResolutionData(
        d, base,
        (StratumDatum("e", N=1, nu=1, alpha=d * p),),
        {("e",): _cls(base, ("pt", 1, LaurentPoly.L(d)))})
    return DataDocument(data, EXPLICIT)


# ---------------------------------------------------------------------------
# one-variable power series z^N
# ---------------------------------------------------------------------------


def z_power(N: int) -> DataDocument:
    """z^N in one variable: the origin with multiplicity N, cyclic cover mu_N.

    The associated formal scheme has relative dimension 0.
    """
    cover = ("pt", 1, ONE) if N == 1 else (f"mu{N}", N, ONE)
    data = ResolutionData(
        0, "k",
        (StratumDatum("o", N=N, nu=1),),
        {("o",): _cls("k", cover)})
    return DataDocument(data, GELFAND_LERAY)


# ---------------------------------------------------------------------------
# the cusp x^2 + y^3 at the origin
# ---------------------------------------------------------------------------

# Three point blow-ups resolve the cusp.  Exceptional multiplicities and
# discrepancies: E1 (N=2, nu=2), E2 (N=3, nu=3), E3 (N=6, nu=5); the strict
# transform C has (N=1, nu=1).  Open strata of the special fiber and their
# cyclic covers:
#   E1deg2, E2deg3: P^1 minus one point, degree-2 resp. degree-3 covers
#     (connected, chi = 2 resp. 3);
#   E3deg6: P^1 minus three points, degree-6 cover (chi = -6);
#   the double points E1^E3, E2^E3 carry mu_2- resp. mu_3-covers (chi = 2, 3);
#   C^E3 is a single point.  E1^E2 is empty after the final blow-up, and the
#   strict transform away from E3 carries no special-fiber class.

_CUSP_STRATA = (StratumDatum("c", 1, nu=1), StratumDatum("e1", 2, nu=2),
                StratumDatum("e2", 3, nu=3), StratumDatum("e3", 6, nu=5))

_CUSP_CHI = {"E1t": 2, "E2t": 3, "E3t": -6, "E13t": 2, "E23t": 3}


def _cusp_classes(prefix="E"):
    return {
        ("e1",): _cls("k", (f"{prefix}1t", 2, ONE)),
        ("e2",): _cls("k", (f"{prefix}2t", 3, ONE)),
        ("e3",): _cls("k", (f"{prefix}3t", 6, ONE)),
        ("e1", "e3"): _cls("k", (f"{prefix}13t", 2, ONE)),
        ("e2", "e3"): _cls("k", (f"{prefix}23t", 3, ONE)),
        ("c", "e3"): _cls("k", ("pt", 1, ONE)),
    }


def cusp() -> DataDocument:
    data = ResolutionData(1, "k", _CUSP_STRATA, _cusp_classes())
    return DataDocument(data, GELFAND_LERAY, dict(_CUSP_CHI))


def cusp_with_orders() -> DataDocument:
    """Cusp decorated with the orders of the auxiliary pair g = (x, y)."""
    strata = (StratumDatum("c", 1, nu=1, M=(0, 0)),
              StratumDatum("e1", 2, nu=2, M=(1, 1)),
              StratumDatum("e2", 3, nu=3, M=(2, 1)),
              StratumDatum("e3", 6, nu=5, M=(3, 2)))
    data = ResolutionData(1, "k", strata, _cusp_classes())
    return DataDocument(data, GELFAND_LERAY, dict(_CUSP_CHI))


def cusp_unit_twisted() -> UnitDocument:
    """The cusp versus a unit multiple: same combinatorics, renamed covers."""
    a = ResolutionData(1, "k", _CUSP_STRATA, _cusp_classes("E"))
    b = ResolutionData(1, "k", _CUSP_STRATA, _cusp_classes("F"))
    ident = {"E1t": "F1t", "E2t": "F2t", "E3t": "F3t",
             "E13t": "F13t", "E23t": "F23t", "pt": "pt"}
    return UnitDocument(a, b, ident)


def _cusp_nearby() -> MotivicClass:
    one_minus_l = LaurentPoly({0: 1, 1: -1})
    return _cls("k",
                ("E1t", 2, ONE), ("E2t", 3, ONE), ("E3t", 6, ONE),
                ("E13t", 2, one_minus_l), ("E23t", 3, one_minus_l),
                ("pt", 1, one_minus_l))


# ---------------------------------------------------------------------------
# integral-identity instances for f = xy + z^N
# ---------------------------------------------------------------------------

# data_f lives over the ambient plane A^2 = Spec k[x, y] degenerated to the
# base point; classes were computed by direct stratification of the special
# fiber after resolving xy + z^N = 0 by point/curve blow-ups.  data_ftilde is
# the z^N dataset above.  Both are expressed over the shared alphabet
# {pt, mu2, mu3} so the two sides are comparable verbatim.


def _identity_f_data(N: int) -> ResolutionData:
    L1 = LaurentPoly.L(1)
    if N == 1:
        # smooth: the special fiber is the plane itself
        return ResolutionData(
            2, "k",
            (StratumDatum("c", 1, nu=1),),
            {("c",): _cls("k", ("pt", 1, LaurentPoly.L(1)))})
    if N == 2:
        # one point blow-up; exceptional quadric E with (N, nu) = (2, 3)
        return ResolutionData(
            2, "k",
            (StratumDatum("c", 1, nu=1), StratumDatum("e", 2, nu=3)),
            {("c",): _cls("k", ("pt", 1, LaurentPoly({2: 1, 0: -1}))),
             ("e",): _cls("k", ("mu2", 2, L1)),
             ("c", "e"): _cls("k", ("pt", 1, LaurentPoly({1: 1, 0: 1})))})
    if N == 3:
        # point blow-up then a blow-up along the residual conic
        return ResolutionData(
            2, "k",
            (StratumDatum("c", 1, nu=1), StratumDatum("e1", 2, nu=3),
             StratumDatum("e2", 3, nu=4)),
            {("c",): _cls("k", ("pt", 1, LaurentPoly({2: 1, 0: -1}))),
             ("e1",): _cls("k", ("pt", 1, LaurentPoly({2: 1, 1: -1}))),
             ("e2",): _cls("k", ("mu3", 3, L1)),
             ("c", "e1"): _cls("k", ("pt", 1, L1)),
             ("c", "e2"): _cls("k", ("pt", 1, L1)),
             ("e1", "e2"): _cls("k", ("pt", 1, L1)),
             ("c", "e1", "e2"): _cls("k", ("pt", 1, ONE))})
    raise ValueError(f"no identity instance for N = {N}")


def identity_instance(N: int) -> IdentityDocument:
    return IdentityDocument(1, _identity_f_data(N), z_power(N).data)


# ---------------------------------------------------------------------------
# cones with auxiliary orders
# ---------------------------------------------------------------------------


def telescoping() -> EllDocument:
    """Single stratum with N = 1, M = 1 at gamma = 1: the piece where the
    auxiliary order is dominated by the main one; limits agree for every
    admissible linear form."""
    data = ResolutionData(
        1, "k",
        (StratumDatum("e", 1, nu=1, alpha=0, M=(1,)),),
        {("e",): _cls("k", ("pt", 1, ONE))})
    doc = DataDocument(data, EXPLICIT)
    return EllDocument(doc, Fraction(1), ((0, 0), (0, 1), (2, -1)))


def cusp_ell() -> EllDocument:
    return EllDocument(cusp_with_orders(), Fraction(2), ((0, 0), (0, 1), (2, -1)))


def ball_pair() -> HadamardDocument:
    return HadamardDocument(ball_closed(1, 1), ball_closed(1, 1))


def mixed_ball_pair() -> HadamardDocument:
    return HadamardDocument(ball_closed(1, 1), ball_open(1))


def cusp_ball_pair() -> HadamardDocument:
    return HadamardDocument(cusp(), ball_closed(1, 1))


# ---------------------------------------------------------------------------
# registry
# ---------------------------------------------------------------------------


def _mu_class(N):
    return _cls("k", ("pt", 1, ONE)) if N == 1 else _cls("k", (f"mu{N}", N, ONE))


def _build_registry():
    specs = []
    for d in range(1, 6):
        specs.append(ExampleSpec(
            f"ball_open_{d}",
            ball_open(d),
            expected={"mv": _cls("k", ("pt", 1, ONE))},
            expected_euler=1,
            note="open unit polydisc; motivic volume 1"))
    for d in range(1, 6):
        specs.append(ExampleSpec(
            f"ball_closed_{d}",
            ball_closed(d, 2),
            expected={"mv": _cls(f"A^{d}", ("pt", 1, LaurentPoly.L(d)))},
            expected_euler=1,
            note="closed polydisc of radius |t^2|; motivic volume L^d"))
    for N in (1, 2, 3, 6):
        specs.append(ExampleSpec(
            f"z_pow_{N}",
            z_power(N),
            expected={"nearby": _mu_class(N)},
            expected_euler=N,
            note="one-variable power series z^N"))
    specs.append(ExampleSpec(
        "cusp",
        cusp(),
        expected={"nearby": _cusp_nearby()},
        expected_euler=-1,
        note="cusp x^2 + y^3; three point blow-ups"))
    specs.append(ExampleSpec(
        "cusp_with_orders",
        cusp_with_orders(),
        expected={"nearby": _cusp_nearby()},
        expected_euler=-1,
        note="cusp with auxiliary orders of g = (x, y)"))
    specs.append(ExampleSpec(
        "cusp_unit_twisted",
        cusp_unit_twisted(),
        note="cusp versus a unit multiple; renamed covers"))
    for N in (1, 2, 3):
        specs.append(ExampleSpec(
            f"xy_plus_z{N}",
            identity_instance(N),
            note=f"integral-identity instance for xy + z^{N}"))
    specs.append(ExampleSpec(
        "telescoping", telescoping(),
        note="single-stratum limit-comparison instance at gamma = 1"))
    specs.append(ExampleSpec(
        "cusp_ell", cusp_ell(),
        note="linear-form independence on the decorated cusp"))
    specs.append(ExampleSpec(
        "ball_pair", ball_pair(),
        note="product of two closed unit balls"))
    specs.append(ExampleSpec(
        "mixed_ball_pair", mixed_ball_pair(),
        note="closed ball times open ball"))
    specs.append(ExampleSpec(
        "cusp_ball_pair", cusp_ball_pair(),
        note="cusp times closed unit ball"))
    return {spec.name: spec for spec in specs}


REGISTRY = _build_registry()


def get_example(name: str) -> ExampleSpec:
    return REGISTRY[name]
