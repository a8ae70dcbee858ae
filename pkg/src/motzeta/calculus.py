"""Per-level integrals, Poincare series, motivic volumes, zeta functions and
nearby cycles, all as exact functions of resolution combinatorics.

Conventions.  `data.d` is the pure relative dimension of the formal scheme.
For the zeta function of a power series in d ambient variables the associated
formal scheme has relative dimension d - 1, so the classical normalization
L^{d-1} P(T) is `L^{data.d} * poincare`.
"""

from __future__ import annotations

from fractions import Fraction

from .cones import Cone, Constraint, GE, GT, chi_union, cone_rows, _rows_feasible
from .errors import ConsistencyFailure, InvalidForm, MissingOrders
from .laurent import LaurentPoly, L_MINUS_ONE, ONE_MINUS_L
from .resolution import EXPLICIT, GaugeSpec, GELFAND_LERAY, ResolutionData
from .ring import MotivicClass
from .series import ConeSeries, ConeTerm, geom, orthant_product


def smooth_integral(components, d: int) -> MotivicClass:
    """Integral over a smooth formal scheme: L^{-d} sum class * L^{-ord}."""
    total = None
    for cls, ord_ in components:
        part = cls.scale(LaurentPoly.L(-d - ord_))
        total = part if total is None else total + part
    return total if total is not None else MotivicClass.zero()


def _level_sum(Ns, alphas, n: int) -> LaurentPoly:
    """sum over k_i >= 1 with sum k_i N_i = n of L^{- sum k_i alpha_i}."""
    total = LaurentPoly.zero()

    def recurse(idx, remaining, weight):
        nonlocal total
        if idx == len(Ns) - 1:
            N = Ns[idx]
            if remaining >= N and remaining % N == 0:
                k = remaining // N
                total = total + LaurentPoly.L(-(weight + k * alphas[idx]))
            return
        N = Ns[idx]
        k = 1
        while k * N <= remaining - sum(Ns[idx + 1:]):
            recurse(idx + 1, remaining - k * N, weight + k * alphas[idx])
            k += 1

    if Ns:
        recurse(0, n, 0)
    return total


def _subset_weight(size: int, closed_form: bool = False) -> LaurentPoly:
    return (ONE_MINUS_L if closed_form else L_MINUS_ONE) ** (size - 1)


def integral_at_level(data: ResolutionData, n: int, gauge: GaugeSpec = EXPLICIT) -> MotivicClass:
    """The n-th motivic integral, by exact enumeration of the level fiber."""
    total = MotivicClass.zero(data.base)
    for I, cls in data.subsets():
        Ns = [data.stratum(s).N for s in I]
        alphas = [gauge.alpha(data.stratum(s)) for s in I]
        inner = _level_sum(Ns, alphas, n)
        if inner:
            total = total + cls.scale(_subset_weight(len(I)) * inner)
    return total.scale(LaurentPoly.L(-data.d))


def poincare_series(data: ResolutionData, gauge: GaugeSpec = EXPLICIT) -> ConeSeries:
    """Volume Poincare series as a cone-supported rational series."""
    series = ConeSeries()
    for I, cls in data.subsets():
        pairs = [(-gauge.alpha(data.stratum(s)), data.stratum(s).N) for s in I]
        series = series + orthant_product(pairs, cls.scale(_subset_weight(len(I))))
    return series.scale(LaurentPoly.L(-data.d))


def motivic_volume(data: ResolutionData, gauge: GaugeSpec = EXPLICIT) -> MotivicClass:
    """Motivic volume: closed form, cross-checked against -L^d lim P(T)."""
    closed = MotivicClass.zero(data.base)
    for I, cls in data.subsets():
        closed = closed + cls.scale(_subset_weight(len(I), closed_form=True))
    via_limit = poincare_series(data, gauge).limit().scale(LaurentPoly.L(data.d)).scale_int(-1)
    if closed != via_limit:
        raise ConsistencyFailure(
            "closed-form motivic volume disagrees with -L^d lim P(T):\n"
            + closed.diff(via_limit))
    return closed


def nearby_cycles(data: ResolutionData) -> MotivicClass:
    """Motivic nearby cycles: sum over I of (1-L)^{|I|-1} [E~_I]."""
    total = MotivicClass.zero(data.base)
    for I, cls in data.subsets():
        total = total + cls.scale(_subset_weight(len(I), closed_form=True))
    return total


def _require_nu(data: ResolutionData):
    for s in data.strata:
        GELFAND_LERAY.alpha(s)  # raises MissingDiscrepancy when nu is absent


def zeta_series(data: ResolutionData) -> ConeSeries:
    """Motivic zeta function L^d P(omega/df; T), built with the Hadamard product."""
    _require_nu(data)
    nu_part = ConeSeries()
    for I, cls in data.subsets():
        pairs = [(-data.stratum(s).nu, data.stratum(s).N) for s in I]
        nu_part = nu_part + orthant_product(pairs, cls.scale(_subset_weight(len(I))))
    return geom(1, 1, base=data.base).hadamard(nu_part)


def zeta_at_level(data: ResolutionData, n: int) -> MotivicClass:
    """n-th zeta coefficient: sum over I of (L-1)^{|I|-1}[E~_I] L^{sum k_i(N_i-nu_i)}."""
    _require_nu(data)
    total = MotivicClass.zero(data.base)
    for I, cls in data.subsets():
        Ns = [data.stratum(s).N for s in I]
        weights = [data.stratum(s).nu - data.stratum(s).N for s in I]
        inner = _level_sum(Ns, weights, n)
        if inner:
            total = total + cls.scale(_subset_weight(len(I)) * inner)
    return total


# ---------------------------------------------------------------------------
# Generalized Poincare series over the lexicographic cone decomposition
# ---------------------------------------------------------------------------


def _aux_orders(data: ResolutionData):
    r = None
    for s in data.strata:
        if s.M is None:
            raise MissingOrders(f"stratum {s.id!r} carries no auxiliary orders")
        if r is None:
            r = len(s.M)
        elif len(s.M) != r:
            raise MissingOrders("auxiliary order vectors have inconsistent lengths")
    if r is None or r == 0:
        raise MissingOrders("resolution data has no strata with auxiliary orders")
    return r


def delta_cones(data: ResolutionData, gamma: Fraction, I) -> list:
    """The cones Delta_{I,1}, ..., Delta_{I,r} of the lexicographic partition.

    Delta_I = {k > 0 : min_j sum k_i M_ij <= gamma sum k_i N_i}; the l-th piece
    keeps the points where column l attains the minimum, ties broken towards
    the smallest index.
    """
    r = _aux_orders(data)
    gamma = Fraction(gamma)
    p, q = gamma.denominator, gamma.numerator
    I = tuple(I)
    Ns = [data.stratum(s).N for s in I]
    M = [data.stratum(s).M for s in I]
    cones = []
    for l in range(r):
        cons = []
        # min attained at column l and bounded by gamma * n
        cons.append(Constraint(
            tuple(q * N - p * M[i][l] for i, N in enumerate(Ns)), GE))
        for j in range(r):
            if j == l:
                continue
            diff = tuple(M[i][j] - M[i][l] for i in range(len(I)))
            cons.append(Constraint(diff, GE if j > l else GT))
        cones.append(Cone(tuple(I), tuple(cons)))
    return cones


def delta_union_chi(data: ResolutionData, gamma: Fraction, I) -> int:
    """chi of Delta_I itself (a union of the lexicographic pieces)."""
    return chi_union(delta_cones(data, gamma, I))


def _validate_ell(cone: Cone, Ns, Mcol, ell):
    """ell(n, m) must be >= 0 on the closure of the piece; else InvalidForm."""
    a, b = ell
    form = tuple(a * N + b * m for N, m in zip(Ns, Mcol))
    rows = cone_rows(cone, closed=True)
    rows.append((tuple(-c for c in form), 0, True))  # ell < 0 somewhere?
    if _rows_feasible(rows, cone.nvars):
        raise InvalidForm(f"linear form {ell} is negative on a relevant cone")


def generalized_poincare(data: ResolutionData, gamma: Fraction, ell=(0, 0),
                         gauge: GaugeSpec = EXPLICIT) -> ConeSeries:
    """P(X, omega, gamma, ell; T) over the cones Delta_{I,j}.

    `ell` is the pair (a, b) for the homogeneous form ell(n, m) = a n + b m;
    the weight on piece j is alpha_i + ell(N_i, M_ij) per variable.
    """
    r = _aux_orders(data)
    a, b = int(ell[0]), int(ell[1])
    terms = []
    for I, cls in data.subsets():
        Ns = [data.stratum(s).N for s in I]
        M = [data.stratum(s).M for s in I]
        alphas = [gauge.alpha(data.stratum(s)) for s in I]
        pieces = delta_cones(data, gamma, I)
        for j, cone in enumerate(pieces):
            Mcol = [M[i][j] for i in range(len(I))]
            _validate_ell(cone, Ns, Mcol, (a, b))
            weight = tuple(alphas[i] + a * Ns[i] + b * Mcol[i] for i in range(len(I)))
            terms.append(ConeTerm(
                cls.scale(_subset_weight(len(I))), cone, tuple(Ns), weight))
    return ConeSeries(tuple(terms)).scale(LaurentPoly.L(-data.d))


def mv_at_least(data: ResolutionData, gamma: Fraction, gauge: GaugeSpec = EXPLICIT,
                ell=(0, 0)) -> MotivicClass:
    """MV(X_{>= gamma}) = -L^d lim P(X, omega, gamma, ell; T); independent of ell."""
    series = generalized_poincare(data, gamma, ell, gauge)
    return series.limit().scale(LaurentPoly.L(data.d)).scale_int(-1)
