"""Rational power series supported on lattice cones.

A term is  coeff * sum_{k in cone & N^I_{>0}} L^{-v(k)} T^{l(k)};  a series is
a formal sum of terms.  Coefficient extraction enumerates the (compact) fiber
{l(k)=n} exactly; the T->infinity limit of a term is coeff * chi(cone).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil, floor

from .cones import (Cone, Constraint, EQ, axis_bounds, chi, cone_rows,
                    _rows_feasible)
from .errors import InvalidDegree, NotSummable
from .laurent import LaurentPoly
from .ring import MotivicClass


def _degree_positive_on_closure(cone: Cone, degree) -> bool:
    """True iff the degree form is strictly positive on closure(cone) minus 0.

    Checked as infeasibility of: relaxed cone constraints within the closed
    orthant, degree <= 0, and sum k_i > 0.
    """
    nvars = cone.nvars
    rows = cone_rows(cone, closed=True)
    rows.append((tuple(-c for c in degree), 0, False))        # degree <= 0
    rows.append((tuple(1 for _ in range(nvars)), 0, True))    # k != 0 in the closed orthant
    return not _rows_feasible(rows, nvars)


@dataclass(frozen=True)
class ConeTerm:
    coeff: MotivicClass
    cone: Cone
    degree: tuple  # linear form l
    weight: tuple  # linear form v

    def __post_init__(self):
        object.__setattr__(self, "degree", tuple(int(c) for c in self.degree))
        object.__setattr__(self, "weight", tuple(int(c) for c in self.weight))
        n = self.cone.nvars
        if len(self.degree) != n or len(self.weight) != n:
            raise InvalidDegree("degree/weight arity does not match the cone")
        if not _degree_positive_on_closure(self.cone, self.degree):
            raise NotSummable("degree form is not strictly positive on the cone closure")

    def lattice_points(self, n: int):
        """Integer points k >= 1 of the cone with degree(k) = n."""
        nvars = self.cone.nvars
        rows = list(cone_rows(self.cone))
        rows.append((self.degree, -n, False))
        rows.append((tuple(-c for c in self.degree), n, False))
        # integrality: k_i >= 1
        for i in range(nvars):
            e = tuple(1 if j == i else 0 for j in range(nvars))
            rows.append((e, -1, False))
        yield from _enumerate_integer_points(rows, nvars, ())

    def coefficient(self, n: int) -> MotivicClass:
        total = LaurentPoly.zero()
        for k in self.lattice_points(n):
            v = sum(c * x for c, x in zip(self.weight, k))
            total = total + LaurentPoly.L(-v)
        return self.coeff.scale(total)

    def limit(self) -> MotivicClass:
        return self.coeff.scale_int(chi(self.cone))


def _enumerate_integer_points(rows, nvars, prefix):
    if nvars == 0:
        if all(const > 0 or (const == 0 and not strict) for _, const, strict in rows):
            yield prefix
        return
    bounds = axis_bounds(rows, nvars, 0)
    if bounds is None:
        return
    lo, hi = bounds
    if lo is None or hi is None:
        raise NotSummable("unbounded fiber during coefficient enumeration")
    for val in range(ceil(lo), floor(hi) + 1):
        sub = [(coeffs[1:], const + coeffs[0] * val, strict) for coeffs, const, strict in rows]
        yield from _enumerate_integer_points(sub, nvars - 1, prefix + (val,))


@dataclass(frozen=True)
class ConeSeries:
    terms: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))

    @property
    def base(self) -> str:
        for t in self.terms:
            return t.coeff.base
        return "k"

    def coefficient(self, n: int) -> MotivicClass:
        if n < 1:
            raise InvalidDegree("coefficients are indexed by n >= 1")
        total = MotivicClass.zero(self.base)
        for t in self.terms:
            total = total + t.coefficient(n)
        return total

    def limit(self) -> MotivicClass:
        total = MotivicClass.zero(self.base)
        for t in self.terms:
            total = total + t.limit()
        return total

    def __add__(self, other: "ConeSeries") -> "ConeSeries":
        return ConeSeries(self.terms + other.terms)

    def scale(self, poly: LaurentPoly) -> "ConeSeries":
        return ConeSeries(tuple(
            ConeTerm(t.coeff.scale(poly), t.cone, t.degree, t.weight) for t in self.terms))

    def scale_class(self, cls: MotivicClass) -> "ConeSeries":
        return ConeSeries(tuple(
            ConeTerm(cls * t.coeff, t.cone, t.degree, t.weight) for t in self.terms))

    def __mul__(self, other: "ConeSeries") -> "ConeSeries":
        """Cauchy product in T: product cones, degrees and weights concatenate."""
        out = []
        for t1 in self.terms:
            for t2 in other.terms:
                out.append(_pair_term(t1, t2, fiber=False))
        return ConeSeries(tuple(out))

    def hadamard(self, other: "ConeSeries") -> "ConeSeries":
        """Coefficientwise product: pair terms over the fiber {l1(k) = l2(k')}."""
        out = []
        for t1 in self.terms:
            for t2 in other.terms:
                out.append(_pair_term(t1, t2, fiber=True))
        return ConeSeries(tuple(out))

    def render(self) -> str:
        if not self.terms:
            return "0"
        lines = []
        for t in self.terms:
            cons = ", ".join(
                f"{_form_str(c.coeffs, t.cone.vars)} {c.rel} 0" for c in t.cone.constraints)
            cons = f" with {cons}" if cons else ""
            lines.append(
                f"({t.coeff.render()}) · Σ_{{k∈Δ({','.join(t.cone.vars)})}} "
                f"L^-({_form_str(t.weight, t.cone.vars)}) T^({_form_str(t.degree, t.cone.vars)})"
                f"{cons}")
        return "\n".join(lines)


def _form_str(coeffs, names):
    parts = []
    for c, v in zip(coeffs, names):
        if c == 0:
            continue
        parts.append(f"{c}{v}" if c != 1 else v)
    return " + ".join(parts) if parts else "0"


def _pair_term(t1: ConeTerm, t2: ConeTerm, fiber: bool) -> ConeTerm:
    n1, n2 = t1.cone.nvars, t2.cone.nvars
    vars = tuple(f"{v}'" for v in t1.cone.vars) + tuple(f"{v}''" for v in t2.cone.vars)
    constraints = [Constraint(c.coeffs + (0,) * n2, c.rel) for c in t1.cone.constraints]
    constraints += [Constraint((0,) * n1 + c.coeffs, c.rel) for c in t2.cone.constraints]
    if fiber:
        glue = t1.degree + tuple(-c for c in t2.degree)
        constraints.append(Constraint(glue, EQ))
        degree = t1.degree + (0,) * n2
    else:
        degree = t1.degree + t2.degree
    weight = t1.weight + t2.weight
    return ConeTerm(t1.coeff * t2.coeff, Cone(vars, tuple(constraints)), degree, weight)


def geom(a: int, b: int, base: str = "k") -> ConeSeries:
    """The elementary series L^a T^b / (1 - L^a T^b) as a one-variable cone term."""
    if b < 1:
        raise InvalidDegree(f"geom requires b >= 1, got {b}")
    term = ConeTerm(MotivicClass.unit(base), Cone(("k",)), (b,), (-a,))
    return ConeSeries((term,))


def orthant_product(pairs, coeff: MotivicClass) -> ConeSeries:
    """coeff * prod_i L^{a_i} T^{b_i} / (1 - L^{a_i} T^{b_i}) over the open orthant.

    `pairs` is a sequence of (a_i, b_i) with b_i >= 1.
    """
    pairs = list(pairs)
    for a, b in pairs:
        if b < 1:
            raise InvalidDegree(f"orthant_product requires b >= 1, got {b}")
    vars = tuple(f"k{i + 1}" for i in range(len(pairs)))
    degree = tuple(b for _, b in pairs)
    weight = tuple(-a for a, _ in pairs)
    return ConeSeries((ConeTerm(coeff, Cone(vars), degree, weight),))


# operation-style aliases matching the module contract

def coefficient(s: ConeSeries, n: int) -> MotivicClass:
    return s.coefficient(n)


def series_add(p: ConeSeries, q: ConeSeries) -> ConeSeries:
    return p + q


def series_mul(p: ConeSeries, q: ConeSeries) -> ConeSeries:
    return p * q


def hadamard(p: ConeSeries, q: ConeSeries) -> ConeSeries:
    return p.hadamard(q)


def limit(s: ConeSeries) -> MotivicClass:
    return s.limit()
