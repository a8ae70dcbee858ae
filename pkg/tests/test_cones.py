import random
from fractions import Fraction

import pytest

from motzeta.cones import (Cone, Constraint, axis_bounds, chi, chi_union,
                           cone_dim, cone_feasible, cone_rows, feasible,
                           restrict)
from motzeta.errors import EmptyCone


def _c(coeffs, rel=">="):
    return Constraint(coeffs, rel)


# -- the worked half-open examples ------------------------------------------


def test_chi_open_orthants():
    for d in range(1, 5):
        assert chi(Cone(tuple(f"k{i}" for i in range(d)))) == (-1) ** d


def test_chi_half_open_wedge():
    # cells {k1 > k2} (dim 2) and {k1 = k2} (dim 1) cancel
    assert chi(Cone(("k1", "k2"), (_c((1, -1)),))) == 0


def test_chi_diagonal():
    assert chi(Cone(("k1", "k2"), (_c((1, -1), "="),))) == -1


def test_chi_empty_cone_is_zero():
    c = Cone(("k1", "k2"), (_c((1, -1), ">"), _c((-1, 1), ">")))
    assert chi(c) == 0


def test_dim_with_implied_equality():
    c = Cone(("k1", "k2"), (_c((1, -1)), _c((-1, 1))))
    assert cone_dim(c) == 1
    with pytest.raises(EmptyCone):
        cone_dim(Cone(("k",), (_c((-1,), ">"),)))


def test_feasibility_examples():
    assert feasible(("k1", "k2"), (_c((1, -2), ">"),))
    assert not feasible(("k",), (_c((-1,), ">"),))
    assert cone_feasible(Cone(("k1", "k2", "k3"), (_c((1, 1, -3), "="),)))


def test_axis_bounds_exact():
    cone = Cone(("k1", "k2"), (_c((2, -3)),))  # 2k1 >= 3k2
    rows = cone_rows(cone)
    rows.append(((1, 0), -5, False))   # k1 >= 5
    rows.append(((-1, 0), 6, False))   # k1 <= 6
    lo, hi = axis_bounds(rows, 2, 1)
    assert lo == 0 and hi == Fraction(4)  # k2 <= 2/3 * 6


# -- randomized cross-checks -------------------------------------------------


def _grid_points():
    pts = []
    for p in range(1, 9):
        for q in range(1, 9):
            pts.append((Fraction(p, q), Fraction(1)))
            pts.append((Fraction(1), Fraction(p, q)))
    return pts


_GRID = _grid_points()


def _satisfies(point, constraint):
    value = sum(c * x for c, x in zip(constraint.coeffs, point))
    if constraint.rel == ">=":
        return value >= 0
    if constraint.rel == ">":
        return value > 0
    return value == 0


def test_feasibility_matches_rational_grid():
    # forms with entries in [-3, 3]: every nonempty wedge meets the grid
    rng = random.Random(7)
    for _ in range(300):
        constraints = tuple(
            _c((rng.randint(-3, 3), rng.randint(-3, 3)),
               rng.choice([">=", ">", "="]))
            for _ in range(rng.randint(1, 2)))
        cone = Cone(("k1", "k2"), constraints)
        witness = any(all(_satisfies(p, c) for c in constraints) for p in _GRID)
        assert cone_feasible(cone) == witness, cone


def test_chi_partition_additivity():
    rng = random.Random(11)
    for _ in range(100):
        nvars = rng.randint(1, 3)
        constraints = tuple(
            _c(tuple(rng.randint(-2, 2) for _ in range(nvars)),
               rng.choice([">=", ">", "="]))
            for _ in range(rng.randint(0, 2)))
        cone = Cone(tuple(f"k{i}" for i in range(nvars)), constraints)
        f = tuple(rng.randint(-2, 2) for _ in range(nvars))
        total = (chi(restrict(cone, f, ">"))
                 + chi(restrict(cone, f, "="))
                 + chi(restrict(cone, tuple(-x for x in f), ">")))
        assert chi(cone) == total, (cone, f)


def test_chi_multiplicative_on_products():
    a = Cone(("k1", "k2"), (_c((1, -1)),))
    b = Cone(("m1",), ())
    prod = Cone(("k1", "k2", "m1"),
                (_c((1, -1, 0)),))
    assert chi(prod) == chi(a) * chi(b)


def test_chi_union_inclusion_exclusion():
    # two half-planes covering the quadrant: k1 >= k2 and k2 >= k1
    a = Cone(("k1", "k2"), (_c((1, -1)),))
    b = Cone(("k1", "k2"), (_c((-1, 1)),))
    # union is the whole open quadrant, chi = 1
    assert chi_union([a, b]) == 1
    assert chi(a) + chi(b) - chi(Cone(("k1", "k2"), (_c((1, -1), "="),))) == 1
