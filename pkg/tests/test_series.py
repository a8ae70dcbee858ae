import random

import pytest

from motzeta.cones import Cone, Constraint
from motzeta.errors import InvalidDegree, NotSummable
from motzeta.laurent import LaurentPoly
from motzeta.ring import GeneratorSymbol, MotivicClass
from motzeta.series import ConeSeries, ConeTerm, geom, orthant_product


def _unit_class(exp=0):
    return MotivicClass("k", {GeneratorSymbol("pt", 1, "k"): LaurentPoly.L(exp)})


def test_geom_coefficients():
    # L^a T^b / (1 - L^a T^b): coefficient at n = kb is L^{ka}
    g = geom(2, 3)
    assert g.coefficient(6) == _unit_class(4)
    assert g.coefficient(5) == MotivicClass.zero()
    assert g.coefficient(3) == _unit_class(2)
    assert geom(-1, 1).coefficient(4) == _unit_class(-4)


def test_geom_rejects_nonpositive_degree():
    with pytest.raises(InvalidDegree):
        geom(1, 0)
    with pytest.raises(InvalidDegree):
        geom(1, 1).coefficient(0)


def test_degree_must_be_positive_on_closure():
    with pytest.raises(NotSummable):
        ConeTerm(_unit_class(), Cone(("k1", "k2")), (1, -1), (0, 0))


def test_elementary_limits():
    for a, b in [(3, 1), (-2, 2), (0, 5), (2, 3), (-7, 4)]:
        assert geom(a, b).limit() == _unit_class().scale_int(-1)


def test_orthant_product_coefficient():
    # two factors (a,b) = (0,1), (1,2): coefficient at n sums over k1 + 2k2 = n
    s = orthant_product([(0, 1), (1, 2)], _unit_class())
    # n = 5: (k1, k2) in {(3,1), (1,2)} -> L^1 + L^2
    assert s.coefficient(5) == MotivicClass(
        "k", {GeneratorSymbol("pt", 1, "k"): LaurentPoly({1: 1, 2: 1})})


def _brute_cauchy(p, q, n):
    total = MotivicClass.zero(p.base)
    for a in range(1, n):
        total = total + p.coefficient(a) * q.coefficient(n - a)
    return total


def test_cauchy_product_matches_brute_force():
    rng = random.Random(3)
    for _ in range(20):
        p = geom(rng.randint(-3, 3), rng.randint(1, 3))
        q = geom(rng.randint(-3, 3), rng.randint(1, 3))
        prod = p * q
        for n in range(1, 13):
            assert prod.coefficient(n) == _brute_cauchy(p, q, n)


def test_hadamard_matches_coefficientwise_product():
    rng = random.Random(5)
    for _ in range(20):
        pairs1 = [(rng.randint(-2, 2), rng.randint(1, 3))
                  for _ in range(rng.randint(1, 2))]
        pairs2 = [(rng.randint(-2, 2), rng.randint(1, 3))
                  for _ in range(rng.randint(1, 2))]
        p = orthant_product(pairs1, _unit_class(rng.randint(-1, 1)))
        q = orthant_product(pairs2, _unit_class())
        h = p.hadamard(q)
        for n in range(1, 13):
            assert h.coefficient(n) == p.coefficient(n) * q.coefficient(n)


def test_hadamard_limit_law():
    # lim(p * q) = -lim(p) lim(q)
    rng = random.Random(9)
    for _ in range(20):
        p = geom(rng.randint(-3, 3), rng.randint(1, 4))
        q = geom(rng.randint(-3, 3), rng.randint(1, 4))
        h = p.hadamard(q)
        assert h.limit() == (p.limit() * q.limit()).scale_int(-1)


def test_limit_is_additive():
    p = geom(1, 2) + geom(0, 3).scale(LaurentPoly.L(1))
    assert p.limit() == geom(1, 2).limit() + geom(0, 3).scale(LaurentPoly.L(1)).limit()


def test_limit_against_unimodular_cone():
    # the full open orthant in r variables has chi (-1)^r, so the product of r
    # elementary factors has limit (-1)^r
    for r in range(1, 4):
        s = orthant_product([(i, i + 1) for i in range(r)], _unit_class())
        assert s.limit() == _unit_class().scale_int((-1) ** r)


def test_unbounded_fiber_raises():
    # degree form vanishing on a ray of the cone: k1 + 0*k2 cannot be summed
    with pytest.raises(NotSummable):
        ConeTerm(_unit_class(), Cone(("k1", "k2")), (1, 0), (0, 0))
