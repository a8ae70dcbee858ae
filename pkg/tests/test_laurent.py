from fractions import Fraction

from hypothesis import given, strategies as st

from motzeta.laurent import LaurentPoly, L, L_MINUS_ONE, ONE, ZERO


polys = st.dictionaries(
    st.integers(min_value=-5, max_value=5),
    st.integers(min_value=-9, max_value=9),
    max_size=5,
).map(LaurentPoly)


def test_canonical_no_zero_coefficients():
    p = LaurentPoly({3: 0, 1: 2, -2: 0})
    assert p.terms == {1: 2}
    assert LaurentPoly({0: 1}) + LaurentPoly({0: -1}) == ZERO


def test_basic_arithmetic():
    p = L + ONE                       # L + 1
    assert p * p == LaurentPoly({2: 1, 1: 2, 0: 1})
    assert (L_MINUS_ONE ** 2) == LaurentPoly({2: 1, 1: -2, 0: 1})
    assert p - p == ZERO
    assert LaurentPoly.L(-3) * LaurentPoly.L(3) == ONE


def test_shift_and_scale():
    p = LaurentPoly({1: 2, -1: 3})
    assert p.shift(2) == LaurentPoly({3: 2, 1: 3})
    assert p.scale(-1) == -p


def test_substitute_at_one():
    p = LaurentPoly({2: 1, 0: -4, -3: 5})
    assert p.substitute(ONE) == LaurentPoly.const(2)


def test_eval_rational():
    p = LaurentPoly({1: 1, -1: 1})
    assert p.eval_rational(Fraction(2)) == Fraction(5, 2)


def test_render_grammar():
    assert ZERO.render() == "0"
    assert ONE.render() == "1"
    assert L.render() == "L^1"
    assert LaurentPoly({3: -1}).render() == "-L^3"
    assert LaurentPoly({2: 5, 0: -1, -1: 1}).render() == "5*L^2 + -1 + L^-1"


@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert (p + q) + r == p + (q + r)
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p + ZERO == p
    assert p * ONE == p


@given(polys, polys)
def test_evaluation_is_a_homomorphism(p, q):
    x = Fraction(3, 7)
    assert (p * q).eval_rational(x) == p.eval_rational(x) * q.eval_rational(x)
    assert (p + q).eval_rational(x) == p.eval_rational(x) + q.eval_rational(x)
