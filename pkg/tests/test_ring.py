import pytest
from fractions import Fraction

from hypothesis import given, strategies as st

from motzeta.errors import BaseMismatch, MissingSymbol, ValidationError
from motzeta.laurent import LaurentPoly
from motzeta.ring import (GeneratorSymbol, MotivicClass, SpecializationMap,
                          euler_specialization, pt)


def _sym(name, mu=1):
    return GeneratorSymbol(name, mu, "k")


coeffs = st.dictionaries(
    st.integers(min_value=-5, max_value=5),
    st.integers(min_value=-4, max_value=4),
    max_size=3,
).map(LaurentPoly)

symbols = st.sampled_from([_sym("pt"), _sym("A", 2), _sym("B", 3), _sym("C", 6), _sym("D")])

classes = st.dictionaries(symbols, coeffs, max_size=5).map(
    lambda terms: MotivicClass("k", terms))


def test_symbol_validation():
    with pytest.raises(ValidationError):
        GeneratorSymbol("", 1)
    with pytest.raises(ValidationError):
        GeneratorSymbol("x", 0)
    with pytest.raises(ValidationError):
        GeneratorSymbol("pt", 2)


def test_base_mismatch():
    a = MotivicClass.unit("k")
    b = MotivicClass.unit("A^1")
    with pytest.raises(BaseMismatch):
        a + b
    with pytest.raises(BaseMismatch):
        a * b


def test_product_symbols_sorted_with_lcm_mu():
    a = MotivicClass.of_symbol(_sym("B", 3))
    b = MotivicClass.of_symbol(_sym("A", 2))
    prod = a * b
    (sym,) = prod.terms
    assert sym.name == "A⊗B"
    assert sym.mu_order == 6
    # pt is the unit of the symbol product
    assert a * MotivicClass.unit("k") == a


def test_push_relabels_everything():
    cls = MotivicClass("A^2", {GeneratorSymbol("E", 2, "A^2"): LaurentPoly.L(1)})
    pushed = cls.push("k")
    assert pushed.base == "k"
    assert all(s.base == "k" for s in pushed.terms)
    assert pushed.push("A^2") == cls


def test_render_sorted_by_symbol_name():
    cls = MotivicClass("k", {_sym("B", 3): LaurentPoly.one(),
                             _sym("A", 2): LaurentPoly({1: 1, 0: 1})})
    assert cls.render() == "(L^1 + 1) * [A; mu=2; base=k] + 1 * [B; mu=3; base=k]"
    assert MotivicClass.zero().render() == "0"


def test_specialization_policies():
    cls = MotivicClass.of_symbol(_sym("E", 2))
    with pytest.raises(MissingSymbol):
        euler_specialization({}).apply(cls)
    assert euler_specialization({}, missing_policy="zero").apply(cls) == LaurentPoly.zero()
    assert euler_specialization({"E": -6}).apply(cls) == LaurentPoly.const(-6)


def test_euler_specialization_sends_lefschetz_to_one():
    cls = MotivicClass("k", {pt("k"): LaurentPoly({3: 1, 0: -1})})
    assert euler_specialization({}).apply(cls) == LaurentPoly.zero()


@given(classes, classes, classes)
def test_module_axioms(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + MotivicClass.zero() == a
    assert a * MotivicClass.unit() == a


@given(classes, classes)
def test_push_is_additive_and_multiplicative(a, b):
    assert (a + b).push("S") == a.push("S") + b.push("S")
    assert (a * b).push("S") == a.push("S") * b.push("S")


@given(classes, classes)
def test_specialization_is_a_ring_map(a, b):
    m = SpecializationMap(LaurentPoly.one(),
                          {"A": 2, "B": 3, "C": -6, "D": 5}, "error")
    assert m.apply(a + b) == m.apply(a) + m.apply(b)
    assert m.apply(a * b) == m.apply(a) * m.apply(b)


@given(classes, coeffs, coeffs)
def test_linearity_under_coefficient_splitting(a, c1, c2):
    # splitting any stratum class into two pieces leaves module operations linear
    assert a.scale(c1 + c2) == a.scale(c1) + a.scale(c2)
