import random
from fractions import Fraction

import pytest

from motzeta.calculus import (delta_cones, delta_union_chi, generalized_poincare,
                              integral_at_level, motivic_volume, mv_at_least,
                              nearby_cycles, poincare_series, smooth_integral,
                              zeta_at_level, zeta_series)
from motzeta.cones import chi
from motzeta.errors import (InvalidForm, MissingDiscrepancy, MissingOrders)
from motzeta.examples import (ball_closed, ball_open, cusp, cusp_with_orders,
                              z_power)
from motzeta.laurent import LaurentPoly
from motzeta.resolution import (EXPLICIT, GELFAND_LERAY, ResolutionData,
                                StratumDatum)
from motzeta.ring import GeneratorSymbol, MotivicClass
from motzeta.verify import random_data


def _pt_class(base="k", exp=0):
    return MotivicClass(base, {GeneratorSymbol("pt", 1, base): LaurentPoly.L(exp)})


def test_smooth_integral():
    # one chart of class L^2 [pt] with form order 3 in relative dimension 2
    cls = _pt_class(exp=2)
    assert smooth_integral([(cls, 3)], 2) == _pt_class(exp=-3)


def test_ball_volumes():
    for d in range(1, 6):
        assert motivic_volume(ball_open(d).data) == _pt_class()
        for p in range(1, 4):
            doc = ball_closed(d, p)
            assert motivic_volume(doc.data).push("k") == _pt_class(exp=d)


def test_ball_level_integrals():
    # open ball: level n contributes L^{-d} exactly once (k = n, alpha = 0)
    doc = ball_open(3)
    for n in range(1, 6):
        assert integral_at_level(doc.data, n, doc.gauge) == _pt_class(exp=-3)


def test_series_level_agreement_on_examples():
    for doc in (ball_open(2), ball_closed(2, 2), cusp(), z_power(3)):
        series = poincare_series(doc.data, doc.gauge)
        for n in range(1, 31):
            assert series.coefficient(n) == integral_at_level(doc.data, n, doc.gauge)


def test_series_level_agreement_randomized():
    rng = random.Random(2024)
    for _ in range(50):
        data = random_data(rng)
        series = poincare_series(data, GELFAND_LERAY)
        for n in range(1, 31):
            assert series.coefficient(n) == integral_at_level(data, n, GELFAND_LERAY)


def test_mv_closed_form_equals_limit_randomized():
    # motivic_volume raises ConsistencyFailure internally if the two paths differ
    rng = random.Random(77)
    for _ in range(50):
        data = random_data(rng)
        motivic_volume(data, GELFAND_LERAY)


def test_zeta_level_agreement():
    for doc in (cusp(), z_power(2), z_power(6), ball_open(1)):
        series = zeta_series(doc.data)
        for n in range(1, 31):
            assert series.coefficient(n) == zeta_at_level(doc.data, n)


def test_zeta_requires_discrepancies():
    data = ResolutionData(
        1, "k", (StratumDatum("e", 1, alpha=0),),
        {("e",): _pt_class()})
    with pytest.raises(MissingDiscrepancy):
        zeta_series(data)


def test_gelfand_leray_consistency():
    # with the Gelfand-Leray gauge, L^d P agrees with the zeta series
    for doc in (cusp(), z_power(3)):
        data = doc.data
        series = poincare_series(data, GELFAND_LERAY)
        zeta = zeta_series(data)
        for n in range(1, 21):
            lhs = series.coefficient(n).scale(LaurentPoly.L(data.d))
            assert lhs == zeta.coefficient(n)


def test_nearby_cycles_cusp():
    s = nearby_cycles(cusp().data)
    # single strata enter with coefficient 1, double points with 1 - L
    one_minus_l = LaurentPoly({0: 1, 1: -1})
    assert s.terms[GeneratorSymbol("E3t", 6, "k")] == LaurentPoly.one()
    assert s.terms[GeneratorSymbol("E13t", 2, "k")] == one_minus_l
    assert s.terms[GeneratorSymbol("pt", 1, "k")] == one_minus_l


def test_smooth_point_zeta_levels():
    # single stratum N = nu = 1: zeta coefficient at every level is the class itself
    doc = ball_open(2)
    for n in range(1, 8):
        assert zeta_at_level(doc.data, n) == _pt_class()


# -- the cone decomposition and thresholded volumes ---------------------------


def test_delta_cones_single_column():
    data = cusp_with_orders().data
    # restrict M to one column by projecting the built-in data
    strata = tuple(StratumDatum(s.id, s.N, nu=s.nu, M=(s.M[0],)) for s in data.strata)
    one = ResolutionData(data.d, data.base, strata, data.classes)
    cones = delta_cones(one, Fraction(1), ("e1", "e3"))
    assert len(cones) == 1


def test_delta_cones_strict_tiebreak():
    # equal columns: the second piece is empty
    data = ResolutionData(
        1, "k", (StratumDatum("e", 1, nu=1, M=(2, 2)),),
        {("e",): _pt_class()})
    first, second = delta_cones(data, Fraction(5), ("e",))
    assert chi(first) != 0
    assert chi(second) == 0


def test_delta_cones_dominated_column():
    data = ResolutionData(
        1, "k", (StratumDatum("e", 1, nu=1, M=(1, 2)),),
        {("e",): _pt_class()})
    first, second = delta_cones(data, Fraction(3), ("e",))
    assert chi(second) == 0  # k*1 < k*2 always


def test_delta_partition_chi_additivity():
    rng = random.Random(13)
    for _ in range(25):
        data = random_data(rng, with_orders=True)
        gamma = Fraction(rng.randint(1, 5), rng.randint(1, 3))
        for I, _cls in data.subsets():
            pieces = delta_cones(data, gamma, I)
            assert sum(chi(c) for c in pieces) == delta_union_chi(data, gamma, I)


def test_delta_partition_membership():
    # random rational points of Delta_I lie in exactly one piece
    rng = random.Random(17)
    data = cusp_with_orders().data
    gamma = Fraction(2)
    for I, _cls in data.subsets():
        pieces = delta_cones(data, gamma, I)
        Ns = [data.stratum(s).N for s in I]
        M = [data.stratum(s).M for s in I]
        for _ in range(40):
            k = [Fraction(rng.randint(1, 9), rng.randint(1, 4)) for _ in I]
            in_delta = min(sum(ki * M[i][j] for i, ki in enumerate(k))
                           for j in range(2)) <= gamma * sum(
                               ki * N for ki, N in zip(k, Ns))
            hits = 0
            for cone in pieces:
                ok = True
                for con in cone.constraints:
                    v = sum(c * ki for c, ki in zip(con.coeffs, k))
                    if con.rel == ">=" and v < 0:
                        ok = False
                    elif con.rel == ">" and v <= 0:
                        ok = False
                    elif con.rel == "=" and v != 0:
                        ok = False
                hits += ok
            assert hits == (1 if in_delta else 0)


def test_mv_at_least_zero_threshold_is_full_volume():
    # M = 0 and gamma = 0: the constraint 0 <= 0 keeps the whole orthant
    data = ResolutionData(
        1, "k", (StratumDatum("e", 2, nu=3, alpha=1, M=(0,)),),
        {("e",): _pt_class()})
    assert mv_at_least(data, Fraction(0)) == motivic_volume(data)


def test_mv_at_least_empty_cone():
    data = ResolutionData(
        1, "k", (StratumDatum("e", 1, nu=1, alpha=0, M=(1,)),),
        {("e",): _pt_class()})
    assert mv_at_least(data, Fraction(1, 2)) == MotivicClass.zero()


def test_mv_at_least_ell_independence():
    doc = cusp_with_orders()
    gamma = Fraction(2)
    values = {mv_at_least(doc.data, gamma, doc.gauge, ell).render()
              for ell in [(0, 0), (0, 1), (2, -1)]}
    assert len(values) == 1


def test_mv_at_least_requires_orders():
    with pytest.raises(MissingOrders):
        mv_at_least(ball_open(1).data, Fraction(1))


def test_invalid_linear_form_rejected():
    data = ResolutionData(
        1, "k", (StratumDatum("e", 1, nu=1, alpha=0, M=(3,)),),
        {("e",): _pt_class()})
    # ell(n, m) = -m is negative wherever m > 0
    with pytest.raises(InvalidForm):
        generalized_poincare(data, Fraction(5), ell=(0, -1))
