import random
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, strategies as st

from ramanujan_jets import (DivergenceError, DomainError, Jet, SeriesFamily, all_families,
                           component_series, evaluate_components, make_context, parse_family,
                           picard_fuchs_residual, relation_residuals, scalar_series_sum)
from ramanujan_jets.hyperseries import (ADMISSIBLE_PAIRS, clausen_alpha, component, determinant_sign,
                                        p_jet, relation_threshold, y_ladder)
from ramanujan_jets.jet import jet_pow_base
from ramanujan_jets.series import PowerSeries, q_derivative

F = Fraction
HALF = SeriesFamily.f32("1/2")
HALF5 = SeriesFamily.f54("1/2", "1/2")


def test_families():
    fams = all_families()
    assert len(fams) == 18 and len(ADMISSIBLE_PAIRS) == 14
    assert parse_family("5F4:1/2,1/3").label == "5F4:1/2,1/3"
    assert parse_family("7F6").order == 7
    with pytest.raises(DomainError):
        parse_family("5F4:1/2")
    with pytest.raises(DomainError):
        parse_family("9F8")


def test_p_jet_heads():
    assert p_jet(HALF, 0, 3).coeffs == (1, 0, 0)
    assert p_jet(HALF, 1, 1).coeffs == (F(1, 8),)
    assert p_jet(HALF5, 1, 1).coeffs == (F(1, 32),)


def test_component_series_heads():
    series = component_series(HALF, 4)
    assert component(series["A"], 0)[1] == F(1, 8)
    assert component(component_series(HALF5, 4)["B"], 0)[1] == F(1, 32)


@pytest.mark.parametrize("family", [HALF, SeriesFamily.f32("1/3"), HALF5, SeriesFamily.f54("1/4", "1/6")],
                         ids=str)
def test_differential_ladder_exact(family):
    # B = z A' + X A and C = z B' + X B, coefficientwise on exact jets
    N = 8
    series = component_series(family, N)
    X = Jet.variable(family.order, 0)
    labels = list(series)
    for lo, hi in zip(labels, labels[1:]):
        s_lo, s_hi = series[lo], series[hi]
        expected = PowerSeries([n * s_lo[n] + X * s_lo[n] for n in range(N + 1)])
        assert expected == s_hi


def test_prefix_stability():
    short = component_series(HALF5, 4)["C"]
    long = component_series(HALF5, 7)["C"]
    assert long.truncate(4) == short


@pytest.mark.parametrize("family", [HALF, SeriesFamily.f54("1/2", "1/3"), SeriesFamily.f32("1/3")], ids=str)
def test_picard_fuchs_exact(family):
    assert picard_fuchs_residual(family, 10) == 0


def test_evaluate_at_zero(ctx):
    cv = evaluate_components(HALF, 0, 1, ctx)
    assert list(cv.a) == [1, 0, 0]


def test_evaluate_rejects_outside_disc(ctx):
    with pytest.raises(DivergenceError):
        evaluate_components(HALF, F(1, 1), None, ctx)
    with pytest.raises(DivergenceError):
        evaluate_components(HALF, F(-96, 100), None, ctx)
    with pytest.raises(DomainError):
        evaluate_components(HALF, F(1, 4), -1, ctx)


def test_b_quadratic_value(ctx):
    cv = evaluate_components(HALF, F(1, 4), 1, ctx)
    with ctx.workprec():
        assert abs(cv.b[1] ** 2 - 2 * cv.b[0] * cv.b[2] - mpmath.mpf(4) / 3) < mpmath.mpf("1e-70")


def test_head_matches_scalar_sum(ctx):
    for family in (HALF, HALF5, SeriesFamily.f76()):
        cv = evaluate_components(family, F(1, 64), 1, ctx)
        with ctx.workprec():
            assert abs(cv.a[0] - scalar_series_sum(family, F(1, 64), [1], ctx)) < mpmath.mpf("1e-70")


def test_clausen(ctx):
    assert clausen_alpha("1/2", 0, ctx) == (1, 0)
    for s, z in (("1/2", F(1, 4)), ("1/3", F(1, 10))):
        a0, a1 = clausen_alpha(s, z, ctx)
        cv = evaluate_components(SeriesFamily.f32(s), z, 1, ctx)
        with ctx.workprec():
            assert abs(cv.a[0] - a0 ** 2) < mpmath.mpf("1e-70")
            assert abs(cv.a[1] - a0 * a1) < mpmath.mpf("1e-70")
            assert abs(cv.a[2] - a1 ** 2 / 2) < mpmath.mpf("1e-70")


def test_named_relation_examples(ctx):
    assert relation_residuals(evaluate_components(HALF, F(1, 3), 1, ctx))["a1sq"] < mpmath.mpf("1e-70")
    r = relation_residuals(evaluate_components(HALF5, F(-1, 4), -1, ctx))
    assert r["c-quadratic"] < mpmath.mpf("1e-60")
    r = relation_residuals(evaluate_components(SeriesFamily.f54("1/4", "1/6"), F(1, 50), 1, ctx))
    assert len(r) == 17 and max(r.values()) < mpmath.mpf("1e-60")


@pytest.mark.parametrize("family", all_families(), ids=str)
@given(z=st.fractions(min_value=F(-3, 10), max_value=F(3, 10), max_denominator=1000))
def test_relations_hold(family, z):
    if z == 0:
        z = F(1, 17)
    ctx = make_context(128)
    cv = evaluate_components(family, z, None, ctx)
    res = relation_residuals(cv)
    assert max(res.values()) < relation_threshold(ctx)
    assert determinant_sign(cv) == 1


def test_y_ladder(ctx):
    z = F(-1, 4)
    cv = evaluate_components(HALF5, z, -1, ctx)
    y = y_ladder(cv, ctx)
    with ctx.workprec():
        L = mpmath.log(mpmath.mpf(1) / 4)
        a = cv.a
        # y_i = sum_{m<=i} L^m/m! a_{i-m}
        for i in range(5):
            ref = sum(L ** m / mpmath.factorial(m) * a[i - m] for m in range(i + 1))
            assert abs(y[i] - ref) < mpmath.mpf("1e-70")
