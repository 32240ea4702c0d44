from fractions import Fraction

import mpmath
import pytest

from ramanujan_jets import SeriesFamily, all_families, m_spectrum
from ramanujan_jets.spectrum import nu0_value

F = Fraction
TOL = mpmath.mpf("1e-50")


def test_half_half_values(ctx):
    ms = m_spectrum(SeriesFamily.f54("1/2", "1/2"), 1, 25, ctx)
    with ctx.workprec():
        assert abs(ms.nu0 - 10 * mpmath.ln2) < TOL
        assert abs(ms.nu1 - 4 * mpmath.pi ** 2 / 3) < TOL
        assert abs(ms.tau2 - 5) < TOL
        assert abs(ms.closed["tau2"] - 5) < TOL
        assert abs(ms.m[0] - 1 / mpmath.pi ** 2) < TOL


@pytest.mark.parametrize("k", [0, 1, 5, F(7, 3)])
def test_3f2_half_tau2(k, ctx):
    ms = m_spectrum(SeriesFamily.f32("1/2"), k, None, ctx)
    with ctx.workprec():
        assert abs(ms.tau2 - (F(k) + 1)) < TOL
        assert abs(ms.m[0] - 1 / mpmath.pi) < TOL


@pytest.mark.parametrize("family", all_families(), ids=str)
@pytest.mark.parametrize("k", [0, 1, 5])
def test_direct_against_closed_forms(family, k, ctx):
    j = 7 if family.kind == "F54" else None
    ms = m_spectrum(family, k, j, ctx)
    c = ms.closed
    with ctx.workprec():
        assert abs(ms.nu0 + c["nu0"]) < TOL          # sign convention differs
        assert abs(ms.tau2 - c["tau2"]) < TOL
        if family.kind == "F54":
            assert abs(ms.nu1 - c["nu1"]) < TOL
            assert abs(abs(ms.nu2) - abs(c["nu2"])) < TOL


def test_tau2_affine_in_j(ctx):
    family = SeriesFamily.f54("1/3", "1/4")
    base = m_spectrum(family, 2, None, ctx)
    with ctx.workprec():
        assert abs(base.tau2_slope - mpmath.mpf(1) / 12) < TOL
        for j in (0, 5, F(-7, 2)):
            ref = m_spectrum(family, 2, j, ctx)
            assert abs(base.tau2_for(j) - ref.tau2) < TOL
            assert all(abs(x - y) < TOL for x, y in zip(base.m_for(j), ref.m))


def test_nu0_is_k_independent(ctx):
    family = SeriesFamily.f54("1/5", "2/5")
    with ctx.workprec():
        assert abs(m_spectrum(family, 3, None, ctx).nu0 - nu0_value(family, ctx)) < TOL


def test_exact_tau2_closed_form(ctx):
    from ramanujan_jets.spectrum import tau2_closed_exact
    assert tau2_closed_exact(SeriesFamily.f54("1/2", "1/2"), 1, 25) == 5
    assert tau2_closed_exact(SeriesFamily.f54("1/2", "1/2"), 5, 305) == 41
    assert tau2_closed_exact(SeriesFamily.f32("1/3"), 2) == F(10, 3)
    assert tau2_closed_exact(SeriesFamily.f54("1/5", "2/5"), 1, 1) is None
    for family in all_families():
        exact = tau2_closed_exact(family, 2, 3)
        if exact is not None:
            ms = m_spectrum(family, 2, 3 if family.kind == "F54" else None, ctx)
            with ctx.workprec():
                assert abs(ms.tau2 - mpmath.mpf(exact.numerator) / exact.denominator) < TOL
