from fractions import Fraction

import pytest

from ramanujan_jets import SeriesFamily, UnsupportedError, all_families, h_functions, mirror_map, t_u_k_series
from ramanujan_jets.series import PowerSeries, read_golden, series_compose
from ramanujan_jets.qexpansion import DomainError, exact_scale

F = Fraction
HALF5 = SeriesFamily.f54("1/2", "1/2")


@pytest.fixture(scope="module")
def half5():
    return t_u_k_series(HALF5, 8)


def test_printed_coefficients(half5):
    assert half5.scale == 1024
    assert [c * 1024 ** n for n, c in enumerate(half5.exp_h.coeffs[:4])] == [1, 320, 170400, 110694400]
    assert [c / 1024 for c in half5.z_of_q.coeffs[1:6]] == [1, -320, 34400, -1894400, 62019120]
    T = [half5.T[n] * n ** 3 / 160 for n in range(1, 6)]
    assert T == [1, 347, 91072, 21827771, 5002311376]
    assert half5.U[1] == 160 and half5.K[0] == -1
    assert half5.U == half5.U_from_T


def test_two_h1_equals_h2_squared():
    h = h_functions(HALF5, 8)
    assert 2 * h["H1"] == h["H2"] ** 2
    assert h["H2"] == h["H2_u"] and h["H1"] == h["H1_u"] and h["H0"] == h["H0_u"]


@pytest.mark.parametrize("name", ["expH2", "z_of_q", "T", "U", "K"])
def test_golden_5f4(name, half5, golden_dir):
    series = {"expH2": half5.exp_h, "z_of_q": half5.z_of_q, "T": half5.T, "U": half5.U, "K": half5.K}[name]
    assert list(series.coeffs) == read_golden(golden_dir / f"5F4_half_half_{name}.txt")


def test_golden_3f2(golden_dir):
    qe = mirror_map(SeriesFamily.f32("1/2"), 8)
    assert qe.scale == 64
    assert list(qe.exp_h.coeffs) == read_golden(golden_dir / "3F2_half_expH1.txt")
    assert list(qe.z_of_q.coeffs) == read_golden(golden_dir / "3F2_half_z_of_q.txt")
    assert qe.z_of_q.coeffs[:4] == (0, 64, -1536, 19200)


def test_3f2_half_matches_theta_expansion():
    # 16 q prod((1+q^{2n})/(1+q^{2n-1}))^8 = lambda(q); z = 4 lambda (1 - lambda)
    N = 8
    q = PowerSeries.monomial(1, N)
    num = PowerSeries.monomial(0, N)
    for n in range(1, N + 1):
        num = num * (1 + PowerSeries.monomial(2 * n, N)) ** 8 / (1 + PowerSeries.monomial(2 * n - 1, N)) ** 8
    lam = 16 * q * num
    z = 4 * lam * (1 - lam)
    assert mirror_map(SeriesFamily.f32("1/2"), N).z_of_q == z


@pytest.mark.parametrize("family", [f for f in all_families() if f.kind == "F54"], ids=str)
def test_u_is_q_dt_dq_all_families(family):
    qe = t_u_k_series(family, 8)
    assert qe.U == qe.U_from_T
    assert qe.z_of_q[0] == 0
    assert series_compose(qe.z_of_q, qe.q_of_z) == PowerSeries.monomial(1, 8)


def test_prefix_stability():
    assert mirror_map(HALF5, 6).z_of_q == mirror_map(HALF5, 8).z_of_q.truncate(6)


def test_scales_are_integers():
    for family in all_families():
        scale = exact_scale(family)
        assert scale is not None and scale.denominator == 1


def test_errors():
    with pytest.raises(UnsupportedError):
        t_u_k_series(SeriesFamily.f32("1/2"), 5)
    with pytest.raises(DomainError):
        mirror_map(HALF5, 1)
