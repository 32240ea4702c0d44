from fractions import Fraction

import mpmath
import pytest

from ramanujan_jets import InconsistencyError, SeriesFamily, extract_signature, make_context, verify_expansion

F = Fraction
SEVEN = [F(1, 32), F(14, 32), F(76, 32), F(168, 32)]


def test_seven_f_six_signature(ctx):
    sig = extract_signature(SeriesFamily.f76(), F(1, 64), 1, SEVEN, ctx)
    with ctx.workprec():
        assert abs(sig.k - 2) < mpmath.mpf("1e-20")
        assert abs(sig.j - 32) < mpmath.mpf("1e-20")
        assert abs(sig.l - 4112) < mpmath.mpf("1e-20")
    assert max(sig.odd.values()) < mpmath.mpf("1e-30")


def test_5f4_signature(ctx):
    sig = extract_signature(SeriesFamily.f54("1/2", "1/2"), F(-1, 1024), -1, [F(13, 128), F(45, 32), F(205, 32)], ctx)
    assert str(sig.recognized["k"]) == "5" and str(sig.recognized["j"]) == "305"


def test_3f2_signature(ctx):
    sig = extract_signature(SeriesFamily.f32("1/2"), F(1, 4), 1, [F(1, 4), F(3, 2)], ctx)
    assert str(sig.recognized["k"]) == "2"


def test_signature_stable_under_precision():
    a = extract_signature(SeriesFamily.f76(), F(1, 64), 1, SEVEN, make_context(256))
    b = extract_signature(SeriesFamily.f76(), F(1, 64), 1, SEVEN, make_context(320))
    with mpmath.workprec(300):
        assert abs(a.l - b.l) < mpmath.mpf("1e-30")


def test_refuses_wrong_series(ctx):
    with pytest.raises(InconsistencyError):
        extract_signature(SeriesFamily.f32("1/2"), F(1, 4), 1, [F(1, 4), F(1)], ctx)


def test_verify_expansion(ctx):
    res = verify_expansion(SeriesFamily.f54("1/2", "1/2"), F(-1, 4), -1, [F(1, 8), 1, F(5, 2)], 1, 25, ctx=ctx)
    assert len(res) == 5 and max(res) < mpmath.mpf("1e-50")
    wrong = verify_expansion(SeriesFamily.f54("1/2", "1/2"), F(-1, 4), -1, [F(1, 8), 1, F(5, 2)], 1, 24, ctx=ctx)
    assert max(wrong) > mpmath.mpf("1e-5")
    res7 = verify_expansion(SeriesFamily.f76(), F(1, 64), 1, SEVEN, 2, 32, 4112, ctx=ctx)
    assert max(res7) < mpmath.mpf("1e-50")
