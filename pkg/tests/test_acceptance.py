"""
Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v`` or directly with
``python3 tests/test_acceptance.py`` for the summary lines alone.
"""
import random
import sys
import time
from fractions import Fraction

import mpmath
import pytest

from ramanujan_jets import (SeriesFamily, all_families, closed_form_3f2_half, evaluate_components,
                           extract_signature, m_spectrum, make_context, mirror_map, picard_fuchs_residual,
                           relation_residuals, scalar_series_sum, solve_3f2, solve_5f4, t_u_k_series, theta)
from ramanujan_jets.errors import DivergenceError, RamanujanJetsError
from ramanujan_jets.modular import theta_z_of_q
from ramanujan_jets.solver import corollary_check
from ramanujan_jets.spectrum import tau2_closed_exact

F = Fraction
HALF5 = SeriesFamily.f54("1/2", "1/2")
HALF3 = SeriesFamily.f32("1/2")

_capture = None


def report(number, ok, what):
    line = f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {what}"
    if _capture is not None:
        with _capture.disabled():
            print("\n" + line)
    else:
        print(line)
    return ok


@pytest.fixture(autouse=True)
def _show(capsys):
    global _capture
    _capture = capsys
    yield
    _capture = None


def _below(x, tol):
    return x is not None and x < mpmath.mpf(tol)


# 1 --------------------------------------------------------------------------------
def test_mirror_map_golden():
    start = time.time()
    qe = mirror_map(HALF5, 5)
    exp_h = [int(qe.exp_h[n] * 1024 ** n) if (qe.exp_h[n] * 1024 ** n).denominator == 1 else qe.exp_h[n] * 1024 ** n
             for n in range(4)]
    z = [c / 1024 for c in qe.z_of_q.coeffs[1:6]]
    z = [int(c) if c.denominator == 1 else c for c in z]
    elapsed = time.time() - start
    ok = exp_h == [1, 320, 170400, 110694400] and z == [1, -320, 34400, -1894400, 62019120] and elapsed < 10
    assert report(1, ok, f"e^H2 = {exp_h}, z(q)/1024 = {z}, {elapsed:.2f}s")


# 2 --------------------------------------------------------------------------------
def test_t_series_golden():
    qe = t_u_k_series(HALF5, 8)
    T = [qe.T[n] * n ** 3 / 160 for n in range(1, 6)]
    T = [int(c) if c.denominator == 1 else c for c in T]
    ok = T == [1, 347, 91072, 21827771, 5002311376] and qe.U == qe.U_from_T and qe.U.order == 8
    assert report(2, ok, f"T n^3/160 = {T}; U == q dT/dq through q^8: {qe.U == qe.U_from_T}")


# 3, 4 -----------------------------------------------------------------------------
def _paper_instance(number, k, expected):
    ctx = make_context(256)
    start = time.time()
    sol = solve_5f4("1/2", "1/2", k, -1, ctx)
    elapsed = time.time() - start
    got = {n: sol.exact(n) for n in expected}
    residuals_ok = all(_below(v, "1e-50") for v in sol.residuals.values()) and len(sol.residuals) == 5
    ok = got == expected and residuals_ok and _below(sol.series_check, "1e-50") and elapsed < 60
    return report(number, ok, f"k={k}: {got}; max residual {mpmath.nstr(sol.max_residual(), 3)}, "
                              f"series {mpmath.nstr(sol.series_check, 3)}, {elapsed:.1f}s")


def test_instance_k1():
    assert _paper_instance(3, 1, {"tau2": "5", "j": "25", "z": "-1/4", "a": "1/8", "b": "1", "c": "5/2"})


def test_instance_k5():
    assert _paper_instance(4, 5, {"tau2": "41", "j": "305", "z": "-1/1024", "a": "13/128",
                                  "b": "45/32", "c": "205/32"})


# 5 --------------------------------------------------------------------------------
def test_tau2_closed_form():
    ctx = make_context(256)
    exact = tau2_closed_exact(HALF5, 1, 25)
    ms = m_spectrum(HALF5, 1, 25, ctx)
    with ctx.workprec():
        direct = abs(ms.tau2 - 5)
    ok = exact == 5 and _below(direct, "1e-50")
    assert report(5, ok, f"closed form = {exact}, |direct - 5| = {mpmath.nstr(direct, 3)}")


# 6 --------------------------------------------------------------------------------
def test_relation_suite():
    ctx = make_context(256)
    rng = random.Random(20240601)
    start = time.time()
    worst, failures, count = mpmath.mpf(0), [], 0
    for family in all_families():
        for _ in range(5):
            z = F(rng.choice([-1, 1]) * rng.randint(1, 300), 1000)
            res = relation_residuals(evaluate_components(family, z, None, ctx))
            count += len(res)
            bad = [n for n, v in res.items() if v >= mpmath.mpf("1e-60")]
            if bad:
                failures.append((family.label, str(z), bad))
            worst = max([worst] + list(res.values()))
    elapsed = time.time() - start
    ok = not failures and elapsed < 300
    assert report(6, ok, f"{count} residuals over 18 families x 5 z, worst {mpmath.nstr(worst, 3)}, "
                         f"{elapsed:.1f}s" + (f", failures {failures}" if failures else ""))


# 7 --------------------------------------------------------------------------------
def test_picard_fuchs():
    families = all_families() + [SeriesFamily.f76()]
    residuals = {f.label: picard_fuchs_residual(f, 15) for f in families}
    ok = all(r == 0 for r in residuals.values())
    assert report(7, ok, f"exact residual through z^15 is zero for {sum(r == 0 for r in residuals.values())}"
                         f"/{len(families)} families")


# 8 --------------------------------------------------------------------------------
def _hypergeometric_at(z, ctx):
    """3F2(1/2,1/2,1/2;1,1;z) from the package, or from mpmath where the package refuses |z| >= 0.95."""
    try:
        return evaluate_components(HALF3, z, 1, ctx).a[0], "package"
    except DivergenceError:
        with ctx.workprec():
            half = mpmath.mpf(1) / 2
            return mpmath.hyp3f2(half, half, half, 1, 1, z), "mpmath"


def test_theta_suite():
    ctx = make_context(256)
    tol = mpmath.mpf("1e-60")
    notes, ok = [], True
    for q in ("0.01", "0.05", "0.1", "0.2"):
        th = theta(mpmath.mpf(q), ctx)
        d1, d2 = th.derivative_residuals()
        worst = max(abs(th.identity_residual()), abs(d1), abs(d2))
        ok = ok and worst < tol
        notes.append(f"q={q}: identities {mpmath.nstr(worst, 3)}")
    for q in ("0.01", "0.05"):
        th = theta(mpmath.mpf(q), ctx)
        z, _ = theta_z_of_q(mpmath.mpf(q), ctx)
        value, source = _hypergeometric_at(z, ctx)
        with ctx.workprec():
            diff = abs(value - th.theta3 ** 4)
        ok = ok and diff < tol
        notes.append(f"q={q}: |3F2(z={mpmath.nstr(z, 6)}) - theta3^4| = {mpmath.nstr(diff, 3)} ({source})")
    assert report(8, ok, "; ".join(notes))


# 9 --------------------------------------------------------------------------------
def test_3f2_end_to_end():
    ctx = make_context(256)
    tol = mpmath.mpf("1e-50")
    notes, ok = [], True
    for k in (0, 1, 2, 3):
        try:
            sol = solve_3f2("1/2", k, 1, ctx)
        except RamanujanJetsError as exc:
            ok = False
            notes.append(f"k={k}: {type(exc).__name__}: {exc}")
            continue
        cf = closed_form_3f2_half(k, ctx)
        with ctx.workprec():
            series = abs(scalar_series_sum(HALF3, sol.z, (sol.a, sol.b), ctx) - 1 / mpmath.pi)
            dz = abs(sol.z - cf["z"])
            db = abs(abs(sol.b) - abs(cf["b"]))
        good = series < tol and dz < tol and db < tol
        if k == 2:
            good = good and (sol.exact("z"), sol.exact("a"), sol.exact("b")) == ("1/4", "1/4", "3/2")
        ok = ok and good
        notes.append(f"k={k}: z={sol.exact('z') or mpmath.nstr(sol.z, 10)} series {mpmath.nstr(series, 3)} "
                     f"|dz| {mpmath.nstr(dz, 3)} |d|b|| {mpmath.nstr(db, 3)}")
    assert report(9, ok, "; ".join(notes))


# 10 -------------------------------------------------------------------------------
def test_seven_f_six_signature():
    ctx = make_context(256)
    sig = extract_signature(SeriesFamily.f76(), F(1, 64), 1, [F(1, 32), F(14, 32), F(76, 32), F(168, 32)], ctx)
    with ctx.workprec():
        errs = [abs(sig.k - 2), abs(sig.j - 32), abs(sig.l - 4112)]
    ok = all(e < mpmath.mpf("1e-20") for e in errs)
    assert report(10, ok, f"k, j, l = {mpmath.nstr(sig.k, 25)}, {mpmath.nstr(sig.j, 25)}, {mpmath.nstr(sig.l, 25)}")


# 11 -------------------------------------------------------------------------------
def test_corollary():
    r = corollary_check("1/2", "1/2", 1, -1, make_context(256), F(1, 10 ** 6))
    ok = r["residual"] < mpmath.mpf("1e-15")
    assert report(11, ok, f"tau = {mpmath.nstr(r['tau'], 20)}, (q ln uq)/2 dk/dq = {mpmath.nstr(r['predicted'], 20)},"
                          f" |diff| = {mpmath.nstr(r['residual'], 3)}")


if __name__ == "__main__":
    failed = 0
    for name, fn in list(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn()
            except AssertionError:
                failed += 1
            except Exception as exc:  # a crash counts as a failed criterion
                print(f"{name}: ERROR {type(exc).__name__}: {exc}")
                failed += 1
    sys.exit(1 if failed else 0)
