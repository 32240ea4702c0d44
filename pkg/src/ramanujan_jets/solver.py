"""
Solve for Ramanujan-type series: given ``k`` (and a branch sign ``u``), find
``z`` and the polynomial coefficients so that

* 3F2:  ``sum z^n P_n (a + b n) = 1/pi``
* 5F4:  ``sum z^n P_n (a + b n + c n^2) = 1/pi^2``

together with the higher jet components.  All root finding is done in
``x = ln(uz)``; ``q`` follows from ``ln(uq) = x + H - nu_0``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

import mpmath

from .errors import (DivergenceError, DomainError, InconsistencyError, NoSolutionError,
                     OutOfRegionError, UnsupportedError)
from .hyperseries import (F32, F54, MAX_ABS_Z, SeriesFamily, determinants, evaluate_components,
                          relation_threshold, scalar_series_sum)
from .numerics import PrecisionContext, format_real, make_context, recognize, to_fraction, to_mpf
from .spectrum import MSpectrum, m_jet_at, m_spectrum, nu0_value  # noqa: F401  (re-exported)
from .jet import REAL, Jet

DEFAULT_DENOMINATOR_BOUND = 10 ** 6
MAX_Q_3F2 = mpmath.mpf("0.05")
Q_UPPER = mpmath.mpf("0.05")
SCAN_BITS = 64
SCAN_POINTS = 48
MIN_UZ = mpmath.mpf("1e-10")
MAX_NEWTON_STEPS = 80


def q_lower_bound(ctx: PrecisionContext):
    """Smallest trusted ``|q|``: 1e-8, relaxed to 1e-12 at 512 bits and above."""
    return mpmath.mpf("1e-12") if ctx.working_bits >= 512 else mpmath.mpf("1e-8")


@dataclass
class RamanujanSolution:
    """One solved instance with recognised values and its residuals."""

    family: SeriesFamily
    u: int
    k: Fraction
    j: object
    tau: object
    tau2: object
    q: object
    z: object
    a: object
    b: object
    c: object = None
    recognized: dict = field(default_factory=dict)
    residuals: dict = field(default_factory=dict)
    series_check: object = None
    method: str = "newton"
    iterations: int = 0

    def max_residual(self):
        return max(self.residuals.values()) if self.residuals else mpmath.mpf(0)

    def exact(self, name) -> Optional[str]:
        rc = self.recognized.get(name)
        return str(rc) if rc is not None and rc.recognized else None

    def to_json(self, digits: int = 40) -> dict:
        out = {"family": self.family.label, "u": self.u, "k": str(self.k)}
        for name in ("tau2", "tau", "j", "z", "a", "b", "c"):
            value = getattr(self, name)
            if value is None:
                continue
            rc = self.recognized.get(name)
            out[name] = rc.to_json(digits) if rc is not None and rc.recognized else \
                {"decimal": format_real(value, digits), "digits": digits}
        out["q"] = format_real(self.q, digits)
        out["residuals"] = {k: mpmath.nstr(v, 5) for k, v in self.residuals.items()}
        out["series_check"] = mpmath.nstr(self.series_check, 5)
        out["method"] = self.method
        return out


# -- shared helpers --------------------------------------------------------------

def _recognize_all(values: dict, modes: dict, bound: int, ctx: PrecisionContext) -> dict:
    return {name: recognize(values[name], bound, modes.get(name, "quadratic"), ctx)
            for name in values if values[name] is not None}


def _refine(fn, lo, hi, seed, ctx, method):
    """Root of ``fn(x) -> (f, df)`` in ``[lo, hi]``; Newton with a bisection fallback.

    ``lo``/``hi`` must bracket a sign change.  Returns ``(x, iterations)``.
    """
    with ctx.workprec():
        lo, hi = mpmath.mpf(lo), mpmath.mpf(hi)
        flo = fn(lo, False)[0]
        tol = mpmath.ldexp(1, -ctx.working_bits) * max(1, abs(lo), abs(hi))
        if method == "bisection":
            it = 0
            while hi - lo > tol:
                mid = (lo + hi) / 2
                fm = fn(mid, False)[0]
                if (fm < 0) == (flo < 0):
                    lo, flo = mid, fm
                else:
                    hi = mid
                it += 1
            return (lo + hi) / 2, it
        if method != "newton":
            raise DomainError(f"unknown root method {method!r}")
        x = mpmath.mpf(seed) if seed is not None and lo < seed < hi else (lo + hi) / 2
        for it in range(1, MAX_NEWTON_STEPS + 1):
            f, df = fn(x, True)
            if f == 0:
                return x, it
            if (f < 0) == (flo < 0):
                lo = x
            else:
                hi = x
            step = f / df if df != 0 else mpmath.inf
            nx = x - step
            if not (lo < nx < hi):
                nx = (lo + hi) / 2
            if abs(nx - x) <= tol:
                return nx, it
            x = nx
        raise DivergenceError("root refinement did not converge")


def _scan(fn, lo, hi, points, ctx):
    """Sign changes of ``fn`` on a uniform grid of ``[lo, hi]``."""
    with ctx.workprec():
        xs = [lo + (hi - lo) * i / (points - 1) for i in range(points)]
        vals = []
        for x in xs:
            try:
                vals.append(fn(x, False)[0])
            except DivergenceError:
                vals.append(None)
        brackets = []
        for i in range(points - 1):
            f0, f1 = vals[i], vals[i + 1]
            if f0 is None or f1 is None:
                continue
            if f0 == 0 or (f0 < 0) != (f1 < 0):
                brackets.append((xs[i], xs[i + 1]))
        return brackets


# -- 3F2 -------------------------------------------------------------------------

def _mirror_seed(family: SeriesFamily, q, ctx):
    """Truncated reversion ``z(q)`` evaluated numerically (``None`` when unusable)."""
    from .qexpansion import mirror_map

    qe = mirror_map(family, 8)
    with ctx.workprec():
        arg = q if qe.scale is not None else q * mpmath.exp(nu0_value(family, ctx))
        coeffs = [to_mpf(c) for c in qe.z_of_q.coeffs]
        z = mpmath.mpf(0)
        for c in reversed(coeffs):
            z = z * arg + c
        return z


def solve_3f2(s, k, u: int = 1, ctx: PrecisionContext = None,
              denominator_bound: int = DEFAULT_DENOMINATOR_BOUND,
              method: str = "newton") -> RamanujanSolution:
    """Find ``(z, a, b)`` with ``sum z^n (1/2)_n (s)_n (1-s)_n/n!^3 (a + b n) = 1/pi``.

    ``tau^2 = k + 1 + cot^2(pi s)``, ``q = u e^{-pi tau}``; ``z`` solves the
    q-map, ``b = tau sqrt(1-z)`` and ``a`` comes from the zeroth component.
    """
    ctx = ctx or make_context(256)
    family = SeriesFamily.f32(s)
    k = to_fraction(k)
    if u not in (1, -1):
        raise DomainError("u must be +1 or -1")
    ms = m_spectrum(family, k, None, ctx)
    with ctx.workprec():
        tau2 = ms.tau2
        if tau2 <= 0:
            raise DomainError("need k + 1 + cot^2(pi s) > 0")
        tau = mpmath.sqrt(tau2)
        q = u * mpmath.exp(-mpmath.pi * tau)
        if abs(q) > MAX_Q_3F2:
            raise OutOfRegionError(f"|q| = {mpmath.nstr(abs(q), 6)} exceeds 0.05")
        lnq = -mpmath.pi * tau
        nu0 = ms.nu0

    def g(x, want_d, c=ctx):
        with c.workprec():
            cv = evaluate_components(family, u * mpmath.exp(x), u, c)
            a0, a1 = cv.a[0], cv.a[1]
            f = x + a1 / a0 - nu0 - lnq
            df = (a0 * cv.b[1] - a1 * cv.b[0]) / a0 ** 2 if want_d else None
            return f, df

    with ctx.workprec():
        lo = mpmath.log(MIN_UZ)
        hi = mpmath.log(MAX_ABS_Z) - mpmath.mpf("1e-9")
        scan_ctx = ctx.with_bits(SCAN_BITS)
        f_hi = g(hi, False, scan_ctx)[0]
        f_lo = g(lo, False, scan_ctx)[0]
        if (f_lo < 0) == (f_hi < 0):
            raise OutOfRegionError(
                f"no z with |z| < 0.95 maps to q = {mpmath.nstr(q, 8)} (k = {k})")
        seed = None
        try:
            zs = _mirror_seed(family, q, ctx)
            if 0 < u * zs < MAX_ABS_Z:
                seed = mpmath.log(u * zs)
        except (ZeroDivisionError, ValueError):
            seed = None
        x, its = _refine(g, lo, hi, seed, ctx, method)
        z = u * mpmath.exp(x)
        cv = evaluate_components(family, z, u, ctx)
        a0, b0 = cv.a[0], cv.b[0]
        b = tau * mpmath.sqrt(1 - z)
        a = (1 / mpmath.pi - b * b0) / a0
        M = m_jet_at(Jet(ms.m, REAL), z, u, ctx)
        residuals = {f"row{i}": abs(a * cv.a[i] + b * cv.b[i] - M[i]) for i in range(3)}
        residuals["b-identity"] = abs(b ** 2 / (1 - z) - tau2)
        series_check = abs(scalar_series_sum(family, z, (a, b), ctx) - 1 / mpmath.pi)
        values = {"tau": tau, "tau2": tau2, "z": z, "a": a, "b": b}
    rec = _recognize_all(values, {"tau2": "rational"}, denominator_bound, ctx)
    return RamanujanSolution(family, u, k, None, tau, tau2, q, z, a, b, None, rec,
                             residuals, series_check, method, its)


# -- 5F4 -------------------------------------------------------------------------

def _f54_state(family, u, ms: MSpectrum, x, ctx, want_d):
    """q-equation value and derivative at ``x = ln(uz)`` plus the quantities behind them."""
    with ctx.workprec():
        z = u * mpmath.exp(x)
        cv = evaluate_components(family, z, u, ctx)
        det = determinants(cv)
        M3 = det["M3"]
        H0, H1, H2 = det["M0"] / M3, det["M1"] / M3, det["M2"] / M3
        T = H2 ** 3 / 6 - H0
        U = H1 - det["J"]
        L = x + H2 - ms.nu0
        f = L ** 3 / 6 - ms.nu1 * L - ms.nu2 - T
        df = None
        if want_d:
            uu, vv = det["u"], det["v"]
            zh2 = ((vv[2] - uu[1]) * uu[1] - uu[2] * vv[1]) / uu[1] ** 2
            df = (L ** 2 / 2 - ms.nu1 - U) * (1 + zh2)
        return {"f": f, "df": df, "z": z, "cv": cv, "L": L, "U": U, "T": T}


def solve_5f4(s, t, k, u: int = -1, ctx: PrecisionContext = None,
              denominator_bound: int = DEFAULT_DENOMINATOR_BOUND,
              method: str = "newton", seed=None) -> RamanujanSolution:
    """Find ``(z, a, b, c, j)`` with ``sum z^n P_n (a + b n + c n^2) = 1/pi^2``.

    ``seed`` is an optional starting ``z``; without it the region
    ``|uz| in [1e-10, 0.95)`` is scanned at low precision first.
    Raises :class:`NoSolutionError` when no root maps into the trusted
    q-region and :class:`InconsistencyError` when the remaining jet rows fail.
    """
    ctx = ctx or make_context(256)
    family = SeriesFamily.f54(s, t)
    k = to_fraction(k)
    if u not in (1, -1):
        raise DomainError("u must be +1 or -1")
    ms = m_spectrum(family, k, None, ctx)

    def fn(x, want_d, c=ctx):
        st = _f54_state(family, u, ms, x, c, want_d)
        return st["f"], st["df"]

    qmin = q_lower_bound(ctx)
    with ctx.workprec():
        brackets = []
        if seed is not None:
            x0 = mpmath.log(u * to_mpf(to_fraction(seed)) if isinstance(seed, (Fraction, str, int))
                            else u * mpmath.mpf(seed))
            width = mpmath.mpf("1e-3")
            brackets.append((x0 - width, x0 + width, x0))
        lo = mpmath.log(MIN_UZ)
        hi = mpmath.log(MAX_ABS_Z) - mpmath.mpf("0.02")
        if not brackets:
            for b0, b1 in _scan(fn, lo, hi, SCAN_POINTS, ctx.with_bits(SCAN_BITS)):
                brackets.append((b0, b1, None))
        tried = []
        for b0, b1, x0 in brackets:
            if (fn(b0, False)[0] < 0) == (fn(b1, False)[0] < 0):
                continue
            x, its = _refine(fn, b0, b1, x0, ctx, method)
            st = _f54_state(family, u, ms, x, ctx, False)
            uq = mpmath.exp(st["L"])
            tried.append(uq)
            if qmin < uq <= Q_UPPER:
                return _finish_5f4(family, u, k, ms, x, st, its, method, denominator_bound, ctx)
        where = ", ".join(mpmath.nstr(v, 4) for v in tried) or "none"
        raise NoSolutionError(
            f"no root of the q-equation with |q| in ({mpmath.nstr(qmin, 3)}, 0.05] "
            f"for {family.label}, k={k}, u={u:+d} (roots at |q|: {where})")


def _finish_5f4(family, u, k, ms, x, st, its, method, bound, ctx) -> RamanujanSolution:
    with ctx.workprec():
        pi2 = mpmath.pi ** 2
        z, cv, L = st["z"], st["cv"], st["L"]
        tau = (L ** 2 / 2 - st["U"] - ms.nu1) / pi2
        tau2 = tau ** 2
        j = (tau2 - ms.tau2) / ms.tau2_slope
        c = tau * mpmath.sqrt(1 - z)
        M = m_jet_at(ms.m_for(j), z, u, ctx)
        r0 = M[0] - c * cv.c[0]
        r1 = M[1] - c * cv.c[1]
        det = cv.a[0] * cv.b[1] - cv.a[1] * cv.b[0]
        a = (r0 * cv.b[1] - r1 * cv.b[0]) / det
        b = (cv.a[0] * r1 - cv.a[1] * r0) / det
        residuals = {f"row{i}": abs(a * cv.a[i] + b * cv.b[i] + c * cv.c[i] - M[i]) for i in range(5)}
        series_check = abs(scalar_series_sum(family, z, (a, b, c), ctx) - 1 / pi2)
        q = u * mpmath.exp(L)
        threshold = relation_threshold(ctx)
        worst = max(residuals[f"row{i}"] for i in (2, 3, 4))
        if worst > threshold:
            raise InconsistencyError(
                f"rows 2-4 of the jet system fail (max residual {mpmath.nstr(worst, 5)}); wrong branch?")
        values = {"tau": tau, "tau2": tau2, "j": j, "z": z, "a": a, "b": b, "c": c}
    rec = _recognize_all(values, {"tau2": "rational", "j": "rational"}, bound, ctx)
    return RamanujanSolution(family, u, k, j, tau, tau2, q, z, a, b, c, rec,
                             residuals, series_check, method, its)


# -- observations ----------------------------------------------------------------

def probe_conjectures(family: SeriesFamily, ks, ctx: PrecisionContext = None, u: int = -1,
                      denominator_bound: int = DEFAULT_DENOMINATOR_BOUND) -> list:
    """Solve each ``k`` and report which outputs recognise as exact values.

    Instances run one after another: mpmath precision is process-global.
    Failures are reported in the record instead of raised.
    """
    if family.kind != F54:
        raise UnsupportedError("conjecture probes are defined for 5F4 families")
    ctx = ctx or make_context(256)
    report = []
    for k in ks:
        rec = {"k": str(to_fraction(k))}
        try:
            sol = solve_5f4(family.s, family.t, k, u, ctx, denominator_bound)
        except (NoSolutionError, InconsistencyError, DivergenceError) as exc:
            rec.update(status="no-solution", detail=str(exc))
        else:
            rec["status"] = "solved"
            rec["kinds"] = {n: r.kind for n, r in sol.recognized.items()}
            rec["values"] = {n: (str(r) if r.recognized else format_real(r.approx, 30))
                             for n, r in sol.recognized.items()}
            rec["all_algebraic"] = all(r.recognized for n, r in sol.recognized.items())
        report.append(rec)
    return report


def corollary_check(s="1/2", t="1/2", k=1, u: int = -1, ctx: PrecisionContext = None,
                    step=Fraction(1, 10 ** 6)) -> dict:
    """Compare ``tau`` with ``(q ln(uq) / 2) dk/dq`` using a five-point stencil in ``k``."""
    ctx = ctx or make_context(256)
    k = to_fraction(k)
    step = to_fraction(step)
    base = solve_5f4(s, t, k, u, ctx)
    qs = {}
    for m in (-2, -1, 1, 2):
        sol = solve_5f4(s, t, k + m * step, u, ctx, seed=base.z)
        qs[m] = sol.q
    with ctx.workprec():
        h = to_mpf(step)
        dq_dk = (-qs[2] + 8 * qs[1] - 8 * qs[-1] + qs[-2]) / (12 * h)
        q = base.q
        predicted = q * mpmath.log(u * q) / 2 / dq_dk
        return {"tau": base.tau, "predicted": predicted, "residual": abs(base.tau - predicted),
                "dq_dk": dq_dk, "q": q}
