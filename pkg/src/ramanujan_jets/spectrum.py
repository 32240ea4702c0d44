"""
Right-hand side of the jet identities: ``m_0..m_{n-1}``, the z-independent
combinations ``nu_0, nu_1, nu_2`` and ``tau^2``.

The right-hand jet is ``(uz)^(-X) P_X^(-1) R(X)`` with ``P_X = prod_i (p_i)_X
/ (1)_X^r`` and ``R`` the target polynomial (``1/pi - k pi/2 X^2`` for 3F2,
``1/pi^2 - k/2 X^2 + j pi^2/24 X^4`` for 5F4).  Everything here is computed
with ``ln(uz) = 0``; the log factor is applied by :func:`m_jet_at`.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

import mpmath

from .errors import UnsupportedError
from .hyperseries import F32, F54, F76, SeriesFamily
from .jet import REAL, Jet, jet_pochhammer_frac, jet_pow_base
from .numerics import PrecisionContext, cot_pi, fundamental_constants, polygamma, to_fraction, to_mpf


def p_x_jet(family: SeriesFamily, ctx: PrecisionContext) -> Jet:
    """``P_X(...,0) = prod_i (p_i)_X / (1)_X^r`` as a real jet."""
    order = family.order
    with ctx.workprec():
        num = Jet.identity(order, REAL)
        for p in family.top_parameters:
            num = num * jet_pochhammer_frac(p, order, ctx)
        return num / jet_pochhammer_frac(1, order, ctx) ** family.order


def target_jet(family: SeriesFamily, k, j=None, l=None, ctx: PrecisionContext = None) -> Jet:
    """Target polynomial ``R(X)`` of the expansion, truncated at the family order."""
    with ctx.workprec():
        pi = +mpmath.pi
        zero = mpmath.mpf(0)
        k = to_mpf(to_fraction(k)) if not isinstance(k, mpmath.mpf) else k
        if family.kind == F32:
            return Jet([1 / pi, zero, -k * pi / 2], REAL)
        j = zero if j is None else (to_mpf(to_fraction(j)) if not isinstance(j, mpmath.mpf) else j)
        if family.kind == F54:
            return Jet([1 / pi ** 2, zero, -k / 2, zero, j * pi ** 2 / 24], REAL)
        l = zero if l is None else (to_mpf(to_fraction(l)) if not isinstance(l, mpmath.mpf) else l)
        return Jet([1 / pi ** 3, zero, -k / (2 * pi), zero, j * pi / 24, zero, -l * pi ** 3 / 720], REAL)


def m_jet(family: SeriesFamily, k, j=None, ctx: PrecisionContext = None) -> Jet:
    """``P_X^(-1) R(X)``: the right-hand jet with ``ln(uz) = 0``."""
    with ctx.workprec():
        return p_x_jet(family, ctx).inverse() * target_jet(family, k, j, ctx=ctx)


def m_jet_at(m0: Jet, z, u: int, ctx: PrecisionContext) -> Jet:
    """Apply the ``(uz)^(-X)`` factor to a spectrum jet."""
    with ctx.workprec():
        return jet_pow_base(u * z, -1, m0.order, ctx) * m0


def _nus(m):
    m0, m1, m2 = m[0], m[1], m[2]
    nu0 = m1 / m0
    nu1 = m1 ** 2 / (2 * m0 ** 2) - m2 / m0
    nu2 = m1 ** 3 / (3 * m0 ** 3) - m1 * m2 / m0 ** 2 + m[3] / m0 if len(m) > 3 else None
    return nu0, nu1, nu2


@dataclass
class MSpectrum:
    """Right-hand side data for one family and ``(k, j)``.

    When ``j`` is unknown (5F4), ``m[4]`` and ``tau2`` are reported for
    ``j = 0`` and grow by ``m4_slope * j`` and ``tau2_slope * j``.
    """

    family: SeriesFamily
    k: Fraction
    j: Optional[Fraction]
    m: tuple
    nu0: object
    nu1: object
    nu2: object
    tau2: object
    m4_slope: object = None
    tau2_slope: object = None
    closed: dict = field(default_factory=dict)

    def tau2_for(self, j):
        if self.family.kind != F54:
            return self.tau2
        base = self.tau2 if self.j is None else self.tau2 - self.tau2_slope * to_mpf(self.j)
        return base + self.tau2_slope * (to_mpf(to_fraction(j)) if not isinstance(j, mpmath.mpf) else j)

    def m_for(self, j) -> Jet:
        """Full ``m`` jet (``ln(uz)=0``) for a given ``j``."""
        if self.family.kind != F54:
            return Jet(self.m, REAL)
        jv = to_mpf(to_fraction(j)) if not isinstance(j, mpmath.mpf) else j
        base4 = self.m[4] if self.j is None else self.m[4] - self.m4_slope * to_mpf(self.j)
        return Jet(self.m[:4] + (base4 + self.m4_slope * jv,), REAL)


def closed_forms(family: SeriesFamily, k, j, ctx: PrecisionContext) -> dict:
    """``nu`` and ``tau^2`` from polygamma/cotangent expressions.

    These follow the printed expressions literally; the ``nu_0`` (and
    possibly ``nu_2``) sign convention differs from the direct jet values,
    which is why :func:`m_spectrum` reports both.
    """
    consts = fundamental_constants(ctx)
    with ctx.workprec():
        g, ln2, pi = consts["euler"], consts["ln2"], consts["pi"]
        k = to_mpf(to_fraction(k))
        if family.kind == F32:
            s = family.s
            cs2 = cot_pi(s, ctx) ** 2
            nu0 = (g + polygamma(0, s, ctx) - ln2) + (g + polygamma(0, 1 - s, ctx) - ln2)
            return {"nu0": nu0, "tau2": k + 1 + cs2}
        if family.kind != F54:
            raise UnsupportedError("closed forms exist for 3F2 and 5F4 only")
        s, t = family.s, family.t
        cs2, ct2 = cot_pi(s, ctx) ** 2, cot_pi(t, ctx) ** 2
        nu0 = (polygamma(0, s, ctx) + polygamma(0, 1 - s, ctx) + 2 * g - ln2) + \
              (polygamma(0, t, ctx) + polygamma(0, 1 - t, ctx) + 2 * g - ln2)
        nu1 = pi ** 2 / 2 * (k + mpmath.mpf(5) / 3 + cs2 + ct2)
        nu2 = (4 * consts["zeta3"] - polygamma(2, s, ctx) - polygamma(2, 1 - s, ctx)
               - polygamma(2, t, ctx) - polygamma(2, 1 - t, ctx)) / 6
        out = {"nu0": nu0, "nu1": nu1, "nu2": nu2}
        if j is not None:
            jv = to_mpf(to_fraction(j))
            out["tau2"] = (jv / 12 + k ** 2 / 4 + 5 * k / 3 + 1 + cs2 * ct2 + (1 + k) * (cs2 + ct2))
        return out


_COT_SQUARED = {2: Fraction(0), 3: Fraction(1, 3), 4: Fraction(1), 6: Fraction(3)}


def cot_squared_exact(s) -> Optional[Fraction]:
    """``cot^2(pi s)`` as a rational when ``s`` has denominator 2, 3, 4 or 6."""
    s = to_fraction(s)
    return _COT_SQUARED.get(s.denominator)


def tau2_closed_exact(family: SeriesFamily, k, j=None) -> Optional[Fraction]:
    """The ``tau^2`` closed form in exact arithmetic, or ``None`` if a cotangent is irrational."""
    k = to_fraction(k)
    if family.kind == F32:
        cs2 = cot_squared_exact(family.s)
        return None if cs2 is None else k + 1 + cs2
    if family.kind != F54 or j is None:
        return None
    cs2, ct2 = cot_squared_exact(family.s), cot_squared_exact(family.t)
    if cs2 is None or ct2 is None:
        return None
    return to_fraction(j) / 12 + k ** 2 / 4 + Fraction(5, 3) * k + 1 + cs2 * ct2 + (1 + k) * (cs2 + ct2)


def m_spectrum(family: SeriesFamily, k, j=None, ctx: PrecisionContext = None) -> MSpectrum:
    """Spectrum computed directly from the jet definition, plus the closed forms."""
    if family.kind == F76:
        raise UnsupportedError("no spectrum theory for 7F6")
    k = to_fraction(k)
    j = None if j is None else to_fraction(j)
    with ctx.workprec():
        m = tuple(m_jet(family, k, j if j is not None else 0, ctx))
        nu0, nu1, nu2 = _nus(m)
        if family.kind == F32:
            tau2 = m[1] ** 2 - 2 * m[0] * m[2]
            ms = MSpectrum(family, k, j, m, nu0, nu1, nu2, tau2)
        else:
            tau2 = 2 * m[0] * m[4] - 2 * m[1] * m[3] + m[2] ** 2
            m4_slope = mpmath.pi ** 2 / 24
            ms = MSpectrum(family, k, j, m, nu0, nu1, nu2, tau2,
                             m4_slope=m4_slope, tau2_slope=2 * m[0] * m4_slope)
        ms.closed = closed_forms(family, k, j, ctx)
        return ms


def nu0_value(family: SeriesFamily, ctx: PrecisionContext):
    """``nu_0 = m_1/m_0``; independent of ``k`` and ``j``."""
    with ctx.workprec():
        return -p_x_jet(family, ctx)[1]
