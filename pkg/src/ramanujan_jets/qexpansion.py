"""
q-parametrization objects over exact rationals.

For 3F2 the map is ``q = z exp(H_1(z)) / e^{nu_0}`` with ``H_1 = M_1/M_2``;
for 5F4 it is ``q = z exp(H_2(z)) / e^{nu_0}`` with ``H_i = M_i/M_3``.
Reverting gives the mirror map ``z(q)``.  For 5F4 we also build

* ``T = H_2^3/6 - H_0``,
* ``U = H_1 - J`` (computed independently of ``T``), and
* ``K = -1 + (q d/dq)^2 U``,

all as series in ``q``.  When ``e^{nu_0}`` is not recognised as a rational
number the series live in the scaled variable ``q~ = e^{nu_0} q``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import DomainError, UnsupportedError
from .hyperseries import F32, F54, SeriesFamily, component, component_series
from .numerics import make_context, recognize
from .series import (PowerSeries, q_derivative, series_compose, series_exp,
                     series_invert, series_revert)
from .spectrum import nu0_value

import mpmath

DEFAULT_ORDER = 8
_SCALE_CTX_BITS = 256


def _det3(r0, r1, r2):
    return (r0[0] * (r1[1] * r2[2] - r1[2] * r2[1])
            - r0[1] * (r1[0] * r2[2] - r1[2] * r2[0])
            + r0[2] * (r1[0] * r2[1] - r1[1] * r2[0]))


def component_scalar_series(family: SeriesFamily, N: int) -> dict:
    """``{"a": [a_0(z), ...], "b": [...], ...}`` as exact scalar series."""
    series = component_series(family, N)
    return {lab.lower(): [component(s, i) for i in range(family.order)] for lab, s in series.items()}


def h_functions(family: SeriesFamily, N: int) -> dict:
    """H-series in ``z`` through ``z^N``.

    3F2: ``H0 = M0/M2``, ``H1 = M1/M2``.  5F4: ``H0, H1, H2 = M_i/M3`` plus
    ``J`` and the companion ratios of 2x2 minors (``H2_u = u_2/u_1`` etc.).
    """
    if N < 3:
        raise DomainError("h_functions needs N >= 3")
    comp = component_scalar_series(family, N)
    a, b = comp["a"], comp["b"]
    if family.kind == F32:
        M0 = a[1] * b[2] - b[1] * a[2]
        M1 = a[0] * b[2] - b[0] * a[2]
        M2 = a[0] * b[1] - b[0] * a[1]
        inv = series_invert(M2)
        return {"H0": M0 * inv, "H1": M1 * inv}
    if family.kind != F54:
        raise UnsupportedError("H-functions exist for 3F2 and 5F4 only")
    c = comp["c"]
    rows = [(a[i], b[i], c[i]) for i in range(5)]
    M0 = _det3(rows[1], rows[2], rows[3])
    M1 = _det3(rows[0], rows[2], rows[3])
    M2 = _det3(rows[0], rows[1], rows[3])
    M3 = _det3(rows[0], rows[1], rows[2])
    inv = series_invert(M3)
    u = [a[0] * b[j] - a[j] * b[0] for j in range(5)]
    inv_u1 = series_invert(u[1])
    return {
        "H0": M0 * inv, "H1": M1 * inv, "H2": M2 * inv,
        "H0_u": u[4] * inv_u1, "H1_u": u[3] * inv_u1, "H2_u": u[2] * inv_u1,
        "J": (a[1] * b[2] - a[2] * b[1]) * inv_u1,
    }


def mirror_exponent(family: SeriesFamily, h: dict) -> PowerSeries:
    return h["H1"] if family.kind == F32 else h["H2"]


def exact_scale(family: SeriesFamily) -> Optional[Fraction]:
    """``e^{nu_0}`` as an exact rational when it is recognised, else ``None``."""
    ctx = make_context(_SCALE_CTX_BITS)
    with ctx.workprec():
        value = mpmath.exp(nu0_value(family, ctx))
    rc = recognize(value, 10 ** 12, "rational", ctx)
    return rc.p if rc.kind == "rational" else None


@dataclass
class QExpansion:
    """Mirror map and, for 5F4, the ``T``, ``U``, ``K`` series.

    ``scale`` is ``e^{nu_0}`` when rational; then every series is in the true
    ``q``.  Otherwise ``scale`` is ``None`` and the variable is ``q~``.
    """

    family: SeriesFamily
    order: int
    scale: Optional[Fraction]
    h: dict
    exp_h: PowerSeries
    q_of_z: PowerSeries
    z_of_q: PowerSeries
    T: Optional[PowerSeries] = None
    U: Optional[PowerSeries] = None
    U_from_T: Optional[PowerSeries] = None
    K: Optional[PowerSeries] = None

    @property
    def variable(self) -> str:
        return "q" if self.scale is not None else "q~"


def mirror_map(family: SeriesFamily, N: int = DEFAULT_ORDER, scale="auto") -> QExpansion:
    """Revert ``q(z) = z e^{H}/e^{nu_0}`` to ``z(q)`` through ``q^N``."""
    if N < 2:
        raise DomainError("mirror map needs N >= 2")
    h = h_functions(family, max(N, 3))
    if N < 3:
        h = {k: v.truncate(N) for k, v in h.items()}
    if scale == "auto":
        scale = exact_scale(family)
    exp_h = series_exp(mirror_exponent(family, h))
    z = PowerSeries.monomial(1, N)
    q_of_z = z * exp_h
    if scale is not None:
        q_of_z = q_of_z / Fraction(scale)
    z_of_q = series_revert(q_of_z)
    return QExpansion(family, N, scale, h, exp_h, q_of_z, z_of_q)


def t_u_k_series(family: SeriesFamily, N: int = DEFAULT_ORDER, scale="auto") -> QExpansion:
    """Mirror map plus ``T``, ``U`` and the Yukawa coupling ``K`` in ``q``."""
    if family.kind != F54:
        raise UnsupportedError("T, U, K are defined for 5F4 families only")
    qe = mirror_map(family, N, scale)
    h = qe.h
    T_z = h["H2"] ** 3 * Fraction(1, 6) - h["H0"]
    U_z = h["H1"] - h["J"]
    qe.T = series_compose(T_z, qe.z_of_q)
    qe.U = series_compose(U_z, qe.z_of_q)
    qe.U_from_T = q_derivative(qe.T)
    qe.K = q_derivative(q_derivative(qe.U)) - 1
    return qe


def normalized(series: PowerSeries, factor) -> list:
    """Coefficients divided by ``factor`` (the printed normalisations)."""
    return [c / factor for c in series.coeffs]
