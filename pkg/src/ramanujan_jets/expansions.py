"""
Check jet identities of the form

    sum_n z^n P_n(X) (a + b(n+X) + c(n+X)^2 + ...) = (uz)^(-X) P_X^(-1) R(X)

for given data, and read ``k``, ``j``, ``l`` back out of the left-hand side.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import mpmath

from .errors import DomainError, InconsistencyError
from .hyperseries import F32, F54, F76, SeriesFamily, evaluate_components, relation_threshold, scalar_series_sum
from .jet import REAL, Jet, jet_pow_base
from .numerics import PrecisionContext, make_context, recognize, to_fraction, to_mpf
from .spectrum import m_jet_at, p_x_jet, target_jet


def _num(x):
    if x is None:
        return None
    if isinstance(x, mpmath.mpf):
        return x
    if isinstance(x, float):
        return mpmath.mpf(x)
    return to_mpf(to_fraction(x))


def _poly_args(family: SeriesFamily, poly):
    poly = [p for p in poly if p is not None]
    if len(poly) != family.n_components:
        raise DomainError(f"{family.label} needs {family.n_components} polynomial coefficients, got {len(poly)}")
    return [_num(p) for p in poly]


def lhs_jet(family: SeriesFamily, z, u, poly, ctx: PrecisionContext) -> Jet:
    """``a A + b B + c C (+ d D)`` evaluated at ``z``."""
    with ctx.workprec():
        coeffs = _poly_args(family, poly)
        cv = evaluate_components(family, _num(z), u, ctx)
        parts = [cv.a, cv.b, cv.c, cv.d][: family.n_components]
        out = [mpmath.mpf(0)] * family.order
        for coef, comp in zip(coeffs, parts):
            for i in range(family.order):
                out[i] += coef * comp[i]
        return Jet(out, REAL)


def verify_expansion(family: SeriesFamily, z, u, poly, k, j=None, l=None,
                     ctx: PrecisionContext = None) -> list:
    """``|LHS_i - RHS_i|`` for every jet component ``i``.

    ``poly`` is ``(a, b)``, ``(a, b, c)`` or ``(a, b, c, d)`` by family.
    """
    ctx = ctx or make_context(256)
    with ctx.workprec():
        z = _num(z)
        if u is None:
            u = -1 if z < 0 else 1
        lhs = lhs_jet(family, z, u, poly, ctx)
        target = target_jet(family, _num(k), _num(j), _num(l), ctx)
        rhs = m_jet_at(p_x_jet(family, ctx).inverse() * target, z, u, ctx)
        return [abs(x - y) for x, y in zip(lhs, rhs)]


@dataclass
class ExpansionSignature:
    """Normalised jet ``S = P_X (uz)^X LHS`` and the numbers read from it."""

    family: SeriesFamily
    order: int
    components: tuple
    k: object
    j: Optional[object] = None
    l: Optional[object] = None
    odd: dict = field(default_factory=dict)
    scalar_check: object = None
    recognized: dict = field(default_factory=dict)

    def to_json(self, digits: int = 30) -> dict:
        out = {"family": self.family.label, "order": self.order}
        for name in ("k", "j", "l"):
            value = getattr(self, name)
            if value is not None:
                rc = self.recognized.get(name)
                out[name] = {"decimal": mpmath.nstr(value, digits), "digits": digits}
                if rc is not None and rc.recognized:
                    out[name]["exact"] = rc.to_json()
        out["odd_components"] = {k: mpmath.nstr(v, 5) for k, v in self.odd.items()}
        out["scalar_check"] = mpmath.nstr(self.scalar_check, 5)
        return out


def extract_signature(family: SeriesFamily, z, u, poly, ctx: PrecisionContext = None,
                      denominator_bound: int = 10 ** 6, tolerance=None) -> ExpansionSignature:
    """Read ``k`` (and ``j``, ``l``) from the even components of ``S``.

    The scalar identity ``sum = 1/pi^m`` is checked first; extraction is
    refused when it fails by more than ``tolerance``.
    """
    ctx = ctx or make_context(256)
    with ctx.workprec():
        z = _num(z)
        if u is None:
            u = -1 if z < 0 else 1
        coeffs = _poly_args(family, poly)
        pi = +mpmath.pi
        m = family.pi_power
        scalar = abs(scalar_series_sum(family, z, coeffs, ctx) - 1 / pi ** m)
        tol = relation_threshold(ctx) if tolerance is None else _num(tolerance)
        if scalar > tol:
            raise InconsistencyError(
                f"scalar series misses 1/pi^{m} by {mpmath.nstr(scalar, 5)}; refusing to extract")
        lhs = lhs_jet(family, z, u, coeffs, ctx)
        S = p_x_jet(family, ctx) * jet_pow_base(u * z, 1, family.order, ctx) * lhs
        S = tuple(S)
        odd = {f"x^{i}": abs(S[i]) for i in range(1, family.order, 2)}
        j = l = None
        if family.kind == F32:
            k = -2 * S[2] / pi
        elif family.kind == F54:
            k = -2 * S[2]
            j = 24 * S[4] / pi ** 2
        elif family.kind == F76:
            k = -2 * pi * S[2]
            j = 24 * S[4] / pi
            l = -720 * S[6] / pi ** 3
        else:
            raise DomainError(f"unknown family kind {family.kind!r}")
        found = {"k": k, "j": j, "l": l}
        rec = {n: recognize(v, denominator_bound, "rational", ctx) for n, v in found.items() if v is not None}
        return ExpansionSignature(family, family.order, S, k, j, l, odd, scalar, rec)
