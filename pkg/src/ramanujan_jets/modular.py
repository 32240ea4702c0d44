"""
Jacobi theta functions and the elliptic lambda/alpha functions.

These give a closed-form route to the 3F2 ``s = 1/2`` solutions that shares
no code with the series solver, so it doubles as an oracle.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .errors import DomainError, OutOfRegionError
from .numerics import PrecisionContext, to_fraction, to_mpf

MAX_Q = mpmath.mpf("0.5")


@dataclass(frozen=True)
class ThetaValues:
    """theta_2, theta_3, theta_4 at ``q`` and their ``q d/dq`` derivatives."""

    q: object
    theta2: object
    theta3: object
    theta4: object
    dtheta2: object
    dtheta3: object
    dtheta4: object
    terms: int
    prec: int = 53

    def identity_residual(self):
        """``theta_3^4 - theta_2^4 - theta_4^4``."""
        with mpmath.workprec(self.prec):
            return self.theta3 ** 4 - self.theta2 ** 4 - self.theta4 ** 4

    def derivative_residuals(self):
        """Residuals of the two logarithmic-derivative identities."""
        t2, t3, t4 = self.theta2, self.theta3, self.theta4
        with mpmath.workprec(self.prec):
            first = 4 * self.dtheta3 / t3 - 4 * self.dtheta4 / t4 - t2 ** 4
            if t2 == 0:
                return first, mpmath.mpf(0)
            second = 4 * self.dtheta2 / t2 - 4 * self.dtheta3 / t3 - t4 ** 4
            return first, second


def _truncation_index(q, bits):
    # smallest n with q^{n^2} below 2^-bits, plus margin
    return int(mpmath.ceil(mpmath.sqrt(bits * mpmath.ln(2) / mpmath.ln(1 / q)))) + 2


def theta(q, ctx: PrecisionContext) -> ThetaValues:
    """Theta values for real ``0 <= q <= 1/2``."""
    with ctx.workprec():
        q = to_mpf(to_fraction(q)) if isinstance(q, (str, Fraction, int)) else mpmath.mpf(q)
        if q < 0:
            raise DomainError("theta_2 needs q >= 0 on the real line")
        if q > MAX_Q:
            raise OutOfRegionError(f"|q| = {mpmath.nstr(q, 6)} > 0.5")
        if q == 0:
            zero, one = mpmath.mpf(0), mpmath.mpf(1)
            return ThetaValues(q, zero, one, one, zero, zero, zero, 0, ctx.prec)
        nmax = _truncation_index(q, ctx.prec)
        t3 = t4 = mpmath.mpf(1)
        d3 = d4 = mpmath.mpf(0)
        t2 = d2 = mpmath.mpf(0)
        for n in range(1, nmax + 1):
            p = q ** (n * n)
            sgn = -1 if n % 2 else 1
            t3 += 2 * p
            t4 += 2 * sgn * p
            d3 += 2 * n * n * p
            d4 += 2 * sgn * n * n * p
        for n in range(0, nmax + 1):
            e = mpmath.mpf(2 * n + 1) / 2
            p = q ** (e * e)
            t2 += 2 * p
            d2 += 2 * e * e * p
        return ThetaValues(q, t2, t3, t4, d2, d3, d4, nmax, ctx.prec)


def lambda_alpha(tau, ctx: PrecisionContext):
    """``(lambda, alpha)`` at ``q = exp(-pi tau)``.

    ``lambda = theta_2^4/theta_3^4`` and
    ``alpha = (1/pi - 4 tau q theta_4'/theta_4) / theta_3^4``.
    """
    with ctx.workprec():
        tau = mpmath.mpf(tau) if not isinstance(tau, (Fraction, str)) else to_mpf(to_fraction(tau))
        if tau <= 0:
            raise DomainError("tau must be positive")
        q = mpmath.exp(-mpmath.pi * tau)
        th = theta(q, ctx)
        t34 = th.theta3 ** 4
        lam = th.theta2 ** 4 / t34
        alpha = (1 / mpmath.pi - 4 * tau * th.dtheta4 / th.theta4) / t34
        return lam, alpha


def closed_form_3f2_half(k, ctx: PrecisionContext) -> dict:
    """``z = 4 lambda (1 - lambda)``, ``b = sqrt(k+1)(2 lambda - 1)``,
    ``a = alpha - sqrt(k+1) lambda`` at ``tau = sqrt(k+1)``.

    ``b`` is returned exactly as the lambda expression gives it, which is
    negative for ``tau > 1``; the series solver's ``b = tau sqrt(1-z)`` is
    its absolute value.
    """
    k = to_fraction(k)
    if k + 1 <= 0:
        raise DomainError("need k + 1 > 0")
    with ctx.workprec():
        tau = mpmath.sqrt(to_mpf(k + 1))
        lam, alpha = lambda_alpha(tau, ctx)
        return {
            "tau": tau,
            "q": mpmath.exp(-mpmath.pi * tau),
            "lambda": lam,
            "alpha": alpha,
            "z": 4 * lam * (1 - lam),
            "b": tau * (2 * lam - 1),
            "a": alpha - tau * lam,
        }


def theta_z_of_q(q, ctx: PrecisionContext):
    """``z(q) = 4 theta_2^4 theta_4^4 / theta_3^8`` and its ``q dz/dq``."""
    with ctx.workprec():
        th = theta(q, ctx)
        z = 4 * th.theta2 ** 4 * th.theta4 ** 4 / th.theta3 ** 8
        logd = 4 * th.dtheta2 / th.theta2 + 4 * th.dtheta4 / th.theta4 - 8 * th.dtheta3 / th.theta3
        return z, z * logd
