"""
Arbitrary-precision scalars, polygamma values at rationals and constant
recognition.

Real numbers are :class:`mpmath.mpf` values; exact rationals are
:class:`fractions.Fraction`.  Precision never lives in global state owned by
this package: every routine takes a :class:`PrecisionContext` and performs its
work inside ``mpmath.workprec(ctx.prec)``.

    >>> ctx = make_context(128)
    >>> r = recognize(mpmath.sqrt(5), 1000, "quadratic", ctx)
    >>> str(r)
    'sqrt(5)'
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

import mpmath

from .errors import ConfigurationError, DomainError, UnsupportedError

MIN_WORKING_BITS = 64
MIN_GUARD_BITS = 32
MAX_POLYGAMMA_ORDER = 6
MAX_QUADRATIC_RADICAND = 1000

Rational = Union[int, Fraction]


@dataclass(frozen=True)
class PrecisionContext:
    """Binary working precision plus guard bits and recognition tolerance."""

    working_bits: int
    guard_bits: int = 32
    recognition_tolerance: mpmath.mpf = field(default=None)

    def __post_init__(self):
        if self.working_bits < MIN_WORKING_BITS:
            raise ConfigurationError(
                f"working_bits must be >= {MIN_WORKING_BITS}, got {self.working_bits}")
        if self.guard_bits < MIN_GUARD_BITS:
            raise ConfigurationError(
                f"guard_bits must be >= {MIN_GUARD_BITS}, got {self.guard_bits}")
        tol = self.recognition_tolerance
        if tol is None:
            # 2^-(bits/2), kept strictly inside the bound at the 64-bit minimum
            tol = mpmath.ldexp(1, -max(self.working_bits // 2, 33))
        tol = mpmath.mpf(tol)
        if not (0 < tol < mpmath.ldexp(1, -32)):
            raise ConfigurationError("recognition_tolerance must lie in (0, 2^-32)")
        object.__setattr__(self, "recognition_tolerance", tol)

    @property
    def prec(self) -> int:
        """Total bits used for intermediate computation."""
        return self.working_bits + self.guard_bits

    @property
    def eps(self):
        """Target absolute accuracy 2^-(working_bits + guard_bits)."""
        return mpmath.ldexp(1, -self.prec)

    def workprec(self):
        return mpmath.workprec(self.prec)

    def with_bits(self, bits: int) -> "PrecisionContext":
        return make_context(bits, self.guard_bits)


def make_context(bits: int, guard_bits: int = 32) -> PrecisionContext:
    """Context with ``bits`` of working precision and default tolerance."""
    return PrecisionContext(int(bits), int(guard_bits))


def to_fraction(x) -> Fraction:
    """Parse ``"p/q"``, ints and Fractions into an exact rational."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise DomainError(f"not a rational literal: {x!r}") from exc
    raise DomainError(f"cannot convert {x!r} to an exact rational")


def to_mpf(x):
    """Convert an exact rational (or anything mpmath accepts) to mpf at current precision."""
    if isinstance(x, Fraction):
        return mpmath.mpf(x.numerator) / x.denominator
    return mpmath.mpf(x)


def format_real(x, digits: int = 40) -> str:
    return mpmath.nstr(x, digits)


# -- constants --------------------------------------------------------------

def fundamental_constants(ctx: PrecisionContext) -> dict:
    """pi, Euler's gamma, ln 2 and zeta(3) at ``ctx`` precision."""
    with ctx.workprec():
        return {
            "pi": +mpmath.pi,
            "euler": +mpmath.euler,
            "ln2": +mpmath.ln2,
            "zeta3": +mpmath.apery,
        }


# -- polygamma ---------------------------------------------------------------

def _digamma_rational(s: Fraction):
    # Gauss digamma theorem on (0, 1], then upward recurrence.
    shift = math.ceil(s) - 1
    f = s - shift
    p, q = f.numerator, f.denominator
    if f == 1:
        value = -mpmath.euler
    else:
        value = -mpmath.euler - mpmath.log(2 * q) - mpmath.pi / 2 * mpmath.cot(mpmath.pi * p / q)
        for k in range(1, (q + 1) // 2):
            value += 2 * mpmath.cospi(mpmath.mpf(2 * k * p) / q) * mpmath.log(mpmath.sinpi(mpmath.mpf(k) / q))
    for i in range(shift):
        value += 1 / to_mpf(f + i)
    return value


def _hurwitz_zeta(sigma: int, s: Fraction, prec: int):
    """zeta(sigma, s) for integer sigma >= 2 by summation plus Euler-Maclaurin tail."""
    eps = mpmath.ldexp(1, -prec)
    n_direct = max(16, prec // 3)
    a = to_mpf(s)
    total = mpmath.fsum(1 / (a + n) ** sigma for n in range(n_direct))
    x = a + n_direct
    total += x ** (1 - sigma) / (sigma - 1) + x ** (-sigma) / 2
    rising = mpmath.mpf(sigma)          # (sigma)_{2k-1}
    power = x ** (-sigma - 1)
    fact = mpmath.mpf(2)
    last = mpmath.inf
    for k in range(1, 4 * prec):
        term = mpmath.bernoulli(2 * k) / fact * rising * power
        total += term
        if abs(term) < eps * abs(total):
            break
        if abs(term) > last:
            raise ArithmeticError("Euler-Maclaurin tail stopped decreasing")
        last = abs(term)
        rising *= (sigma + 2 * k - 1) * (sigma + 2 * k)
        power /= x * x
        fact *= (2 * k + 1) * (2 * k + 2)
    return total


def polygamma(m: int, s, ctx: PrecisionContext):
    """psi^(m)(s) for 0 <= m <= 6 and rational s > 0."""
    if not 0 <= m <= MAX_POLYGAMMA_ORDER:
        raise UnsupportedError(f"polygamma order {m} not in 0..{MAX_POLYGAMMA_ORDER}")
    s = to_fraction(s)
    if s <= 0:
        raise DomainError(f"polygamma requires s > 0, got {s}")
    with ctx.workprec():
        if m == 0:
            return _digamma_rational(s)
        sign = -1 if m % 2 == 0 else 1
        return sign * mpmath.factorial(m) * _hurwitz_zeta(m + 1, s, ctx.prec)


def cot_pi(s, ctx: PrecisionContext):
    """cot(pi s) for non-integer rational s; exactly 0 at half-integers."""
    s = to_fraction(s)
    if s.denominator == 1:
        raise DomainError(f"cot(pi*s) has a pole at integer s={s}")
    if s.denominator == 2:
        return mpmath.mpf(0)
    with ctx.workprec():
        return mpmath.cot(mpmath.pi * to_mpf(s))


# -- recognition ---------------------------------------------------------------

def _squarefree_split(n: int):
    """Return (m, d) with n = m^2 d and d square-free."""
    m, d = 1, n
    f = 2
    while f * f <= d:
        while d % (f * f) == 0:
            d //= f * f
            m *= f
        f += 1
    return m, d


@dataclass(frozen=True)
class RecognizedConstant:
    """An identified exact value together with its residual certificate.

    kind is ``"rational"`` (``p``), ``"quadratic"`` (``sign*sqrt(radicand)``),
    ``"quadratic_affine"`` (``p + q*sqrt(d)``) or ``"unrecognized"``.
    """

    kind: str
    certificate_residual: object
    p: Optional[Fraction] = None
    q: Optional[Fraction] = None
    d: Optional[int] = None
    radicand: Optional[Fraction] = None
    sign: int = 1
    approx: object = None

    @property
    def recognized(self) -> bool:
        return self.kind != "unrecognized"

    def exact_value(self, ctx: PrecisionContext):
        with ctx.workprec():
            if self.kind == "rational":
                return to_mpf(self.p)
            if self.kind == "quadratic":
                return self.sign * mpmath.sqrt(to_mpf(self.radicand))
            if self.kind == "quadratic_affine":
                return to_mpf(self.p) + to_mpf(self.q) * mpmath.sqrt(self.d)
            return self.approx

    def __str__(self):
        if self.kind == "rational":
            return str(self.p)
        if self.kind == "quadratic":
            return f"{'-' if self.sign < 0 else ''}sqrt({self.radicand})"
        if self.kind == "quadratic_affine":
            op = "-" if self.q < 0 else "+"
            return f"{self.p} {op} {abs(self.q)}*sqrt({self.d})"
        return mpmath.nstr(self.approx, 30)

    def to_json(self, digits: int = 40):
        if self.kind == "rational":
            return str(self.p)
        if self.kind == "quadratic":
            out = {"sqrt": str(self.radicand)}
            if self.sign < 0:
                out["sign"] = -1
            return out
        if self.kind == "quadratic_affine":
            return {"p": str(self.p), "q": str(self.q), "sqrt": str(self.d)}
        return {"decimal": mpmath.nstr(self.approx, digits), "digits": digits}


def _convergents(x, bound: int):
    h0, h1 = 0, 1
    k0, k1 = 1, 0
    y = x
    for _ in range(4 * bound.bit_length() + 64):
        a = int(mpmath.floor(y))
        h0, h1 = h1, a * h1 + h0
        k0, k1 = k1, a * k1 + k0
        if k1 > bound:
            return
        yield Fraction(h1, k1)
        frac = y - a
        if frac == 0:
            return
        y = 1 / frac


def _recognize_rational(x, bound: int, tol):
    for conv in _convergents(x, bound):
        if abs(x - to_mpf(conv)) <= tol:
            return conv
    return None


def recognize(x, denominator_bound: int, mode: str, ctx: PrecisionContext) -> RecognizedConstant:
    """Identify ``x`` as a rational or quadratic surd within ``ctx.recognition_tolerance``.

    Rational candidates come from continued-fraction convergents with
    denominator at most ``denominator_bound``; the first convergent inside the
    tolerance wins.  In ``"quadratic"`` mode, ``x**2`` is also tried as a
    rational, then an integer quadratic polynomial with coefficients bounded
    by ``denominator_bound`` is searched for, keeping only radicands up to
    1000.  Every candidate is re-checked at full precision.
    """
    if denominator_bound < 1:
        raise DomainError("denominator_bound must be >= 1")
    if mode not in ("rational", "quadratic"):
        raise DomainError(f"unknown recognition mode {mode!r}")
    tol = ctx.recognition_tolerance
    with ctx.workprec():
        x = mpmath.mpf(x)

        def accept(rc):
            residual = abs(rc.exact_value(ctx) - x)
            if residual <= tol:
                return RecognizedConstant(**{**rc.__dict__, "certificate_residual": residual, "approx": x})
            return None

        r = _recognize_rational(x, denominator_bound, tol)
        if r is not None:
            hit = accept(RecognizedConstant("rational", None, p=r))
            if hit:
                return hit
        if mode == "quadratic" and x != 0:
            r2 = _recognize_rational(x * x, denominator_bound, tol * (2 * abs(x) + 1))
            if r2 is not None and r2 > 0:
                hit = accept(RecognizedConstant("quadratic", None, radicand=r2, sign=1 if x > 0 else -1))
                if hit:
                    return hit
            hit = _recognize_affine(x, denominator_bound, tol, accept)
            if hit:
                return hit
        return RecognizedConstant("unrecognized", mpmath.mpf(0), approx=x)


def _recognize_affine(x, bound, tol, accept):
    coeffs = mpmath.findpoly(x, 2, maxcoeff=bound, tol=tol)
    if not coeffs or len(coeffs) != 3:
        return None
    A, B, C = (int(c) for c in coeffs)
    disc = B * B - 4 * A * C
    if disc <= 0:
        return None
    m, d = _squarefree_split(disc)
    if d == 1 or d > MAX_QUADRATIC_RADICAND:
        return None
    p = Fraction(-B, 2 * A)
    for sgn in (1, -1):
        rc = RecognizedConstant("quadratic_affine", None, p=p, q=Fraction(sgn * m, 2 * A), d=d)
        hit = accept(rc)
        if hit:
            if hit.p == 0 and hit.q > 0:
                # plain sqrt(r) form is nicer when available
                return accept(RecognizedConstant("quadratic", None, radicand=hit.q ** 2 * d))
            return hit
    return None
