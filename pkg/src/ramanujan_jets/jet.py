"""
Truncated polynomials in a nilpotent symbol ``X`` of order ``n``.

A nilpotent matrix with ones on the superdiagonal makes every analytic
``f(X)`` an upper-triangular Toeplitz matrix whose first row is
``c0, c1, ..., c_{n-1}``.  Storing that row is enough: products of such
matrices are truncated Cauchy products of their rows.  The :class:`Jet` below
is that row.

Two scalar kinds are supported and never mixed:

* exact rationals (:class:`fractions.Fraction`, plain ints are promoted), and
* real numbers (:class:`mpmath.mpf`) at the ambient mpmath precision.

>>> one_plus_x = Jet.variable(3, 1)
>>> one_plus_x * (2 - one_plus_x)
Jet([1, 0, -1])
"""
from __future__ import annotations

from fractions import Fraction
from math import factorial

import mpmath

from .errors import DomainError, NotInvertibleError, ScalarKindError, ShapeError, UnsupportedError
from .numerics import PrecisionContext, polygamma, to_fraction, to_mpf

RATIONAL = "rational"
REAL = "real"

MAX_FRAC_POCHHAMMER_ORDER = 7


def _kind_of(values):
    kinds = set()
    for v in values:
        if isinstance(v, bool):
            raise ScalarKindError("bool is not a jet scalar")
        if isinstance(v, (int, Fraction)):
            if not isinstance(v, int):
                kinds.add(RATIONAL)
        elif isinstance(v, (mpmath.mpf, float)):
            kinds.add(REAL)
        else:
            raise ScalarKindError(f"unsupported jet scalar {v!r} ({type(v).__name__})")
    if len(kinds) > 1:
        raise ScalarKindError("rational and real scalars cannot be mixed in one jet")
    return kinds.pop() if kinds else RATIONAL


class Jet:
    """Immutable truncated series ``c0 + c1 X + ... + c_{n-1} X^{n-1}``."""

    __slots__ = ("coeffs", "kind")

    def __init__(self, coeffs, kind=None):
        coeffs = tuple(coeffs)
        if not coeffs:
            raise ShapeError("a jet needs at least one coefficient")
        detected = _kind_of(coeffs)
        if kind is None:
            kind = detected
        elif detected != kind and any(not isinstance(c, int) for c in coeffs):
            raise ScalarKindError(f"coefficients are {detected}, requested {kind}")
        if kind == RATIONAL:
            coeffs = tuple(Fraction(c) for c in coeffs)
        else:
            coeffs = tuple(mpmath.mpf(c) for c in coeffs)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "kind", kind)

    def __setattr__(self, name, value):
        raise AttributeError("Jet is immutable")

    # -- constructors -----------------------------------------------------

    @classmethod
    def constant(cls, value, order, kind=None):
        if kind is None:
            kind = REAL if isinstance(value, (mpmath.mpf, float)) else RATIONAL
        zero = Fraction(0) if kind == RATIONAL else mpmath.mpf(0)
        return cls((value,) + (zero,) * (order - 1), kind)

    @classmethod
    def identity(cls, order, kind=RATIONAL):
        return cls.constant(1, order, kind)

    @classmethod
    def variable(cls, order, head=0, kind=None):
        """The jet ``head + X`` (``X`` itself when head is 0)."""
        if kind is None:
            kind = REAL if isinstance(head, (mpmath.mpf, float)) else RATIONAL
        if order == 1:
            return cls((head,), kind)
        zero = Fraction(0) if kind == RATIONAL else mpmath.mpf(0)
        return cls((head, 1) + (zero,) * (order - 2), kind)

    # -- basic protocol ---------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.coeffs)

    @property
    def head(self):
        return self.coeffs[0]

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    def __iter__(self):
        return iter(self.coeffs)

    def __repr__(self):
        shown = [str(c) if self.kind == RATIONAL else mpmath.nstr(c, 15) for c in self.coeffs]
        return f"Jet([{', '.join(shown)}])"

    def __str__(self):
        return format_jet(self)

    def __eq__(self, other):
        if isinstance(other, Jet):
            return self.kind == other.kind and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.kind, self.coeffs))

    def to_real(self) -> "Jet":
        if self.kind == REAL:
            return self
        return Jet([to_mpf(c) for c in self.coeffs], REAL)

    def truncate(self, order: int) -> "Jet":
        if order > self.order:
            raise ShapeError(f"cannot raise truncation order {self.order} to {order}")
        return Jet(self.coeffs[:order], self.kind)

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Jet):
            if other.order != self.order:
                raise ShapeError(f"jet orders differ: {self.order} vs {other.order}")
            if other.kind != self.kind:
                raise ScalarKindError(f"cannot combine {self.kind} and {other.kind} jets")
            return other
        if isinstance(other, bool):
            return NotImplemented
        if isinstance(other, int):
            return Jet.constant(other, self.order, self.kind)
        if isinstance(other, Fraction) and self.kind == RATIONAL:
            return Jet.constant(other, self.order, RATIONAL)
        if isinstance(other, (mpmath.mpf, float)) and self.kind == REAL:
            return Jet.constant(mpmath.mpf(other), self.order, REAL)
        if isinstance(other, (Fraction, mpmath.mpf, float)):
            raise ScalarKindError(f"cannot combine a {self.kind} jet with {type(other).__name__}")
        return NotImplemented

    def _new(self, coeffs):
        return Jet(coeffs, self.kind)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._new(a + b for a, b in zip(self.coeffs, other.coeffs))

    __radd__ = __add__

    def __neg__(self):
        return self._new(-a for a in self.coeffs)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._new(a - b for a, b in zip(self.coeffs, other.coeffs))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return self._new(a * other for a in self.coeffs)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        n = len(a)
        out = []
        for k in range(n):
            acc = a[0] * b[k]
            for i in range(1, k + 1):
                acc += a[i] * b[k - i]
            out.append(acc)
        return self._new(out)

    __rmul__ = __mul__

    def inverse(self) -> "Jet":
        a = self.coeffs
        if a[0] == 0:
            raise NotInvertibleError("jet with zero head is nilpotent and has no inverse")
        inv0 = 1 / a[0]
        out = [inv0]
        for k in range(1, len(a)):
            acc = a[1] * out[k - 1]
            for i in range(2, k + 1):
                acc += a[i] * out[k - i]
            out.append(-acc * inv0)
        return self._new(out)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = Jet.identity(self.order, self.kind)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result


# -- module-level operations --------------------------------------------------

def jet_add(lhs: Jet, rhs: Jet) -> Jet:
    return lhs + rhs


def jet_mul(lhs: Jet, rhs: Jet) -> Jet:
    return lhs * rhs


def jet_neg(a: Jet) -> Jet:
    return -a


def jet_inv(a: Jet) -> Jet:
    return a.inverse()


def jet_exp(a: Jet) -> Jet:
    """exp of a jet by the recurrence ``k f_k = sum_i i a_i f_{k-i}``.

    Rational jets need a zero head so the result stays exact.
    """
    c = a.coeffs
    if a.kind == RATIONAL:
        if c[0] != 0:
            raise DomainError("exp of a rational jet needs zero head to stay exact")
        f0 = Fraction(1)
    else:
        f0 = mpmath.exp(c[0])
    out = [f0]
    for k in range(1, a.order):
        acc = 0
        for i in range(1, k + 1):
            acc += i * c[i] * out[k - i]
        out.append(acc / k)
    return Jet(out, a.kind)


def jet_log(a: Jet) -> Jet:
    """Principal logarithm; head must be positive (exactly 1 for rational jets)."""
    c = a.coeffs
    if a.kind == RATIONAL:
        if c[0] != 1:
            raise DomainError("log of a rational jet needs head 1 to stay exact")
        g0 = Fraction(0)
    else:
        if c[0] <= 0:
            raise DomainError("log needs a positive head")
        g0 = mpmath.log(c[0])
    out = [g0]
    for k in range(1, a.order):
        acc = k * c[k]
        for i in range(1, k):
            acc -= i * out[i] * c[k - i]
        out.append(acc / (k * c[0]))
    return Jet(out, a.kind)


def jet_pow_base(w, sign: int, order: int, ctx: PrecisionContext) -> Jet:
    """``w^(sign*X)`` as a real jet: coefficient k is ``(sign ln w)^k / k!``."""
    if sign not in (1, -1):
        raise DomainError("sign must be +1 or -1")
    with ctx.workprec():
        w = to_mpf(w) if isinstance(w, Fraction) else mpmath.mpf(w)
        if w <= 0:
            raise DomainError(f"base must be positive, got {w}")
        lw = sign * mpmath.log(w)
        out = [mpmath.mpf(1)]
        for k in range(1, order):
            out.append(out[-1] * lw / k)
        return Jet(out, REAL)


def jet_pochhammer_int(a: Jet, n: int) -> Jet:
    """``(A)_n = A (A+1) ... (A+n-1)``; the identity jet for n = 0."""
    if n < 0:
        raise DomainError("Pochhammer index must be non-negative")
    result = Jet.identity(a.order, a.kind)
    for j in range(n):
        result = result * (a + j)
    return result


def jet_pochhammer_frac(s, order: int, ctx: PrecisionContext) -> Jet:
    """``(s)_X = Gamma(s+X)/Gamma(s)`` as a real jet.

    Uses ``log (s)_X = sum_{k>=1} psi^(k-1)(s) X^k / k!``.
    """
    if order > MAX_FRAC_POCHHAMMER_ORDER:
        raise UnsupportedError(f"(s)_X supported up to order {MAX_FRAC_POCHHAMMER_ORDER}, got {order}")
    s = to_fraction(s)
    if s <= 0:
        raise DomainError("(s)_X needs s > 0")
    with ctx.workprec():
        logc = [mpmath.mpf(0)]
        for k in range(1, order):
            logc.append(polygamma(k - 1, s, ctx) / factorial(k))
        return jet_exp(Jet(logc, REAL))


def format_jet(a: Jet, digits: int = 20) -> str:
    """Render as ``c0 + c1*X + c2*X^2 ...`` with exact or fixed-digit coefficients."""
    parts = []
    for i, c in enumerate(a.coeffs):
        text = str(abs(c)) if a.kind == RATIONAL else mpmath.nstr(abs(c), digits)
        mono = "" if i == 0 else ("*X" if i == 1 else f"*X^{i}")
        neg = c < 0
        if not parts:
            parts.append(("-" if neg else "") + text + mono)
        else:
            parts.append((" - " if neg else " + ") + text + mono)
    return "".join(parts)
