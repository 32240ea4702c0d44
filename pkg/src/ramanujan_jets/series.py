"""
Truncated power series in one variable with exact coefficients.

Coefficients are Fractions or rational :class:`~ramanujan_jets.jet.Jet`
values; anything closed under ``+``, ``*`` and ``1/x`` works.  Two series only
combine when their truncation orders agree; use :meth:`PowerSeries.truncate`
to lower one explicitly.
"""
from __future__ import annotations

from fractions import Fraction

from .errors import DomainError, NotInvertibleError, ShapeError


class PowerSeries:
    """``c_0 + c_1 x + ... + c_N x^N + O(x^(N+1))``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = tuple(Fraction(c) if isinstance(c, int) else c for c in coeffs)
        if not coeffs:
            raise ShapeError("a series needs at least its constant term")
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("PowerSeries is immutable")

    @classmethod
    def monomial(cls, degree, order, value=1):
        c = [Fraction(0)] * (order + 1)
        if degree <= order:
            c[degree] = Fraction(value) if isinstance(value, int) else value
        return cls(c)

    @property
    def order(self) -> int:
        """Truncation order N (highest retained power)."""
        return len(self.coeffs) - 1

    def __getitem__(self, i):
        return self.coeffs[i]

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, PowerSeries):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"PowerSeries({[str(c) for c in self.coeffs]})"

    def truncate(self, order: int) -> "PowerSeries":
        if order > self.order:
            raise ShapeError(f"cannot raise truncation order {self.order} to {order}")
        return PowerSeries(self.coeffs[: order + 1])

    def map(self, fn) -> "PowerSeries":
        return PowerSeries(fn(c) for c in self.coeffs)

    def _check(self, other):
        if isinstance(other, PowerSeries):
            if other.order != self.order:
                raise ShapeError(f"series orders differ: {self.order} vs {other.order}")
            return other
        zero = self.coeffs[0] * 0
        return PowerSeries((zero + other,) + (zero,) * self.order)

    def __add__(self, other):
        other = self._check(other)
        return PowerSeries(a + b for a, b in zip(self.coeffs, other.coeffs))

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries(-a for a in self.coeffs)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        if not isinstance(other, PowerSeries):
            return PowerSeries(a * other for a in self.coeffs)
        other = self._check(other)
        a, b = self.coeffs, other.coeffs
        out = []
        for k in range(len(a)):
            acc = a[0] * b[k]
            for i in range(1, k + 1):
                acc = acc + a[i] * b[k - i]
            out.append(acc)
        return PowerSeries(out)

    def __rmul__(self, other):
        return PowerSeries(other * a for a in self.coeffs)

    def __truediv__(self, other):
        if isinstance(other, PowerSeries):
            return self * series_invert(self._check(other))
        return PowerSeries(a / other for a in self.coeffs)

    def __pow__(self, n: int):
        if n < 0:
            return series_invert(self) ** (-n)
        result = self._check(1)
        for _ in range(n):
            result = result * self
        return result

    def __call__(self, x):
        """Horner evaluation at a scalar (numeric evaluation of the truncation)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


def series_invert(f: PowerSeries) -> PowerSeries:
    """Multiplicative inverse ``1/f``; needs an invertible constant term."""
    a = f.coeffs
    try:
        inv0 = 1 / a[0]
    except ZeroDivisionError as exc:
        raise NotInvertibleError("series with zero constant term has no inverse") from exc
    out = [inv0]
    for k in range(1, len(a)):
        acc = a[1] * out[k - 1]
        for i in range(2, k + 1):
            acc = acc + a[i] * out[k - i]
        out.append(-(acc * inv0))
    return PowerSeries(out)


def series_compose(f: PowerSeries, g: PowerSeries) -> PowerSeries:
    """``f(g(x))`` for ``g`` with zero constant term (or ``f`` a polynomial)."""
    if g.coeffs[0] != 0:
        raise DomainError("inner series must have zero constant term")
    n = g.order
    f = f.truncate(min(f.order, n)) if f.order > n else f
    acc = PowerSeries.monomial(0, n, 0) + f.coeffs[-1]
    for c in reversed(f.coeffs[:-1]):
        acc = acc * g + c
    return acc


def series_revert(f: PowerSeries) -> PowerSeries:
    """Compositional inverse ``g`` with ``f(g(x)) = x``.

    ``f`` needs a zero constant term and an invertible linear term.  Each
    step fixes one more coefficient from the residual of ``f(g) - x``.
    """
    if f.coeffs[0] != 0:
        raise DomainError("reversion needs zero constant term")
    if len(f.coeffs) < 2 or f.coeffs[1] == 0:
        raise NotInvertibleError("reversion needs a nonzero linear term")
    n = f.order
    inv1 = 1 / f.coeffs[1]
    g = [Fraction(0)] * (n + 1)
    g[1] = inv1
    for k in range(2, n + 1):
        comp = series_compose(f.truncate(k), PowerSeries(g[: k + 1]))
        g[k] = -(comp.coeffs[k] * inv1)
    return PowerSeries(g)


def q_derivative(f: PowerSeries) -> PowerSeries:
    """``x d/dx`` applied termwise."""
    return PowerSeries(k * c for k, c in enumerate(f.coeffs))


def derivative(f: PowerSeries) -> PowerSeries:
    """``d/dx``; the result keeps the same truncation order with a zero top term."""
    c = f.coeffs
    zero = c[0] * 0
    return PowerSeries([k * c[k] for k in range(1, len(c))] + [zero])


def series_exp(f: PowerSeries) -> PowerSeries:
    """``exp(f)`` for ``f`` with zero constant term."""
    if f.coeffs[0] != 0:
        raise DomainError("exact exp needs zero constant term")
    a = f.coeffs
    out = [Fraction(1)]
    for k in range(1, len(a)):
        acc = 0
        for i in range(1, k + 1):
            acc += i * a[i] * out[k - i]
        out.append(acc / k)
    return PowerSeries(out)


def series_log(f: PowerSeries) -> PowerSeries:
    """``log(f)`` for ``f`` with constant term 1."""
    a = f.coeffs
    if a[0] != 1:
        raise DomainError("exact log needs constant term 1")
    out = [Fraction(0)]
    for k in range(1, len(a)):
        acc = k * a[k]
        for i in range(1, k):
            acc -= i * out[i] * a[k - i]
        out.append(acc / k)
    return PowerSeries(out)


def write_golden(path, values) -> None:
    """One exact rational ``p/q`` per line."""
    with open(path, "w") as fh:
        for v in values:
            fh.write(f"{Fraction(v)}\n")


def read_golden(path) -> list:
    with open(path) as fh:
        return [Fraction(line.strip()) for line in fh if line.strip() and not line.startswith("#")]
