"""
Component jets ``A``, ``B``, ``C`` (and ``D`` for 7F6) of the hypergeometric
families, in exact power-series form and as high-precision numbers at a
point ``z``, together with residual checks for the quadratic and determinant
relations the components satisfy.

With ``P_n(X) = prod_i (p_i + X)_n / (1 + X)_n^r`` the families are

* ``3F2(s)``:     ``p = (1/2, s, 1-s)``, ``r = 3``,  jets of order 3;
* ``5F4(s, t)``:  ``p = (1/2, s, t, 1-t, 1-s)``, ``r = 5``, order 5;
* ``7F6``:        seven parameters ``1/2``, ``r = 7``, order 7;

and ``A = sum z^n P_n``, ``B = sum z^n P_n (n+X)``, ``C = sum z^n P_n (n+X)^2``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import mpmath

from .errors import DivergenceError, DomainError, UnsupportedError
from .jet import Jet, jet_pochhammer_int, jet_pow_base
from .numerics import PrecisionContext, to_fraction, to_mpf
from .series import PowerSeries

F32, F54, F76 = "F32", "F54", "F76"

F32_PARAMETERS = tuple(Fraction(1, d) for d in (2, 3, 4, 6))
ADMISSIBLE_PAIRS = tuple(
    (Fraction(a), Fraction(b)) for a, b in [
        ("1/2", "1/2"), ("1/2", "1/3"), ("1/2", "1/4"), ("1/2", "1/6"),
        ("1/3", "1/3"), ("1/3", "1/4"), ("1/3", "1/6"), ("1/4", "1/4"),
        ("1/4", "1/6"), ("1/6", "1/6"), ("1/5", "2/5"), ("1/8", "3/8"),
        ("1/10", "3/10"), ("1/12", "5/12"),
    ]
)

MAX_ABS_Z = mpmath.mpf("0.95")
BURN_IN = 20
TAIL_MARGIN = mpmath.mpf("0.1")
MAX_TERMS = 200000

_LABELS = ("A", "B", "C", "D")


@dataclass(frozen=True)
class SeriesFamily:
    """One hypergeometric family: ``F32`` with ``s``, ``F54`` with ``(s, t)``, or ``F76``."""

    kind: str
    s: Optional[Fraction] = None
    t: Optional[Fraction] = None

    def __post_init__(self):
        if self.kind == F32:
            if self.s not in F32_PARAMETERS or self.t is not None:
                raise DomainError(f"3F2 needs s in {{1/2, 1/3, 1/4, 1/6}}, got s={self.s}")
        elif self.kind == F54:
            pair = (self.s, self.t)
            if pair not in ADMISSIBLE_PAIRS and pair[::-1] not in ADMISSIBLE_PAIRS:
                raise DomainError(f"(s, t) = ({self.s}, {self.t}) is not an admissible 5F4 pair")
        elif self.kind == F76:
            if self.s is not None or self.t is not None:
                raise DomainError("7F6 takes no parameters")
        else:
            raise DomainError(f"unknown family kind {self.kind!r}")

    @classmethod
    def f32(cls, s) -> "SeriesFamily":
        return cls(F32, to_fraction(s))

    @classmethod
    def f54(cls, s, t) -> "SeriesFamily":
        return cls(F54, to_fraction(s), to_fraction(t))

    @classmethod
    def f76(cls) -> "SeriesFamily":
        return cls(F76)

    @property
    def order(self) -> int:
        return {F32: 3, F54: 5, F76: 7}[self.kind]

    @property
    def top_parameters(self) -> tuple:
        half = Fraction(1, 2)
        if self.kind == F32:
            return (half, self.s, 1 - self.s)
        if self.kind == F54:
            return (half, self.s, self.t, 1 - self.t, 1 - self.s)
        return (half,) * 7

    @property
    def pi_power(self) -> int:
        """The series targets ``1/pi^pi_power``."""
        return {F32: 1, F54: 2, F76: 3}[self.kind]

    @property
    def n_components(self) -> int:
        """Number of component jets: A, B (, C (, D))."""
        return {F32: 2, F54: 3, F76: 4}[self.kind]

    @property
    def label(self) -> str:
        if self.kind == F32:
            return f"3F2:{self.s}"
        if self.kind == F54:
            return f"5F4:{self.s},{self.t}"
        return "7F6"

    def __str__(self):
        return self.label


def parse_family(text: str) -> SeriesFamily:
    """Parse ``"3F2:1/2"``, ``"5F4:1/2,1/3"`` or ``"7F6"``."""
    text = text.strip()
    head, _, rest = text.partition(":")
    head = head.upper()
    try:
        if head in ("3F2", "F32"):
            return SeriesFamily.f32(rest)
        if head in ("5F4", "F54"):
            s, t = rest.split(",")
            return SeriesFamily.f54(s, t)
        if head in ("7F6", "F76") and not rest:
            return SeriesFamily.f76()
    except ValueError as exc:
        raise DomainError(f"bad family string {text!r}: {exc}") from exc
    raise DomainError(f"bad family string {text!r}")


def all_families() -> list:
    """Every 3F2 and 5F4 family (4 + 14)."""
    return [SeriesFamily.f32(s) for s in F32_PARAMETERS] + \
        [SeriesFamily(F54, s, t) for s, t in ADMISSIBLE_PAIRS]


# -- exact series ---------------------------------------------------------------

def p_jet(family: SeriesFamily, n: int, order: Optional[int] = None) -> Jet:
    """Exact ``P_n(X)`` as a rational jet of the requested order."""
    if n < 0:
        raise DomainError("n must be non-negative")
    order = family.order if order is None else order
    num = Jet.identity(order)
    for p in family.top_parameters:
        num = num * jet_pochhammer_int(Jet.variable(order, p), n)
    den = jet_pochhammer_int(Jet.variable(order, 1), n) ** family.order
    return num / den


def component_series(family: SeriesFamily, N: int, order: Optional[int] = None) -> dict:
    """Exact series ``{"A": ..., "B": ..., ...}`` with jet coefficients up to ``z^N``."""
    if N < 1:
        raise DomainError("truncation N must be >= 1")
    order = family.order if order is None else order
    out = {lab: [] for lab in _LABELS[: family.n_components]}
    for n in range(N + 1):
        pn = p_jet(family, n, order)
        shift = Jet.variable(order, n)
        term = pn
        for lab in _LABELS[: family.n_components]:
            out[lab].append(term)
            term = term * shift
    return {lab: PowerSeries(coeffs) for lab, coeffs in out.items()}


def component(series: PowerSeries, i: int) -> PowerSeries:
    """Scalar series of the ``i``-th jet component."""
    return series.map(lambda j: j[i])


def picard_fuchs_residual(family: SeriesFamily, N: int) -> Fraction:
    """Largest coefficient of ``theta^r Y - z prod_i(theta + p_i) Y`` through ``z^N``.

    ``Y = (uz)^X A`` and ``theta = z d/dz``; on ``z^n (uz)^X`` the operator
    ``theta`` acts as multiplication by ``n + X``, so the check runs on exact
    jet coefficients.  Zero means the series solves the hypergeometric
    equation through that order.
    """
    if N < 2:
        raise DomainError("N must be >= 2")
    order = family.order
    A = component_series(family, N)["A"]
    worst = Fraction(0)
    for n in range(N + 1):
        lhs = Jet.variable(order, n) ** family.order * A[n]
        if n > 0:
            rhs = A[n - 1]
            for p in family.top_parameters:
                rhs = rhs * Jet.variable(order, n - 1 + p)
            lhs = lhs - rhs
        worst = max([worst] + [abs(c) for c in lhs])
    return worst


# -- numeric evaluation ----------------------------------------------------------

def _mul(a, b):
    n = len(a)
    return [sum(a[i] * b[k - i] for i in range(k + 1)) for k in range(n)]


def _shift(t, n):
    """(n + X) * t"""
    return [n * t[0]] + [n * t[k] + t[k - 1] for k in range(1, len(t))]


def _linear_power_inverse(c, power, order):
    """(c + X)^(-power) as a coefficient list."""
    inv = 1 / c
    out = []
    coef = inv ** power
    for k in range(order):
        out.append(coef)
        coef = -coef * (power + k) / (k + 1) * inv
    return out


def _sum_jet_series(params, denom_power, order, z, degree, ctx):
    """Sum ``sum_n z^n P_n (n+X)^d`` for d = 0..degree at ``ctx`` precision.

    Returns (list of coefficient lists, tail bound, number of terms).
    """
    eps = ctx.eps
    absz = abs(z)
    rho = (absz + TAIL_MARGIN) / (1 + TAIL_MARGIN)
    term = [mpmath.mpf(1)] + [mpmath.mpf(0)] * (order - 1)
    sums = [[mpmath.mpf(0)] * order for _ in range(degree + 1)]
    prev = None
    tail = mpmath.inf
    for n in range(MAX_TERMS):
        t = term
        size = mpmath.mpf(0)
        for d in range(degree + 1):
            acc = sums[d]
            for k in range(order):
                acc[k] += t[k]
            size = max(size, max(abs(x) for x in t))
            if d < degree:
                t = _shift(t, n)
        if z == 0:
            return sums, mpmath.mpf(0), 1
        if n >= BURN_IN and prev is not None and prev > 0:
            if size <= rho * prev:
                tail = size * rho / (1 - rho)
                if tail < eps:
                    return sums, tail, n + 1
        prev = size
        num = [mpmath.mpf(1)] + [mpmath.mpf(0)] * (order - 1)
        for p in params:
            num = _shift(num, to_mpf(p) + n)
        ratio = _mul(num, _linear_power_inverse(mpmath.mpf(n + 1), denom_power, order))
        term = [z * x for x in _mul(term, ratio)]
    raise DivergenceError("series did not converge within the term budget")


def _check_z(z, u):
    if isinstance(z, (Fraction, int, str)):
        z = to_mpf(to_fraction(z))
    else:
        z = mpmath.mpf(z)
    if abs(z) >= MAX_ABS_Z:
        raise DivergenceError(f"|z| = {mpmath.nstr(abs(z), 8)} is outside the trusted disc |z| < 0.95")
    if u is None:
        u = -1 if z < 0 else 1
    if u not in (1, -1):
        raise DomainError("u must be +1 or -1")
    if z != 0 and (u > 0) != (z > 0):
        raise DomainError("u must be the sign of z")
    return z, u


@dataclass
class ComponentVector:
    """Numeric components of A, B (, C, D) at a point ``z`` with branch sign ``u``."""

    family: SeriesFamily
    z: object
    u: int
    a: tuple
    b: tuple
    c: Optional[tuple] = None
    d: Optional[tuple] = None
    tail_bound: object = None
    terms: int = 0
    prec: int = 0

    def jets(self) -> dict:
        out = {"A": Jet(self.a), "B": Jet(self.b)}
        if self.c is not None:
            out["C"] = Jet(self.c)
        if self.d is not None:
            out["D"] = Jet(self.d)
        return out


def evaluate_components(family: SeriesFamily, z, u=None, ctx: PrecisionContext = None) -> ComponentVector:
    """Sum the component series at ``z`` until the tail bound drops below ``ctx.eps``."""
    with ctx.workprec():
        z, u = _check_z(z, u)
        sums, tail, terms = _sum_jet_series(
            family.top_parameters, family.order, family.order, z, family.n_components - 1, ctx)
        parts = [tuple(s) for s in sums] + [None] * (4 - len(sums))
        return ComponentVector(family, z, u, parts[0], parts[1], parts[2], parts[3],
                               tail_bound=tail, terms=terms, prec=ctx.prec)


def clausen_alpha(s, z, ctx: PrecisionContext):
    """``(alpha_0, alpha_1)`` of ``sum z^n (s/2+X)_n ((1-s)/2+X)_n / (1+X)_n^2``."""
    s = to_fraction(s)
    with ctx.workprec():
        z, _ = _check_z(z, None)
        sums, _, _ = _sum_jet_series((s / 2, (1 - s) / 2), 2, 2, z, 0, ctx)
        return sums[0][0], sums[0][1]


def scalar_series_sum(family: SeriesFamily, z, poly, ctx: PrecisionContext):
    """Plain sum of ``z^n prod (p_i)_n/(1)_n^r * poly(n)``, with ``poly`` = (a, b, c, ...).

    Independent of the jet machinery: only scalar rising factorials.
    """
    with ctx.workprec():
        z, _ = _check_z(z, None)
        poly = [to_mpf(to_fraction(p)) if isinstance(p, (str, Fraction, int)) else mpmath.mpf(p) for p in poly]
        eps = ctx.eps
        total = mpmath.mpf(0)
        coef = mpmath.mpf(1)
        r = family.order
        params = [to_mpf(p) for p in family.top_parameters]
        n = 0
        while True:
            pval = mpmath.mpf(0)
            for c in reversed(poly):
                pval = pval * n + c
            term = coef * pval
            total += term
            if n > BURN_IN and abs(term) < eps and abs(coef) < eps:
                return total
            ratio = mpmath.mpf(1)
            for p in params:
                ratio *= p + n
            ratio /= mpmath.mpf(n + 1) ** r
            coef *= ratio * z
            n += 1
            if n > MAX_TERMS:
                raise DivergenceError("scalar series did not converge")


def y_ladder(cv: ComponentVector, ctx: PrecisionContext) -> tuple:
    """Components of ``Y = (uz)^X A`` computed by jet multiplication."""
    with ctx.workprec():
        base = jet_pow_base(cv.u * cv.z, 1, len(cv.a), ctx)
        return tuple(base * Jet(cv.a))


# -- relation residuals ----------------------------------------------------------

def _det3(r0, r1, r2):
    return (r0[0] * (r1[1] * r2[2] - r1[2] * r2[1])
            - r0[1] * (r1[0] * r2[2] - r1[2] * r2[0])
            + r0[2] * (r1[0] * r2[1] - r1[1] * r2[0]))


def determinants(cv: ComponentVector) -> dict:
    """Minors used by the relations: ``M_i`` and, for 5F4, ``u_j, v_j, w_j`` and ``J``."""
    a, b, c = cv.a, cv.b, cv.c
    if cv.family.kind == F32:
        return {
            "M0": a[1] * b[2] - b[1] * a[2],
            "M1": a[0] * b[2] - b[0] * a[2],
            "M2": a[0] * b[1] - b[0] * a[1],
        }
    if cv.family.kind != F54:
        raise UnsupportedError("relations are only known for 3F2 and 5F4 families")
    rows = [(a[i], b[i], c[i]) for i in range(5)]
    out = {
        "u": [a[0] * b[j] - a[j] * b[0] for j in range(5)],
        "v": [a[0] * c[j] - a[j] * c[0] for j in range(5)],
        "w": [b[0] * c[j] - b[j] * c[0] for j in range(5)],
        "M0": _det3(rows[1], rows[2], rows[3]),
        "M1": _det3(rows[0], rows[2], rows[3]),
        "M2": _det3(rows[0], rows[1], rows[3]),
        "M3": _det3(rows[0], rows[1], rows[2]),
    }
    out["J"] = (a[1] * b[2] - a[2] * b[1]) / (a[0] * b[1] - a[1] * b[0])
    return out


def relation_residuals(cv: ComponentVector) -> dict:
    """``|LHS - RHS|`` for every component relation of the family.

    3F2 (6 relations) and 5F4 (17 relations); the determinant identities are
    checked with the sign fixed at ``z = 0`` (``h = +1``).
    """
    with mpmath.workprec(cv.prec or mpmath.mp.prec):
        z = cv.z
        w1 = 1 / (1 - z)
        root = mpmath.sqrt(1 - z)
        a, b, c = cv.a, cv.b, cv.c
        det = determinants(cv)
        if cv.family.kind == F32:
            res = {
                "a1sq": a[1] ** 2 - 2 * a[0] * a[2],
                "ab-bilinear": a[1] * b[1] - a[0] * b[2] - a[2] * b[0],
                "b-quadratic": b[1] ** 2 - 2 * b[0] * b[2] - w1,
                "M0": det["M0"] - a[2] / root,
                "M1": det["M1"] - a[1] / root,
                "M2": det["M2"] - a[0] / root,
            }
        else:
            u, v, w = det["u"], det["v"], det["w"]

            def quad(x):
                return 2 * x[0] * x[4] - 2 * x[1] * x[3] + x[2] ** 2

            def bil(x, y):
                return x[0] * y[4] + x[4] * y[0] - x[1] * y[3] - x[3] * y[1] + x[2] * y[2]

            res = {
                "a-quadratic": quad(a),
                "b-quadratic": quad(b),
                "c-quadratic": quad(c) - w1,
                "ab-bilinear": bil(a, b),
                "ac-bilinear": bil(a, c),
                "bc-bilinear": bil(b, c),
                "u-quadratic": u[2] ** 2 - 2 * u[1] * u[3],
                "v-quadratic": v[2] ** 2 - 2 * v[1] * v[3] - a[0] ** 2 * w1,
                "w-quadratic": w[2] ** 2 - 2 * w[1] * w[3] - b[0] ** 2 * w1,
                "uv": u[2] * v[2] - u[1] * v[3] - v[1] * u[3],
                "uw": u[2] * w[2] - u[1] * w[3] - w[1] * u[3],
                "vw": v[2] * w[2] - v[1] * w[3] - w[1] * v[3] - a[0] * b[0] * w1,
                "M3": det["M3"] - u[1] / root,
                "M2": det["M2"] - u[2] / root,
                "M1": det["M1"] - u[3] / root,
                "M0": det["M0"] - u[4] / root,
                "J": (u[1] * v[4] - u[4] * v[1]) / (u[1] * v[2] - u[2] * v[1]) - det["J"],
            }
        return {k: abs(v) for k, v in res.items()}


def determinant_sign(cv: ComponentVector) -> int:
    """Observed sign ``h`` in the determinant identities (``M_top * sqrt(1-z) / a_0``)."""
    det = determinants(cv)
    top = det["M2"] if cv.family.kind == F32 else det["M3"]
    ref = cv.a[0] if cv.family.kind == F32 else det["u"][1]
    return 1 if top * mpmath.sqrt(1 - cv.z) / ref > 0 else -1


def relation_threshold(ctx: PrecisionContext) -> mpmath.mpf:
    """Default acceptance threshold ``2^-(working_bits/2)`` for the residuals."""
    return mpmath.ldexp(1, -(ctx.working_bits // 2))


def max_residual(res: dict):
    return max(res.values()) if res else mpmath.mpf(0)


def series_summary(cv: ComponentVector) -> dict:
    out = {}
    for lab, vals in zip(_LABELS, (cv.a, cv.b, cv.c, cv.d)):
        if vals is not None:
            out[lab] = list(vals)
    return out
