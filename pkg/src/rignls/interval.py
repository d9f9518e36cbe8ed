"""Self-contained interval arithmetic with guaranteed outward enclosure.

All rigor claims in this package reduce to the enclosure property of the
types in this module: every arithmetic result contains the exact real
result for any choice of members of the operands.

Outward rounding is emulated portably: each endpoint is computed in the
default round-to-nearest mode and then stepped one representable value
outward with ``math.nextafter``.  Since the IEEE-754 basic operations (+, -, *,
/, sqrt) are correctly rounded, the nearest result is within half an ulp
of the exact one and a single outward step restores a rigorous bound.  No
global rounding mode is ever touched, so every operation here is safe to
call from concurrently running workers.

Non-integer powers use exact rational exponents (``fractions.Fraction``)
and are computed from verified integer roots, so no accuracy assumption
on libm transcendentals enters the enclosure.  The only transcendental
primitive, ``log_interval``, delegates to ``mpmath``'s interval context.
"""

from __future__ import annotations

import math
from fractions import Fraction

import mpmath
import numpy as np

__all__ = [
    "Interval",
    "RectComplexInterval",
    "IntervalMatrix",
    "IntervalDivisionError",
    "PI",
    "PI_SQ",
    "iv_pow_int",
    "iv_pow_frac",
    "imin",
    "imax",
    "hull",
    "log_interval",
    "approx_inverse",
]

_INF = math.inf


def _down(x: float) -> float:
    return math.nextafter(x, -_INF)


def _up(x: float) -> float:
    return math.nextafter(x, _INF)


class IntervalDivisionError(ZeroDivisionError):
    """Raised when dividing by an interval that contains zero."""


class Interval:
    """Closed real interval ``[lo, hi]`` with binary64 endpoints.

    Instances are immutable value objects.  NaN endpoints are rejected and
    ``lo <= hi`` is enforced at construction.
    """

    __slots__ = ("lo", "hi")

    def __init__(self, lo, hi=None):
        if hi is None:
            hi = lo
        lo = float(lo)
        hi = float(hi)
        if math.isnan(lo) or math.isnan(hi):
            raise ValueError("NaN endpoint in interval")
        if lo > hi:
            raise ValueError(f"invalid interval [{lo!r}, {hi!r}]")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    def __setattr__(self, *a):
        raise AttributeError("Interval is immutable")

    # -- basic queries ----------------------------------------------------

    def __repr__(self):
        return f"Interval({self.lo!r}, {self.hi!r})"

    def __eq__(self, other):
        return (
            isinstance(other, Interval)
            and self.lo == other.lo
            and self.hi == other.hi
        )

    def __hash__(self):
        return hash((self.lo, self.hi))

    def contains(self, x: float) -> bool:
        return self.lo <= x <= self.hi

    def contains_interval(self, other: "Interval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def is_point(self) -> bool:
        return self.lo == self.hi

    @property
    def width(self) -> float:
        return self.hi - self.lo

    @property
    def mid(self) -> float:
        m = 0.5 * (self.lo + self.hi)
        if math.isinf(m):
            m = 0.5 * self.lo + 0.5 * self.hi
        return m

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(x) -> "Interval":
        if isinstance(x, Interval):
            return x
        return Interval(float(x))

    def __neg__(self):
        return Interval(-self.hi, -self.lo)

    def __add__(self, other):
        o = self._coerce(other)
        return Interval(_down(self.lo + o.lo), _up(self.hi + o.hi))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return Interval(_down(self.lo - o.hi), _up(self.hi - o.lo))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        a, b, c, d = self.lo, self.hi, o.lo, o.hi
        p1 = a * c
        p2 = a * d
        p3 = b * c
        p4 = b * d
        lo = min(p1, p2, p3, p4)
        hi = max(p1, p2, p3, p4)
        if lo == 0.0 and hi == 0.0:
            return _ZERO
        return Interval(_down(lo), _up(hi))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o.lo <= 0.0 <= o.hi:
            raise IntervalDivisionError(f"division by {o!r} containing zero")
        a, b, c, d = self.lo, self.hi, o.lo, o.hi
        q1 = a / c
        q2 = a / d
        q3 = b / c
        q4 = b / d
        return Interval(_down(min(q1, q2, q3, q4)), _up(max(q1, q2, q3, q4)))

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def mag(self) -> "Interval":
        """Exact range of ``|x|`` over the interval."""
        lo, hi = self.lo, self.hi
        if lo <= 0.0 <= hi:
            return Interval(0.0, max(-lo, hi))
        if hi < 0.0:
            return Interval(-hi, -lo)
        return Interval(lo, hi)

    def sqrt(self) -> "Interval":
        if self.lo < 0.0:
            raise ValueError("sqrt of interval with negative part")
        return Interval(_down(math.sqrt(self.lo)), _up(math.sqrt(self.hi)))


_ZERO = Interval(0.0, 0.0)
_ONE = Interval(1.0, 1.0)

# Correctly-rounded enclosure of pi: math.pi is the nearest binary64.
PI = Interval(_down(math.pi), _up(math.pi))
PI_SQ = PI * PI


def imin(a: Interval, b: Interval) -> Interval:
    """Enclosure of ``min(x, y)`` over the operand intervals."""
    a = Interval._coerce(a)
    b = Interval._coerce(b)
    return Interval(min(a.lo, b.lo), min(a.hi, b.hi))


def imax(a: Interval, b: Interval) -> Interval:
    a = Interval._coerce(a)
    b = Interval._coerce(b)
    return Interval(max(a.lo, b.lo), max(a.hi, b.hi))


def hull(a: Interval, b: Interval) -> Interval:
    return Interval(min(a.lo, b.lo), max(a.hi, b.hi))


def clamp_nonneg(a: Interval) -> Interval:
    """Snap a slightly negative lower endpoint to zero.

    Valid only for quantities that are nonnegative by construction
    (magnitudes, sums of magnitudes) where outward rounding of an exact
    zero endpoint may have leaked one step below zero.
    """
    if a.lo >= 0.0:
        return a
    return Interval(0.0, max(a.hi, 0.0))


def iv_pow_int(x: Interval, n: int) -> Interval:
    """``x**n`` for integer ``n``, sharp on monotone pieces."""
    if n == 0:
        return _ONE
    if n < 0:
        return _ONE / iv_pow_int(x, -n)
    if n % 2 == 0 and x.lo < 0.0 <= x.hi:
        # even power over a sign-straddling interval: range is [0, max^n]
        m = max(-x.lo, x.hi)
        return Interval(0.0, _pow_up(m, n))
    lo_c = _pow_iv_point(x.lo, n)
    hi_c = _pow_iv_point(x.hi, n)
    return Interval(min(lo_c.lo, hi_c.lo), max(lo_c.hi, hi_c.hi))


def _pow_iv_point(a: float, n: int) -> Interval:
    """Enclosure of ``a**n`` for a point ``a`` and ``n >= 1``."""
    acc = Interval(a)
    base = Interval(a)
    n -= 1
    while n:
        if n & 1:
            acc = acc * base
        n >>= 1
        if n:
            base = base * base
    return acc


def _pow_up(a: float, n: int) -> float:
    return _pow_iv_point(a, n).hi


def _nth_root_down(a: float, q: int) -> float:
    """Largest verified ``y`` with ``y**q <= a`` (``a >= 0``)."""
    if a == 0.0:
        return 0.0
    y = a ** (1.0 / q)
    for _ in range(64):
        if _pow_iv_point(y, q).hi <= a:
            return y
        y = math.nextafter(y, 0.0)
    raise ArithmeticError("verified root search failed to converge")


def _nth_root_up(a: float, q: int) -> float:
    if a == 0.0:
        return 0.0
    y = a ** (1.0 / q)
    for _ in range(64):
        if _pow_iv_point(y, q).lo >= a:
            return y
        y = math.nextafter(y, _INF)
    raise ArithmeticError("verified root search failed to converge")


def iv_pow_frac(x: Interval, s: Fraction) -> Interval:
    """``x**s`` for exact rational ``s``; requires ``x > 0`` unless s is integral.

    Computed as an integer power of a verified ``q``-th root, so the result
    is a rigorous enclosure with no dependence on libm accuracy.
    """
    s = Fraction(s)
    if s.denominator == 1:
        return iv_pow_int(x, s.numerator)
    if s < 0:
        return _ONE / iv_pow_frac(x, -s)
    if x.lo < 0.0:
        raise ValueError("fractional power of interval with negative part")
    p, q = s.numerator, s.denominator
    root = Interval(_nth_root_down(x.lo, q), _nth_root_up(x.hi, q))
    return iv_pow_int(root, p)


_MP_IV = mpmath.iv


def log_interval(x: Interval) -> Interval:
    """Rigorous natural log via mpmath's interval context."""
    if x.lo <= 0.0:
        raise ValueError("log of interval touching the nonpositive axis")
    with mpmath.workprec(80):
        r = _MP_IV.log(_MP_IV.mpf([x.lo, x.hi]))
        lo = float(mpmath.mpf(r.a))
        hi = float(mpmath.mpf(r.b))
    # mpf->float conversion rounds to nearest; pad one step outward.
    return Interval(_down(lo), _up(hi))


class RectComplexInterval:
    """Complex value enclosed by a rectangle ``re x im``.

    The magnitude is ``|z| = max{|Re z|, |Im z|}``, evaluated interval-wise,
    which is the norm used throughout the sequence-space estimates.
    """

    __slots__ = ("re", "im")

    def __init__(self, re, im=None):
        if isinstance(re, complex) and im is None:
            im = Interval(re.imag)
            re = Interval(re.real)
        self.re = re if isinstance(re, Interval) else Interval(float(re))
        if im is None:
            im = _ZERO
        self.im = im if isinstance(im, Interval) else Interval(float(im))

    def __repr__(self):
        return f"RectComplexInterval({self.re!r}, {self.im!r})"

    @staticmethod
    def _coerce(x) -> "RectComplexInterval":
        if isinstance(x, RectComplexInterval):
            return x
        if isinstance(x, Interval):
            return RectComplexInterval(x, _ZERO)
        if isinstance(x, complex):
            return RectComplexInterval(x)
        return RectComplexInterval(Interval(float(x)), _ZERO)

    def __neg__(self):
        return RectComplexInterval(-self.re, -self.im)

    def __add__(self, other):
        o = self._coerce(other)
        return RectComplexInterval(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return RectComplexInterval(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        return RectComplexInterval(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        den = o.re * o.re + o.im * o.im
        if den.lo <= 0.0:
            raise IntervalDivisionError("complex division by rectangle containing zero")
        return RectComplexInterval(
            (self.re * o.re + self.im * o.im) / den,
            (self.im * o.re - self.re * o.im) / den,
        )

    def conj(self) -> "RectComplexInterval":
        return RectComplexInterval(self.re, -self.im)

    def mag(self) -> Interval:
        return imax(self.re.mag(), self.im.mag())

    def contains(self, z: complex) -> bool:
        return self.re.contains(z.real) and self.im.contains(z.imag)

    def is_real(self) -> bool:
        return self.im.lo == 0.0 and self.im.hi == 0.0


def mag(z) -> Interval:
    """Magnitude of an Interval or RectComplexInterval, see the class docs."""
    if isinstance(z, RectComplexInterval):
        return z.mag()
    return Interval._coerce(z).mag()


class IntervalMatrix:
    """Dense complex interval matrix backed by four float64 planes.

    Real matrices simply carry zero imaginary planes.  Heavy products are
    delegated to the kernel backend (compiled when available).
    """

    __slots__ = ("re_lo", "re_hi", "im_lo", "im_hi")

    def __init__(self, re_lo, re_hi, im_lo=None, im_hi=None):
        self.re_lo = np.ascontiguousarray(re_lo, dtype=np.float64)
        self.re_hi = np.ascontiguousarray(re_hi, dtype=np.float64)
        if im_lo is None:
            im_lo = np.zeros_like(self.re_lo)
            im_hi = np.zeros_like(self.re_lo)
        self.im_lo = np.ascontiguousarray(im_lo, dtype=np.float64)
        self.im_hi = np.ascontiguousarray(im_hi, dtype=np.float64)
        if not (
            self.re_lo.shape == self.re_hi.shape == self.im_lo.shape == self.im_hi.shape
        ):
            raise ValueError("inconsistent plane shapes")
        if np.any(self.re_lo > self.re_hi) or np.any(self.im_lo > self.im_hi):
            raise ValueError("lo > hi in interval matrix")
        if (
            np.isnan(self.re_lo).any()
            or np.isnan(self.re_hi).any()
            or np.isnan(self.im_lo).any()
            or np.isnan(self.im_hi).any()
        ):
            raise ValueError("NaN entry in interval matrix")

    @property
    def shape(self):
        return self.re_lo.shape

    @property
    def rows(self):
        return self.re_lo.shape[0]

    @property
    def cols(self):
        return self.re_lo.shape[1]

    @classmethod
    def from_points(cls, a) -> "IntervalMatrix":
        a = np.asarray(a)
        if np.iscomplexobj(a):
            return cls(a.real.copy(), a.real.copy(), a.imag.copy(), a.imag.copy())
        a = a.astype(np.float64)
        return cls(a.copy(), a.copy())

    @classmethod
    def identity(cls, n: int) -> "IntervalMatrix":
        e = np.eye(n)
        return cls(e.copy(), e.copy())

    def entry(self, i: int, j: int) -> RectComplexInterval:
        return RectComplexInterval(
            Interval(self.re_lo[i, j], self.re_hi[i, j]),
            Interval(self.im_lo[i, j], self.im_hi[i, j]),
        )

    def is_real(self) -> bool:
        return not (np.any(self.im_lo) or np.any(self.im_hi))

    def __sub__(self, other: "IntervalMatrix") -> "IntervalMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return IntervalMatrix(
            np.nextafter(self.re_lo - other.re_hi, -_INF),
            np.nextafter(self.re_hi - other.re_lo, _INF),
            np.nextafter(self.im_lo - other.im_hi, -_INF),
            np.nextafter(self.im_hi - other.im_lo, _INF),
        )

    def mat_mul(self, other: "IntervalMatrix") -> "IntervalMatrix":
        """Entrywise enclosure of all products of member matrices."""
        from . import _kernels as K

        if self.cols != other.rows:
            raise ValueError(
                f"dimension mismatch: {self.shape} @ {other.shape}"
            )
        rr = K.matmul_ii(self.re_lo, self.re_hi, other.re_lo, other.re_hi)
        ii = K.matmul_ii(self.im_lo, self.im_hi, other.im_lo, other.im_hi)
        ri = K.matmul_ii(self.re_lo, self.re_hi, other.im_lo, other.im_hi)
        ir = K.matmul_ii(self.im_lo, self.im_hi, other.re_lo, other.re_hi)
        re_lo = np.nextafter(rr[0] - ii[1], -_INF)
        re_hi = np.nextafter(rr[1] - ii[0], _INF)
        im_lo = np.nextafter(ri[0] + ir[0], -_INF)
        im_hi = np.nextafter(ri[1] + ir[1], _INF)
        return IntervalMatrix(re_lo, re_hi, im_lo, im_hi)

    def __matmul__(self, other):
        return self.mat_mul(other)

    def mag_planes(self):
        """Entrywise magnitude as a (lo, hi) pair of float planes (exact)."""
        re_lo, re_hi = _mag_planes(self.re_lo, self.re_hi)
        im_lo, im_hi = _mag_planes(self.im_lo, self.im_hi)
        return np.maximum(re_lo, im_lo), np.maximum(re_hi, im_hi)

    def mag_inf(self) -> Interval:
        """``|V|_inf``: max over entries of the entrywise magnitude."""
        lo, hi = self.mag_planes()
        return Interval(float(lo.max()), float(hi.max()))


def _mag_planes(lo, hi):
    maghi = np.maximum(np.abs(lo), np.abs(hi))
    maglo = np.where(
        (lo <= 0.0) & (hi >= 0.0), 0.0, np.minimum(np.abs(lo), np.abs(hi))
    )
    return maglo, maghi


def approx_inverse(a: np.ndarray) -> np.ndarray:
    """Floating-point inverse of a point matrix.

    No rigor is claimed here: the quality of the result is absorbed later
    when ``I - A @ Df`` is evaluated in interval arithmetic.
    """
    a = np.asarray(a)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("approx_inverse expects a square matrix")
    try:
        inv = np.linalg.inv(a)
    except np.linalg.LinAlgError as exc:
        raise np.linalg.LinAlgError(
            f"matrix numerically singular: {exc}"
        ) from exc
    if not np.all(np.isfinite(inv)):
        raise np.linalg.LinAlgError("matrix numerically singular (nonfinite inverse)")
    return inv
