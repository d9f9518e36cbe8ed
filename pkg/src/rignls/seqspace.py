"""Weighted sequence spaces and reusable decay/convolution estimates.

The space ``X^s`` carries the norm ``sup_k |x_k| w_k^s`` with weights
``w_0 = 1`` and ``w_k = |k|`` otherwise.  ``EstimateTable`` holds, for a
fixed decay rate ``s`` and cut index ``M``, rigorous enclosures of the
constants that bound quadratic and cubic convolution tails:

* ``alpha2[q]`` dominates ``w_q^s * sum_{k1+k2=q} w_k1^-s w_k2^-s``
* ``alpha3[q]`` dominates the analogous triple sum
* ``eps3[q]``  dominates the triple sum restricted to one index >= M
* ``gamma(k)`` is the closed-form tail used for q >= M

Every finite sum is evaluated in interval arithmetic; the tables are
immutable and cached per ``(s, M)`` since they enter every radii
polynomial.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .interval import (
    PI_SQ,
    Interval,
    RectComplexInterval,
    imax,
    iv_pow_frac,
    log_interval,
)

__all__ = [
    "SymmetryClass",
    "weight",
    "weight_pow",
    "inv_weight_pow",
    "SineSeries",
    "Ball",
    "snorm",
    "gamma_tail_constant",
    "EstimateTable",
    "build_estimate_table",
    "conv_quadratic_bound",
]


class SymmetryClass(enum.Enum):
    """Stored-coefficient convention of a sine series.

    ``ODD_MODES``: only odd sine indices are stored (functions symmetric
    about the midpoint; node count even).  ``EVEN_MODES``: only even
    indices (antisymmetric about the midpoint; node count odd).
    """

    ODD_MODES = "odd-about-half"
    EVEN_MODES = "even-about-half"
    NONE = "none"


def weight(k: int) -> int:
    """Power-law weight: 1 at index 0, |k| otherwise."""
    return 1 if k == 0 else abs(k)


@lru_cache(maxsize=None)
def weight_pow(k: int, s: Fraction) -> Interval:
    """Enclosure of ``w_k**s``."""
    return iv_pow_frac(Interval(float(weight(k))), Fraction(s))


@lru_cache(maxsize=None)
def inv_weight_pow(k: int, s: Fraction) -> Interval:
    """Enclosure of ``w_k**(-s)``."""
    return iv_pow_frac(Interval(float(weight(k))), -Fraction(s))


@dataclass(frozen=True)
class SineSeries:
    """Finite vector of Fourier-sine coefficients, indices 1..m.

    Represents ``phi(x) = sqrt(2) * sum_{n in Z} b_n sin(pi n x)`` with
    ``b_{-n} = -b_n``; depending on ``symmetry`` the stored entry ``k``
    is the coefficient of sine index ``2k-1`` (odd modes) or ``2k``
    (even modes), or of index ``k`` itself when no symmetry is used.
    """

    coeffs: tuple  # RectComplexInterval entries, stored index 1..m
    symmetry: SymmetryClass
    s: Fraction
    m: int

    @classmethod
    def from_real(cls, values, symmetry=SymmetryClass.NONE, s=Fraction(2)) -> "SineSeries":
        cs = tuple(RectComplexInterval(Interval(float(v))) for v in values)
        return cls(coeffs=cs, symmetry=symmetry, s=Fraction(s), m=len(cs))

    @classmethod
    def from_complex(cls, values, symmetry=SymmetryClass.NONE, s=Fraction(2)) -> "SineSeries":
        cs = tuple(RectComplexInterval(complex(v)) for v in values)
        return cls(coeffs=cs, symmetry=symmetry, s=Fraction(s), m=len(cs))

    def coeff(self, k: int) -> RectComplexInterval:
        if not 1 <= k <= self.m:
            raise IndexError(f"stored index {k} out of 1..{self.m}")
        return self.coeffs[k - 1]

    def sine_index(self, k: int) -> int:
        """Unreduced sine index corresponding to stored index ``k``."""
        if self.symmetry is SymmetryClass.ODD_MODES:
            return 2 * k - 1
        if self.symmetry is SymmetryClass.EVEN_MODES:
            return 2 * k
        return k


def snorm(x: SineSeries, s: Fraction) -> Interval:
    """Enclosure of ``sup_k |x_k| w_k^s`` (exact sup for finite series)."""
    s = Fraction(s)
    best = Interval(0.0)
    for k in range(1, x.m + 1):
        best = imax(best, x.coeff(k).mag() * weight_pow(k, s))
    return best


@dataclass(frozen=True)
class Ball:
    """Ball in ``X^s`` around a finite center.

    Membership means ``|x_k - c_k| <= r / w_k^s`` for stored indices and
    ``|x_k| <= r / w_k^s`` beyond the truncation.
    """

    center: SineSeries
    radius: Interval
    s: Fraction

    def coeff_slack(self, k: int) -> Interval:
        return self.radius * inv_weight_pow(k, self.s)

    def contains_coeff(self, k: int, z: complex) -> bool:
        slack = self.coeff_slack(k).hi
        if k <= self.center.m:
            c = self.center.coeff(k)
            return (
                abs(z.real - c.re.mid) <= slack and abs(z.imag - c.im.mid) <= slack
            )
        return max(abs(z.real), abs(z.imag)) <= slack


def gamma_tail_constant(k: int, s: Fraction) -> Interval:
    """Closed-form tail constant used in the quadratic bound for k >= M.

    Defined only for k >= 4 (the log term needs k - 2 >= 2; smaller
    indices are never used because the constant only enters tail
    branches at large index).
    """
    if k < 4:
        raise ValueError("gamma tail constant requires k >= 4")
    s = Fraction(s)
    kiv = Interval(float(k))
    t1 = 2 * iv_pow_frac(kiv / Interval(float(k - 1)), s)
    logterm = 4 * log_interval(Interval(float(k - 2))) / kiv
    t2 = (logterm + (PI_SQ - 6) / 3) * iv_pow_frac(
        2 / kiv + Interval(0.5), s - 2
    )
    return t1 + t2


class EstimateTable:
    """Immutable table of convolution decay constants for one ``(s, M)``."""

    def __init__(self, s: Fraction, M: int):
        s = Fraction(s)
        if s <= 2:
            raise ValueError("decay rate s must exceed 2 for finite tail sums")
        if M < 6:
            raise ValueError("cut index M must be at least 6")
        self.s = s
        self.M = M
        # head constant 2*(2 + 2^-s + 3^-s + 1/(3^(s-1)(s-1)))
        two_pow = iv_pow_frac(Interval(2.0), -s)
        three_pow = iv_pow_frac(Interval(3.0), -s)
        sm1 = Interval(float(s.numerator)) / s.denominator - 1
        self._sm1 = sm1
        self._head2 = 2 * (2 + two_pow + three_pow + 1 / (iv_pow_frac(Interval(3.0), s - 1) * sm1))
        self._pw = [weight_pow(j, s) for j in range(0, 2 * M + 2)]
        self.alpha2 = self._build_alpha2()
        self.alpha3 = self._build_alpha3()
        self.eps3 = self._build_eps3()
        self.alpha3_max = self._max_iv(self.alpha3)

    @staticmethod
    def _max_iv(vals):
        lo = max(v.lo for v in vals)
        hi = max(v.hi for v in vals)
        return Interval(lo, hi)

    def gamma(self, k: int) -> Interval:
        return gamma_tail_constant(k, self.s)

    def _build_alpha2(self):
        s, M = self.s, self.M
        pw = self._pw
        out = [Interval(4.0) + 1 / (iv_pow_frac(Interval(2.0), 2 * s - 1) * (2 * (Interval(float(s.numerator)) / s.denominator) - 1))]
        for k in range(1, M):
            acc = Interval(0.0)
            for k1 in range(1, k):
                acc = acc + pw[k] / (pw[k1] * pw[k - k1])
            out.append(self._head2 + acc)
        out.append(self._head2 + self.gamma(M))
        return out

    def alpha2_at(self, k: int) -> Interval:
        """Quadratic constant at any index; the tail branch for k > M."""
        k = abs(k)
        if k <= self.M:
            return self.alpha2[k]
        return self._head2 + self.gamma(k)

    def _build_alpha3(self):
        s, M = self.s, self.M
        pw = self._pw
        a2 = self.alpha2
        sm1 = self._sm1
        inv_m1_sm1 = 1 / (iv_pow_frac(Interval(float(M - 1)), s - 1) * sm1)
        out = []
        # index 0
        acc = a2[0]
        for k1 in range(1, M):
            acc = acc + 2 * a2[k1] / iv_pow_frac(Interval(float(k1)), 2 * s)
        acc = acc + 2 * a2[M] / (
            iv_pow_frac(Interval(float(M - 1)), 2 * s - 1) * (2 * (Interval(float(s.numerator)) / s.denominator) - 1)
        )
        out.append(acc)
        for k in range(1, M):
            acc = Interval(0.0)
            for k1 in range(1, M - k):
                acc = acc + a2[k1 + k] * pw[k] / (pw[k1] * pw[k + k1])
            acc = acc + a2[M] * pw[k] * (
                1 / (pw[M - k] * pw[M])
                + 1 / (iv_pow_frac(Interval(float(M - k)), s - 1) * pw[M] * sm1)
            )
            acc = acc + a2[k]
            for k1 in range(1, k):
                acc = acc + a2[k1] * pw[k] / (pw[k1] * pw[k - k1])
            acc = acc + a2[0]
            for k1 in range(1, M):
                acc = acc + a2[k1] * pw[k] / (pw[k1] * pw[k + k1])
            acc = acc + a2[M] * inv_m1_sm1
            out.append(acc)
        # index M: the tail branch.  The source display garbles the
        # exponent grouping here; we use the flat-sum reading
        #   a2_M * (2 + 2^-s + 3^-s + 1/(3^(s-1)(s-1)) + 1/((M-1)^(s-1)(s-1)) + gamma)
        # which is validated against brute-force tail sums in the tests.
        acc = a2[M] * (
            self._head2 / 2 + inv_m1_sm1 + self.gamma(M)
        )
        acc = acc + a2[0]
        for k1 in range(1, M):
            acc = acc + (a2[k1] / pw[k1]) * (1 + pw[M] / pw[M - k1])
        out.append(acc)
        return out

    def _build_eps3(self):
        s, M = self.s, self.M
        pw = self._pw
        a2 = self.alpha2
        sm1 = self._sm1
        lead = 2 * a2[M] / (sm1 * iv_pow_frac(Interval(float(M - 1)), s - 1))
        out = []
        for k in range(0, M + 1):
            acc = lead / iv_pow_frac(Interval(float(M + k)), s)
            for k1 in range(M, M + k):
                acc = acc + a2[k1 - k] / (pw[k1] * pw[k1 - k])
            out.append(acc)
        return out


_TABLE_CACHE: dict = {}


def build_estimate_table(s, M: int) -> EstimateTable:
    """Build (or fetch the cached) estimate table for ``(s, M)``."""
    key = (Fraction(s), int(M))
    tab = _TABLE_CACHE.get(key)
    if tab is None:
        tab = EstimateTable(*key)
        _TABLE_CACHE[key] = tab
    return tab


def conv_quadratic_bound(q: int, table: EstimateTable) -> Interval:
    """Bound ``alpha2_q / w_q^s`` on the two-sided quadratic weight sum."""
    q = abs(q)
    return table.alpha2_at(q) * inv_weight_pow(q, table.s)
