"""Rigorous enclosure of bound states of the cubic problem on [0,1].

The stationary states are found as zeros of the Galerkin sine-mode map.
States with an even node count are symmetric about the midpoint and keep
only odd sine indices; odd node counts keep only even indices.  All work
here happens in the reduced index space; reflection rules extend the
reduced coefficients over the integers:

    odd modes : b_0 = -b_1,  b_{-n} = -b_{n+1}   (conv target n+1)
    even modes: b_0 = 0,     b_{-n} = -b_n       (conv target n)

The prover pipeline is: elliptic-oracle initial guess, float Newton
iteration, interval Y/Z bounds, radii-polynomial verification, and a
certificate whose center is stored both in the reduced indexing and
expanded to plain sine indices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import _kernels as K
from .elliptic import EllipticParams, reduced_coefficients
from .interval import (
    PI_SQ,
    Interval,
    IntervalMatrix,
    approx_inverse,
    clamp_nonneg,
    imax,
    iv_pow_frac,
)
from .radii import (
    Block,
    BoundData,
    InjectivityAttestation,
    VerificationFailure,
    assemble_polynomials,
    find_negative_radius,
    issue_certificate,
)
from .seqspace import (
    EstimateTable,
    SineSeries,
    SymmetryClass,
    build_estimate_table,
    inv_weight_pow,
    weight_pow,
)

__all__ = [
    "BoundStateProblem",
    "GalerkinResidual",
    "NewtonError",
    "eval_map",
    "newton_solve",
    "jacobian",
    "build_bounds",
    "prove_bound_state",
    "prove_zero_bound_state",
    "certificate_reduced_center",
    "certificate_symmetry",
    "unreduced_enclosure",
    "write_profile_band",
]


class NewtonError(RuntimeError):
    """Newton iteration failed to converge or hit a singular Jacobian."""


@dataclass(frozen=True)
class BoundStateProblem:
    """Problem description: sign, chemical potential, node count, space.

    ``mu`` is kept as the decimal string supplied by the user; the proof
    is about its exact binary64 value.  ``M = 3 m`` throughout.
    """

    sigma: int
    mu: str
    nodes: int
    m: int
    s: Fraction

    def __post_init__(self):
        if self.sigma not in (1, -1):
            raise ValueError("sigma must be +1 or -1")
        if self.m < 2:
            raise ValueError("finite-dimensional parameter m too small")
        if Fraction(self.s) <= 2:
            raise ValueError("decay rate s must exceed 2")
        object.__setattr__(self, "s", Fraction(self.s))
        float(self.mu)  # must parse
        if self.sigma == -1:
            # every tail diagonal must be invertible: the smallest one
            # sits at reduced index m+1
            n = self.m + 1
            lam = math.pi**2 * self._sine_index(n) ** 2 - self.mu_float
            if lam <= 0:
                raise ValueError(
                    "defocusing tail diagonal not invertible; increase m"
                )

    def _sine_index(self, n: int) -> int:
        return 2 * n - 1 if self.symmetry is SymmetryClass.ODD_MODES else 2 * n

    @property
    def mu_float(self) -> float:
        return float(self.mu)

    @property
    def mu_interval(self) -> Interval:
        return Interval(self.mu_float)

    @property
    def symmetry(self) -> SymmetryClass:
        return SymmetryClass.ODD_MODES if self.nodes % 2 == 0 else SymmetryClass.EVEN_MODES

    @property
    def delta(self) -> int:
        """Convolution target shift: row n sums triples to ``n + delta``."""
        return 1 if self.symmetry is SymmetryClass.ODD_MODES else 0

    @property
    def M(self) -> int:
        return 3 * self.m

    def lam(self, n: int) -> Interval:
        """Linear diagonal at reduced index n (interval)."""
        q = self._sine_index(n)
        return PI_SQ * (q * q) + self.sigma * self.mu_interval

    def lam_float(self, n: int) -> float:
        q = self._sine_index(n)
        return math.pi**2 * q * q + self.sigma * self.mu_float


# -- reduced-index extension helpers ----------------------------------------


def _extend_floats(b: np.ndarray, problem: BoundStateProblem) -> np.ndarray:
    """Reflect reduced coefficients onto extended indices [-m, m]."""
    m = len(b)
    ext = np.zeros(2 * m + 1)
    ext[m + 1 :] = b
    if problem.delta == 1:
        ext[m] = -b[0]  # index 0 reflects to -b_1
        if m > 1:
            ext[1:m] = -b[:0:-1]  # index -n reflects to -b_{n+1}
    else:
        ext[:m] = -b[::-1]  # index -n reflects to -b_n; index 0 stays zero
    return ext


def _reduced_of_extended(e: int, delta: int) -> int:
    """Reduced storage index carrying extended index ``e``."""
    if delta == 1:
        return e if e >= 1 else 1 - e
    return abs(e)


# -- operations --------------------------------------------------------------


@dataclass(frozen=True)
class GalerkinResidual:
    """Interval values of the map at rows 1..M."""

    f: tuple


def _coerce_reduced(b, problem: BoundStateProblem) -> np.ndarray:
    if isinstance(b, SineSeries):
        if b.symmetry is not problem.symmetry:
            raise ValueError(
                f"series symmetry {b.symmetry} does not match problem "
                f"{problem.symmetry}"
            )
        return np.array([b.coeff(k).re.mid for k in range(1, b.m + 1)])
    return np.asarray(b, dtype=np.float64)


def _f_floats(b: np.ndarray, problem: BoundStateProblem) -> np.ndarray:
    m = len(b)
    ext = _extend_floats(b, problem)
    conv3 = np.convolve(np.convolve(ext, ext), ext)  # indices -3m..3m
    off = 3 * m
    out = np.empty(m)
    for n in range(1, m + 1):
        out[n - 1] = problem.lam_float(n) * b[n - 1] + 2 * problem.sigma * conv3[
            off + n + problem.delta
        ]
    return out


def _jac_floats(b: np.ndarray, problem: BoundStateProblem) -> np.ndarray:
    m = len(b)
    ext = _extend_floats(b, problem)
    s2 = np.convolve(ext, ext)  # indices -2m..2m
    off = 2 * m
    J = np.zeros((m, m))
    for n in range(1, m + 1):
        for j in range(1, m + 1):
            J[n - 1, j - 1] = 6 * problem.sigma * (
                s2[off + n - j + problem.delta] - s2[off + n + j]
            )
        J[n - 1, n - 1] += problem.lam_float(n)
    return J


# Residual convolutions are evaluated exactly: binary64 coefficients are
# dyadic rationals, so after scaling by 2^_SCALE_BITS every product and
# sum is an integer.  Only the final conversion to binary64 rounds, and
# that is enclosed by one outward step on each side.
_SCALE_BITS = 1100


def _to_scaled_ints(vals) -> list:
    out = []
    for v in vals:
        fr = Fraction(float(v))
        shift = _SCALE_BITS - (fr.denominator.bit_length() - 1)
        out.append(fr.numerator << shift)
    return out


def _int_conv(a: list, b: list) -> list:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return out


def _interval_from_scaled(v: int, bits: int) -> Interval:
    if v == 0:
        return Interval(0.0)
    f = v / (1 << bits)  # correctly rounded int/int division
    return Interval(math.nextafter(f, -math.inf), math.nextafter(f, math.inf))


def _cubic_conv_exact(b: np.ndarray, problem: BoundStateProblem) -> list:
    ext = _to_scaled_ints(_extend_floats(b, problem))
    return _int_conv(_int_conv(ext, ext), ext)


def _extended_interval_planes(b: np.ndarray, problem: BoundStateProblem):
    ext = _extend_floats(b, problem)
    return ext.copy(), ext.copy()


def eval_map(b, problem: BoundStateProblem) -> GalerkinResidual:
    """Interval evaluation of the map at rows 1..M (= 3m).

    The cubic convolution of an m-term series vanishes identically past
    row ``3m - 1 + delta``; this is structural (the convolution array
    simply ends), not a numerical cancellation.
    """
    b = _coerce_reduced(b, problem)
    m = len(b)
    c3 = _cubic_conv_exact(b, problem)
    off = 3 * m
    out = []
    for n in range(1, problem.M + 1):
        t = off + n + problem.delta
        if t < len(c3):
            conv = _interval_from_scaled(c3[t], 3 * _SCALE_BITS)
        else:
            conv = Interval(0.0)
        bn = Interval(b[n - 1]) if n <= m else Interval(0.0)
        out.append(problem.lam(n) * bn + (2 * problem.sigma) * conv)
    return GalerkinResidual(f=tuple(out))


def _residual_floor(b: np.ndarray, problem: BoundStateProblem) -> float:
    """Attainable accuracy of the float residual at this center.

    The rows of the map cancel terms of size up to ``|lam_n b_n| plus the
    absolute cubic convolution``; one ulp of that scale is the floor.
    """
    m = len(b)
    ext = np.abs(_extend_floats(b, problem))
    conv3 = np.convolve(np.convolve(ext, ext), ext)
    off = 3 * m
    scale = 1.0
    for n in range(1, m + 1):
        scale = max(
            scale,
            abs(problem.lam_float(n) * b[n - 1]) + 2 * conv3[off + n + problem.delta],
        )
    return 8 * np.finfo(float).eps * scale


def newton_solve(initial, problem: BoundStateProblem, tol: float = 1e-13,
                 max_iter: int = 50) -> np.ndarray:
    """Float Newton iteration on the reduced finite map.

    Returns the point center; rigor enters later.  Converging to the
    trivial zero branch is rejected.  When the target tolerance sits
    below the float64 cancellation floor of the residual, the iteration
    is accepted at stagnation provided it reached that floor.
    """
    b = _coerce_reduced(initial, problem).copy()
    if len(b) != problem.m:
        raise ValueError("initial guess has wrong length")
    best = None
    best_res = math.inf
    stalled = 0
    for _ in range(max_iter):
        f = _f_floats(b, problem)
        res = float(np.max(np.abs(f)))
        if res < best_res:
            if res > 0.5 * best_res:
                stalled += 1
            else:
                stalled = 0
            best, best_res = b.copy(), res
        else:
            stalled += 1
        if best_res < tol or (stalled >= 3 and best_res <= _residual_floor(best, problem)):
            if np.max(np.abs(best)) < 1e-8:
                raise NewtonError("converged to the trivial zero solution")
            return _polish_exact(best, problem)
        J = _jac_floats(b, problem)
        try:
            step = np.linalg.solve(J, f)
        except np.linalg.LinAlgError as exc:
            raise NewtonError(f"singular Jacobian: {exc}") from exc
        b -= step
        if not np.all(np.isfinite(b)):
            raise NewtonError("iteration diverged")
    raise NewtonError(f"no convergence to {tol} within {max_iter} iterations")


def _polish_exact(b: np.ndarray, problem: BoundStateProblem,
                  rounds: int = 4) -> np.ndarray:
    """Drive the residual below the float-evaluation floor.

    The float iteration stalls once rounding noise in the residual
    matches the step size; re-evaluating the residual exactly lets a few
    more Newton steps shave it to the representation limit of the
    binary64 center itself.
    """
    m = problem.m

    def exact_resid(v):
        return np.array([iv.mid for iv in eval_map(v, problem).f[:m]])

    best = b.copy()
    f = exact_resid(best)
    best_res = np.max(np.abs(f))
    cur = best
    for _ in range(rounds):
        try:
            step = np.linalg.solve(_jac_floats(cur, problem), f)
        except np.linalg.LinAlgError:
            break
        cur = cur - step
        f = exact_resid(cur)
        res = np.max(np.abs(f))
        if res < best_res:
            best, best_res = cur.copy(), res
        else:
            break
    return best


def jacobian(b, problem: BoundStateProblem) -> IntervalMatrix:
    """Interval Jacobian of the reduced finite map at ``b`` (m x m)."""
    b = _coerce_reduced(b, problem)
    m = len(b)
    lo, hi = _extended_interval_planes(b, problem)
    s2lo, s2hi = K.iconv(lo, hi, lo, hi)
    off = 2 * m
    Jlo = np.zeros((m, m))
    Jhi = np.zeros((m, m))
    six = 6 * problem.sigma
    for n in range(1, m + 1):
        lam = problem.lam(n)
        for j in range(1, m + 1):
            d = Interval(s2lo[off + n - j + problem.delta], s2hi[off + n - j + problem.delta])
            a = Interval(s2lo[off + n + j], s2hi[off + n + j]) if off + n + j < len(s2lo) else Interval(0.0)
            val = six * (d - a)
            if n == j:
                val = val + lam
            Jlo[n - 1, j - 1] = val.lo
            Jhi[n - 1, j - 1] = val.hi
    return IntervalMatrix(Jlo, Jhi)


def _mag_interval_planes(lo, hi):
    maghi = np.maximum(np.abs(lo), np.abs(hi))
    maglo = np.where((lo <= 0.0) & (hi >= 0.0), 0.0, np.minimum(np.abs(lo), np.abs(hi)))
    return maglo, maghi


def _weight_vectors(problem: BoundStateProblem):
    """Extended weight vector 1/w_rho(e)^s over e in [-(M-1), M-1].

    ``g_all`` weights every admissible perturbation column; ``g_tail``
    zeroes the columns handled exactly by the finite Jacobian block.
    """
    s, m, M, delta = problem.s, problem.m, problem.M, problem.delta
    L = M - 1
    n = 2 * L + 1
    g_all_lo = np.zeros(n)
    g_all_hi = np.zeros(n)
    g_tail_lo = np.zeros(n)
    g_tail_hi = np.zeros(n)
    for e in range(-L, L + 1):
        if delta == 0 and e == 0:
            continue  # even class has no zero mode
        rho = _reduced_of_extended(e, delta)
        w = inv_weight_pow(rho, s)
        g_all_lo[e + L] = w.lo
        g_all_hi[e + L] = w.hi
        if rho >= m + 1:
            g_tail_lo[e + L] = w.lo
            g_tail_hi[e + L] = w.hi
    return (g_all_lo, g_all_hi), (g_tail_lo, g_tail_hi)


def build_bounds(b_bar, problem: BoundStateProblem, table: EstimateTable):
    """Assemble the cubic Y/Z bound data and the injectivity attestation.

    Returns ``(BoundData, InjectivityAttestation, norm_of_center)``.
    """
    b = _coerce_reduced(b_bar, problem)
    m, M, s, delta = problem.m, problem.M, problem.s, problem.delta
    if len(b) != m:
        raise ValueError("center length != m")
    if table.s != s or table.M != M:
        raise ValueError("estimate table does not match problem (s, M)")
    sigma = problem.sigma

    # exact finite residual at rows 1..M
    resid = eval_map(b, problem).f

    # interval Jacobian and its float approximate inverse
    Jm = jacobian(b, problem)
    A = approx_inverse(0.5 * (Jm.re_lo + Jm.re_hi))
    Plo, Phi = K.matmul_pi(A, Jm.re_lo, Jm.re_hi)
    eye = np.eye(m)
    Rlo = np.nextafter(eye - Phi, -np.inf)
    Rhi = np.nextafter(eye - Plo, np.inf)
    maglo, maghi = _mag_interval_planes(Rlo, Rhi)

    norm_R = Interval(0.0)
    for i in range(m):
        acc = Interval(0.0)
        for j in range(m):
            acc = acc + Interval(maglo[i, j], maghi[i, j])
        norm_R = imax(norm_R, acc)
    finite_ok = norm_R.hi < 1.0

    lam_next = problem.lam(m + 1)
    tail_ok = lam_next.lo > 0.0
    attestation = InjectivityAttestation(
        finite_block=finite_ok,
        tail=tail_ok,
        detail=f"|I-A*Df|_inf <= {norm_R.hi:.3e}; tail diagonal at m+1 >= {lam_next.lo:.3e}",
    )

    # Z0 = |I - A Df| * {w_j^-s}
    winv_lo = np.array([inv_weight_pow(j, s).lo for j in range(1, m + 1)])[:, None]
    winv_hi = np.array([inv_weight_pow(j, s).hi for j in range(1, m + 1)])[:, None]
    z0lo, z0hi = K.matmul_ii(maglo, maghi, winv_lo, winv_hi)

    # Y for k <= m: |A f^(m)|
    flo = np.array([resid[k - 1].lo for k in range(1, m + 1)])[:, None]
    fhi = np.array([resid[k - 1].hi for k in range(1, m + 1)])[:, None]
    aflo, afhi = K.matmul_pi(A, flo, fhi)

    # norm of the center
    norm_b = Interval(0.0)
    for k in range(1, m + 1):
        norm_b = imax(norm_b, Interval(b[k - 1]).mag() * weight_pow(k, s))

    # convolution bounds for the Z coefficients
    (gal, gah), (gtl, gth) = _weight_vectors(problem)
    L = M - 1
    ext = _extend_floats(b, problem)
    babs = np.abs(ext)
    c2lo, c2hi = K.iconv(babs, babs, babs, babs)
    z1tail = K.iconv(c2lo, c2hi, gtl, gth)
    z1full = K.iconv(c2lo, c2hi, gal, gah)
    gg = K.iconv(gal, gah, gal, gah)
    z2conv = K.iconv(babs, babs, gg[0], gg[1])
    z3conv = K.iconv(gg[0], gg[1], gal, gah)

    def _pick(planes, target, offset):
        idx = target + offset
        if 0 <= idx < len(planes[0]):
            return Interval(planes[0][idx], planes[1][idx])
        return Interval(0.0)

    norm_b2 = norm_b * norm_b
    blocks = []
    for k in range(1, M):
        t = k + delta
        eps = table.eps3[t]
        if k <= m:
            z1 = _pick(z1tail, t, 2 * m + L) + norm_b2 * eps
        else:
            z1 = _pick(z1full, t, 2 * m + L) + norm_b2 * eps
        z2 = _pick(z2conv, t, m + 2 * L) + 2 * norm_b * eps
        z3 = _pick(z3conv, t, 3 * L) + 3 * eps
        if k <= m:
            y = Interval(aflo[k - 1, 0], afhi[k - 1, 0]).mag()
            zc1 = Interval(z0lo[k - 1, 0], z0hi[k - 1, 0])  # + |A| Z1 added below
            blocks.append((k, y, zc1, z1, z2, z3))
        else:
            lam = problem.lam(k)
            inv_mag = (1 / lam).mag()
            y = (resid[k - 1] / lam).mag()
            blocks.append(
                (
                    k,
                    y,
                    None,
                    6 * z1 * inv_mag,
                    12 * z2 * inv_mag,
                    6 * z3 * inv_mag,
                )
            )

    # propagate |A| through the finite-block Z vectors
    absA = np.abs(A)
    z1lo = np.array([blk[3].lo for blk in blocks[:m]])[:, None]
    z1hi = np.array([blk[3].hi for blk in blocks[:m]])[:, None]
    z2lo = np.array([blk[4].lo for blk in blocks[:m]])[:, None]
    z2hi = np.array([blk[4].hi for blk in blocks[:m]])[:, None]
    z3lo = np.array([blk[5].lo for blk in blocks[:m]])[:, None]
    z3hi = np.array([blk[5].hi for blk in blocks[:m]])[:, None]
    az1 = K.matmul_pi(absA, z1lo, z1hi)
    az2 = K.matmul_pi(absA, z2lo, z2hi)
    az3 = K.matmul_pi(absA, z3lo, z3hi)

    out_blocks = []
    for k, y, zc1, z1, z2, z3 in blocks:
        if k <= m:
            c1 = zc1 + 6 * Interval(az1[0][k - 1, 0], az1[1][k - 1, 0])
            c2 = 12 * Interval(az2[0][k - 1, 0], az2[1][k - 1, 0])
            c3 = 6 * Interval(az3[0][k - 1, 0], az3[1][k - 1, 0])
        else:
            c1, c2, c3 = z1, z2, z3
        out_blocks.append(
            Block(
                index=k,
                wbase=k,
                y=(clamp_nonneg(y),),
                zcoefs=(
                    (clamp_nonneg(c1),),
                    (clamp_nonneg(c2),),
                    (clamp_nonneg(c3),),
                ),
            )
        )

    # tail: rows k >= M.  With odd modes the finite map is identically
    # zero there; with even modes row M itself still carries one cubic
    # term, absorbed into Y_M.
    if delta == 1:
        y_tail = Interval(0.0)
    else:
        y_tail = clamp_nonneg(resid[M - 1].mag() * weight_pow(M, s))
    q = problem._sine_index(M)
    c_lam = 1 / (PI_SQ * (q * q) + sigma * problem.mu_interval)
    if c_lam.lo <= 0.0:
        raise VerificationFailure("tail constant not positive", stage="bounds")
    a3m = table.alpha3_max

    # Support-aware tail coefficients.  For rows k >= M the center only
    # couples through its 2m-wide support, so the free index ell =
    # t - p - q stays >= M - 2m = m and its weight is within a factor
    # kappa(c) = (t/(t-c))^s <= ((M+delta)/(M+delta-c))^s of w_t^-s.
    # This is far tighter than the uniform |b|^2 alpha3 reading, which
    # can push the linear tail coefficient past 1 at the printed m.
    tmin = M + delta

    def _kappa(c: int) -> Interval:
        if c <= 0:
            return Interval(1.0)
        return iv_pow_frac(Interval(float(tmin)) / Interval(float(tmin - c)), s)

    z1m = Interval(0.0)
    for c in range(-2 * m, 2 * m + 1):
        c2c = Interval(c2lo[c + 2 * m], c2hi[c + 2 * m])
        if c2c.hi == 0.0:
            continue
        z1m = z1m + c2c * _kappa(c)
    alpha2_tail_max = Interval(
        max(table.alpha2[j].lo for j in range(M - m, M + 1)),
        max(table.alpha2[j].hi for j in range(M - m, M + 1)),
    )
    z2m = Interval(0.0)
    for e in range(-m, m + 1):
        if babs[e + m] == 0.0:
            continue
        z2m = z2m + Interval(babs[e + m]) * _kappa(e)
    z2m = z2m * alpha2_tail_max
    z_tail = (
        clamp_nonneg(6 * c_lam * z1m),
        clamp_nonneg(12 * c_lam * z2m),
        clamp_nonneg(6 * c_lam * a3m),
    )
    data = BoundData(
        s=s,
        M=M,
        p=3,
        blocks=tuple(out_blocks),
        y_tail=y_tail,
        z_tail=z_tail,
    )
    return data, attestation, norm_b


def _expand_center(b: np.ndarray, problem: BoundStateProblem) -> list:
    """Plain sine-index coefficients b_1..b_{2m} (zeros on the wrong parity)."""
    m = problem.m
    out = [0.0] * (2 * m)
    for k in range(1, m + 1):
        out[problem._sine_index(k) - 1] = float(b[k - 1])
    return out


def prove_bound_state(problem: BoundStateProblem, initial=None):
    """Full pipeline: oracle guess, Newton, bounds, radii verification.

    Returns the certificate; raises ``VerificationFailure`` (with a stage
    tag) or ``NewtonError`` on the failing stage.
    """
    if initial is None:
        params = EllipticParams.solve(problem.nodes, problem.sigma, problem.mu_float)
        initial = reduced_coefficients(params, problem.m)
    center = newton_solve(initial, problem)
    table = build_estimate_table(problem.s, problem.M)
    data, attestation, _ = build_bounds(center, problem, table)
    polys = assemble_polynomials(data)
    verified = find_negative_radius(polys)
    return issue_certificate(
        polys,
        verified,
        problem="bound-state",
        sigma=problem.sigma,
        mu=problem.mu,
        nodes=problem.nodes,
        m=problem.m,
        center={
            "b_sine": [repr(v) for v in _expand_center(center, problem)],
            "b_reduced": [repr(float(v)) for v in center],
            "symmetry": problem.symmetry.value,
        },
        attestation=attestation,
    )


def prove_zero_bound_state(sigma: int, mu: str, m: int = 6, s=Fraction(4)):
    """Certificate for the trivial zero branch (used as a linear oracle).

    Newton deliberately rejects the zero solution, so this entry point
    skips it and runs the bound/verification stages on the zero center.
    """
    problem = BoundStateProblem(sigma=sigma, mu=str(mu), nodes=0, m=m, s=Fraction(s))
    center = np.zeros(m)
    table = build_estimate_table(problem.s, problem.M)
    data, attestation, _ = build_bounds(center, problem, table)
    polys = assemble_polynomials(data)
    verified = find_negative_radius(polys)
    return issue_certificate(
        polys,
        verified,
        problem="bound-state",
        sigma=problem.sigma,
        mu=problem.mu,
        nodes=problem.nodes,
        m=problem.m,
        center={
            "b_sine": [repr(0.0)] * (2 * m),
            "b_reduced": [repr(0.0)] * m,
            "symmetry": problem.symmetry.value,
        },
        attestation=attestation,
    )


# -- certificate consumers ----------------------------------------------------


def certificate_symmetry(cert) -> SymmetryClass:
    return SymmetryClass(cert.center["symmetry"])


def certificate_reduced_center(cert) -> np.ndarray:
    return np.array([float(v) for v in cert.center["b_reduced"]])


def unreduced_enclosure(cert, n: int) -> Interval:
    """Enclosure of the plain sine coefficient b_n (n may be any integer).

    In-class indices carry the certified deviation ``r / w_red^s`` around
    the stored center; wrong-parity indices are exactly zero because the
    proved solution lives in the symmetry class.
    """
    sym = certificate_symmetry(cert)
    s = cert.s_fraction
    r = Interval(cert.radius)
    if n == 0:
        return Interval(0.0)
    sign = 1.0 if n > 0 else -1.0
    n = abs(n)
    if sym is SymmetryClass.ODD_MODES:
        if n % 2 == 0:
            return Interval(0.0)
        red = (n + 1) // 2
    else:
        if n % 2 == 1:
            return Interval(0.0)
        red = n // 2
    b = certificate_reduced_center(cert)
    mid = sign * (b[red - 1] if red <= len(b) else 0.0)
    slack = r * inv_weight_pow(red, s)
    return Interval(mid) + Interval(-slack.hi, slack.hi)


def write_profile_band(cert, path: str, npoints: int = 512) -> None:
    """Plot data: x, lower, upper envelope of the certified profile.

    The band is the float profile of the stored center padded by the
    rigorous coefficient-sum bound 2*sqrt(2)*r*(1 + 1/(s-1)); columnar
    text, one row per abscissa.
    """
    b_sine = np.array([float(v) for v in cert.center["b_sine"]])
    s = cert.s_fraction
    r = cert.radius
    sm1 = float(s - 1)
    half = 2 * math.sqrt(2.0) * r * (1 + 1 / sm1) + 1e-12
    xs = np.linspace(0.0, 1.0, npoints)
    ns = np.arange(1, len(b_sine) + 1)
    phi = 2 * math.sqrt(2.0) * (np.sin(np.pi * xs[:, None] * ns[None, :]) @ b_sine)
    with open(path, "w") as fh:
        fh.write("# x phi_lower phi_upper\n")
        for x, v in zip(xs, phi):
            fh.write(f"{x:.17g} {v - half:.17g} {v + half:.17g}\n")
