"""Closed-form bound states via Jacobi elliptic functions.

This module is deliberately non-rigorous: it runs in plain floating
point and its results never enter a certificate.  It serves two roles:
producing Newton initial guesses for the Galerkin solver and acting as
an independent oracle that certified centers are checked against.

The states with ``j`` interior nodes on [0,1] solve the stationary cubic
problem; their modulus ``k`` is pinned by

    focusing  (sigma = +1):  4 (j+1)^2 (2k^2 - 1) K(k)^2 = mu
    defocusing (sigma = -1): 4 (j+1)^2 (k^2 + 1)  K(k)^2 = mu

and the profiles are amplitude-scaled ``cn`` / ``sn`` waves.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.fft import dst
from scipy.special import ellipj

from .seqspace import SineSeries, SymmetryClass

__all__ = [
    "EllipticParams",
    "complete_elliptic_K",
    "solve_modulus",
    "bound_state_closed_form",
    "sine_coefficients",
    "reduced_coefficients",
]


def complete_elliptic_K(k: float) -> float:
    """Complete elliptic integral of the first kind via the AGM."""
    if not 0.0 <= k < 1.0:
        raise ValueError("modulus must satisfy 0 <= k < 1")
    a = 1.0
    b = math.sqrt(1.0 - k * k)
    for _ in range(60):
        if abs(a - b) <= 4e-16 * a:
            break
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    return math.pi / (2.0 * a)


def _modulus_equation(j: int, sigma: int, k: float) -> float:
    K = complete_elliptic_K(k)
    if sigma == 1:
        return 4.0 * (j + 1) ** 2 * (2.0 * k * k - 1.0) * K * K
    return 4.0 * (j + 1) ** 2 * (k * k + 1.0) * K * K


def solve_modulus(j: int, sigma: int, mu: float) -> float:
    """Invert the modulus equation by bisection on [0, 1)."""
    if sigma not in (1, -1):
        raise ValueError("sigma must be +1 or -1")
    mu_ring = (j + 1) ** 2 * math.pi**2
    lo_mu = -mu_ring if sigma == 1 else mu_ring
    if mu < lo_mu:
        raise ValueError(f"mu={mu} below the admissible threshold {lo_mu}")
    lo, hi = 0.0, 1.0 - 1e-16
    # the left side is strictly increasing in k on [0, 1)
    if _modulus_equation(j, sigma, hi) < mu:
        raise ValueError("mu too large for the bisection bracket")
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        if _modulus_equation(j, sigma, mid) < mu:
            lo = mid
        else:
            hi = mid
    k = 0.5 * (lo + hi)
    if abs(_modulus_equation(j, sigma, k) - mu) > 1e-12 * max(1.0, abs(mu)):
        raise ArithmeticError("modulus bisection did not converge")
    return k


@dataclass(frozen=True)
class EllipticParams:
    """Node count, nonlinearity sign, chemical potential, and modulus."""

    j: int
    sigma: int
    mu: float
    k: float

    @classmethod
    def solve(cls, j: int, sigma: int, mu: float) -> "EllipticParams":
        return cls(j=j, sigma=sigma, mu=mu, k=solve_modulus(j, sigma, mu))


def bound_state_closed_form(params: EllipticParams, x) -> np.ndarray:
    """Evaluate the j-node state at abscissae ``x`` (scalar or array)."""
    x = np.asarray(x, dtype=np.float64)
    j, k = params.j, params.k
    K = complete_elliptic_K(k)
    amp = 2.0 * math.sqrt(2.0) * (j + 1) * k * K
    if params.sigma == 1:
        u = 2.0 * (j + 1) * K * (x - 0.5) + (j % 2) * K
        sn, cn, dn, ph = ellipj(u, k * k)
        return amp * cn
    u = 2.0 * (j + 1) * K * x
    sn, cn, dn, ph = ellipj(u, k * k)
    return amp * sn


def sine_coefficients(params: EllipticParams, m: int, grid: int = 1 << 14) -> SineSeries:
    """Two-sided sine coefficients ``b_n`` of the closed-form state.

    The profile is sampled on a uniform grid and projected with a type-I
    discrete sine transform; since the odd periodic extension of the
    state is smooth, the quadrature converges spectrally.  Coefficients
    follow the symmetric convention ``phi = sqrt(2) sum_{n in Z} b_n
    sin(pi n x)``, i.e. half the orthonormal-basis coefficients.
    """
    xs = np.arange(1, grid) / grid
    phi = bound_state_closed_form(params, xs)
    proj = dst(phi, type=1) / (2.0 * grid)  # = (1/N) sum phi sin(pi n x)
    alpha = math.sqrt(2.0) * proj[:m]
    b = 0.5 * alpha
    return SineSeries.from_real(b, symmetry=SymmetryClass.NONE)


def reduced_coefficients(params: EllipticParams, m_red: int) -> np.ndarray:
    """Reduced-system Newton guess: the stored-parity coefficients only."""
    if params.j % 2 == 0:
        full = sine_coefficients(params, 2 * m_red)
        return np.array([full.coeff(2 * n - 1).re.mid for n in range(1, m_red + 1)])
    full = sine_coefficients(params, 2 * m_red + 1)
    return np.array([full.coeff(2 * n).re.mid for n in range(1, m_red + 1)])
