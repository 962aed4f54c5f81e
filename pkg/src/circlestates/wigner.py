"""Exponential integral, the leading-term W_mm approximation, and a direct
polar quadrature of the diagonal (m = n) Wigner integrand."""
from __future__ import annotations

import cmath
import logging
import math
from dataclasses import dataclass

import numpy as np

from circlestates.fock import EVEN, series_term

log = logging.getLogger(__name__)

EULER_GAMMA = 0.57721566490153286060651209008240243
# asymptotic truncation error at x is about sqrt(2 pi x) e^{-x}; below 1e-16 from 40 on
EI_CROSSOVER = 40.0


@dataclass(frozen=True)
class WignerSample:
    z: complex
    value: float
    imag: float = 0.0
    eta_radius: float | None = None


@dataclass(frozen=True)
class QuadratureSpec:
    radial_points: int = 64
    angular_points: int = 128
    eta_radius: float = 1.0

    def __post_init__(self):
        if self.radial_points < 16:
            raise ValueError("radial_points must be >= 16")
        if self.angular_points < 32:
            raise ValueError("angular_points must be >= 32")
        if not 0 < self.eta_radius <= 1:
            raise ValueError("eta_radius must lie in (0, 1]")


def ei_series(x: float) -> float:
    """gamma + ln x + sum_k x^k / (k k!); all terms positive for x > 0."""
    term, total, k = 1.0, 0.0, 0
    while True:
        k += 1
        term *= x / k
        contrib = term / k
        total += contrib
        if contrib < 1e-17 * total:
            break
    return EULER_GAMMA + math.log(x) + total


def ei_asymptotic(x: float) -> float:
    """e^x/x sum_k k!/x^k, stopped at the smallest term."""
    term, total, k = 1.0, 1.0, 0
    while True:
        k += 1
        nxt = term * k / x
        if nxt >= term or nxt < 1e-17 * total:
            break
        term = nxt
        total += term
    return math.exp(x) / x * total


def exp_integral_Ei(x: float) -> float:
    """Ei(x) for x > 0."""
    if not x > 0:
        raise ValueError(f"Ei is only provided for x > 0, got {x!r}")
    return ei_series(x) if x <= EI_CROSSOVER else ei_asymptotic(x)


def wigner_mm_approx(z: complex) -> WignerSample:
    """2 e^{-4|z|^2} (2 Ei(4|z|^2) + ln(1/|z|^4)), the two leading terms."""
    r = abs(z)
    if r == 0:
        raise ValueError("W_mm approximation is singular at z = 0")
    if r > 1:
        raise ValueError("W_mm approximation is defined for |z| <= 1")
    x = 4.0 * r * r
    return WignerSample(complex(z), 2.0 * math.exp(-x) * (2.0 * exp_integral_Ei(x) - 4.0 * math.log(r)))


def _F(w: complex, n: int) -> complex:
    return 1.0 + math.sqrt(1.0 - abs(w) ** 2) * w / (2.0 * math.sqrt(2 * n + 1.0))


def wigner_integrand(z: complex, eta: complex, n: int, m: int) -> complex:
    """M(z+, z-) (z+/2)^{2n}/sqrt((2n)!) (z-*/2)^{2m}/sqrt((2m)!) F(z+) F(z-*).

    M = (1-|z+|^2)^{1/4} (1-|z-|^2)^{1/4} exp[-(z - z*)(eta + eta*)/2]; each F
    uses the modulus of its own argument.
    """
    zp, zm = z + eta / 2.0, z - eta / 2.0
    if not (abs(zp) < 1 and abs(zm) < 1):
        raise ValueError("z +/- eta/2 must stay inside the unit disc")
    if n < 0 or m < 0:
        raise ValueError("n, m must be >= 0")
    amp = ((1 - abs(zp) ** 2) * (1 - abs(zm) ** 2)) ** 0.25
    mfac = amp * cmath.exp(-(z - z.conjugate()) * (eta + eta.conjugate()) / 2.0)
    zmc = zm.conjugate()
    return (mfac * series_term(zp, n, EVEN) * series_term(zmc, m, EVEN)
            * _F(zp, n) * _F(zmc, m))


def _diag_integrand_grid(z: complex, eta: np.ndarray, n_cut: int) -> np.ndarray:
    """sum_{n <= n_cut} integrand(z, eta, n, n), vectorized over eta."""
    zp, zm = z + eta / 2.0, z - eta / 2.0
    ap, am = np.abs(zp) ** 2, np.abs(zm) ** 2
    mfac = ((1 - ap) * (1 - am)) ** 0.25 * np.exp(-(z - np.conj(z)) * (eta + np.conj(eta)) / 2.0)
    zmc = np.conj(zm)
    prod = zp * zmc / 4.0
    total = np.zeros_like(eta, dtype=complex)
    power = np.ones_like(eta, dtype=complex)
    for n in range(n_cut + 1):
        if n > 0:
            power = power * prod * prod / ((2 * n - 1) * (2 * n))
        root = math.sqrt(2 * n + 1.0)
        fp = 1.0 + np.sqrt(1 - ap) * zp / (2 * root)
        fm = 1.0 + np.sqrt(1 - am) * zmc / (2 * root)
        total += power * fp * fm
    return mfac * total


def effective_eta_radius(z: complex, radius: float) -> float:
    if abs(z) + radius / 2.0 < 1:
        return radius
    return 2.0 * (1.0 - abs(z)) * (1.0 - 1e-9)


def wigner_direct(z: complex, n_pair_cutoff: int = 20, spec: QuadratureSpec = QuadratureSpec()) -> WignerSample:
    """(1/2pi) int_{|eta|<R} d^2eta sum_{n<=cutoff} integrand(z, eta, n, n).

    Gauss-Legendre in radius, trapezoid in angle. R shrinks to keep z +/- eta/2
    inside the disc.
    """
    z = complex(z)
    if not abs(z) < 1:
        raise ValueError("wigner_direct needs |z| < 1")
    radius = effective_eta_radius(z, spec.eta_radius)
    if radius != spec.eta_radius:
        log.debug("eta radius shrunk from %g to %g at |z|=%g", spec.eta_radius, radius, abs(z))
    x, w = np.polynomial.legendre.leggauss(spec.radial_points)
    rho = 0.5 * radius * (x + 1.0)
    wr = 0.5 * radius * w * rho
    theta = 2.0 * math.pi * np.arange(spec.angular_points) / spec.angular_points
    wt = 2.0 * math.pi / spec.angular_points
    eta = rho[:, None] * np.exp(1j * theta[None, :])
    vals = _diag_integrand_grid(z, eta, n_pair_cutoff)
    integral = float(wt) * np.sum(wr[:, None] * vals) / (2.0 * math.pi)
    return WignerSample(z, float(integral.real), float(integral.imag), radius)
