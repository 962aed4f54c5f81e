"""Constructors for the state families: Mp(2) sector states, London phase
bras, cylinder kets and the normalized E(2) coset states.

Sign convention: bra coefficients carry e^{+i phi n}, ket coefficients
carry e^{-i phi n}.
"""
from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass

import numpy as np

from circlestates.fock import (
    EVEN,
    FULL,
    ODD,
    FockVector,
    Parity,
    TruncationPolicy,
    log_factorials,
    tail_beyond,
)

TWO_PI = 2.0 * math.pi
SECTOR_EXPONENT = {EVEN: 0.25, ODD: 0.75}


class Branch(enum.Enum):
    PLUS = +1
    MINUS = -1


PLUS, MINUS = Branch.PLUS, Branch.MINUS


def _check_disc(w, name="omega"):
    if not abs(w) < 1:
        raise ValueError(f"|{name}| must be < 1, got {abs(w)!r}")


@dataclass(frozen=True)
class SectorState:
    omega: complex
    sector: Parity = FULL

    def __post_init__(self):
        _check_disc(self.omega)


@dataclass(frozen=True)
class PhasePoint:
    phi: float

    def __post_init__(self):
        phi = float(self.phi) % TWO_PI
        # tiny negatives round up to exactly 2pi
        object.__setattr__(self, "phi", 0.0 if phi >= TWO_PI else phi)


@dataclass(frozen=True)
class CylinderLabel:
    phi: float
    l: float = 0.0

    def __post_init__(self):
        if not (math.isfinite(self.phi) and math.isfinite(self.l)):
            raise ValueError("cylinder label must be finite")


@dataclass(frozen=True)
class CosetLabel:
    alpha: complex
    phi: float
    x: float = 1.0
    y: float = 0.0
    branch: Branch = PLUS

    def __post_init__(self):
        if not complex(self.alpha).imag > 0:
            raise ValueError(f"Im alpha must be > 0 (state not normalizable), got {self.alpha!r}")
        if self.x == 0 and self.y == 0:
            raise ValueError("fiducial parameters (x, y) must not both vanish")


def _as_phi(phi) -> float:
    return phi.phi if isinstance(phi, PhasePoint) else PhasePoint(phi).phi


def mp2_state(label: SectorState, policy: TruncationPolicy = TruncationPolicy()) -> FockVector:
    """Coefficients of |Psi(omega)> in the requested sector over |0>..|n_max>."""
    w = complex(label.omega)
    r2 = abs(w) ** 2
    k = np.arange(policy.n_max + 1)
    coeffs = np.zeros(policy.n_max + 1, dtype=complex)
    tail = 0.0
    for parity in (EVEN, ODD):
        if label.sector not in (parity, FULL):
            continue
        mask = k % 2 == (0 if parity is EVEN else 1)
        kk = k[mask]
        pref = (1.0 - r2) ** SECTOR_EXPONENT[parity]
        if w == 0:
            coeffs[mask] = np.where(kk == 0, pref, 0.0)
        else:
            logmag = kk * (math.log(abs(w)) - math.log(2.0)) - 0.5 * log_factorials(policy.n_max)[kk]
            coeffs[mask] = pref * np.exp(logmag + 1j * kk * cmath.phase(w))
        # the last kept series index is floor((n_max - parity)/2)
        last = (policy.n_max - (0 if parity is EVEN else 1)) // 2
        tail += pref * tail_beyond(abs(w), last, parity)
    return FockVector(coeffs, label.sector, tail)


def london_bra_coeffs(phi, policy: TruncationPolicy = TruncationPolicy()) -> FockVector:
    """Coefficients of <phi| = (2 pi)^{-1/2} sum_n e^{i phi n} <n|."""
    phi = _as_phi(phi)
    n = np.arange(policy.n_max + 1)
    return FockVector(np.exp(1j * phi * n) / math.sqrt(TWO_PI), FULL)


def cylinder_ket_coeffs(label: CylinderLabel, policy: TruncationPolicy = TruncationPolicy()) -> FockVector:
    """Nonnegative-j coefficients e^{(l - i phi) j} e^{-j^2/2}, unnormalized."""
    j = np.arange(policy.n_max + 1, dtype=float)
    return FockVector(np.exp((label.l - 1j * label.phi) * j - 0.5 * j * j), FULL)


def fiducial_A(phi: float, x: float, y: float, branch: Branch = PLUS) -> float:
    s = branch.value
    c, sn = math.cos(phi), math.sin(phi)
    return (c + s * sn) * x + (-s * c + sn) * y


def coset_S(alpha: complex, phi: float, x: float, y: float) -> complex:
    """A_+ cos(alpha) + A_- sin(alpha) for complex alpha."""
    return fiducial_A(phi, x, y, PLUS) * cmath.cos(alpha) + fiducial_A(phi, x, y, MINUS) * cmath.sin(alpha)


def s_product_quoted(alpha: complex, phi: float, x: float, y: float) -> float:
    """The displayed closed form for S(alpha*, phi) S(alpha, phi), verbatim."""
    a, b = alpha.real, alpha.imag
    return ((x * x + y * y) * math.cosh(2 * b)
            - (x * x - y * y) * math.sin(2 * (a - phi))
            + 2 * x * y * math.cos(2 * (a - phi)))


def s_product_exact(alpha: complex, phi: float, x: float, y: float) -> float:
    """|S(alpha, phi)|^2 reduced with |cos a|^2, |sin a|^2 and Re(cos a sin a*)."""
    a, b = alpha.real, alpha.imag
    return ((x * x + y * y) * math.cosh(2 * b)
            + (x * x - y * y) * math.sin(2 * (a + phi))
            - 2 * x * y * math.cos(2 * (a + phi)))


def coset_normalization(label: CosetLabel) -> complex:
    """N = sqrt(1 - e^{-Im alpha}) e^{i arg S(alpha, phi)}."""
    s = coset_S(label.alpha, label.phi, label.x, label.y)
    phase = cmath.exp(1j * cmath.phase(s)) if s != 0 else 1.0
    return math.sqrt(-math.expm1(-label.alpha.imag)) * phase


def _coset_modes(label: CosetLabel, n_max: int) -> np.ndarray:
    n = np.arange(n_max + 1)
    return np.exp(-1j * (label.phi - label.alpha / 2.0) * n)


def coset_state_coeffs(label: CosetLabel, policy: TruncationPolicy = TruncationPolicy()) -> FockVector:
    """Normalized |alpha, phi>; |c_n| = |N| e^{-n Im(alpha)/2}."""
    nrm = coset_normalization(label)
    q = math.exp(-label.alpha.imag)
    # squared-norm mass left beyond n_max is q^{n_max+1}
    return FockVector(nrm * _coset_modes(label, policy.n_max), FULL, q ** ((policy.n_max + 1) / 2))


def coset_ket_unnormalized(label: CosetLabel, policy: TruncationPolicy = TruncationPolicy()) -> FockVector:
    """(2 pi)^{-1/2} S(alpha, phi) |phi - alpha/2>, before normalization."""
    pref = coset_S(label.alpha, label.phi, label.x, label.y) / math.sqrt(TWO_PI)
    return FockVector(pref * _coset_modes(label, policy.n_max), FULL)
