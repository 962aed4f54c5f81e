"""Fock-space primitives shared by every series in the package.

Terms of the form (z/2)^k / sqrt(k!) are evaluated in log-magnitude/phase
form; (z/2)^k underflows and k! overflows long before they cancel.
"""
from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass, field

import numpy as np


class Parity(enum.Enum):
    EVEN = "even"
    ODD = "odd"
    FULL = "full"


EVEN, ODD, FULL = Parity.EVEN, Parity.ODD, Parity.FULL

_EXACT_FACTORIAL_MAX = 20


@dataclass(frozen=True)
class TruncationPolicy:
    """Basis/series cutoff plus the tail tolerance reported against it."""

    n_max: int = 200
    tail_tol: float = 1e-14

    def __post_init__(self):
        if int(self.n_max) != self.n_max or self.n_max < 8:
            raise ValueError(f"n_max must be an integer >= 8, got {self.n_max!r}")
        if not self.tail_tol > 0:
            raise ValueError(f"tail_tol must be positive, got {self.tail_tol!r}")


def log_factorial(n: int) -> float:
    """ln(n!), exact integer product for n <= 20 and lgamma above."""
    if n < 0:
        raise ValueError("log_factorial needs n >= 0")
    if n <= _EXACT_FACTORIAL_MAX:
        return math.log(math.factorial(n))
    return math.lgamma(n + 1.0)


def log_factorials(k_max: int) -> np.ndarray:
    """Vector of ln(k!) for k = 0..k_max."""
    return np.array([log_factorial(k) for k in range(k_max + 1)])


def _power(parity: Parity, n: int) -> int:
    if parity is EVEN:
        return 2 * n
    if parity is ODD:
        return 2 * n + 1
    raise ValueError("series terms need EVEN or ODD parity")


def series_term(z: complex, n: int, parity: Parity) -> complex:
    """(z/2)^k / sqrt(k!) with k = 2n (EVEN) or 2n+1 (ODD)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    k = _power(parity, n)
    if k == 0:
        return 1.0 + 0.0j
    if z == 0:
        return 0.0j
    logmag = k * (math.log(abs(z)) - math.log(2.0)) - 0.5 * log_factorial(k)
    return math.exp(logmag) * cmath.exp(1j * k * cmath.phase(z))


def series_terms(z: complex, n_terms: int, parity: Parity) -> np.ndarray:
    """Vector of series_term(z, n, parity) for n = 0..n_terms-1."""
    n = np.arange(n_terms)
    k = 2 * n if parity is EVEN else 2 * n + 1
    if parity is FULL:
        raise ValueError("series terms need EVEN or ODD parity")
    if z == 0:
        out = np.zeros(n_terms, dtype=complex)
        out[k == 0] = 1.0
        return out
    lf = log_factorials(int(k[-1]))[k]
    logmag = k * (math.log(abs(z)) - math.log(2.0)) - 0.5 * lf
    return np.exp(logmag) * np.exp(1j * k * cmath.phase(z))


def truncation_tail_bound(z_abs: float, policy: TruncationPolicy, parity: Parity) -> float:
    """Upper bound on sum_{n > n_max} |series_term(z, n, parity)|.

    Consecutive term ratios are decreasing, so the first dropped term over
    (1 - its ratio to the next) dominates the geometric majorant.
    """
    if not 0 <= z_abs < 1:
        raise ValueError("tail bound needs 0 <= |z| < 1")
    return tail_beyond(z_abs, policy.n_max, parity)


def tail_beyond(z_abs: float, last: int, parity: Parity) -> float:
    """Bound on sum_{n > last} |series_term(z, n, parity)|."""
    if z_abs == 0:
        return 0.0
    n0 = last + 1
    first = abs(series_term(z_abs, n0, parity))
    k = _power(parity, n0)
    ratio = (z_abs / 2.0) ** 2 / math.sqrt((k + 1.0) * (k + 2.0))
    return first / (1.0 - ratio)


@dataclass
class FockVector:
    """Complex amplitudes over |0>..|n_max> tagged with a parity sector."""

    coeffs: np.ndarray
    sector: Parity = FULL
    tail_bound: float = field(default=0.0, compare=False)

    def __post_init__(self):
        self.coeffs = np.asarray(self.coeffs, dtype=complex)
        if not np.all(np.isfinite(self.coeffs)):
            raise ValueError("FockVector entries must be finite")
        if self.sector is EVEN and np.any(self.coeffs[1::2] != 0):
            raise ValueError("EVEN sector vector has odd-n entries")
        if self.sector is ODD and np.any(self.coeffs[0::2] != 0):
            raise ValueError("ODD sector vector has even-n entries")

    @property
    def n_max(self) -> int:
        return len(self.coeffs) - 1

    def norm_sq(self) -> float:
        return float(np.vdot(self.coeffs, self.coeffs).real)

    def inner(self, other: "FockVector") -> complex:
        """<self|other> with self conjugated."""
        m = min(len(self.coeffs), len(other.coeffs))
        return complex(np.vdot(self.coeffs[:m], other.coeffs[:m]))

    def __mul__(self, scalar: complex) -> "FockVector":
        return FockVector(self.coeffs * scalar, self.sector, abs(scalar) * self.tail_bound)

    __rmul__ = __mul__

    def __add__(self, other: "FockVector") -> "FockVector":
        if len(self.coeffs) != len(other.coeffs):
            raise ValueError("FockVector lengths differ")
        sector = self.sector if self.sector is other.sector else FULL
        return FockVector(self.coeffs + other.coeffs, sector, self.tail_bound + other.tail_bound)
