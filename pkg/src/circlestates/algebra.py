"""Truncated-matrix realization of the oscillator and Mp(2) generators.

Quadratic generators couple n to n +/- 2, so the top levels of any truncated
product are corrupted; every check below reports only an interior block that
excludes a boundary band of BOUNDARY_BAND levels.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from circlestates.fock import EVEN, ODD, Parity

BOUNDARY_BAND = 4
CASIMIR_VALUE = -3.0 / 16.0


class Label(enum.Enum):
    A = "a"
    ADAG = "a_dag"
    Q = "q"
    P = "p"
    T1 = "T1"
    T2 = "T2"
    T3 = "T3"
    U = "U"
    UDAG = "U_dag"
    J = "J"
    PROJ = "projector"
    WEAK_IDENTITY = "weak_identity"


@dataclass(frozen=True)
class OperatorMatrix:
    entries: np.ndarray
    label: Label

    def __matmul__(self, other):
        if isinstance(other, OperatorMatrix):
            return self.entries @ other.entries
        return self.entries @ np.asarray(other)

    @property
    def dim(self) -> int:
        return self.entries.shape[0]


@dataclass(frozen=True)
class CommutatorReport:
    max_interior_deviation: float
    boundary_band: int
    full_matrix_deviation: float
    per_identity: dict

    @property
    def passed(self) -> bool:
        return self.max_interior_deviation <= 1e-12


def _check_n_max(n_max, minimum):
    if n_max < minimum:
        raise ValueError(f"n_max must be >= {minimum}, got {n_max}")


def build_ladder(n_max: int) -> tuple[OperatorMatrix, OperatorMatrix]:
    """Annihilation and creation matrices on |0>..|n_max>."""
    _check_n_max(n_max, 4)
    a = np.diag(np.sqrt(np.arange(1, n_max + 1, dtype=float)), k=1).astype(complex)
    return OperatorMatrix(a, Label.A), OperatorMatrix(a.conj().T, Label.ADAG)


def build_mp2_generators(n_max: int) -> tuple[OperatorMatrix, OperatorMatrix, OperatorMatrix]:
    _check_n_max(n_max, 4)
    a, ad = build_ladder(n_max)
    a, ad = a.entries, ad.entries
    t1 = 0.25j * (ad @ ad - a @ a)
    t2 = -0.25 * (ad @ ad + a @ a)
    t3 = -0.25 * (ad @ a + a @ ad)
    return (OperatorMatrix(t1, Label.T1), OperatorMatrix(t2, Label.T2), OperatorMatrix(t3, Label.T3))


def build_circle_shift(n_max: int) -> tuple[OperatorMatrix, OperatorMatrix]:
    """U|j> = |j+1> and its adjoint on the nonnegative-index basis.

    Unit coefficients; a j-weighted shift would not be unitary.
    """
    _check_n_max(n_max, 1)
    u = np.diag(np.ones(n_max, dtype=complex), k=-1)
    return OperatorMatrix(u, Label.U), OperatorMatrix(u.conj().T, Label.UDAG)


def build_angular_momentum(n_max: int) -> OperatorMatrix:
    """J|j> = j|j>."""
    return OperatorMatrix(np.diag(np.arange(n_max + 1, dtype=complex)), Label.J)


def _comm(x, y):
    return x @ y - y @ x


def _interior(m, n_max, band=BOUNDARY_BAND):
    k = n_max + 1 - band
    return m[:k, :k]


def check_commutators(n_max: int) -> CommutatorReport:
    """Deviations of [T1,T2] = -iT3, [T3,T1] = iT2, [T3,T2] = -iT1."""
    _check_n_max(n_max, 8)
    t1, t2, t3 = (g.entries for g in build_mp2_generators(n_max))
    residuals = {
        "[T1,T2]+iT3": _comm(t1, t2) + 1j * t3,
        "[T3,T1]-iT2": _comm(t3, t1) - 1j * t2,
        "[T3,T2]+iT1": _comm(t3, t2) + 1j * t1,
    }
    per = {k: float(np.max(np.abs(_interior(r, n_max)))) for k, r in residuals.items()}
    full = max(float(np.max(np.abs(r))) for r in residuals.values())
    return CommutatorReport(max(per.values()), BOUNDARY_BAND, full, per)


def casimir_spectrum(n_max: int) -> np.ndarray:
    """Diagonal of T3^2 - T1^2 - T2^2 on the interior block."""
    _check_n_max(n_max, 8)
    t1, t2, t3 = (g.entries for g in build_mp2_generators(n_max))
    k2 = t3 @ t3 - t1 @ t1 - t2 @ t2
    return np.diag(_interior(k2, n_max)).real.copy()


def casimir_offdiagonal(n_max: int) -> float:
    """Largest off-diagonal entry of the Casimir on the interior block."""
    t1, t2, t3 = (g.entries for g in build_mp2_generators(n_max))
    k2 = _interior(t3 @ t3 - t1 @ t1 - t2 @ t2, n_max)
    return float(np.max(np.abs(k2 - np.diag(np.diag(k2)))))


def t3_diagonal(n_max: int) -> np.ndarray:
    """<n|T3|n> for n <= n_max - 2."""
    _, _, t3 = build_mp2_generators(n_max)
    return np.diag(t3.entries).real[: n_max - 1].copy()


def sector_projector(parity: Parity, n_max: int) -> OperatorMatrix:
    _check_n_max(n_max, 2)
    n = np.arange(n_max + 1)
    if parity is EVEN:
        mask = n % 2 == 0
    elif parity is ODD:
        mask = n % 2 == 1
    else:
        raise ValueError("projector needs EVEN or ODD parity")
    return OperatorMatrix(np.diag(mask.astype(complex)), Label.PROJ)
