"""Metaplectic sector states projected on circle, cylinder and E(2) coset states."""

from circlestates.fock import (
    EVEN,
    FULL,
    ODD,
    FockVector,
    Parity,
    TruncationPolicy,
    log_factorial,
    series_term,
    truncation_tail_bound,
)

__all__ = [
    "EVEN",
    "ODD",
    "FULL",
    "Parity",
    "FockVector",
    "TruncationPolicy",
    "log_factorial",
    "series_term",
    "truncation_tail_bound",
]
