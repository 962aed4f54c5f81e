"""Projection amplitudes and norms, each evaluated as a truncated series and,
where one exists, as a closed form.

Series are truncated at series index ``policy.n_max``; the reported tail bound
is the first dropped term over (1 - ratio of the next two), valid because the
term ratios of every family here decrease monotonically.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from circlestates.algebra import Label, OperatorMatrix
from circlestates.fock import EVEN, ODD, Parity, TruncationPolicy, log_factorials
from circlestates.states import (
    SECTOR_EXPONENT,
    TWO_PI,
    CosetLabel,
    CylinderLabel,
    _as_phi,
    _check_disc,
    coset_ket_unnormalized,
    coset_normalization,
    coset_S,
)

SQRT_TWO_PI = math.sqrt(TWO_PI)
DEFAULT_REGULARIZER = 1e-3


@dataclass(frozen=True)
class OverlapResult:
    series_value: complex
    closed_form_value: complex | None
    tail_bound: float
    n_used: int
    aux: dict = field(default_factory=dict, compare=False)

    @property
    def difference(self) -> float | None:
        if self.closed_form_value is None:
            return None
        return abs(self.series_value - self.closed_form_value)

    @property
    def tolerance(self) -> float:
        return max(1e-10, 10.0 * self.tail_bound)

    @property
    def agrees(self) -> bool | None:
        d = self.difference
        return None if d is None else d <= self.tolerance


def _terms(w: complex, parity: Parity, n_terms: int, gaussian: bool = False) -> np.ndarray:
    """(w/2)^k / sqrt(k!) [* e^{-k^2/2}] for k = 2n or 2n+1, n < n_terms."""
    n = np.arange(n_terms)
    k = 2 * n if parity is EVEN else 2 * n + 1
    weight = -0.5 * k.astype(float) ** 2 if gaussian else 0.0
    if w == 0:
        return np.where(k == 0, 1.0, 0.0).astype(complex)
    lf = log_factorials(int(k[-1]))[k]
    logmag = k * (math.log(abs(w)) - math.log(2.0)) - 0.5 * lf + weight
    return np.exp(logmag) * np.exp(1j * k * cmath.phase(w))


def _series(w, parity, policy, gaussian=False):
    """Truncated sum over n <= n_max plus the tail bound of the rest."""
    n = policy.n_max + 1
    t = _terms(w, parity, n + 2, gaussian)
    a, b = abs(t[n]), abs(t[n + 1])
    if a == 0:
        tail = 0.0
    else:
        ratio = b / a
        tail = a / (1.0 - ratio) if ratio < 1 else math.inf
    return t[:n], tail


def _sector_core(w, parity, policy, gaussian=False, disc_abs=None):
    """(1 - |.|^2)^{s} times the sector series in w."""
    r = abs(w) if disc_abs is None else disc_abs
    pref = (1.0 - r * r) ** SECTOR_EXPONENT[parity]
    terms, tail = _series(w, parity, policy, gaussian)
    return pref * terms, pref * tail


def _check_parity(parity):
    if parity not in (EVEN, ODD):
        raise ValueError("sector overlaps need EVEN or ODD parity")


# -- circle (London) states -------------------------------------------------

def circle_variable(phi, omega: complex) -> complex:
    return complex(omega) * cmath.exp(1j * _as_phi(phi))


def circle_sector_overlap(phi, omega: complex, parity: Parity,
                          policy: TruncationPolicy = TruncationPolicy()) -> OverlapResult:
    """<phi|Psi^(+/-)(omega)> as an analytic series in z = omega e^{i phi}."""
    _check_disc(omega)
    _check_parity(parity)
    terms, tail = _sector_core(circle_variable(phi, omega), parity, policy)
    return OverlapResult(complex(terms.sum()) / SQRT_TWO_PI, None, tail / SQRT_TWO_PI,
                         policy.n_max + 1, {"terms": terms / SQRT_TWO_PI})


def _single_sum_total(w, policy, gaussian=False, disc_abs=None):
    """sum_n (1-r^2)^{1/4} even_n [1 + (1-r^2)^{1/2} (w/2)/sqrt(2n+1) * g_n].

g_n = e^{-(2n+1/2)} for the Gaussian-weighted cylinder series, 1 otherwise.
"""
    r = abs(w) if disc_abs is None else disc_abs
    even, _ = _series(w, EVEN, policy, gaussian)
    n = np.arange(len(even))
    bracket = math.sqrt(1.0 - r * r) * (w / 2.0) / np.sqrt(2 * n + 1.0)
    if gaussian:
        bracket = bracket * np.exp(-(2 * n + 0.5))
    return complex(((1.0 - r * r) ** 0.25 * even * (1.0 + bracket)).sum())


def circle_total_overlap(phi, omega: complex,
                         policy: TruncationPolicy = TruncationPolicy()) -> OverlapResult:
    """Even + odd projection; closed form is the single-sum bracket arrangement."""
    ev = circle_sector_overlap(phi, omega, EVEN, policy)
    od = circle_sector_overlap(phi, omega, ODD, policy)
    single = _single_sum_total(circle_variable(phi, omega), policy) / SQRT_TWO_PI
    return OverlapResult(ev.series_value + od.series_value, single,
                         ev.tail_bound + od.tail_bound, policy.n_max + 1,
                         {"even": ev.series_value, "odd": od.series_value})


def circle_norm_sq_quoted(z_abs: float) -> float:
    """Displayed closed form with cosh/sinh of |z|^2/2."""
    r2 = z_abs * z_abs
    return math.sqrt(1 - r2) * math.cosh(r2 / 2) + (1 - r2) ** 1.5 * math.sinh(r2 / 2)


def circle_norm_sq_termwise_closed(z_abs: float) -> float:
    """Closed form the termwise sum actually reaches: cosh/sinh of |z|^2/4."""
    r2 = z_abs * z_abs
    return math.sqrt(1 - r2) * math.cosh(r2 / 4) + (1 - r2) ** 1.5 * math.sinh(r2 / 4)


def circle_total_norm_sq(z_abs: float, policy: TruncationPolicy = TruncationPolicy()) -> OverlapResult:
    """2 pi sum_n (|even_n|^2 + |odd_n|^2) against the displayed closed form.

    Cross terms between sectors are dropped, as in the termwise derivation;
    the result is independent of phi.
    """
    if not 0 <= z_abs < 1:
        raise ValueError(f"|z| must be in [0, 1), got {z_abs!r}")
    ev, te = _sector_core(z_abs, EVEN, policy)
    od, to = _sector_core(z_abs, ODD, policy)
    series = float(np.sum(np.abs(ev) ** 2) + np.sum(np.abs(od) ** 2))
    # |t|^2 tails are bounded by (sum |t|)^2
    tail = te * te + to * to
    return OverlapResult(series, circle_norm_sq_quoted(z_abs), tail, policy.n_max + 1,
                         {"termwise_closed_form": circle_norm_sq_termwise_closed(z_abs)})


def circle_total_norm_sq_direct(phi, omega: complex,
                                policy: TruncationPolicy = TruncationPolicy()) -> float:
    """2 pi |<phi|Psi(omega)>|^2 including the sector cross terms."""
    return TWO_PI * abs(circle_total_overlap(phi, omega, policy).series_value) ** 2


def london_overlap(phi: float, phi_prime: float, regularizer: float = DEFAULT_REGULARIZER) -> complex:
    """Abel-summed <phi|phi'> = (1/2pi) sum_n e^{i(phi-phi')n} e^{-n r}."""
    if not 0 < regularizer < 1:
        raise ValueError("regularizer must lie in (0, 1)")
    return 1.0 / (TWO_PI * (1.0 - cmath.exp(1j * (phi - phi_prime) - regularizer)))


def london_overlap_quoted(phi: float, phi_prime: float, regularizer: float = DEFAULT_REGULARIZER) -> complex:
    """Same damping, but with the displayed sign e^{-i(phi-phi')}."""
    if not 0 < regularizer < 1:
        raise ValueError("regularizer must lie in (0, 1)")
    return 1.0 / (TWO_PI * (1.0 - cmath.exp(-1j * (phi - phi_prime) - regularizer)))


# -- cylinder states ---------------------------------------------------------

def cylinder_variable(label: CylinderLabel, omega: complex) -> complex:
    return complex(omega) * cmath.exp(label.l - 1j * label.phi)


def cylinder_sector_overlap(label: CylinderLabel, omega: complex, parity: Parity,
                            policy: TruncationPolicy = TruncationPolicy()) -> OverlapResult:
    """<xi|Psi^(+/-)(omega)>: circle-like series with Gaussian weights e^{-k^2/2}."""
    _check_disc(omega)
    _check_parity(parity)
    w = cylinder_variable(label, omega)
    terms, tail = _sector_core(w, parity, policy, gaussian=True, disc_abs=abs(omega))
    return OverlapResult(complex(terms.sum()), None, tail, policy.n_max + 1, {"terms": terms})


def cylinder_total_overlap(label: CylinderLabel, omega: complex,
                           policy: TruncationPolicy = TruncationPolicy()) -> OverlapResult:
    ev = cylinder_sector_overlap(label, omega, EVEN, policy)
    od = cylinder_sector_overlap(label, omega, ODD, policy)
    w = cylinder_variable(label, omega)
    single = _single_sum_total(w, policy, gaussian=True, disc_abs=abs(omega))
    return OverlapResult(ev.series_value + od.series_value, single,
                         ev.tail_bound + od.tail_bound, policy.n_max + 1,
                         {"even": ev.series_value, "odd": od.series_value,
                          "even_terms": ev.aux["terms"], "odd_terms": od.aux["terms"]})


def cylinder_total_quoted(label: CylinderLabel, omega: complex, n_terms: int = 60) -> complex:
    """Single sum with the displayed bracket 1 + (1-|w|^2)^{1/2} w e^{-(2n+1)/2}/sqrt(2n+1)."""
    w = cylinder_variable(label, omega)
    r = abs(omega)
    even = _terms(w, EVEN, n_terms, gaussian=True)
    n = np.arange(n_terms)
    bracket = 1.0 + math.sqrt(1 - r * r) * w / np.sqrt(2 * n + 1.0) * np.exp(-(2 * n + 1) / 2.0)
    return complex(((1 - r * r) ** 0.25 * even * bracket).sum())


def cylinder_g_form(omega: complex, phi: float, n_terms: int = 60) -> float:
    """The displayed sum_n |omega/2|^{4n}/(2n)! e^{-2n^2} G_n(omega, phi)."""
    r = abs(omega)
    n = np.arange(n_terms)
    lf = log_factorials(2 * n_terms)[2 * n]
    base = np.exp(4 * n * math.log(r / 2) - lf - 2.0 * n * n) if r > 0 else (n == 0).astype(float)
    root = math.sqrt(1 - r * r)
    damp = np.exp(-2 * n - 0.5)
    inner = 2 * (omega * cmath.exp(-1j * phi)).real + damp * root * (r / 2) ** 2 / np.sqrt(2 * n + 1.0)
    g = 1.0 + root / np.sqrt(2 * n + 1.0) * damp * inner
    return float((base * g).sum())


def cylinder_total_norm_sq(omega: complex, phi: float,
                           policy: TruncationPolicy = TruncationPolicy()) -> OverlapResult:
    """|<xi|Psi(omega)>|^2 at l = 0, with the displayed G-form carried alongside.

    The two are not an identity, so no closed form is asserted; ``aux`` holds
    the G-form, the (1-|omega|^2)^{1/2} prefactor and their ratio to the
    direct value.
    """
    _check_disc(omega)
    tot = cylinder_total_overlap(CylinderLabel(phi, 0.0), omega, policy)
    direct = abs(tot.series_value) ** 2
    g = cylinder_g_form(omega, phi)
    prefactor = math.sqrt(1 - abs(omega) ** 2)
    return OverlapResult(direct, None, 2 * abs(tot.series_value) * tot.tail_bound + tot.tail_bound ** 2,
                         policy.n_max + 1,
                         {"g_form": g, "prefactor": prefactor,
                          "direct_over_g_form": direct / g if g else math.nan})


# -- coset states --------------------------------------------------------------

def coset_variable(label: CosetLabel, omega: complex) -> complex:
    """z' = omega e^{i(phi - alpha*/2)}, with |z'| = |omega| e^{-Im(alpha)/2}."""
    zp = complex(omega) * cmath.exp(1j * (label.phi - label.alpha.conjugate() / 2.0))
    if not abs(zp) < 1:
        raise ValueError(f"|z'| = {abs(zp)} left the unit disc")
    return zp


def _coset_prefactor(label: CosetLabel, normalized: bool) -> complex:
    if normalized:
        return coset_normalization(label).conjugate()
    return coset_S(label.alpha.conjugate(), label.phi, label.x, label.y) / SQRT_TWO_PI


def coset_sector_overlap(label: CosetLabel, omega: complex, parity: Parity, normalized: bool = False,
                         policy: TruncationPolicy = TruncationPolicy()) -> OverlapResult:
    """<alpha,phi|Psi^(+/-)(omega)>: circle series in z' with the coset prefactor.

    Unnormalized (default) uses S(alpha*, phi)/sqrt(2 pi); normalized uses N*.
    """
    _check_disc(omega)
    _check_parity(parity)
    zp = coset_variable(label, omega)
    pref = _coset_prefactor(label, normalized)
    terms, tail = _sector_core(zp, parity, policy)
    return OverlapResult(pref * complex(terms.sum()), None, abs(pref) * tail, policy.n_max + 1,
                         {"z_prime": zp, "prefactor": pref, "core": complex(terms.sum())})


def coset_total_overlap(label: CosetLabel, omega: complex, normalized: bool = False,
                        policy: TruncationPolicy = TruncationPolicy()) -> OverlapResult:
    ev = coset_sector_overlap(label, omega, EVEN, normalized, policy)
    od = coset_sector_overlap(label, omega, ODD, normalized, policy)
    zp = ev.aux["z_prime"]
    pref = ev.aux["prefactor"]
    single = pref * _single_sum_total(zp, policy)
    return OverlapResult(ev.series_value + od.series_value, single, ev.tail_bound + od.tail_bound,
                         policy.n_max + 1,
                         {"z_prime": zp, "prefactor": pref,
                          "norm_sq_termwise": coset_norm_sq_termwise(zp, policy),
                          "norm_sq_quoted": coset_norm_sq_quoted(zp)})


def coset_norm_sq_termwise(zp: complex, policy: TruncationPolicy = TruncationPolicy()) -> float:
    """sum_n |even_n + odd_n|^2 of the z' core series (prefactor excluded)."""
    ev, _ = _sector_core(zp, EVEN, policy)
    od, _ = _sector_core(zp, ODD, policy)
    return float(np.sum(np.abs(ev + od) ** 2))


def coset_norm_sq_termwise_closed(zp: complex, n_terms: int = 60) -> float:
    """Closed-form reduction of coset_norm_sq_termwise."""
    r2 = abs(zp) ** 2
    n = np.arange(n_terms)
    lf = log_factorials(2 * n_terms)[2 * n]
    s = np.exp(2 * n * math.log(r2 / 4) - lf) if r2 > 0 else (n == 0).astype(float)
    cross = (1 - r2) * zp.real * float(np.sum(s / np.sqrt(2 * n + 1.0)))
    return math.sqrt(1 - r2) * math.cosh(r2 / 4) + (1 - r2) ** 1.5 * math.sinh(r2 / 4) + cross


def coset_norm_sq_quoted(zp: complex, n_terms: int = 60) -> float:
    """The displayed norm with cosh/sinh(|z'|^2/2) and the Re(z') tail sum."""
    r2 = abs(zp) ** 2
    n = np.arange(n_terms)
    lf = log_factorials(2 * n_terms)[2 * n]
    s = np.exp(2 * n * math.log(r2 / 4) - lf) if r2 > 0 else (n == 0).astype(float)
    tail_sum = float(np.sum(s / (2 * n + 1.0)))
    return (math.sqrt(1 - r2) * math.cosh(r2 / 2) + (1 - r2) ** 1.5 * math.sinh(r2 / 2)
            + math.sqrt(1 - r2) * zp.real * tail_sum)


def coset_pair_overlap(bra: CosetLabel, ket: CosetLabel,
                       policy: TruncationPolicy = TruncationPolicy()) -> OverlapResult:
    """<beta,phi'|alpha,phi> of unnormalized coset states: geometric closed form
    against the truncated inner product of coefficient vectors."""
    damping = (bra.alpha.imag + ket.alpha.imag) / 2.0
    if not damping > 0:
        raise ValueError("nonconvergent overlap: Im(alpha) + Im(beta) must be > 0")
    s_bra = coset_S(bra.alpha.conjugate(), bra.phi, bra.x, bra.y)
    s_ket = coset_S(ket.alpha, ket.phi, ket.x, ket.y)
    theta = ket.phi - bra.phi - (ket.alpha - bra.alpha.conjugate()) / 2.0
    closed = s_bra * s_ket / (TWO_PI * (1.0 - cmath.exp(-1j * theta)))
    series = coset_ket_unnormalized(bra, policy).inner(coset_ket_unnormalized(ket, policy))
    q = math.exp(-damping)
    tail = abs(s_bra * s_ket) / TWO_PI * q ** (policy.n_max + 1) / (1 - q)
    return OverlapResult(series, closed, tail, policy.n_max + 1,
                         {"denominator": 1.0 - cmath.exp(-1j * theta), "s_product": s_bra * s_ket})


def weak_identity_matrix(alpha: complex, n_max: int, quadrature_points: int) -> OperatorMatrix:
    """int_0^{2pi} |phi - alpha/2><phi - alpha/2| dphi / (2 pi) by uniform trapezoid.

    Exact for trigonometric polynomials once quadrature_points > 2 n_max.
    """
    alpha = complex(alpha)
    if not alpha.imag > 0:
        raise ValueError("weak identity needs Im alpha > 0")
    if quadrature_points <= 2 * n_max:
        raise ValueError("quadrature_points must exceed 2 * n_max")
    phis = TWO_PI * np.arange(quadrature_points) / quadrature_points
    n = np.arange(n_max + 1)
    v = np.exp(-1j * np.outer(phis, n) + 1j * alpha * n / 2.0)
    m = (v.T @ v.conj()) / quadrature_points
    return OperatorMatrix(m, Label.WEAK_IDENTITY)
