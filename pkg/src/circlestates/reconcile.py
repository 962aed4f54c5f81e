"""Numeric tables for formulas whose displayed and recomputed forms differ.

Each table lists both sides without a verdict.
"""
from __future__ import annotations

import math

import numpy as np

from circlestates import geometry, overlaps
from circlestates.states import CosetLabel, CylinderLabel, coset_S, s_product_exact, s_product_quoted

CYLINDER_POINTS = ((0.5, 0.0), (0.5, 0.7), (0.3, 1.2), (0.8, 2.0), (0.0, 0.0))
LONDON_PAIRS = ((0.0, math.pi), (1.0, 0.3), (0.5, 2.5), (2.0, 0.1), (0.7, 0.7))
LONDON_REGULARIZER = 1e-2
FIDUCIAL_PHIS = (0.0, math.pi / 4, math.pi / 2)


def london_damped_series(phi: float, phi_prime: float, regularizer: float, n_terms: int = 8000) -> complex:
    n = np.arange(n_terms)
    return complex(np.sum(np.exp((1j * (phi - phi_prime) - regularizer) * n)) / (2 * math.pi))


def cylinder_prefactor_table():
    rows = []
    for r, phi in CYLINDER_POINTS:
        res = overlaps.cylinder_total_norm_sq(r, phi)
        rows.append({"omega": r, "phi": phi, "direct_norm_sq": res.series_value,
                     "g_form": res.aux["g_form"], "direct_over_g_form": res.aux["direct_over_g_form"],
                     "sqrt_1_minus_omega_sq": res.aux["prefactor"]})
    return rows


def london_sign_table():
    rows = []
    for phi, phi_p in LONDON_PAIRS:
        ours = overlaps.london_overlap(phi, phi_p, LONDON_REGULARIZER)
        quoted = overlaps.london_overlap_quoted(phi, phi_p, LONDON_REGULARIZER)
        series = london_damped_series(phi, phi_p, LONDON_REGULARIZER)
        rows.append({"phi": phi, "phi_prime": phi_p, "regularizer": LONDON_REGULARIZER,
                     "plus_sign_re": ours.real, "plus_sign_im": ours.imag,
                     "minus_sign_re": quoted.real, "minus_sign_im": quoted.imag,
                     "damped_series_re": series.real, "damped_series_im": series.imag})
    return rows


def fiducial_table():
    return geometry.fiducial_annihilation_table(FIDUCIAL_PHIS)


def circle_norm_table():
    rows = []
    for r in np.round(np.arange(1, 10) / 10, 1):
        res = overlaps.circle_total_norm_sq(float(r))
        rows.append({"z_abs": float(r), "termwise_series": res.series_value,
                     "displayed_closed_form": res.closed_form_value,
                     "quarter_argument_closed_form": res.aux["termwise_closed_form"]})
    return rows


def s_product_table():
    rows = []
    for alpha, phi, x, y in ((0.3 + 0.7j, 1.0, 1.0, 2.0), (1j, 0.0, 1.0, 0.0), (1 + 1j, 1.0, 1.0, 0.0),
                             (0.2 + 0.4j, 0.5, -1.0, 0.5)):
        direct = abs(coset_S(alpha, phi, x, y)) ** 2
        rows.append({"alpha_re": alpha.real, "alpha_im": alpha.imag, "phi": phi, "x": x, "y": y,
                     "direct": direct, "displayed": s_product_quoted(alpha, phi, x, y),
                     "reduced": s_product_exact(alpha, phi, x, y)})
    return rows


def cylinder_single_sum_table():
    rows = []
    for (r, phi), l in zip(CYLINDER_POINTS, (0.0, 0.3, -0.5, 0.0, 0.2)):
        lab = CylinderLabel(phi, l)
        tot = overlaps.cylinder_total_overlap(lab, r)
        q = overlaps.cylinder_total_quoted(lab, r)
        rows.append({"omega": r, "phi": phi, "l": l,
                     "even_plus_odd_re": tot.series_value.real, "even_plus_odd_im": tot.series_value.imag,
                     "displayed_bracket_re": q.real, "displayed_bracket_im": q.imag})
    return rows


def coset_norm_table():
    rows = []
    for alpha, phi, w in ((0.4j, 0.0, 0.8), (0.3 + 0.7j, 1.0, 0.5 + 0.3j), (1 + 2j, 2.0, 0.9)):
        res = overlaps.coset_total_overlap(CosetLabel(alpha, phi, 1.0, 1.0), w)
        zp = res.aux["z_prime"]
        rows.append({"alpha_re": alpha.real, "alpha_im": alpha.imag, "phi": phi,
                     "z_prime_re": zp.real, "z_prime_im": zp.imag,
                     "termwise": res.aux["norm_sq_termwise"],
                     "termwise_closed_form": overlaps.coset_norm_sq_termwise_closed(zp),
                     "displayed": res.aux["norm_sq_quoted"]})
    return rows


def build_report() -> dict:
    return {
        "cylinder_norm_prefactor": cylinder_prefactor_table(),
        "london_overlap_sign": london_sign_table(),
        "fiducial_annihilation": fiducial_table(),
        "circle_norm_closed_form": circle_norm_table(),
        "s_product": s_product_table(),
        "cylinder_total_single_sum": cylinder_single_sum_table(),
        "coset_norm": coset_norm_table(),
    }
