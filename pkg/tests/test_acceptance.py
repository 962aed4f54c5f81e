"""Acceptance suite. Each criterion prints one PASS/FAIL line.

Run standalone with ``python tests/test_acceptance.py`` or via pytest with ``-s``
to see the lines.
"""
import cmath
import csv
import json
import math
import os
import sys
import tempfile
import time

import mpmath
import numpy as np
import pytest

from circlestates import algebra, geometry, overlaps, wigner
from circlestates.checks import geometry_suite
from circlestates.cli import main as cli_main
from circlestates.fock import TruncationPolicy
from circlestates.reconcile import build_report
from circlestates.states import MINUS, PLUS, CosetLabel, CylinderLabel, coset_state_coeffs, fiducial_A

RNG_SEED = 20240917


def _timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


def _read_csv(path):
    with open(path, newline="", encoding="utf-8") as fh:
        rows = list(csv.reader(fh))
    return rows[0], np.array([[float(v) if v else math.nan for v in r] for r in rows[1:]])


def _sweep(quantity, *args):
    with tempfile.TemporaryDirectory() as d:
        out = os.path.join(d, "sweep.csv")
        code = cli_main(["sweep", "--quantity", quantity, "--out", out, *args])
        assert code == 0, f"sweep exited {code}"
        return _read_csv(out)


def criterion_1():
    def run():
        policy = TruncationPolicy(200)
        worst = 0.0
        for r in np.arange(1, 10) / 10:
            r2 = r * r
            closed = math.sqrt(1 - r2) * math.cosh(r2 / 2) + (1 - r2) ** 1.5 * math.sinh(r2 / 2)
            for phi in 2 * math.pi * np.arange(8) / 8:
                amp = overlaps.circle_total_overlap(float(phi), float(r), policy).series_value
                worst = max(worst, abs(2 * math.pi * abs(amp) ** 2 - closed))
        return worst
    worst, dt = _timed(run)
    return worst <= 1e-10 and dt < 1.0, f"max |series - closed| = {worst:.3e} (tol 1e-10), {dt:.3f}s"


def criterion_2():
    def run():
        rep = algebra.check_commutators(64)
        cas = np.max(np.abs(algebra.casimir_spectrum(64) - algebra.CASIMIR_VALUE))
        return rep.max_interior_deviation, cas
    (comm, cas), dt = _timed(run)
    ok = comm <= 1e-12 and cas <= 1e-12 and dt < 1.0
    return ok, f"commutators {comm:.3e}, Casimir {cas:.3e} (tol 1e-12), {dt:.3f}s"


def criterion_3():
    d = algebra.t3_diagonal(64)
    n = np.arange(63)
    dev = float(np.max(np.abs(d[:63] - (-0.5 * (n + 0.5)))))
    return dev <= 1e-13 and len(d) >= 63, f"max deviation {dev:.3e} over n <= 62 (tol 1e-13)"


def criterion_4():
    m, dt = _timed(lambda: overlaps.weak_identity_matrix(1j, 32, 512).entries)
    diag = float(np.max(np.abs(np.diag(m) - np.exp(-np.arange(33)))))
    off = float(np.max(np.abs(m - np.diag(np.diag(m)))))
    ok = diag <= 1e-10 and off < 1e-12 and dt < 1.0
    return ok, f"diagonal {diag:.3e} (tol 1e-10), off-diagonal {off:.3e} (tol 1e-12), {dt:.3f}s"


def criterion_5():
    rng = np.random.default_rng(RNG_SEED)
    policy = TruncationPolicy(2000)
    worst = 0.0
    for _ in range(50):
        lab = CosetLabel(complex(rng.uniform(-3, 3), rng.uniform(0.1, 3)), rng.uniform(0, 2 * np.pi),
                         rng.uniform(-2, 2), rng.uniform(-2, 2), PLUS if rng.random() < 0.5 else MINUS)
        worst = max(worst, abs(coset_state_coeffs(lab, policy).norm_sq() - 1))
    return worst <= 1e-10, f"max |norm^2 - 1| = {worst:.3e} over 50 labels (tol 1e-10)"


def criterion_6():
    rng = np.random.default_rng(RNG_SEED + 1)
    worst = 0.0
    for _ in range(100):
        w = rng.uniform(0, 1) * np.exp(1j * rng.uniform(0, 2 * np.pi))
        lab = CosetLabel(complex(rng.uniform(-5, 5), rng.uniform(0.01, 5)), rng.uniform(0, 2 * np.pi))
        zp = overlaps.coset_variable(lab, complex(w))
        worst = max(worst, abs(abs(zp) - abs(w) * math.exp(-lab.alpha.imag / 2)))
    return worst <= 1e-14, f"max ||z'| - |w| e^(-Im a/2)| = {worst:.3e} (tol 1e-14)"


def criterion_7():
    # summands without the common London factor (2 pi)^{-1/2}
    cyl = overlaps.cylinder_sector_overlap(CylinderLabel(0.0), 0.9, overlaps.EVEN).aux["terms"]
    circ = overlaps.circle_sector_overlap(0.0, 0.9, overlaps.EVEN).aux["terms"] * math.sqrt(2 * math.pi)
    ratio = abs(cyl[3]) / abs(circ[3])
    tot = overlaps.cylinder_total_overlap(CylinderLabel(0.0), 0.9)
    tail = float(np.sum(np.abs(tot.aux["even_terms"][6:])) + np.sum(np.abs(tot.aux["odd_terms"][6:])))
    # the ratio is exactly e^{-18} in exact arithmetic; allow rounding only
    ok = ratio <= math.exp(-18) * (1 + 1e-12) and tail < 1e-20
    return ok, f"n=3 ratio {ratio:.3e} (<= e^-18 = {math.exp(-18):.3e}), tail beyond n=5 {tail:.3e} (< 1e-20)"


def criterion_8():
    rep, dt = _timed(lambda: geometry_suite(100))
    ok = rep.failed == 0 and rep.worst_residual <= 1e-5 and dt < 1.0
    return ok, f"{rep.passed} passed, {rep.failed} failed, worst residual {rep.worst_residual:.3e}, {dt:.3f}s"


def _ei_oracle(x):
    with mpmath.workdps(60):
        x = mpmath.mpf(x)
        s = mpmath.nsum(lambda k: x ** k / (k * mpmath.factorial(k)), [1, mpmath.inf])
        return float(mpmath.euler + mpmath.log(x) + s)


def _unimodal_interior(values):
    k = int(np.argmax(values))
    rising = np.all(np.diff(values[: k + 1]) >= 0)
    falling = np.all(np.diff(values[k:]) <= 0)
    return bool(rising and falling and 0 < k < len(values) - 1), k


def criterion_9():
    ei_err = max(abs(wigner.exp_integral_Ei(x) / _ei_oracle(x) - 1) for x in (0.5, 1, 2, 4, 10, 25))
    _, rows = _sweep("wigner-mm", "--omega-min", "0.05", "--omega-max", "1", "--omega-count", "1000")
    interior, k = _unimodal_interior(rows[:, 1])
    direct = [wigner.wigner_direct(r).value for r in np.linspace(0.6, 0.9, 7)]
    decreasing = all(b < a for a, b in zip(direct, direct[1:]))
    ok = ei_err <= 1e-12 and interior and decreasing
    return ok, (f"Ei rel err {ei_err:.3e} (tol 1e-12); wigner-mm max at |z|={rows[k, 0]:.4f} "
                f"({'interior' if interior else 'boundary'}); direct decreasing on [0.6,0.9]: {decreasing}")


def criterion_10():
    _, rows = _sweep("sector-split", "--omega-min", "0.005", "--omega-max", "0.95",
                     "--omega-count", "190", "--phi-count", "16")
    margin = float(np.min(rows[:, 2] - rows[:, 3]))
    return margin >= 0, f"min(even - odd) = {margin:.3e} over {len(rows)} grid points"


def _cylinder_direct_mp(r, phi):
    with mpmath.workdps(40):
        u = mpmath.mpf(r) * mpmath.expj(-phi)
        r2 = mpmath.mpf(r) ** 2
        tot = 0
        for k in range(40):
            pref = (1 - r2) ** (mpmath.mpf(1) / 4 if k % 2 == 0 else mpmath.mpf(3) / 4)
            tot += pref * (u / 2) ** k / mpmath.sqrt(mpmath.factorial(k)) * mpmath.exp(-mpmath.mpf(k * k) / 2)
        return float(abs(tot) ** 2)


def _g_form_mp(r, phi):
    with mpmath.workdps(40):
        r = mpmath.mpf(r)
        root = mpmath.sqrt(1 - r * r)
        re_w = r * mpmath.cos(phi)
        tot = 0
        for n in range(40):
            damp = mpmath.exp(-2 * n - mpmath.mpf(1) / 2)
            s = mpmath.sqrt(2 * n + 1)
            g = 1 + root / s * damp * (2 * re_w + damp * root * (r / 2) ** 2 / s)
            tot += (r / 2) ** (4 * n) / mpmath.factorial(2 * n) * mpmath.exp(-2 * n * n) * g
        return float(tot)


def criterion_11():
    report = build_report()
    worst = 0.0
    for row in report["cylinder_norm_prefactor"]:
        d, g = _cylinder_direct_mp(row["omega"], row["phi"]), _g_form_mp(row["omega"], row["phi"])
        worst = max(worst, abs(row["direct_norm_sq"] - d), abs(row["g_form"] - g),
                    abs(row["direct_over_g_form"] - d / g),
                    abs(row["sqrt_1_minus_omega_sq"] - math.sqrt(1 - row["omega"] ** 2)))
    for row in report["london_overlap_sign"]:
        with mpmath.workdps(40):
            dphi, reg = mpmath.mpf(row["phi"]) - mpmath.mpf(row["phi_prime"]), mpmath.mpf(row["regularizer"])
            plus = complex(1 / (2 * mpmath.pi * (1 - mpmath.exp(1j * dphi - reg))))
            minus = complex(1 / (2 * mpmath.pi * (1 - mpmath.exp(-1j * dphi - reg))))
        worst = max(worst, abs(complex(row["plus_sign_re"], row["plus_sign_im"]) - plus),
                    abs(complex(row["minus_sign_re"], row["minus_sign_im"]) - minus),
                    abs(complex(row["damped_series_re"], row["damped_series_im"]) - plus))
    for row in report["fiducial_annihilation"]:
        phi, c, s = row["phi"], math.cos(row["phi"]), math.sin(row["phi"])
        for key, branch in (("plus", PLUS), ("minus", MINUS)):
            # A is linear in (x, y); unit differences give the exact partials
            dx = fiducial_A(phi, 2.0, 1.0, branch) - fiducial_A(phi, 1.0, 1.0, branch)
            dy = fiducial_A(phi, 1.0, 2.0, branch) - fiducial_A(phi, 1.0, 1.0, branch)
            worst = max(worst, abs(row[key] - (dx + dy)),
                        abs(row[key + "_fields"] - ((c - s) * dx + (s + c) * dy)))
    tables = all(report[k] for k in ("cylinder_norm_prefactor", "london_overlap_sign", "fiducial_annihilation"))
    return tables and worst <= 1e-12, f"three tables emitted, max dual-evaluation difference {worst:.3e} (tol 1e-12)"


CRITERIA = {
    1: ("circle closed form vs series", criterion_1),
    2: ("Mp(2) commutators and Casimir", criterion_2),
    3: ("T3 spectrum", criterion_3),
    4: ("weak identity resolution", criterion_4),
    5: ("coset normalization", criterion_5),
    6: ("coset disc contraction", criterion_6),
    7: ("cylinder attenuation", criterion_7),
    8: ("geometry suite", criterion_8),
    9: ("Ei oracle and Wigner shape", criterion_9),
    10: ("sector-split ordering", criterion_10),
    11: ("reconciliation report", criterion_11),
}


def _line(num):
    name, fn = CRITERIA[num]
    ok, detail = fn()
    line = f"{'PASS' if ok else 'FAIL'}  criterion {num:2d} ({name}): {detail}"
    print(line)
    return ok, line


@pytest.mark.parametrize("num", sorted(CRITERIA))
def test_criterion(num):
    ok, line = _line(num)
    assert ok, line


if __name__ == "__main__":
    results = [_line(n)[0] for n in sorted(CRITERIA)]
    print(f"{sum(results)}/{len(results)} criteria passed")
    sys.exit(0 if all(results) else 1)
