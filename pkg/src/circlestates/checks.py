"""Self-check suites run by ``states check``."""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from circlestates import algebra, geometry, overlaps
from circlestates.fock import EVEN, ODD, TruncationPolicy
from circlestates.states import MINUS, PLUS, CosetLabel, CylinderLabel, coset_state_coeffs

SEED = 20240917


@dataclass
class CheckRecord:
    name: str
    residual: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return bool(self.residual <= self.tolerance)


@dataclass
class CheckReport:
    suite: str
    details: list = field(default_factory=list)

    @property
    def passed(self) -> int:
        return sum(r.passed for r in self.details)

    @property
    def failed(self) -> int:
        return len(self.details) - self.passed

    @property
    def worst_residual(self) -> float:
        return max((r.residual for r in self.details), default=0.0)

    def add(self, name, residual, tolerance):
        self.details.append(CheckRecord(name, float(residual), tolerance))


def algebra_suite(n_max: int = 64) -> CheckReport:
    rep = CheckReport("algebra")
    comm = algebra.check_commutators(n_max)
    for name, dev in comm.per_identity.items():
        rep.add(f"commutator {name}", dev, 1e-12)
    rep.add("casimir diagonal = -3/16", np.max(np.abs(algebra.casimir_spectrum(n_max) - algebra.CASIMIR_VALUE)), 1e-12)
    rep.add("casimir off-diagonal = 0", algebra.casimir_offdiagonal(n_max), 1e-12)
    n = np.arange(n_max - 1)
    rep.add("T3 |n> = -(n+1/2)/2 |n>", np.max(np.abs(algebra.t3_diagonal(n_max) + 0.5 * (n + 0.5))), 1e-13)
    gens = algebra.build_mp2_generators(n_max)
    rep.add("generators Hermitian", max(np.max(np.abs(g.entries - g.entries.conj().T)) for g in gens), 0.0)
    a, _ = algebra.build_ladder(n_max)
    pe = algebra.sector_projector(EVEN, n_max).entries
    po = algebra.sector_projector(ODD, n_max).entries
    a2 = a.entries @ a.entries
    rep.add("P_odd a^2 P_even = 0", np.max(np.abs(po @ a2 @ pe)), 0.0)
    rep.add("P_even a^2 P_odd = 0", np.max(np.abs(pe @ a2 @ po)), 0.0)
    return rep


def _rand_point(rng):
    return np.array([rng.uniform(0, 2 * math.pi), rng.uniform(-2, 2), rng.uniform(-2, 2)])


def geometry_suite(n_points: int = 100) -> CheckReport:
    rep = CheckReport("geometry")
    rng = np.random.default_rng(SEED)
    pts = [_rand_point(rng) for _ in range(n_points)]
    rep.add("structure equations", max(geometry.structure_equations_check(p, 1e-5) for p in pts), 1e-5)
    tests = (lambda q: q[1] * math.sin(q[0]),
             lambda q: q[1] ** 2 + q[2] ** 2,
             lambda q: q[1] * q[2] * math.cos(q[0]) + q[1] ** 3)
    rep.add("vector-field commutators",
            max(max(geometry.field_commutator_check(f, p, 1e-4)) for p in pts for f in tests), 1e-5)
    rep.add("Maurer-Cartan vs finite-difference g^-1 dg",
            max(np.max(np.abs(geometry.maurer_cartan_fd(p).as_matrix() - geometry.maurer_cartan(p).as_matrix()))
                for p in pts), 1e-6)
    rep.add("form/field duality",
            max(np.max(np.abs(geometry.duality_matrix(p) - np.eye(3))) for p in pts), 1e-15)
    inv = 0.0
    for p in pts:
        g = geometry.e2_matrix(*p)
        inv = max(inv, np.max(np.abs(g @ geometry.e2_inverse(g) - np.eye(3))))
    rep.add("g g^-1 = 1", inv, 1e-14)
    rep.add("(e_x + e_y) A_+ with rotated fields",
            max(abs(geometry.fiducial_annihilation_fields(p[1], p[2], p[0], PLUS)) for p in pts), 1e-14)
    return rep


def overlaps_suite(n_samples: int = 100, policy: TruncationPolicy = TruncationPolicy()) -> CheckReport:
    rep = CheckReport("overlaps")
    rng = np.random.default_rng(SEED)

    def disc(rmax=0.95):
        return rng.uniform(0, rmax) * np.exp(1j * rng.uniform(0, 2 * math.pi))

    worst = {"circle total single-sum": 0.0, "cylinder total single-sum": 0.0,
             "coset total single-sum": 0.0, "coset pair geometric sum": 0.0,
             "circle termwise norm closed form": 0.0, "coset termwise norm closed form": 0.0}
    for _ in range(n_samples):
        w, phi = disc(), rng.uniform(0, 2 * math.pi)
        r = overlaps.circle_total_overlap(phi, w, policy)
        worst["circle total single-sum"] = max(worst["circle total single-sum"], r.difference / r.tolerance)
        r = overlaps.cylinder_total_overlap(CylinderLabel(phi, rng.uniform(-1, 1)), w, policy)
        worst["cylinder total single-sum"] = max(worst["cylinder total single-sum"], r.difference / r.tolerance)
        lab = CosetLabel(complex(rng.uniform(-3, 3), rng.uniform(0.1, 3)), phi,
                         rng.uniform(-2, 2), rng.uniform(0.1, 2), PLUS if rng.random() < 0.5 else MINUS)
        r = overlaps.coset_total_overlap(lab, w, policy=policy)
        worst["coset total single-sum"] = max(worst["coset total single-sum"], r.difference / r.tolerance)
        zp = r.aux["z_prime"]
        worst["coset termwise norm closed form"] = max(
            worst["coset termwise norm closed form"],
            abs(r.aux["norm_sq_termwise"] - overlaps.coset_norm_sq_termwise_closed(zp)) / 1e-10)
        lab2 = CosetLabel(complex(rng.uniform(-3, 3), rng.uniform(0.1, 3)), rng.uniform(0, 2 * math.pi),
                          rng.uniform(-2, 2), rng.uniform(0.1, 2))
        r = overlaps.coset_pair_overlap(lab2, lab, policy)
        worst["coset pair geometric sum"] = max(worst["coset pair geometric sum"], r.difference / r.tolerance)
        n = overlaps.circle_total_norm_sq(abs(w), policy)
        worst["circle termwise norm closed form"] = max(
            worst["circle termwise norm closed form"],
            abs(n.series_value - n.aux["termwise_closed_form"]) / 1e-10)
    for name, ratio in worst.items():
        # residuals are reported relative to their own tolerance
        rep.add(f"{name} (|diff| / tol)", ratio, 1.0)
    return rep


def identity_suite(alpha: complex = 1j, n_max: int = 32, quadrature_points: int = 512) -> CheckReport:
    rep = CheckReport("identity")
    m = overlaps.weak_identity_matrix(alpha, n_max, quadrature_points).entries
    n = np.arange(n_max + 1)
    rep.add("diagonal = e^{-n Im alpha}", np.max(np.abs(np.diag(m) - np.exp(-n * alpha.imag))), 1e-10)
    rep.add("off-diagonal = 0", np.max(np.abs(m - np.diag(np.diag(m)))), 1e-12)
    rng = np.random.default_rng(SEED)
    worst = 0.0
    for _ in range(50):
        lab = CosetLabel(complex(rng.uniform(-3, 3), rng.uniform(0.1, 3)), rng.uniform(0, 2 * math.pi),
                         rng.uniform(-2, 2), rng.uniform(0.1, 2))
        v = coset_state_coeffs(lab, TruncationPolicy(2000))
        worst = max(worst, abs(v.norm_sq() - 1.0))
    rep.add("coset state norm = 1", worst, 1e-10)
    return rep


SUITES = {
    "algebra": algebra_suite,
    "geometry": geometry_suite,
    "overlaps": overlaps_suite,
    "identity": identity_suite,
}


def run_suite(name: str) -> list[CheckReport]:
    if name == "all":
        return [fn() for fn in SUITES.values()]
    return [SUITES[name]()]
