"""E(2) group matrices, Maurer-Cartan forms, left-invariant vector fields and
the fiducial annihilation condition for the coset E(2)/T2.

Forms and fields are stored as coefficient triples against (dphi, dx, dy) and
(d/dphi, d/dx, d/dy). Derivative checks use central finite differences.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from circlestates.states import MINUS, PLUS, Branch, fiducial_A

G_PHI = np.array([[0.0, -1.0, 0.0], [1.0, 0.0, 0.0], [0.0, 0.0, 0.0]])
G_X = np.array([[0.0, 0.0, 1.0], [0.0, 0.0, 0.0], [0.0, 0.0, 0.0]])
G_Y = np.array([[0.0, 0.0, 0.0], [0.0, 0.0, 1.0], [0.0, 0.0, 0.0]])
GENERATORS = (G_PHI, G_X, G_Y)


@dataclass(frozen=True)
class E2Element:
    phi: float
    x: float
    y: float
    matrix: np.ndarray

    def __matmul__(self, other: "E2Element") -> np.ndarray:
        return self.matrix @ other.matrix


@dataclass(frozen=True)
class CotangentSample:
    point: tuple
    omega_phi: np.ndarray
    omega_x: np.ndarray
    omega_y: np.ndarray

    def as_matrix(self) -> np.ndarray:
        """Rows are the forms, columns the (dphi, dx, dy) components."""
        return np.vstack([self.omega_phi, self.omega_x, self.omega_y])


@dataclass(frozen=True)
class VectorFieldSample:
    point: tuple
    e_phi: np.ndarray
    e_x: np.ndarray
    e_y: np.ndarray

    def as_matrix(self) -> np.ndarray:
        """Columns are the fields, rows the (d/dphi, d/dx, d/dy) components."""
        return np.column_stack([self.e_phi, self.e_x, self.e_y])


def e2_matrix(phi: float, x: float, y: float) -> E2Element:
    c, s = math.cos(phi), math.sin(phi)
    m = np.array([[c, -s, x], [s, c, y], [0.0, 0.0, 1.0]])
    return E2Element(phi, x, y, m)


def e2_inverse(g: E2Element) -> E2Element:
    # the displayed "x sin(theta)" entry is read with theta = phi
    c, s = math.cos(g.phi), math.sin(g.phi)
    tx = -g.x * c - g.y * s
    ty = g.x * s - g.y * c
    m = np.array([[c, s, tx], [-s, c, ty], [0.0, 0.0, 1.0]])
    return E2Element(-g.phi, tx, ty, m)


def is_e2_shaped(m: np.ndarray, tol: float = 1e-13) -> bool:
    rot = m[:2, :2]
    return (np.allclose(m[2], [0.0, 0.0, 1.0], atol=tol, rtol=0)
            and np.allclose(rot.T @ rot, np.eye(2), atol=tol, rtol=0)
            and abs(np.linalg.det(rot) - 1.0) <= tol)


def maurer_cartan(point) -> CotangentSample:
    phi = point[0]
    c, s = math.cos(phi), math.sin(phi)
    return CotangentSample(tuple(point),
                           np.array([1.0, 0.0, 0.0]),
                           np.array([0.0, c, s]),
                           np.array([0.0, -s, c]))


def _decompose(m: np.ndarray) -> np.ndarray:
    """Coordinates of a Lie-algebra matrix against (g_phi, g_x, g_y)."""
    return np.array([m[1, 0], m[0, 2], m[1, 2]])


def maurer_cartan_fd(point, step: float = 1e-5) -> CotangentSample:
    """g^{-1} dg by central differences, decomposed on the generators."""
    point = np.asarray(point, dtype=float)
    ginv = e2_inverse(e2_matrix(*point)).matrix
    cols = []
    for i in range(3):
        h = np.zeros(3)
        h[i] = step
        dg = (e2_matrix(*(point + h)).matrix - e2_matrix(*(point - h)).matrix) / (2 * step)
        cols.append(_decompose(ginv @ dg))
    m = np.column_stack(cols)
    return CotangentSample(tuple(point), m[0], m[1], m[2])


def _d_form(coeff_fn: Callable, point: np.ndarray, step: float) -> np.ndarray:
    """Exterior derivative of a 1-form as the antisymmetric 3x3 array
    (dA)_{ij} = d_i A_j - d_j A_i."""
    jac = np.zeros((3, 3))
    for i in range(3):
        h = np.zeros(3)
        h[i] = step
        jac[i] = (coeff_fn(point + h) - coeff_fn(point - h)) / (2 * step)
    return jac - jac.T


def _wedge(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.outer(a, b) - np.outer(b, a)


def structure_equations_check(point, step: float = 1e-5) -> float:
    """Max residual of d w^phi = 0, d w^x = w^phi ^ w^y, d w^y = w^x ^ w^phi."""
    if not 0 < step <= 1e-3:
        raise ValueError("step must lie in (0, 1e-3]")
    p = np.asarray(point, dtype=float)
    mc = maurer_cartan(p)
    forms = [lambda q, k=k: maurer_cartan(q).as_matrix()[k] for k in range(3)]
    residuals = [
        _d_form(forms[0], p, step),
        _d_form(forms[1], p, step) - _wedge(mc.omega_phi, mc.omega_y),
        _d_form(forms[2], p, step) - _wedge(mc.omega_x, mc.omega_phi),
    ]
    return max(float(np.max(np.abs(r))) for r in residuals)


def vector_fields(point) -> VectorFieldSample:
    phi = point[0]
    c, s = math.cos(phi), math.sin(phi)
    return VectorFieldSample(tuple(point),
                             np.array([1.0, 0.0, 0.0]),
                             np.array([0.0, c, s]),
                             np.array([0.0, -s, c]))


def duality_matrix(point) -> np.ndarray:
    """<w^a, e_b>, which should be the identity."""
    return maurer_cartan(point).as_matrix() @ vector_fields(point).as_matrix()


def _grad(f: Callable, p: np.ndarray, h: float) -> np.ndarray:
    g = np.zeros(3)
    for i in range(3):
        d = np.zeros(3)
        d[i] = h
        g[i] = (f(p + d) - f(p - d)) / (2 * h)
    return g


def _apply(field: str, f: Callable, h: float) -> Callable:
    """The function q -> (e_field f)(q)."""
    k = {"phi": 0, "x": 1, "y": 2}[field]

    def ef(q):
        q = np.asarray(q, dtype=float)
        return float(vector_fields(q).as_matrix()[:, k] @ _grad(f, q, h))

    return ef


def field_commutator_check(test_function: Callable, point, step: float = 1e-4) -> tuple[float, float, float]:
    """|([e_phi,e_x] - e_y) f|, |([e_phi,e_y] + e_x) f|, |[e_x,e_y] f| at the point.

    test_function takes an array (phi, x, y).
    """
    p = np.asarray(point, dtype=float)
    f = test_function

    def e(name, g=f):
        return _apply(name, g, step)

    def bracket(a, b):
        return e(a, e(b))(p) - e(b, e(a))(p)

    r1 = bracket("phi", "x") - e("y")(p)
    r2 = bracket("phi", "y") + e("x")(p)
    r3 = bracket("x", "y")
    return abs(r1), abs(r2), abs(r3)


def fiducial_annihilation_check(x: float, y: float, phi: float, branch: Branch = PLUS) -> float:
    """(e_x + e_y) A_(+/-) from the exact partial derivatives of A in x and y.

    A is linear in (x, y): dA/dx = cos phi +/- sin phi, dA/dy = -/+cos phi + sin phi.
    """
    s = branch.value
    c, sn = math.cos(phi), math.sin(phi)
    return (c + s * sn) + (-s * c + sn)


def fiducial_annihilation_fields(x: float, y: float, phi: float, branch: Branch = PLUS) -> float:
    """(e_x + e_y) A with e_x, e_y carrying their rotation coefficients.

    Vanishes identically for the PLUS branch; the MINUS branch gives 2.
    """
    s = branch.value
    c, sn = math.cos(phi), math.sin(phi)
    dadx, dady = c + s * sn, -s * c + sn
    return (c - sn) * dadx + (sn + c) * dady


def fiducial_annihilation_fd(x: float, y: float, phi: float, branch: Branch = PLUS,
                             step: float = 1e-5) -> float:
    """Finite-difference cross-check of fiducial_annihilation_check."""
    def a(q):
        return fiducial_A(phi, q[1], q[2], branch)

    p = np.array([phi, x, y])
    d = _grad(a, p, step)
    return float(d[1] + d[2])


def fiducial_annihilation_table(phis=(0.0, math.pi / 4, math.pi / 2)) -> list[dict]:
    return [{"phi": p,
             "plus": fiducial_annihilation_check(1.0, 1.0, p, PLUS),
             "minus": fiducial_annihilation_check(1.0, 1.0, p, MINUS),
             "plus_fields": fiducial_annihilation_fields(1.0, 1.0, p, PLUS),
             "minus_fields": fiducial_annihilation_fields(1.0, 1.0, p, MINUS)} for p in phis]
