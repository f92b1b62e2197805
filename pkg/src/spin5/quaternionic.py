"""Quaternionic structures on Delta and the Hopf correspondence.

Delta carries an antilinear map, unique up to phase, that anticommutes with
every vector and squares to -Id once normalized.  Together with
multiplication by i it generates a quaternionic triple.  Restricting along
an admissible plane V produces, for each unit spinor phi in V-perp, a
complex structure J on the distribution D characterized by

    x . (i phi) = J(x) . phi        for x in D,

and the assignment phi -> J is a Hopf fibration onto a 2-sphere of
complex structures.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

from . import clifford as cl
from . import numerics as nx
from .errors import (DerivationFailure, InputError, NonUnitInput,
                     NonUnitSpinor, NumericalRankFailure)

if TYPE_CHECKING:  # pragma: no cover
    from .su2 import AdmissibleSpace


def charge_conjugation(eps: float = nx.EPS_DEFAULT) -> np.ndarray:
    """The antilinear structure of Delta as a matrix C, acting by C conj(.).

    C is derived, not hard-coded: it spans the solution space of the
    anticommutation constraints C conj(g_k) = -g_k C against all five
    generators.  That space must be one complex dimension; C is then
    scaled so that C conj(C) = -Id and its phase is pinned by making the
    first significant entry real positive.
    """
    eye = np.eye(4, dtype=complex)
    blocks = []
    for k in range(1, 6):
        g = cl.gamma(k)
        # C -> C conj(g) + g C, row-major vectorization.
        blocks.append(np.kron(eye, g.conj().T) + np.kron(g, eye))
    system = np.vstack(blocks)
    kernel = nx.kernel_basis(system, eps)
    if kernel.shape[0] != 1:
        raise DerivationFailure(
            f"anticommutant has complex dimension {kernel.shape[0]}, expected 1")
    c = kernel[0].reshape(4, 4)
    square = c @ c.conj()
    scale = -np.trace(square).real / 4.0
    if scale <= 0 or np.linalg.norm(square + scale * np.eye(4)) > np.sqrt(eps):
        raise DerivationFailure("normalization C conj(C) = -Id is not attainable")
    c = c / np.sqrt(scale)
    c = nx.phase_normalize(c.reshape(-1), eps).reshape(4, 4)
    if np.linalg.norm(c @ c.conj() + np.eye(4)) > np.sqrt(eps):
        raise DerivationFailure("normalized structure fails C conj(C) = -Id")
    return c


@dataclass(frozen=True)
class AntilinearOp:
    """A real-linear operator on Delta: phi -> M phi or M conj(phi)."""

    matrix: np.ndarray
    antilinear: bool

    def __call__(self, phi: np.ndarray) -> np.ndarray:
        phi = np.asarray(phi, dtype=complex)
        return self.matrix @ (phi.conj() if self.antilinear else phi)

    def compose(self, other: "AntilinearOp") -> "AntilinearOp":
        m = self.matrix @ (other.matrix.conj() if self.antilinear else other.matrix)
        return AntilinearOp(m, self.antilinear != other.antilinear)


@dataclass(frozen=True)
class StructureTriple:
    """Anticommuting triple k1, k2, k3 = k1 k2 with each square -Id."""

    k1: AntilinearOp
    k2: AntilinearOp
    k3: AntilinearOp

    def ops(self) -> tuple[AntilinearOp, AntilinearOp, AntilinearOp]:
        return (self.k1, self.k2, self.k3)

    def apply_quaternion(self, a: np.ndarray, phi: np.ndarray) -> np.ndarray:
        """a0 phi + a1 k1(phi) + a2 k2(phi) + a3 k3(phi)."""
        a = np.asarray(a, dtype=float)
        phi = np.asarray(phi, dtype=complex)
        return (a[0] * phi + a[1] * self.k1(phi)
                + a[2] * self.k2(phi) + a[3] * self.k3(phi))


def global_triple(eps: float = nx.EPS_DEFAULT) -> StructureTriple:
    """Quaternionic triple on all of Delta: i, the antilinear structure, both."""
    k1 = AntilinearOp(1j * np.eye(4, dtype=complex), False)
    k2 = AntilinearOp(charge_conjugation(eps), True)
    return StructureTriple(k1, k2, k1.compose(k2))


def adapted_triple(space: "AdmissibleSpace",
                   eps: float = nx.EPS_DEFAULT) -> StructureTriple:
    """Triple adapted to an admissible plane.

    The antilinear structure acts with opposite signs on the plane and on
    its complement; with that flip the whole triple commutes with Clifford
    multiplication by vectors tangent to the distribution.
    """
    c = charge_conjugation(eps)
    q = nx.projector(space.v_basis) - nx.projector(space.vperp_basis)
    j1 = AntilinearOp(1j * np.eye(4, dtype=complex), False)
    j2 = AntilinearOp(c @ q.conj(), True)
    return StructureTriple(j1, j2, j1.compose(j2))


def complex_structure(phi: np.ndarray, space: "AdmissibleSpace",
                      eps: float = nx.EPS_DEFAULT) -> np.ndarray:
    """Matrix on D-coordinates of the structure J with x.(i phi) = J(x).phi.

    phi must be a unit spinor in the orthogonal complement of the plane.
    """
    phi = np.asarray(phi, dtype=complex)
    if abs(np.linalg.norm(phi) - 1.0) > eps:
        raise NonUnitSpinor("defining spinor must be unit")
    if nx.distance_to_row_span(phi, space.vperp_basis, eps) > np.sqrt(eps):
        raise InputError("defining spinor must lie in the plane's complement")
    a = np.array([cl.spinor_to_real(cl.vector_action(b, phi))
                  for b in space.d_basis]).T
    j = np.zeros((4, 4))
    for col, b in enumerate(space.d_basis):
        rhs = cl.spinor_to_real(1j * cl.vector_action(b, phi))
        z, res = nx.solve_columns(a, rhs)
        if res > np.sqrt(eps):
            raise NumericalRankFailure(
                f"defining system unsolvable, residual {res:.3e}")
        j[:, col] = z
    return j


def hopf(a: float, b: float, c: float, d: float,
         eps: float = nx.EPS_DEFAULT) -> tuple[float, float, float]:
    """Hopf fibration S^3 -> S^2 in the coordinates used by hopf_matrix."""
    n = a * a + b * b + c * c + d * d
    if abs(n - 1.0) > eps:
        raise NonUnitInput(f"quadruple has squared norm {n!r}, expected 1")
    return (a * a + b * b - c * c - d * d,
            2.0 * (a * d - b * c),
            2.0 * (a * c + b * d))


def hopf_matrix(alpha: float, beta: float, gamma: float,
                eps: float = nx.EPS_DEFAULT) -> np.ndarray:
    """Complex structure on R^4 parametrized by a point of S^2."""
    n = alpha * alpha + beta * beta + gamma * gamma
    if abs(n - 1.0) > eps:
        raise NonUnitInput(f"sphere point has squared norm {n!r}, expected 1")
    return np.array([[0.0, alpha, -beta, -gamma],
                     [-alpha, 0.0, -gamma, beta],
                     [beta, gamma, 0.0, alpha],
                     [gamma, -beta, -alpha, 0.0]])


def hopf_coordinates(phi: np.ndarray,
                     space: "AdmissibleSpace") -> tuple[float, float, float, float]:
    """Coordinates (a, b, c, d) of a complement spinor in the canonical basis."""
    phi = np.asarray(phi, dtype=complex)
    u = cl.hermitian(phi, space.vperp_basis[0])
    v = cl.hermitian(phi, space.vperp_basis[1])
    return (u.real, u.imag, v.real, v.imag)


def induced_map(t: np.ndarray, phi: np.ndarray, space: "AdmissibleSpace",
                eps: float = nx.EPS_DEFAULT) -> np.ndarray:
    """Endomorphism T of D with T(x) . phi = t(x . phi).

    t is a real endomorphism of the plane in the real basis
    (v1, i v1, v2, i v2) built from the canonical complex basis.
    """
    t = np.asarray(t, dtype=float)
    if t.shape != (4, 4):
        raise InputError(f"endomorphism must be 4x4, got {t.shape}")
    phi = np.asarray(phi, dtype=complex)
    if abs(np.linalg.norm(phi) - 1.0) > eps:
        raise NonUnitSpinor("defining spinor must be unit")
    if nx.distance_to_row_span(phi, space.vperp_basis, eps) > np.sqrt(eps):
        raise InputError("defining spinor must lie in the plane's complement")
    v1, v2 = space.v_basis
    a = np.array([cl.spinor_to_real(cl.vector_action(b, phi))
                  for b in space.d_basis]).T
    out = np.zeros((4, 4))
    for col, b in enumerate(space.d_basis):
        x = cl.vector_action(b, phi)
        c1 = cl.hermitian(x, v1)
        c2 = cl.hermitian(x, v2)
        coords = t @ np.array([c1.real, c1.imag, c2.real, c2.imag])
        w = (coords[0] + 1j * coords[1]) * v1 + (coords[2] + 1j * coords[3]) * v2
        z, res = nx.solve_columns(a, cl.spinor_to_real(w))
        if res > np.sqrt(eps):
            raise NumericalRankFailure(
                f"induced endomorphism undefined, residual {res:.3e}")
        out[:, col] = z
    return out


@dataclass(frozen=True)
class DistributionTriple:
    """Anticommuting complex structures on D with their defining spinors."""

    j_matrices: np.ndarray     # (3, 4, 4) on D-coordinates, J3 = J1 J2
    spinors: np.ndarray        # (3, 4) unit spinors in V-perp
    omegas: np.ndarray         # (3, 10) ambient two-forms, zero off D


def _two_form_on_distribution(j: np.ndarray, d_basis: np.ndarray) -> np.ndarray:
    """Ambient coefficients of w(x, y) = <x, J y> on D, extended by zero."""
    m = d_basis.T @ j @ d_basis
    return cl.matrix_to_two_form(m)


def triple_on_distribution(space: "AdmissibleSpace",
                           eps: float = nx.EPS_DEFAULT) -> DistributionTriple:
    """Quaternionic triple of complex structures on the distribution.

    The defining spinors are built from the canonical complement basis
    (psi1, psi2) as psi1, (psi1 + i psi2)/sqrt(2) and (psi1 - psi2)/sqrt(2);
    their structures anticommute pairwise and multiply like quaternions.
    """
    psi1, psi2 = space.vperp_basis
    phis = np.array([psi1,
                     (psi1 + 1j * psi2) / np.sqrt(2.0),
                     (psi1 - psi2) / np.sqrt(2.0)])
    j1 = complex_structure(phis[0], space, eps)
    j2 = complex_structure(phis[1], space, eps)
    js = np.array([j1, j2, j1 @ j2])
    omegas = np.array([_two_form_on_distribution(j, space.d_basis) for j in js])
    return DistributionTriple(j_matrices=js, spinors=phis, omegas=omegas)


@dataclass(frozen=True)
class StructureQuadruplet:
    """Differential-form description (alpha, w1, w2, w3) of the structure."""

    alpha: cl.KForm            # the 1-form dual to the Reeb vector
    omegas: np.ndarray         # (3, 10)
    volume: cl.KForm           # the 4-form v with w_k wedge w_l = delta_kl v


def structure_quadruplet(space: "AdmissibleSpace",
                         eps: float = nx.EPS_DEFAULT) -> StructureQuadruplet:
    """The form quadruplet of an admissible plane."""
    triple = triple_on_distribution(space, eps)
    alpha = cl.KForm.from_vector(space.y)
    w1 = cl.KForm.from_two_form(triple.omegas[0])
    return StructureQuadruplet(alpha=alpha, omegas=triple.omegas,
                               volume=w1.wedge(w1))
