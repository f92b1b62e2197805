"""Frames attached to a single unit spinor.

A unit spinor phi determines:

* the Reeb vector y, the unique unit vector with y . phi = i*phi,
* the distribution D = y-orthogonal complement in R^5,
* the complex 2-plane V_phi = D . phi inside Delta,
* a partner spinor phi_tilde spanning the rest of V_phi-perp with phi,
* the real 5-dimensional space W_phi spanned by the e_i . phi.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import clifford as cl
from . import numerics as nx
from .errors import NonUnitSpinor, NumericalRankFailure


def rep_matrix(phi: np.ndarray) -> np.ndarray:
    """8x5 real matrix whose j-th column is e_j . phi in real coordinates.

    Its column space is W_phi; rank 5 for every unit spinor.
    """
    phi = np.asarray(phi, dtype=complex)
    cols = [cl.spinor_to_real(cl.gamma(j) @ phi) for j in range(1, 6)]
    return np.array(cols).T


def reeb_vector(phi: np.ndarray, eps: float = nx.EPS_DEFAULT) -> np.ndarray:
    """The unique unit vector y with y . phi = i*phi."""
    phi = np.asarray(phi, dtype=complex)
    norm = np.linalg.norm(phi)
    if abs(norm - 1.0) > eps:
        raise NonUnitSpinor(f"spinor norm is {norm!r}, expected 1")
    r = rep_matrix(phi)
    if nx.numerical_rank(r, eps) != 5:
        raise NumericalRankFailure("representation matrix is rank deficient")
    y, res = nx.solve_columns(r, cl.spinor_to_real(1j * phi))
    if res > eps:
        raise NumericalRankFailure(
            f"i*phi is not in the image of the vector action, residual {res:.3e}")
    return y


def distribution_basis(y: np.ndarray, eps: float = nx.EPS_DEFAULT) -> np.ndarray:
    """Deterministic orthonormal basis (rows) of the y-orthogonal complement.

    The standard basis vectors are projected off y, the one with the
    smallest remaining norm is discarded and the rest are orthonormalized
    in index order.
    """
    y = np.asarray(y, dtype=float)
    y = y / np.linalg.norm(y)
    proj = np.eye(5) - np.outer(y, y)
    candidates = [proj @ e for e in np.eye(5)]
    drop = int(np.argmin([np.linalg.norm(c) for c in candidates]))
    kept = [c for i, c in enumerate(candidates) if i != drop]
    return nx.orthonormalize_rows(np.array(kept), eps, require=4)


@dataclass(frozen=True)
class SpinorFrame:
    """Data canonically attached to a unit spinor."""

    phi: np.ndarray
    y: np.ndarray
    d_basis: np.ndarray        # (4, 5) orthonormal rows spanning D
    v_basis: np.ndarray        # (2, 4) complex orthonormal rows spanning V_phi
    w_basis: np.ndarray        # (5, 4) the spinors e_i . phi
    phi_tilde: np.ndarray      # unit spinor, V_phi-perp = span{phi, phi_tilde}


def build_frame(phi: np.ndarray, eps: float = nx.EPS_DEFAULT) -> SpinorFrame:
    """Construct the canonical frame of a unit spinor."""
    phi = np.asarray(phi, dtype=complex)
    y = reeb_vector(phi, eps)
    d_basis = distribution_basis(y, eps)

    images = np.array([cl.vector_action(b, phi) for b in d_basis])
    if nx.numerical_rank(images, eps) != 2:
        raise NumericalRankFailure("D . phi is not a complex 2-plane")
    v_basis = nx.canonical_complex_basis(images, 2, eps)

    w_basis = np.array([cl.vector_action(e, phi) for e in np.eye(5)])

    # phi_tilde spans the hermitian-orthogonal complement of phi inside the
    # +i eigenspace of the Reeb action.
    eig = nx.kernel_basis(cl.vector_matrix(y) - 1j * np.eye(4), eps)
    if eig.shape[0] != 2:
        raise NumericalRankFailure(
            f"+i eigenspace of the Reeb action has dimension {eig.shape[0]}")
    reduced = eig - np.outer(eig @ phi.conj(), phi)
    line = nx.row_space_basis(reduced, eps)
    if line.shape[0] != 1:
        raise NumericalRankFailure("partner spinor is not unique")
    phi_tilde = nx.phase_normalize(line[0] / np.linalg.norm(line[0]), eps)

    return SpinorFrame(phi=phi, y=y, d_basis=d_basis, v_basis=v_basis,
                       w_basis=w_basis, phi_tilde=phi_tilde)
