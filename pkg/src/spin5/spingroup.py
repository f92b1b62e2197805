"""Spin(5) as even words of unit vectors acting on Delta and on R^5.

A group element is stored both as its word and as the product of the
generator images.  Conjugation g L_x g^{-1} stays inside the image of the
vector map and defines the double cover Spin(5) -> SO(5); the induced
action moves admissible planes around and its stabilizers recover the
su(2) pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import clifford as cl
from . import numerics as nx
from .errors import ConjugationNotVector, NonUnitGenerator, OddWord
from .su2 import AdmissibleSpace, admissible_space


@dataclass(frozen=True)
class SpinElement:
    """Even product of unit vectors with its spinor representation matrix."""

    matrix: np.ndarray         # (4, 4) complex, unitary
    word: np.ndarray           # (n, 5) rows are the unit generator vectors

    def inverse(self) -> "SpinElement":
        return SpinElement(matrix=self.matrix.conj().T, word=self.word[::-1].copy())

    def __matmul__(self, other: "SpinElement") -> "SpinElement":
        return SpinElement(matrix=self.matrix @ other.matrix,
                           word=np.vstack([self.word, other.word]))


def spin_element(word: Sequence[np.ndarray],
                 eps: float = nx.EPS_DEFAULT) -> SpinElement:
    """Build a group element from an even sequence of unit vectors."""
    vectors = [np.asarray(w, dtype=float) for w in word]
    if len(vectors) % 2 != 0:
        raise OddWord(f"word length {len(vectors)} is odd")
    m = np.eye(4, dtype=complex)
    for v in vectors:
        n = np.linalg.norm(v)
        if abs(n - 1.0) > eps:
            raise NonUnitGenerator(f"generator norm is {n!r}, expected 1")
        m = m @ cl.vector_matrix(v)
    stacked = (np.array(vectors) if vectors
               else np.zeros((0, 5)))
    return SpinElement(matrix=m, word=stacked)


def identity_element() -> SpinElement:
    return spin_element([])


def random_spin(rng: np.random.Generator, length: int = 4,
                eps: float = nx.EPS_DEFAULT) -> SpinElement:
    """Random element as a word of `length` random unit vectors."""
    if length % 2 != 0:
        raise OddWord(f"word length {length} is odd")
    return spin_element([cl.random_unit_vector(rng) for _ in range(length)], eps)


def adjoint_vector(g: SpinElement, x: np.ndarray,
                   eps: float = nx.EPS_DEFAULT) -> np.ndarray:
    """The vector v with g (x . phi) = v . (g phi), from g L_x g^{-1}."""
    x = np.asarray(x, dtype=float)
    m = g.matrix @ cl.vector_matrix(x) @ g.matrix.conj().T
    v = np.array([-np.trace(m @ cl.gamma(i)).real / 4.0 for i in range(1, 6)])
    res = np.linalg.norm(cl.vector_matrix(v) - m)
    if res > np.sqrt(eps) * max(1.0, float(np.linalg.norm(x))):
        raise ConjugationNotVector(
            f"conjugated operator is not a vector, residual {res:.3e}")
    return v


def adjoint_matrix(g: SpinElement, eps: float = nx.EPS_DEFAULT) -> np.ndarray:
    """5x5 rotation matrix of the induced action on R^5."""
    return np.array([adjoint_vector(g, e, eps) for e in np.eye(5)]).T


def adjoint_form(g: SpinElement, w: np.ndarray,
                 eps: float = nx.EPS_DEFAULT) -> np.ndarray:
    """Push a two-form forward along the induced rotation."""
    a = adjoint_matrix(g, eps)
    return cl.matrix_to_two_form(a @ cl.two_form_to_matrix(w) @ a.T)


def act_on_space(g: SpinElement, space: AdmissibleSpace,
                 eps: float = nx.EPS_DEFAULT,
                 rng: np.random.Generator | None = None) -> AdmissibleSpace:
    """Image of an admissible plane, revalidated and re-canonicalized."""
    moved = np.array([g.matrix @ v for v in space.v_basis])
    return admissible_space(moved, eps, rng=rng)


def stabilizer_algebra(space: AdmissibleSpace,
                       eps: float = nx.EPS_DEFAULT) -> np.ndarray:
    """Orthonormal basis (rows) of the two-forms whose action preserves V."""
    p = nx.projector(space.v_basis)
    complement = np.eye(4, dtype=complex) - p
    products = cl.two_form_gamma_products()
    rows = []
    for m in products:
        leak = [complement @ (m @ v) for v in space.v_basis]
        rows.append(np.concatenate([cl.spinor_to_real(l) for l in leak]))
    return nx.kernel_basis(np.array(rows).T, eps)


def stabilizer_dimension(space: AdmissibleSpace,
                         eps: float = nx.EPS_DEFAULT) -> int:
    """Dimension of the two-form algebra preserving the plane (always 6)."""
    return int(stabilizer_algebra(space, eps).shape[0])


def exp_element(w: np.ndarray) -> SpinElement:
    """Exponential of a two-form acting on Delta, as a group element.

    The representation matrix of a real two-form is skew-hermitian, so the
    exponential is computed through a unitary eigendecomposition.  The
    resulting element carries an empty word; its inverse is still correct
    because the matrix is unitary.
    """
    a = cl.two_form_matrix_rep(np.asarray(w, dtype=float))
    vals, vecs = np.linalg.eigh(1j * a)
    m = vecs @ np.diag(np.exp(-1j * vals)) @ vecs.conj().T
    return SpinElement(matrix=m, word=np.zeros((0, 5)))


def random_stabilizer_element(space: AdmissibleSpace, rng: np.random.Generator,
                              pairs: int = 2,
                              eps: float = nx.EPS_DEFAULT) -> SpinElement:
    """Random element preserving the plane: an even word tangent to D.

    Clifford multiplication by a tangent vector swaps V and V-perp, so an
    even tangent word preserves both.
    """
    word = []
    for _ in range(2 * pairs):
        c = rng.standard_normal(4)
        v = space.d_basis.T @ (c / np.linalg.norm(c))
        word.append(v)
    return spin_element(word, eps)
