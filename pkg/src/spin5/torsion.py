"""Pointwise decomposition of spinor derivative data.

Given a unit spinor phi in the complement of an admissible plane and a
candidate derivative in each coordinate direction (tangent to the unit
sphere at phi), the derivative splits uniquely as

    nabla_x phi = S(x) . phi + sum_k beta_k(x) j_k(phi)

with S(x) tangent to the distribution and j_k the adapted quaternionic
triple.  The tangential endomorphism S_D refines further along the
commutation behaviour with the distribution triple J_1, J_2, J_3, and the
beta block transforms under the quaternionic rotation of phi by the
standard SO(3) representation.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import clifford as cl
from . import numerics as nx
from .errors import (BasisDegeneracy, DerivationFailure, InputError,
                     NonOrthogonalDerivative, NonUnitQuaternion, NonUnitSpinor)
from .quaternionic import StructureTriple, adapted_triple, triple_on_distribution
from .su2 import AdmissibleSpace, so5_splitting


@dataclass(frozen=True)
class NablaDatum:
    """A spinor with one candidate derivative per coordinate direction."""

    phi: np.ndarray            # (4,) complex unit spinor
    derivatives: np.ndarray    # (5, 4) complex, row i is nabla_{e_i} phi


def validate_nabla(nabla: NablaDatum, eps: float = nx.EPS_DEFAULT) -> None:
    phi = np.asarray(nabla.phi, dtype=complex)
    n = np.linalg.norm(phi)
    if abs(n - 1.0) > eps:
        raise NonUnitSpinor(f"base spinor norm is {n!r}, expected 1")
    derivs = np.asarray(nabla.derivatives, dtype=complex)
    if derivs.shape != (5, 4):
        raise InputError(f"derivatives must have shape (5, 4), got {derivs.shape}")
    for i, d in enumerate(derivs):
        r = cl.inner(d, phi)
        if abs(r) > eps * max(1.0, float(np.linalg.norm(d))):
            raise NonOrthogonalDerivative(
                f"derivative {i + 1} has radial component {r:.3e}")


def random_nabla(space: AdmissibleSpace, rng: np.random.Generator,
                 scale: float = 1.0) -> NablaDatum:
    """Random valid datum with base spinor in the plane's complement."""
    c = rng.standard_normal(2) + 1j * rng.standard_normal(2)
    phi = space.vperp_basis.T @ c
    phi = phi / np.linalg.norm(phi)
    derivs = scale * (rng.standard_normal((5, 4))
                      + 1j * rng.standard_normal((5, 4)))
    derivs = derivs - np.outer([cl.inner(d, phi) for d in derivs], phi)
    return NablaDatum(phi=phi, derivatives=derivs)


def _tangent_basis(phi: np.ndarray, space: AdmissibleSpace,
                   triple: StructureTriple) -> np.ndarray:
    """8x7 real matrix of the tangent frame {b_p . phi} + {j_k phi}."""
    cols = [cl.spinor_to_real(cl.vector_action(b, phi)) for b in space.d_basis]
    cols += [cl.spinor_to_real(op(phi)) for op in triple.ops()]
    basis = np.array(cols).T
    smin = np.linalg.svd(basis, compute_uv=False)[-1]
    if smin < 0.5:
        raise BasisDegeneracy(f"tangent frame nearly singular, sigma_min {smin:.3e}")
    return basis


@dataclass(frozen=True)
class TorsionDecomposition:
    """All components of a decomposed derivative datum."""

    phi: np.ndarray
    s_matrix: np.ndarray       # (4, 5) D-coordinates of S(e_i) in column i
    beta: np.ndarray           # (3, 5) the three covectors
    z: np.ndarray              # (4,) D-coordinates of S(y)
    f: np.ndarray              # (3,) beta evaluated on y
    s_d: np.ndarray            # (4, 4) S restricted to D
    beta_d: np.ndarray         # (3, 4) beta restricted to D
    lambda0: float             # identity component of S_D
    lambdas: np.ndarray        # (3,) components along J_1, J_2, J_3
    s0: np.ndarray             # (4, 4) traceless part commuting with all J_k
    sigma: np.ndarray          # (3, 4, 4) J_k-commuting, J_l-anticommuting parts
    residual: float            # reconstruction residual of the raw split


def split_endomorphism(s_d: np.ndarray, js: np.ndarray,
                       eps: float = nx.EPS_DEFAULT) -> tuple[float, np.ndarray,
                                                             np.ndarray, np.ndarray]:
    """Split a 4x4 matrix along the commutation types of a J-triple.

    Returns (lambda0, lambdas, s0, sigma) with

        S = lambda0 Id + s0 + sum_k (lambda_k J_k + sigma_k),

    where s0 is traceless and commutes with every J_k, and sigma_k is
    orthogonal to J_k, commutes with J_k and anticommutes with the other
    two.  The projections are averages of J-conjugations; the signs are
    forced by those (anti)commutation requirements.
    """
    s_d = np.asarray(s_d, dtype=float)
    js = np.asarray(js, dtype=float)
    for j in js:
        if np.linalg.norm(j @ j + np.eye(4)) > np.sqrt(eps):
            raise InputError("triple entries must square to -Id")
    conj = np.array([j @ s_d @ j for j in js])
    lambda0 = float(np.trace(s_d)) / 4.0
    lambdas = np.array([-float(np.trace(j @ s_d)) / 4.0 for j in js])
    s0 = (s_d - conj.sum(axis=0)) / 4.0 - lambda0 * np.eye(4)
    sigma = np.empty((3, 4, 4))
    for k in range(3):
        l, m = (k + 1) % 3, (k + 2) % 3
        part = (s_d - conj[k] + conj[l] + conj[m]) / 4.0
        sigma[k] = part - lambdas[k] * js[k]
    return lambda0, lambdas, s0, sigma


def decompose(nabla: NablaDatum, space: AdmissibleSpace,
              eps: float = nx.EPS_DEFAULT) -> TorsionDecomposition:
    """Split a derivative datum into its tangential and rotational parts."""
    validate_nabla(nabla, eps)
    phi = np.asarray(nabla.phi, dtype=complex)
    if nx.distance_to_row_span(phi, space.vperp_basis, eps) > np.sqrt(eps):
        raise InputError("base spinor must lie in the plane's complement")

    triple = adapted_triple(space, eps)
    basis = _tangent_basis(phi, space, triple)
    coeffs = np.empty((7, 5))
    residual = 0.0
    for i, d in enumerate(np.asarray(nabla.derivatives, dtype=complex)):
        c, res = nx.solve_columns(basis, cl.spinor_to_real(d))
        coeffs[:, i] = c
        residual = max(residual, res)
    if residual > np.sqrt(eps) * max(1.0, float(np.abs(nabla.derivatives).max())):
        raise DerivationFailure(f"derivative split residual {residual:.3e}")

    s_matrix = coeffs[:4]
    beta = coeffs[4:]
    z = s_matrix @ space.y
    f = beta @ space.y
    s_d = s_matrix @ space.d_basis.T
    beta_d = beta @ space.d_basis.T

    js = triple_on_distribution(space, eps).j_matrices
    lambda0, lambdas, s0, sigma = split_endomorphism(s_d, js, eps)
    return TorsionDecomposition(phi=phi, s_matrix=s_matrix, beta=beta, z=z,
                                f=f, s_d=s_d, beta_d=beta_d, lambda0=lambda0,
                                lambdas=lambdas, s0=s0, sigma=sigma,
                                residual=residual)


def reconstruct(dec: TorsionDecomposition, space: AdmissibleSpace,
                eps: float = nx.EPS_DEFAULT) -> NablaDatum:
    """Rebuild the derivative datum from s_matrix and beta."""
    triple = adapted_triple(space, eps)
    jphis = [op(dec.phi) for op in triple.ops()]
    derivs = []
    for i in range(5):
        x = space.d_basis.T @ dec.s_matrix[:, i]
        d = cl.vector_action(x, dec.phi)
        for k in range(3):
            d = d + dec.beta[k, i] * jphis[k]
        derivs.append(d)
    return NablaDatum(phi=dec.phi, derivatives=np.array(derivs))


@dataclass(frozen=True)
class OmegaDecomposition:
    """The su(2)+ valued rotation forms of a derivative datum."""

    omega: np.ndarray          # (5, 10) form for X = e_i in row i
    omega_zeta: np.ndarray     # (10,) form for X = y
    omega_d: np.ndarray        # (5, 10) form for the tangential part of e_i
    residual: float


def _solve_su2_plus(targets: np.ndarray, phi: np.ndarray, basis: np.ndarray,
                    eps: float) -> tuple[np.ndarray, float]:
    """Solve w . phi = target inside the span of the given su(2)+ basis."""
    a = np.array([cl.spinor_to_real(cl.form_action(w, phi)) for w in basis]).T
    out = np.empty((len(targets), 10))
    worst = 0.0
    for i, t in enumerate(targets):
        c, res = nx.solve_columns(a, cl.spinor_to_real(t))
        worst = max(worst, res)
        out[i] = basis.T @ c
    if worst > np.sqrt(eps) * max(1.0, float(np.abs(targets).max())):
        raise DerivationFailure(f"rotation form residual {worst:.3e}")
    return out, worst


def omega_decompose(nabla: NablaDatum, space: AdmissibleSpace,
                    eps: float = nx.EPS_DEFAULT) -> OmegaDecomposition:
    """Forms w_X in su(2)+ with w_X . phi = sum_k beta_k(X) j_k(phi)."""
    dec = decompose(nabla, space, eps)
    triple = adapted_triple(space, eps)
    jphis = np.array([op(dec.phi) for op in triple.ops()])
    basis = so5_splitting(space, eps).su2_plus

    targets = [dec.beta[:, i] @ jphis for i in range(5)]
    targets.append(dec.f @ jphis)
    beta_tangent = dec.beta_d @ space.d_basis   # beta of the projected e_i
    targets.extend(beta_tangent[:, i] @ jphis for i in range(5))

    forms, worst = _solve_su2_plus(np.array(targets), dec.phi, basis, eps)
    return OmegaDecomposition(omega=forms[:5], omega_zeta=forms[5],
                              omega_d=forms[6:], residual=worst)


def quaternion_product(b: np.ndarray, a: np.ndarray) -> np.ndarray:
    """Hamilton product b*a in (scalar, i, j, k) coordinates."""
    b = np.asarray(b, dtype=float)
    a = np.asarray(a, dtype=float)
    return np.array([
        b[0] * a[0] - b[1] * a[1] - b[2] * a[2] - b[3] * a[3],
        b[0] * a[1] + b[1] * a[0] + b[2] * a[3] - b[3] * a[2],
        b[0] * a[2] - b[1] * a[3] + b[2] * a[0] + b[3] * a[1],
        b[0] * a[3] + b[1] * a[2] - b[2] * a[1] + b[3] * a[0],
    ])


def rotation_from_quaternion(a: np.ndarray,
                             eps: float = nx.EPS_DEFAULT) -> np.ndarray:
    """SO(3) matrix of conjugation by a unit quaternion."""
    a = np.asarray(a, dtype=float)
    if a.shape != (4,):
        raise InputError(f"quaternion must have shape (4,), got {a.shape}")
    n = float(a @ a)
    if abs(n - 1.0) > eps:
        raise NonUnitQuaternion(f"quaternion has squared norm {n!r}, expected 1")
    a0, a1, a2, a3 = a
    return np.array([
        [a0 * a0 + a1 * a1 - a2 * a2 - a3 * a3,
         2.0 * (a1 * a2 - a0 * a3),
         2.0 * (a0 * a2 + a1 * a3)],
        [2.0 * (a1 * a2 + a0 * a3),
         a0 * a0 - a1 * a1 + a2 * a2 - a3 * a3,
         2.0 * (a2 * a3 - a0 * a1)],
        [2.0 * (a1 * a3 - a0 * a2),
         2.0 * (a2 * a3 + a0 * a1),
         a0 * a0 - a1 * a1 - a2 * a2 + a3 * a3],
    ])


def transform_beta(a: np.ndarray, beta: np.ndarray,
                   eps: float = nx.EPS_DEFAULT) -> np.ndarray:
    """Beta block of the datum rotated by a unit quaternion."""
    beta = np.asarray(beta, dtype=float)
    if beta.shape != (3, 5):
        raise InputError(f"beta must have shape (3, 5), got {beta.shape}")
    return rotation_from_quaternion(a, eps) @ beta


def rotate_spinor_datum(a: np.ndarray, nabla: NablaDatum,
                        space: AdmissibleSpace,
                        eps: float = nx.EPS_DEFAULT) -> NablaDatum:
    """Apply the quaternion a through the adapted triple to phi and its data."""
    a = np.asarray(a, dtype=float)
    n = float(a @ a)
    if abs(n - 1.0) > eps:
        raise NonUnitQuaternion(f"quaternion has squared norm {n!r}, expected 1")
    validate_nabla(nabla, eps)
    triple = adapted_triple(space, eps)
    psi = triple.apply_quaternion(a, nabla.phi)
    derivs = np.array([triple.apply_quaternion(a, d) for d in nabla.derivatives])
    return NablaDatum(phi=psi, derivatives=derivs)


@dataclass(frozen=True)
class IntrinsicTorsion:
    """Two-forms in su(2)+ + D wedge y whose action cancels the derivatives."""

    xi: np.ndarray             # (5, 10)
    su2_plus_part: np.ndarray  # (5, 10)
    r4_part: np.ndarray        # (5, 10)
    residual: float


def intrinsic_torsion(nabla: NablaDatum, space: AdmissibleSpace,
                      eps: float = nx.EPS_DEFAULT) -> IntrinsicTorsion:
    """Solve xi_i . phi = -nabla_i phi inside su(2)+ + D wedge y."""
    validate_nabla(nabla, eps)
    phi = np.asarray(nabla.phi, dtype=complex)
    if nx.distance_to_row_span(phi, space.vperp_basis, eps) > np.sqrt(eps):
        raise InputError("base spinor must lie in the plane's complement")
    splitting = so5_splitting(space, eps)
    basis = np.vstack([splitting.su2_plus, splitting.r4])
    a = np.array([cl.spinor_to_real(cl.form_action(w, phi)) for w in basis]).T
    xi = np.empty((5, 10))
    plus = np.empty((5, 10))
    r4 = np.empty((5, 10))
    worst = 0.0
    for i, d in enumerate(np.asarray(nabla.derivatives, dtype=complex)):
        c, res = nx.solve_columns(a, -cl.spinor_to_real(d))
        worst = max(worst, res)
        xi[i] = basis.T @ c
        plus[i] = splitting.su2_plus.T @ c[:3]
        r4[i] = splitting.r4.T @ c[3:]
    if worst > np.sqrt(eps) * max(1.0, float(np.abs(nabla.derivatives).max())):
        raise DerivationFailure(f"intrinsic torsion residual {worst:.3e}")
    return IntrinsicTorsion(xi=xi, su2_plus_part=plus, r4_part=r4, residual=worst)
