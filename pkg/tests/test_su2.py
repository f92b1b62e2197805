import numpy as np
import pytest

import spin5 as sp
import spin5.clifford as cl
import spin5.numerics as nx

FUNDAMENTAL_ANNIHILATOR = np.array([
    [1.0, 0, 0, 0, 0, 0, 0, -1.0, 0, 0],   # e12 - e34
    [0, 1.0, 0, 0, 0, 1.0, 0, 0, 0, 0],    # e13 + e24
    [0, 0, 1.0, 0, -1.0, 0, 0, 0, 0, 0],   # e14 - e23
])

DUAL_BASIS = np.array([
    [1.0, 0, 0, 0, 0, 0, 0, 1.0, 0, 0],    # e12 + e34
    [0, 1.0, 0, 0, 0, -1.0, 0, 0, 0, 0],   # e13 - e24
    [0, 0, 1.0, 0, 1.0, 0, 0, 0, 0, 0],    # e14 + e23
])


def test_annihilator_oracle():
    basis = sp.annihilator(sp.standard_spinor(1))
    assert basis.shape == (3, 10)
    assert nx.subspace_distance(basis, FUNDAMENTAL_ANNIHILATOR) <= 1e-12


def test_annihilator_annihilates(rng):
    phi = cl.random_unit_spinor(rng)
    for w in sp.annihilator(phi):
        assert np.linalg.norm(cl.form_action(w, phi)) <= 1e-9


def test_fundamental_space_canonical(fundamental_space):
    space = fundamental_space
    assert np.allclose(space.v_basis,
                       [sp.standard_spinor(3), sp.standard_spinor(4)])
    assert np.allclose(space.vperp_basis,
                       [sp.standard_spinor(1), sp.standard_spinor(2)])
    assert np.allclose(space.y, sp.standard_vector(5))
    assert np.allclose(space.d_basis, np.eye(4, 5))


def test_is_admissible_fundamental(fundamental_space):
    result = sp.is_admissible(fundamental_space.v_basis)
    assert result.verdict
    assert result.spanning_test and result.conjugation_test
    assert result.max_spanning_residual <= 1e-9
    assert result.max_conjugation_residual <= 1e-9


def test_is_admissible_random_plane_fails(rng):
    rows = nx.orthonormalize_rows(
        rng.standard_normal((2, 4)) + 1j * rng.standard_normal((2, 4)),
        require=2)
    result = sp.is_admissible(rows)
    assert not result.verdict
    assert result.spanning_test == result.conjugation_test


def test_admissible_space_rejects_random_plane(rng):
    rows = nx.orthonormalize_rows(
        rng.standard_normal((2, 4)) + 1j * rng.standard_normal((2, 4)),
        require=2)
    with pytest.raises(sp.NotAdmissible):
        sp.admissible_space(rows)


def test_degenerate_basis_raises():
    s3 = sp.standard_spinor(3)
    with pytest.raises(sp.DegenerateSubspace):
        sp.is_admissible(np.array([s3, 1j * s3]))


def test_annihilator_shared_on_complement(rng):
    space = sp.random_admissible_space(rng)
    ref = sp.annihilator(space.vperp_basis[0])
    for _ in range(10):
        c = rng.standard_normal(2) + 1j * rng.standard_normal(2)
        psi = space.vperp_basis.T @ c
        psi = psi / np.linalg.norm(psi)
        assert nx.subspace_distance(sp.annihilator(psi), ref) <= 1e-9


def test_annihilator_separates_outside(rng):
    space = sp.random_admissible_space(rng)
    ref = sp.annihilator(space.vperp_basis[0])
    for _ in range(10):
        chi = cl.random_unit_spinor(rng)
        if nx.distance_to_row_span(chi, space.vperp_basis) < 0.05:
            continue
        assert nx.subspace_distance(sp.annihilator(chi), ref) > 1e-3


def test_so5_splitting_fundamental(fundamental_space):
    spl = sp.so5_splitting(fundamental_space)
    assert nx.subspace_distance(spl.su2_minus, FUNDAMENTAL_ANNIHILATOR) <= 1e-9
    assert nx.subspace_distance(spl.su2_plus, DUAL_BASIS) <= 1e-9
    stacked = spl.stacked()
    assert stacked.shape == (10, 10)
    assert np.abs(stacked @ stacked.T - np.eye(10)).max() <= 1e-9


def test_splitting_brackets(rng):
    space = sp.random_admissible_space(rng)
    spl = sp.so5_splitting(space)
    for block in (spl.su2_minus, spl.su2_plus):
        for a in range(3):
            for b in range(a + 1, 3):
                br = sp.two_form_bracket(block[a], block[b])
                assert nx.distance_to_row_span(br, block) <= 1e-9
                assert abs(np.linalg.norm(br) - np.sqrt(2)) <= 1e-9
    for a in spl.su2_minus:
        for b in spl.su2_plus:
            assert np.linalg.norm(sp.two_form_bracket(a, b)) <= 1e-9


def test_space_of_spinor_contains_complement(rng):
    phi = cl.random_unit_spinor(rng)
    space = sp.space_of_spinor(phi)
    assert nx.distance_to_row_span(phi, space.vperp_basis) <= 1e-9
    result = sp.is_admissible(space.v_basis)
    assert result.verdict


def test_dual_action_spans_quaternion_directions(rng):
    space = sp.random_admissible_space(rng)
    phi = space.vperp_basis[0]
    triple = sp.adapted_triple(space)
    images = np.array([cl.spinor_to_real(v)
                       for v in sp.dual_action_span(space, phi)])
    jphis = np.array([cl.spinor_to_real(op(phi)) for op in triple.ops()])
    assert nx.subspace_distance(images, jphis) <= 1e-9


def test_random_admissible_space_is_admissible(rng):
    for _ in range(5):
        space = sp.random_admissible_space(rng)
        assert sp.is_admissible(space.v_basis).verdict
        assert abs(np.linalg.norm(space.y) - 1.0) <= 1e-9
