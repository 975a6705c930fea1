import dataclasses
import math

import numpy as np
import pytest

from app.models.entropy import hermitian_eigenvalues, qubit_entropy
from app.models.evolution import branch_amplitudes
from app.models.reduced_states import AtomState, atom_reduced, field_reduced, inversion


def evolve(p, field_state, scaled_t):
    return [branch_amplitudes(p, b, scaled_t / p.lam) for b in field_state.branches]


def test_atom_starts_excited(resonant, coherent_field):
    atom = atom_reduced(evolve(resonant, coherent_field, 0.0), 2)
    assert atom.rho_ee == pytest.approx(1.0, abs=1e-12)
    assert atom.rho_gg == pytest.approx(0.0, abs=1e-12)
    assert atom.rho_eg == 0
    assert inversion(atom) == pytest.approx(1.0, abs=1e-12)


def test_collapsed_inversion(resonant, coherent_field):
    atom = atom_reduced(evolve(resonant, coherent_field, math.pi / 4), 2)
    assert atom.rho_ee == pytest.approx(0.5, abs=0.05)
    assert abs(inversion(atom)) < 0.1


def test_atom_matrix_is_hermitian_with_unit_trace(resonant, even_cat_field):
    atom = atom_reduced(evolve(resonant, even_cat_field, 2.3), 2)
    m = atom.matrix()
    np.testing.assert_allclose(m, m.conj().T)
    assert np.trace(m).real == pytest.approx(1.0)
    assert atom.rho_ge == atom.rho_eg.conjugate()
    assert atom.rho_ee * atom.rho_gg - abs(atom.rho_eg) ** 2 >= -1e-12


def test_mixture_coherence_is_branch_average(resonant, mixture_field):
    branches = evolve(resonant, mixture_field, 1.9)
    mixed = atom_reduced(branches, 2)
    separate = [atom_reduced([dataclasses.replace(b, weight=1.0)], 2) for b in branches]
    assert mixed.rho_eg == pytest.approx(0.5 * (separate[0].rho_eg + separate[1].rho_eg), abs=1e-14)
    assert mixed.rho_ee == pytest.approx(0.5 * (separate[0].rho_ee + separate[1].rho_ee), abs=1e-14)


def test_field_starts_in_initial_state(resonant, coherent_field):
    f = field_reduced(evolve(resonant, coherent_field, 0.0), 2)
    psi0 = coherent_field.branches[0].psi0
    np.testing.assert_allclose(f.dense, np.outer(psi0, psi0), atol=1e-16)
    assert f.trace == pytest.approx(1.0, abs=1e-12)


def test_field_density_is_factored(resonant, mixture_field):
    f = field_reduced(evolve(resonant, mixture_field, 2.7), 2)
    assert f.factors.shape == (mixture_field.n_max + 1, 4)
    np.testing.assert_allclose(f.dense, f.factors @ f.factors.conj().T)
    np.testing.assert_allclose(f.dense, f.dense.conj().T, atol=1e-16)
    assert f.trace == pytest.approx(1.0, abs=1e-10)
    assert np.trace(f.gram()).real == pytest.approx(f.trace)


def test_mixture_field_starts_with_two_equal_weights(resonant, mixture_field):
    f = field_reduced(evolve(resonant, mixture_field, 0.0), 2)
    values = hermitian_eigenvalues(f.gram())
    np.testing.assert_allclose(values[:2], [0.5, 0.5], atol=1e-12)
    np.testing.assert_allclose(values[2:], 0.0, atol=1e-15)


def test_pure_field_has_rank_two(resonant, even_cat_field):
    f = field_reduced(evolve(resonant, even_cat_field, 1.1), 2)
    assert np.linalg.matrix_rank(f.dense, tol=1e-10) <= 2


def test_schmidt_spectra_agree(resonant, coherent_field):
    for scaled_t in (0.4, 1.7, 5.0):
        branches = evolve(resonant, coherent_field, scaled_t)
        _, lambda_plus, lambda_minus = qubit_entropy(atom_reduced(branches, 2))
        values = hermitian_eigenvalues(field_reduced(branches, 2).gram())
        np.testing.assert_allclose(values, [lambda_plus, lambda_minus], atol=1e-10)


def test_inversion_of_mixed_atom():
    assert inversion(AtomState(rho_ee=0.5, rho_gg=0.5, rho_eg=0j)) == 0.0
