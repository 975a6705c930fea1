import math

import numpy as np
import pytest

from app.models.dressed_model import ModelParams, dressed_states, eigenvalues
from app.models.evolution import branch_amplitudes
from app.models.fock_space import FieldPrep
from app.models.oracle import (
    build_hamiltonian,
    initial_state,
    oracle_amplitudes,
    oracle_entropies,
    oracle_reduced_states,
    propagate,
)
from utils.exceptions import DomainError, TruncationWarning


def test_hamiltonian_layout():
    p = ModelParams.build(k=2)
    h = build_hamiltonian(p, 2)
    assert h.dim == 6
    assert h.basis()[h.ground(2)] == (2, "g")
    assert h.H[h.excited(0), h.ground(2)] == pytest.approx(math.sqrt(2.0))
    np.testing.assert_array_equal(h.H, h.H.T)

    allowed = np.eye(h.dim, dtype=bool)
    for n in range(3 - p.k):
        allowed[h.excited(n), h.ground(n + p.k)] = True
        allowed[h.ground(n + p.k), h.excited(n)] = True
    assert np.all(h.H[~allowed] == 0)


def test_hamiltonian_needs_room_for_a_doublet():
    with pytest.raises(DomainError):
        build_hamiltonian(ModelParams.build(k=3), 2)


def test_blocks_match_dressed_energies():
    p = ModelParams.build(k=2, stark_R=0.5, delta=0.7)
    h = build_hamiltonian(p, 30)
    for n in (0, 4, 11, 25):
        idx = [h.excited(n), h.ground(n + p.k)]
        block = h.H[np.ix_(idx, idx)]
        plus, minus = eigenvalues(p, n)
        np.testing.assert_allclose(np.linalg.eigvalsh(block), [minus - 0.5 * p.omega0, plus - 0.5 * p.omega0], atol=1e-12)
        states = dressed_states(p, n)
        residual = block @ states[:, 0] - (plus - 0.5 * p.omega0) * states[:, 0]
        assert np.max(np.abs(residual)) < 1e-12


def test_propagation_preserves_state_properties(mixture_field):
    p = ModelParams.build(stark_R=0.3)
    h = build_hamiltonian(p, mixture_field.n_max)
    rho0 = initial_state(h, mixture_field)
    np.testing.assert_allclose(propagate(h, rho0, 0.0), rho0, atol=1e-13)
    rho = propagate(h, rho0, 2.5)
    np.testing.assert_allclose(rho, rho.conj().T, atol=1e-13)
    assert np.trace(rho).real == pytest.approx(1.0, abs=1e-12)
    np.testing.assert_allclose(
        np.linalg.eigvalsh(rho)[-2:], np.linalg.eigvalsh(rho0)[-2:], atol=1e-12
    )


def test_reduced_states_have_unit_trace(coherent_field):
    p = ModelParams.build()
    h = build_hamiltonian(p, coherent_field.n_max)
    atom, field_matrix = oracle_reduced_states(h, propagate(h, initial_state(h, coherent_field), 1.3))
    assert atom.shape == (2, 2)
    assert np.trace(atom).real == pytest.approx(1.0, abs=1e-12)
    assert np.trace(field_matrix).real == pytest.approx(1.0, abs=1e-12)


@pytest.mark.parametrize("stark_R,delta", [(0.0, 0.0), (0.5, 0.0), (0.3, 1.2)])
def test_amplitudes_match_closed_form(stark_R, delta, mixture_field):
    p = ModelParams.build(stark_R=stark_R, delta=delta)
    h = build_hamiltonian(p, mixture_field.n_max + 2 * p.k)
    for branch in mixture_field.branches:
        for x in np.linspace(0.0, 4.0, 100):
            t = x * math.pi / p.lam
            A, B = oracle_amplitudes(h, branch.psi0, t)
            amps = branch_amplitudes(p, branch, t)
            np.testing.assert_allclose(A, amps.A, atol=1e-8)
            np.testing.assert_allclose(B, amps.B, atol=1e-8)


def test_oracle_initial_entropies():
    p = ModelParams.build()
    (pure,) = oracle_entropies(p, FieldPrep.superposition(0.0, 4.0), [0.0])
    assert pure.S_a == pytest.approx(0.0, abs=1e-12)
    assert pure.S_f == pytest.approx(0.0, abs=1e-12)
    assert pure.S_total == pytest.approx(0.0, abs=1e-12)
    (mixed,) = oracle_entropies(p, FieldPrep.mixture(4.0), [0.0])
    assert mixed.S_a == pytest.approx(0.0, abs=1e-12)
    assert mixed.S_f == pytest.approx(math.log(2.0), abs=1e-10)
    assert mixed.S_total == pytest.approx(math.log(2.0), abs=1e-10)


def test_oracle_pure_state_entropies_agree():
    p = ModelParams.build(stark_R=0.5)
    for sample in oracle_entropies(p, FieldPrep.superposition(1.0, 4.0), np.linspace(0.0, 2.0, 9)):
        assert sample.S_a == pytest.approx(sample.S_f, abs=1e-9)


def test_oracle_warns_on_leaking_truncation():
    with pytest.warns(TruncationWarning):
        oracle_entropies(ModelParams.build(), FieldPrep.superposition(0.0, 4.0), [0.0, 0.5], tail_tol=0.5)
