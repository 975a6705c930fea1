import math

import numpy as np
import pytest

from app.models.fock_space import (
    FieldPrep,
    cat_normalisation,
    choose_truncation,
    coherent_amplitudes,
    prepare_field,
)
from utils.exceptions import DegenerateStateError, DomainError, TruncationError


def test_vacuum_amplitudes():
    q = coherent_amplitudes(0.0, 4)
    np.testing.assert_array_equal(q.q, [1.0, 0.0, 0.0, 0.0, 0.0])


def test_coherent_amplitude_value():
    q = coherent_amplitudes(2.0, 8)
    assert q.q[2] == pytest.approx(math.exp(-2.0) * 4.0 / math.sqrt(2.0), abs=1e-12)
    assert q.q[2] == pytest.approx(0.38279, abs=1e-5)


def test_recurrence_matches_closed_form():
    alpha = 3.0
    q = coherent_amplitudes(alpha, 20)
    direct = [math.exp(-alpha**2 / 2) * alpha**n / math.sqrt(math.factorial(n)) for n in range(21)]
    np.testing.assert_allclose(q.q, direct, rtol=1e-12)


def test_poisson_peak_and_weight():
    q = coherent_amplitudes(4.0, 80)
    assert int(np.argmax(q.q**2)) in (15, 16)
    assert q.truncated_weight > 1.0 - 1e-14
    assert q.mean_photon_number == pytest.approx(16.0, abs=1e-10)


def test_large_alpha_stays_finite():
    q = coherent_amplitudes(18.0, 400)
    assert np.all(np.isfinite(q.q))
    assert q.truncated_weight == pytest.approx(1.0, abs=1e-12)


def test_amplitudes_are_read_only():
    q = coherent_amplitudes(1.0, 5)
    with pytest.raises(ValueError):
        q.q[0] = 0.0


@pytest.mark.parametrize("alpha,n_max", [(-1.0, 5), (1.0, -1)])
def test_coherent_amplitudes_rejects_bad_input(alpha, n_max):
    with pytest.raises(DomainError):
        coherent_amplitudes(alpha, n_max)


def test_truncation_for_vacuum_is_k():
    assert choose_truncation(0.0, 2, 1e-14) == 2


def test_truncation_tail_bound():
    n_max = choose_truncation(4.0, 2, 1e-14)
    assert 40 <= n_max <= 90
    q = coherent_amplitudes(4.0, n_max - 2)
    assert 1.0 - q.truncated_weight < 2e-14


def test_truncation_shrinks_with_looser_tolerance():
    assert choose_truncation(4.0, 2, 1e-6) < choose_truncation(4.0, 2, 1e-14)


def test_truncation_cap():
    with pytest.raises(TruncationError):
        choose_truncation(100.0, 2, 1e-14)


@pytest.mark.parametrize("nbar", [1e11, math.inf])
def test_truncation_cap_fails_fast_for_huge_fields(nbar):
    with pytest.raises(TruncationError, match="cap"):
        choose_truncation(math.sqrt(nbar), 2, 1e-14)


def test_truncation_at_the_cap_boundary():
    with pytest.raises(TruncationError):
        choose_truncation(20.0, 2, 1e-14)


def test_truncation_rejects_non_positive_tolerance():
    with pytest.raises(DomainError):
        choose_truncation(4.0, 2, 0.0)


def test_cat_normalisation():
    assert cat_normalisation(0.0, 4.0) == 1.0
    assert cat_normalisation(1.0, 4.0) == pytest.approx(2.0 + 2.0 * math.exp(-32.0), rel=1e-15)
    assert cat_normalisation(-1.0, 0.0) == 0.0


def test_coherent_preparation(coherent_field):
    (branch,) = coherent_field.branches
    assert branch.weight == 1.0
    np.testing.assert_allclose(branch.c, 1.0, atol=1e-12)
    assert np.linalg.norm(branch.psi0) == pytest.approx(1.0, abs=1e-12)


def test_even_cat_preparation(even_cat_field):
    (branch,) = even_cat_field.branches
    A = cat_normalisation(1.0, 4.0)
    assert np.all(branch.c[1::2] == 0.0)
    np.testing.assert_allclose(branch.c[0::2], 2.0 / math.sqrt(A), rtol=1e-12)
    assert np.linalg.norm(branch.psi0) == pytest.approx(1.0, abs=1e-12)


def test_odd_cat_has_odd_support():
    n_max = choose_truncation(2.0, 2, 1e-14)
    field_state = prepare_field(FieldPrep.superposition(-1.0, 2.0), coherent_amplitudes(2.0, n_max))
    psi0 = field_state.branches[0].psi0
    assert np.all(psi0[0::2] == 0.0)
    assert np.linalg.norm(psi0) == pytest.approx(1.0, abs=1e-12)


def test_mixture_preparation(mixture_field):
    first, second = mixture_field.branches
    assert first.weight == second.weight == 0.5
    n = np.arange(mixture_field.n_max + 1)
    np.testing.assert_allclose(first.c, 1.0, atol=1e-12)
    np.testing.assert_allclose(second.c, (-1.0) ** n, atol=1e-12)
    assert not mixture_field.prep.is_pure


def test_mixture_density_matrix(mixture_field):
    q = mixture_field.q.q
    n = np.arange(q.shape[0])
    flipped = q * (-1.0) ** n
    expected = 0.5 * (np.outer(q, q) + np.outer(flipped, flipped))
    np.testing.assert_allclose(mixture_field.density_matrix(), expected, atol=1e-14)
    assert np.trace(mixture_field.density_matrix()) == pytest.approx(1.0, abs=1e-12)


def test_vectors_are_weighted_columns(mixture_field):
    vectors = mixture_field.vectors()
    assert vectors.shape == (mixture_field.n_max + 1, 2)
    np.testing.assert_allclose(vectors[:, 0], math.sqrt(0.5) * mixture_field.branches[0].psi0)


def test_odd_cat_of_vacuum_is_degenerate():
    with pytest.raises(DegenerateStateError):
        prepare_field(FieldPrep.superposition(-1.0, 0.0), coherent_amplitudes(0.0, 4))


def test_superposition_parameter_out_of_range():
    with pytest.raises(DomainError):
        prepare_field(FieldPrep.superposition(1.5, 2.0), coherent_amplitudes(2.0, 30))


def test_unknown_preparation_kind():
    with pytest.raises(DomainError):
        prepare_field(FieldPrep(kind="squeezed", alpha=1.0), coherent_amplitudes(1.0, 10))
