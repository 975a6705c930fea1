# controllers/sweep_controller.py

### BUILTIN IMPORTS ###
from concurrent.futures import ThreadPoolExecutor
from typing import List

import numpy as np

### CUSTOM LIBRARY ###
from app.models.entropy import EntropySample, field_entropy, hermitian_eigenvalues, qubit_entropy, von_neumann_entropy
from app.models.evolution import branch_amplitudes
from app.models.fock_space import PreparedField, choose_truncation, coherent_amplitudes, prepare_field
from app.models.oracle import oracle_entropies
from app.models.reduced_states import atom_reduced, field_reduced, inversion
from app.models.scenario import Scenario
from utils.exceptions import DomainError, TruncationError

class SweepController:
    """Runs a scenario over its time grid.

    Every grid point is an independent pure computation, so samples can be
    fanned out to a thread pool; ``map`` keeps them in grid order.
    """

    def __init__(self, threads: int = 1):
        if threads < 1:
            raise DomainError(f"threads must be at least 1, got {threads}")
        self.threads = threads

    def prepare(self, scenario: Scenario) -> PreparedField:
        p = scenario.params
        try:
            n_max = choose_truncation(scenario.alpha, p.k, scenario.tail_tol)
        except TruncationError as e:
            raise TruncationError(f"scenario '{scenario.name}' (nbar={scenario.nbar}, k={p.k}): {e}")
        return prepare_field(scenario.prep, coherent_amplitudes(scenario.alpha, n_max))

    def sample(self, scenario: Scenario, field_state: PreparedField, x: float, S_total: float = 0.0) -> EntropySample:
        """Entropy sample at λt/π = x."""
        p = scenario.params
        t = x * np.pi / p.lam
        branches = [branch_amplitudes(p, branch, t) for branch in field_state.branches]
        atom = atom_reduced(branches, p.k)
        S_a, lambda_plus, lambda_minus = qubit_entropy(atom)
        S_f = field_entropy(field_reduced(branches, p.k))
        return EntropySample(
            scaled_t=float(x),
            S_a=S_a,
            S_f=S_f,
            lambda_plus=lambda_plus,
            lambda_minus=lambda_minus,
            rho_ee=atom.rho_ee,
            inversion=inversion(atom),
            rho_eg_abs=abs(atom.rho_eg),
            S_total=S_total,
        )

    def run_scenario(self, scenario: Scenario) -> List[EntropySample]:
        field_state = self.prepare(scenario)
        vectors = field_state.vectors()
        S_total = von_neumann_entropy(hermitian_eigenvalues(vectors.conj().T @ vectors))
        grid = [float(x) for x in scenario.grid()]

        def compute(x: float) -> EntropySample:
            return self.sample(scenario, field_state, x, S_total)

        if self.threads == 1:
            return [compute(x) for x in grid]
        with ThreadPoolExecutor(max_workers=self.threads) as pool:
            return list(pool.map(compute, grid))

    def run_oracle(self, scenario: Scenario) -> List[EntropySample]:
        return oracle_entropies(scenario.params, scenario.prep, scenario.grid(), scenario.tail_tol)

def run_scenario(s: Scenario, threads: int = 1) -> List[EntropySample]:
    """One EntropySample per grid point, identical for any thread count."""
    return SweepController(threads=threads).run_scenario(s)
