import pytest

from app.controllers.sweep_controller import SweepController
from app.models.dressed_model import ModelParams
from app.models.fock_space import FieldPrep, choose_truncation, coherent_amplitudes, prepare_field
from app.models.scenario import load_config


def make_field(prep, k=2, tail_tol=1e-14):
    n_max = choose_truncation(prep.alpha, k, tail_tol)
    return prepare_field(prep, coherent_amplitudes(prep.alpha, n_max))


@pytest.fixture
def resonant():
    return ModelParams.build(delta=0.0, k=2, stark_R=0.0)


@pytest.fixture
def coherent_field():
    return make_field(FieldPrep.superposition(0.0, 4.0))


@pytest.fixture
def even_cat_field():
    return make_field(FieldPrep.superposition(1.0, 4.0))


@pytest.fixture
def mixture_field():
    return make_field(FieldPrep.mixture(4.0))


@pytest.fixture(scope="session")
def preset_runs():
    """Full default-grid runs, computed once per preset and shared."""
    cache = {}

    def run(name):
        if name not in cache:
            scenario = load_config(name)
            cache[name] = (scenario, SweepController().run_scenario(scenario))
        return cache[name]

    return run
