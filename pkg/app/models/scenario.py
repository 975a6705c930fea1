# models/scenario.py

import math
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Tuple

import numpy as np

from app.models.dressed_model import ModelParams
from app.models.fock_space import MIXTURE, FieldPrep
from utils.constants import PRESETS
from utils.exceptions import ConfigError, DomainError
from utils.schemas import validate_scenario
from utils.utilities import read_config_document


@dataclass(frozen=True)
class Scenario:
    name: str
    params: ModelParams
    prep: FieldPrep
    nbar: float
    t_grid: Tuple[float, float, int]
    outputs: Tuple[str, ...]
    tail_tol: float

    @property
    def alpha(self) -> float:
        return math.sqrt(self.nbar)

    def grid(self) -> np.ndarray:
        """Sample points in units of λt/π."""
        start, end, count = self.t_grid
        return np.linspace(start, end, count)

    def with_grid(self, t_grid: Tuple[float, float, int]) -> "Scenario":
        return replace(self, t_grid=t_grid)

    @classmethod
    def from_settings(cls, settings: dict) -> "Scenario":
        """Build a scenario from settings returned by ``validate_scenario``."""
        alpha = math.sqrt(settings["nbar"])
        if settings["field"] == MIXTURE:
            prep = FieldPrep.mixture(alpha)
        else:
            prep = FieldPrep.superposition(settings["r"], alpha)
        try:
            params = ModelParams.build(
                delta=settings["delta"],
                k=settings["k"],
                stark_R=settings["stark_R"],
                lam=settings["lambda"],
                omega=settings.get("omega"),
                omega0=settings.get("omega0"),
            )
        except DomainError as e:
            raise ConfigError(str(e))
        return cls(
            name=settings["name"],
            params=params,
            prep=prep,
            nbar=settings["nbar"],
            t_grid=(settings["grid_start"], settings["grid_end"], settings["grid_count"]),
            outputs=tuple(settings["outputs"]),
            tail_tol=settings["tail_tol"],
        )


def load_config(source=None) -> Scenario:
    """Load a scenario from a preset name, a JSON/YAML file, or the defaults.

    Args:
        source (str | Path | None): Preset name (e.g. "fig1a"), path to a
            scenario document, or None for the documented defaults.

    Returns:
        Scenario: Fully validated scenario.

    Raises:
        ConfigError: On unknown presets, missing files, parse errors (with
            line number) or invalid values.

    Example:
        >>> load_config("fig1c").prep.kind
        'mixture'
    """
    if source is None:
        return Scenario.from_settings(validate_scenario({}))
    if str(source) in PRESETS:
        return Scenario.from_settings(validate_scenario({"preset": str(source)}))

    path = Path(source)
    if not path.suffix and not path.exists():
        raise ConfigError(f"unknown preset '{source}', expected one of {', '.join(PRESETS)}")
    return Scenario.from_settings(validate_scenario(read_config_document(path)))
