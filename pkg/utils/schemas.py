# utils/schemas.py


import math

from schema import And, Optional, Schema, SchemaError, Use
from typing import Any, Dict

from utils.constants import ALLOWED_COLUMNS, ALLOWED_FIELDS, DEFAULT_SCENARIO, PRESETS
from utils.exceptions import ConfigError

def _finite(value) -> float:
    number = float(value)
    if not math.isfinite(number):
        raise ValueError(f"{value} is not finite")
    return number

def _is_int(value) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)

scenario_schema = Schema(
    {
        Optional("preset"): And(str, lambda name: name in PRESETS, error="unknown preset"),
        Optional("name"): And(str, len, error="name must be a non-empty string"),
        Optional("nbar"): And(Use(_finite), lambda v: v >= 0, error="nbar must be a finite non-negative number"),
        Optional("field"): And(str, lambda kind: kind in ALLOWED_FIELDS, error=f"field must be one of {', '.join(ALLOWED_FIELDS)}"),
        Optional("r"): And(Use(_finite), lambda v: -1.0 <= v <= 1.0, error="r must lie in [-1, 1]"),
        Optional("k"): And(_is_int, lambda v: v >= 1, error="k must be an integer >= 1"),
        Optional("delta"): Use(_finite, error="delta must be a finite number"),
        Optional("stark_R"): And(Use(_finite), lambda v: v >= 0, error="stark_R must be finite and non-negative"),
        Optional("lambda"): And(Use(_finite), lambda v: v > 0, error="lambda must be positive"),
        Optional("omega"): Use(_finite, error="omega must be a number"),
        Optional("omega0"): Use(_finite, error="omega0 must be a number"),
        Optional("tail_tol"): And(Use(_finite), lambda v: v > 0, error="tail_tol must be positive"),
        Optional("grid_start"): And(Use(_finite), lambda v: v >= 0, error="grid_start must be a finite non-negative number"),
        Optional("grid_end"): Use(_finite, error="grid_end must be a finite number"),
        Optional("grid_count"): And(_is_int, lambda v: v >= 1, error="grid_count must be an integer >= 1"),
        Optional("outputs"): And(
            [And(str, lambda column: column in ALLOWED_COLUMNS)],
            len,
            error=f"outputs must be a non-empty list drawn from {', '.join(ALLOWED_COLUMNS)}",
        ),
    }
)

def validate_scenario(data: Any) -> Dict[str, Any]:
    """Validate a flat scenario document and merge it over the defaults.

    The merge order is: built-in defaults, then the named preset (if the
    document has a ``preset`` key), then the document's own keys.

    Args:
        data (dict): Parsed configuration document.
            Example:
            {
                'preset': 'fig2a',
                'grid_end': 2.0,
                'outputs': ['scaled_t', 'S_a', 'S_f']
            }

    Returns:
        dict: Complete scenario settings with every key of DEFAULT_SCENARIO.

    Raises:
        ConfigError: If the document is not a mapping, has unknown keys or
            invalid values, or defines an empty time grid.

    Example:
        >>> validate_scenario({})["nbar"]
        16.0
    """
    if data is None:
        data = {}
    if not isinstance(data, dict):
        raise ConfigError(f"scenario must be a key/value mapping, got {type(data).__name__}")

    try:
        validated = scenario_schema.validate(data)
    except SchemaError as e:
        raise ConfigError(f"invalid scenario: {e}")

    settings = dict(DEFAULT_SCENARIO)
    if "preset" in validated:
        settings.update(PRESETS[validated["preset"]])
    settings.update({key: value for key, value in validated.items() if key != "preset"})

    if settings["grid_end"] < settings["grid_start"]:
        raise ConfigError(
            f"grid_end={settings['grid_end']} is before grid_start={settings['grid_start']}"
        )
    if ("omega" in settings) != ("omega0" in settings):
        raise ConfigError("omega and omega0 must be given together")
    return settings
