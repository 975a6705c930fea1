# utils/utilities.py

### BUITLIN IMPORTS ###
import json
import math
import sys
from pathlib import Path
from typing import Any, Optional, Sequence, Tuple

import numpy as np
import yaml

### LIBRARY IMPORT ###
from utils.constants import CSV_COLUMNS, ORACLE_COLUMNS
from utils.exceptions import ConfigError, DomainError

YAML_SUFFIXES = (".yaml", ".yml")

def read_config_document(path) -> Any:
    """Read a flat scenario document from a JSON or YAML file.

    ``.yaml``/``.yml`` files go through PyYAML, everything else through the
    JSON parser. An empty file is an empty document.

    Args:
        path (str | Path): Scenario file.

    Returns:
        Any: The parsed document (normally a dict), or None when empty.

    Raises:
        ConfigError: If the file is missing or cannot be parsed. Parse
            errors carry the 1-based line number.

    Example:
        >>> read_config_document("templates/fig2c-long.json")["preset"]
        'fig2c'
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise ConfigError(f"scenario file {path} not found")
    except OSError as e:
        raise ConfigError(f"cannot read scenario file {path}: {e}")

    if not text.strip():
        return None

    if path.suffix.lower() in YAML_SUFFIXES:
        try:
            return yaml.safe_load(text)
        except yaml.YAMLError as e:
            mark = getattr(e, "problem_mark", None)
            line = mark.line + 1 if mark is not None else None
            raise ConfigError(f"{path}: {getattr(e, 'problem', None) or e}", line=line)

    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ConfigError(f"{path}: {e.msg}", line=e.lineno)

def parse_grid(text: str) -> Tuple[float, float, int]:
    """Parse a ``start:end:count`` time grid given in units of λt/π.

    Raises:
        ConfigError: If the text is malformed, a bound is negative or not
            finite, count < 1 or end < start.

    Example:
        >>> parse_grid("0:4:1601")
        (0.0, 4.0, 1601)
    """
    parts = text.split(":")
    if len(parts) != 3:
        raise ConfigError(f"grid '{text}' must have the form start:end:count")
    try:
        start, end, count = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise ConfigError(f"grid '{text}' must have the form start:end:count")
    if not (math.isfinite(start) and math.isfinite(end)):
        raise ConfigError(f"grid '{text}' must have finite bounds")
    if start < 0:
        raise ConfigError(f"grid start must be non-negative, got {start}")
    if count < 1:
        raise ConfigError(f"grid count must be at least 1, got {count}")
    if end < start:
        raise ConfigError(f"grid end {end} is before start {start}")
    return start, end, count

def emit_csv(samples: Sequence, path, columns: Sequence[str] = CSV_COLUMNS, oracle: Optional[Sequence] = None) -> None:
    """Write entropy samples as CSV with 17 significant digits.

    The output is byte-for-byte deterministic for fixed input: one header
    line, one row per sample, UNIX newlines. When ``oracle`` samples are
    given, ``S_a_oracle`` and ``S_f_oracle`` columns are appended.

    Args:
        samples (list): EntropySample objects in grid order.
        path (str | Path): Output file, or "-" for stdout.
        columns (list): Sample attributes to write, in order.
        oracle (list): Optional oracle samples on the same grid.

    Raises:
        DomainError: If there are no samples or the oracle grid differs.
        OSError: If the file cannot be written.
    """
    if not samples:
        raise DomainError("no samples to write")

    rows = np.array([[float(getattr(s, column)) for column in columns] for s in samples])
    header = list(columns)
    if oracle is not None:
        if len(oracle) != len(samples):
            raise DomainError(f"oracle has {len(oracle)} samples, expected {len(samples)}")
        extra = np.array([[o.S_a, o.S_f] for o in oracle])
        rows = np.hstack((rows, extra))
        header += ORACLE_COLUMNS

    target = sys.stdout if str(path) == "-" else path
    np.savetxt(target, rows, fmt="%.17g", delimiter=",", newline="\n", header=",".join(header), comments="")
