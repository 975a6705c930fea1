# utils/constants.py

from pathlib import Path

### CONSTANTS ###

TEMPLATE_DIR = Path(__file__).resolve().parent.parent / "templates"

# Numerical tolerances
TAIL_TOLERANCE = 1e-14
TRUNCATION_CAP = 400
NORM_TOLERANCE = 1e-12
EIG_FLOOR = 1e-15
NEGATIVE_EIG_TOLERANCE = 1e-9
QUBIT_CLAMP_TOLERANCE = 1e-10
JACOBI_MAX_SWEEPS = 100
JACOBI_TOLERANCE = 1e-13
ORACLE_LEAKAGE_TOLERANCE = 1e-10

# Time grid in units of λt/π
GRID_START = 0.0
GRID_END = 4.0
GRID_COUNT = 1601

CSV_COLUMNS = ["scaled_t", "S_a", "S_f", "rho_ee", "inversion", "lambda_plus", "lambda_minus"]
EXTRA_COLUMNS = ["S_total", "mutual_info", "rho_eg_abs"]
ORACLE_COLUMNS = ["S_a_oracle", "S_f_oracle"]
ALLOWED_COLUMNS = CSV_COLUMNS + EXTRA_COLUMNS

ALLOWED_FIELDS = ["superposition", "mixture"]

DEFAULT_SCENARIO = {
    "name": "custom",
    "nbar": 16.0,
    "field": "superposition",
    "r": 0.0,
    "k": 2,
    "delta": 0.0,
    "stark_R": 0.0,
    "lambda": 1.0,
    "tail_tol": TAIL_TOLERANCE,
    "grid_start": GRID_START,
    "grid_end": GRID_END,
    "grid_count": GRID_COUNT,
    "outputs": list(CSV_COLUMNS),
}

# Presets: n̄ = 16, two-quanta transitions, zero detuning. Suffix a is the
# coherent field, b the even cat, c the statistical mixture. fig1* has no Stark
# shift, fig2* and fig3* use R = 0.5 and R = 0.3.
_PANELS = {
    "a": {"field": "superposition", "r": 0.0},
    "b": {"field": "superposition", "r": 1.0},
    "c": {"field": "mixture", "r": 0.0},
}
_FAMILY_STARK = {"fig1": 0.0, "fig2": 0.5, "fig3": 0.3}

PRESETS = {
    f"{family}{panel}": {
        "name": f"{family}{panel}",
        "nbar": 16.0,
        "k": 2,
        "delta": 0.0,
        "stark_R": stark_R,
        **prep,
    }
    for family, stark_R in _FAMILY_STARK.items()
    for panel, prep in _PANELS.items()
}

# Exit codes
EXIT_OK = 0
EXIT_CONFIG_ERROR = 2
EXIT_NUMERIC_ERROR = 3
