# app/cli.py

import argparse
import warnings

from colorama import init as colorama_init

from app.controllers.sweep_controller import SweepController
from app.models.scenario import load_config
from utils.console_attr import ConsoleAttr, console_print
from utils.constants import EXIT_CONFIG_ERROR, EXIT_NUMERIC_ERROR, EXIT_OK, PRESETS
from utils.exceptions import ConfigError, NumericError, TruncationWarning
from utils.utilities import emit_csv, parse_grid


def check_args(argv=None):
    parser = argparse.ArgumentParser(
        description="Partial von Neumann entropies of a two-level atom coupled to a "
        "field mode through k-quanta transitions with Stark shifts."
    )
    parser.add_argument(
        "--scenario",
        help="preset name (fig1a..fig3c) or path to a JSON/YAML scenario file; "
        "the documented defaults are used when omitted",
    )
    parser.add_argument("--out", help="CSV output path, '-' for stdout (default: <scenario name>.csv)")
    parser.add_argument(
        "--with-oracle",
        action="store_true",
        help="also run the brute-force propagator and add S_a_oracle,S_f_oracle columns",
    )
    parser.add_argument("--grid", help="time grid start:end:count in units of λt/π")
    parser.add_argument("--threads", type=int, default=1, help="worker threads (default 1)")
    parser.add_argument("--list-presets", action="store_true", help="print the built-in presets and exit")
    args = parser.parse_args(argv)
    if args.threads < 1:
        parser.error("--threads must be at least 1")
    return args


def list_presets() -> None:
    for name, preset in PRESETS.items():
        prep = "mixture" if preset["field"] == "mixture" else f"superposition r={preset['r']:g}"
        console_print(
            f"{name}: nbar={preset['nbar']:g} k={preset['k']} delta={preset['delta']:g} "
            f"stark_R={preset['stark_R']:g} {prep}",
            ConsoleAttr.INFO,
        )


def main(argv=None) -> int:
    """Run one scenario and write its entropy curves as CSV.

    Returns:
        int: 0 on success, 2 on configuration errors, 3 on numeric failures
            (truncation or eigensolver).

    Example:
        $ ./entropy-sweep.py --scenario fig1b --grid 0:2:801 --out fig1b.csv
        Running fig1b on 801 points...
        fig1b written to fig1b.csv
    """
    colorama_init()
    args = check_args(argv)
    if args.list_presets:
        list_presets()
        return EXIT_OK

    try:
        scenario = load_config(args.scenario)
        if args.grid:
            scenario = scenario.with_grid(parse_grid(args.grid))
    except ConfigError as e:
        console_print(f"Configuration error: {e}", ConsoleAttr.ERROR)
        return EXIT_CONFIG_ERROR

    controller = SweepController(threads=args.threads)
    try:
        console_print(f"Running {scenario.name} on {scenario.t_grid[2]} points...", ConsoleAttr.INFO)
        samples = controller.run_scenario(scenario)
        oracle = None
        if args.with_oracle:
            console_print("Running the oracle propagator...", ConsoleAttr.INFO)
            with warnings.catch_warnings(record=True) as caught:
                warnings.simplefilter("always", TruncationWarning)
                oracle = controller.run_oracle(scenario)
            for warning in caught:
                console_print(f"Warning: {warning.message}", ConsoleAttr.WARNING)
    except NumericError as e:
        console_print(f"Numeric failure: {e}", ConsoleAttr.ERROR)
        return EXIT_NUMERIC_ERROR

    out = args.out or f"{scenario.name}.csv"
    emit_csv(samples, out, columns=scenario.outputs, oracle=oracle)
    console_print(f"{scenario.name} written to {out}", ConsoleAttr.SUCCESS)
    return EXIT_OK
