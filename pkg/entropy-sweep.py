#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# Computes the partial von Neumann entropies of a two-level atom that starts
# excited and interacts with a single field mode through k-quanta transitions
# with intensity-dependent Stark shifts. The field starts in a coherent state,
# an even/odd cat state or a statistical mixture of two coherent states.
#
# Scenarios come from built-in presets (fig1a..fig3c) or from flat JSON/YAML
# files, see templates/. Results are written as CSV, one row per point of the
# λt/π time grid:
#
#   ./entropy-sweep.py --scenario fig1c --out fig1c.csv
#   ./entropy-sweep.py --scenario templates/fig2c-long.json --with-oracle
#   ./entropy-sweep.py --scenario fig3a --grid 0:1:401 --threads 8 --out -
#
# Exit codes: 0 success, 2 configuration error, 3 numeric failure.
#
# File: entropy-sweep.py

import sys

from app.cli import main

if __name__ == "__main__":
    sys.exit(main())
