#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# Draws the atomic entropy S_a (solid) and the field entropy S_f (dashed)
# against the scaled time λt/π from a CSV written by entropy-sweep.py. When
# the CSV carries oracle columns they are overlaid as dotted lines.
#
#   ./plot-entropy.py fig1a.csv --out fig1a.png
#
# File: plot-entropy.py

import argparse
import sys

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np
from colorama import init as colorama_init

from utils.console_attr import ConsoleAttr, console_print


def check_args():
    parser = argparse.ArgumentParser(description="Plot entropy curves from an entropy-sweep CSV.")
    parser.add_argument("csv", help="CSV file written by entropy-sweep.py")
    parser.add_argument("--out", help="image file (default: CSV name with .png)")
    parser.add_argument("--title", help="plot title (default: CSV file name)")
    return parser.parse_args()


def main():
    colorama_init()
    args = check_args()
    try:
        data = np.genfromtxt(args.csv, delimiter=",", names=True)
    except OSError as e:
        console_print(f"Error: {e}", ConsoleAttr.ERROR)
        sys.exit(1)

    columns = data.dtype.names
    for required in ("scaled_t", "S_a", "S_f"):
        if required not in columns:
            console_print(f"Error: {args.csv} has no '{required}' column", ConsoleAttr.ERROR)
            sys.exit(1)

    fig, ax = plt.subplots(figsize=(8, 4))
    ax.plot(data["scaled_t"], data["S_a"], "-", label=r"$S_a$")
    ax.plot(data["scaled_t"], data["S_f"], "--", label=r"$S_f$")
    if "S_a_oracle" in columns:
        ax.plot(data["scaled_t"], data["S_a_oracle"], ":", label=r"$S_a$ oracle")
        ax.plot(data["scaled_t"], data["S_f_oracle"], ":", label=r"$S_f$ oracle")
    ax.set_xlabel(r"$\lambda t/\pi$")
    ax.set_ylabel("entropy (nats)")
    ax.set_title(args.title or args.csv)
    ax.legend()
    ax.grid(True)

    out = args.out or args.csv.rsplit(".", 1)[0] + ".png"
    fig.savefig(out, dpi=150, bbox_inches="tight")
    console_print(f"Plot written to {out}", ConsoleAttr.SUCCESS)


if __name__ == "__main__":
    main()
