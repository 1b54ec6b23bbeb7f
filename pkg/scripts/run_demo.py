#!/usr/bin/env python3
"""Drive the CLI through one representative instance of every subcommand.

Usage: python scripts/run_demo.py [--format text|json]
"""
import argparse
import sys

from tepperlab import cli

SHOWCASE = [
    ["tepper", "--n", "3", "--mode", "symbolic"],
    ["tepper", "--n", "3", "--x", "5"],
    ["lemma", "--poly", "x^2 + 3*x + 1", "--n", "3"],
    ["general", "--poly", "5*x^2 - x + 9"],
    ["conjecture", "--poly", "2*x^3 - x", "--l", "2"],
    ["expansion", "--n", "2", "--x", "10"],
    ["occupancy", "--wagons", "3", "--passengers", "2", "--occupied", "2", "--oracle"],
    ["powersum", "--n", "4", "--p", "4"],
    ["wilson", "--p", "7", "--route", "naive"],
    ["wilson", "--p", "7", "--route", "tepper"],
    ["wilson", "--p", "7", "--route", "fermat"],
    ["sweep", "--max-degree", "4", "--max-step", "3", "--trials", "2", "--seed", "1"],
]


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--format", choices=("text", "json"), default="text")
    args = parser.parse_args()

    worst = 0
    for command in SHOWCASE:
        print(f"$ tepperlab {' '.join(command)}")
        code = cli.main(command + ["--format", args.format])
        print(f"(exit {code})\n")
        worst = max(worst, code)
    return worst


if __name__ == "__main__":
    sys.exit(main())
