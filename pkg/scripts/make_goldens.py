#!/usr/bin/env python3
"""Regenerate the golden CLI corpus under tests/golden/.

Run from the repository root after an intentional output-format change;
the CLI regression tests compare byte-for-byte against these files.
"""

from pathlib import Path

from click.testing import CliRunner

from anumber.cli import dwork, fermat

GOLDEN_DIR = Path(__file__).resolve().parent.parent / "tests" / "golden"

CASES = [
    ("analyze_d5_r3_p2.json", fermat, ["analyze", "-d", "5", "-r", "3", "-p", "2", "--format", "json"]),
    ("analyze_d5_r3_p7.json", fermat, ["analyze", "-d", "5", "-r", "3", "-p", "7", "--format", "json"]),
    ("analyze_d5_r3_p11.json", fermat, ["analyze", "-d", "5", "-r", "3", "-p", "11", "--format", "json"]),
    ("analyze_d5_r3_p19.json", fermat, ["analyze", "-d", "5", "-r", "3", "-p", "19", "--format", "json"]),
    ("analyze_d5_r4_p7.json", fermat, ["analyze", "-d", "5", "-r", "4", "-p", "7", "--format", "json"]),
    ("analyze_d5_r4_p11.json", fermat, ["analyze", "-d", "5", "-r", "4", "-p", "11", "--format", "json"]),
    ("analyze_d5_r4_p19.json", fermat, ["analyze", "-d", "5", "-r", "4", "-p", "19", "--format", "json"]),
    ("analyze_d4_r3_p3.json", fermat, ["analyze", "-d", "4", "-r", "3", "-p", "3", "--format", "json"]),
    ("analyze_d8_r7_p7.json", fermat, ["analyze", "-d", "8", "-r", "7", "-p", "7", "--format", "json"]),
    ("analyze_d3_r8_p7_level6.json", fermat,
     ["analyze", "-d", "3", "-r", "8", "-p", "7", "--level", "6", "--format", "json"]),
    ("analyze_d5_r3_p2.csv", fermat, ["analyze", "-d", "5", "-r", "3", "-p", "2", "--format", "csv"]),
    ("hodge_d5_r4.json", fermat, ["hodge", "-d", "5", "-r", "4", "--format", "json"]),
    ("hodge_d3_r8.json", fermat, ["hodge", "-d", "3", "-r", "8", "--format", "json"]),
    ("sweep_d5_r3_2_30.csv", fermat,
     ["sweep", "-d", "5", "-r", "3", "--primes", "2..30", "--jobs", "1", "--format", "csv"]),
    ("sweep_d5_r4_2_50.csv", fermat,
     ["sweep", "-d", "5", "-r", "4", "--primes", "2..50", "--jobs", "1", "--format", "csv"]),
    ("sweep_d5_r3_2_30.json", fermat,
     ["sweep", "-d", "5", "-r", "3", "--primes", "2..30", "--jobs", "1", "--format", "json"]),
    ("dwork_p2.json", dwork, ["-p", "2", "--format", "json"]),
    ("dwork_p3.json", dwork, ["-p", "3", "--format", "json"]),
    ("dwork_p7_oracle.json", dwork, ["-p", "7", "--oracle", "--format", "json"]),
    ("dwork_p11_oracle.json", dwork, ["-p", "11", "--oracle", "--format", "json"]),
    ("dwork_p13_oracle.json", dwork, ["-p", "13", "--oracle", "--format", "json"]),
    ("dwork_p19.json", dwork, ["-p", "19", "--format", "json"]),
    ("dwork_p7.csv", dwork, ["-p", "7", "--format", "csv"]),
]


def render(command, args) -> str:
    result = CliRunner().invoke(command, args, catch_exceptions=False)
    if result.exit_code != 0:
        raise RuntimeError(f"golden case failed ({args}): exit {result.exit_code}")
    return result.stdout


def main() -> None:
    GOLDEN_DIR.mkdir(parents=True, exist_ok=True)
    for name, command, args in CASES:
        (GOLDEN_DIR / name).write_text(render(command, args))
        print(f"wrote {name}")


if __name__ == "__main__":
    main()
