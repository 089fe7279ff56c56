"""Command-line front end.

Two entry points: ``fermat`` (subcommands analyze, sweep, hodge) and
``dwork``.  Every command emits a report envelope with the fixed key
order {version, input, result, anomalies}; JSON and CSV payloads are
byte-stable across runs (timing goes to stderr only, never into the data
payload).  Exit codes: 0 success, 1 internal assertion or anomaly,
2 invalid input.
"""

from __future__ import annotations

import csv
import io
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Any

import click
import sympy

from . import __version__
from .algebra import count_restricted_compositions
from .dwork import DworkFamily, compare_oracle, hasse_polynomial
from .fermat import (
    FermatDescriptor,
    a_number,
    classify_height,
    hasse_witt,
    hodge_numbers,
    level_a_number,
    predict_a,
)

EXIT_ANOMALY = 1
EXIT_INVALID = 2

FORMATS = click.Choice(["table", "json", "csv"])


def _envelope(command: str, inputs: dict[str, Any], result: dict[str, Any],
              anomalies: list[str]) -> dict[str, Any]:
    return {
        "version": __version__,
        "input": {"command": command, **inputs},
        "result": result,
        "anomalies": anomalies,
    }


def _poly_to_json(terms: dict[int, int]) -> dict[str, int]:
    # string keys, ascending exponent order, for diff-friendly goldens
    return {str(e): terms[e] for e in sorted(terms)}


def _write(text: str, output: str | None) -> None:
    if output is None:
        click.echo(text, nl=False)
    else:
        with open(output, "w") as fh:
            fh.write(text)


def _apply_config(ctx: click.Context, config: str | None) -> None:
    """Fill in options from a JSON config file; explicit flags win."""
    if config is None:
        return
    try:
        with open(config) as fh:
            values = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        _invalid(f"unreadable config: {exc}")
    for key, value in values.items():
        name = key.replace("-", "_")
        if name not in ctx.params:
            continue
        source = ctx.get_parameter_source(name)
        if source is not None and source.name == "DEFAULT":
            ctx.params[name] = value


def _invalid(message: str) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(EXIT_INVALID)


def _kv_table(pairs: list[tuple[str, Any]]) -> str:
    width = max(len(k) for k, _ in pairs)
    return "".join(f"{k.ljust(width)}  {v}\n" for k, v in pairs)


def _kv_csv(pairs: list[tuple[str, Any]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow([k for k, _ in pairs])
    writer.writerow([v for _, v in pairs])
    return buf.getvalue()


def _json_dumps(envelope: dict[str, Any]) -> str:
    return json.dumps(envelope, indent=2) + "\n"


@click.group()
def fermat() -> None:
    """Invariants of Fermat hypersurfaces over prime fields."""


@fermat.command("analyze")
@click.option("-d", "--degree", type=int, required=True)
@click.option("-r", "--ambient", type=int, required=True)
@click.option("-p", "--prime", type=int, required=True)
@click.option("--level", type=int, default=None, help="Also report the level-q a-number.")
@click.option("--format", "fmt", type=FORMATS, default="table", show_default=True)
@click.option("--output", type=click.Path(dir_okay=False), default=None)
@click.option("--config", type=click.Path(exists=False), default=None,
              help="JSON file with the same keys as the flags; flags win.")
@click.pass_context
def cmd_analyze(ctx: click.Context, degree: int, ambient: int, prime: int,
                level: int | None, fmt: str, output: str | None, config: str | None) -> None:
    """Full report for one Fermat hypersurface."""
    _apply_config(ctx, config)
    degree, ambient, prime = ctx.params["degree"], ctx.params["ambient"], ctx.params["prime"]
    level, fmt, output = ctx.params["level"], ctx.params["fmt"], ctx.params["output"]
    started = time.perf_counter()
    try:
        desc = FermatDescriptor(degree, ambient, prime)
    except ValueError as exc:
        _invalid(str(exc))
    anomalies: list[str] = []
    result: dict[str, Any] = {
        "dimension": desc.n,
        "hodge_numbers": list(hodge_numbers(desc)),
        "a_number": None,
        "a_vector": None,
        "positions": None,
        "hasse_witt_rank": None,
        "predicted_a": None,
        "prediction_match": None,
        "height": None,
        "level": level,
        "level_a_number": None,
    }
    if desc.has_top_level():
        report = a_number(desc)
        anomalies.extend(report.anomalies)
        result["a_number"] = report.a_number
        result["a_vector"] = list(report.a_vector)
        result["positions"] = list(report.positions)
        result["hasse_witt_rank"] = hasse_witt(desc).rank
        predicted = predict_a(desc)
        result["predicted_a"] = predicted
        result["prediction_match"] = None if predicted is None else predicted == report.a_number
        if desc.is_calabi_yau():
            height = classify_height(desc)
            result["height"] = {"tag": height.tag.value, "note": height.note}
    if level is not None:
        try:
            result["level_a_number"] = level_a_number(desc, level)
        except ValueError as exc:
            _invalid(str(exc))

    envelope = _envelope(
        "fermat analyze",
        {"degree": degree, "ambient": ambient, "prime": prime, "level": level},
        result, anomalies,
    )
    if fmt == "json":
        _write(_json_dumps(envelope), output)
    else:
        pairs = [
            ("degree", degree), ("ambient", ambient), ("prime", prime),
            ("dimension", desc.n),
            ("hodge_numbers", " ".join(map(str, result["hodge_numbers"]))),
            ("a_number", result["a_number"]),
            ("a_vector", "" if result["a_vector"] is None
             else " ".join(map(str, result["a_vector"]))),
            ("hasse_witt_rank", result["hasse_witt_rank"]),
            ("predicted_a", result["predicted_a"]),
            ("prediction_match", result["prediction_match"]),
            ("height", None if result["height"] is None else result["height"]["tag"]),
            ("level", level),
            ("level_a_number", result["level_a_number"]),
        ]
        _write(_kv_csv(pairs) if fmt == "csv" else _kv_table(pairs), output)
        if fmt == "table":
            click.echo(f"elapsed: {time.perf_counter() - started:.3f}s", err=True)
    if anomalies:
        for note in anomalies:
            click.echo(f"anomaly: {note}", err=True)
        sys.exit(EXIT_ANOMALY)


SWEEP_COLUMNS = ["p", "p_mod_d", "status", "a", "a_vector", "hw_rank", "predicted_a", "match"]


def _sweep_row(degree: int, ambient: int, p: int) -> dict[str, Any]:
    # top-level for multiprocessing pickling
    row: dict[str, Any] = {"p": p, "p_mod_d": p % degree, "status": "ok", "a": None,
                           "a_vector": None, "hw_rank": None, "predicted_a": None,
                           "match": None, "anomalies": []}
    if degree % p == 0:
        row["status"] = "skipped"
        return row
    try:
        desc = FermatDescriptor(degree, ambient, p)
        report = a_number(desc)
        row["a"] = report.a_number
        row["a_vector"] = list(report.a_vector)
        row["hw_rank"] = hasse_witt(desc).rank
        predicted = predict_a(desc)
        row["predicted_a"] = predicted
        row["match"] = None if predicted is None else predicted == report.a_number
        row["anomalies"] = list(report.anomalies)
    except ValueError as exc:
        row["status"] = f"error: {exc}"
    return row


def _parse_prime_range(spec: str) -> tuple[int, int]:
    try:
        lo, hi = spec.split("..")
        return int(lo), int(hi)
    except ValueError:
        _invalid(f"bad prime range (want A..B): {spec!r}")


def _row_cells(row: dict[str, Any]) -> list[str]:
    def fmt(value: Any) -> str:
        if value is None:
            return ""
        if isinstance(value, list):
            return ";".join(map(str, value))
        return str(value)
    return [fmt(row[c]) for c in SWEEP_COLUMNS]


@fermat.command("sweep")
@click.option("-d", "--degree", type=int, required=True)
@click.option("-r", "--ambient", type=int, required=True)
@click.option("--primes", "prime_range", type=str, required=True, metavar="A..B")
@click.option("--jobs", type=int, default=None, help="Worker processes (default: cores).")
@click.option("--format", "fmt", type=FORMATS, default="table", show_default=True)
@click.option("--output", type=click.Path(dir_okay=False), default=None)
@click.option("--config", type=click.Path(exists=False), default=None)
@click.pass_context
def cmd_sweep(ctx: click.Context, degree: int, ambient: int, prime_range: str,
              jobs: int | None, fmt: str, output: str | None, config: str | None) -> None:
    """One report row per prime in a range; primes dividing d are skipped."""
    _apply_config(ctx, config)
    degree, ambient = ctx.params["degree"], ctx.params["ambient"]
    prime_range, jobs = ctx.params["prime_range"], ctx.params["jobs"]
    fmt, output = ctx.params["fmt"], ctx.params["output"]
    lo, hi = _parse_prime_range(prime_range)
    if lo > hi:
        _invalid(f"empty prime range {lo}..{hi}")
    if degree < 2 or ambient < 2:
        _invalid(f"need degree >= 2 and ambient >= 2, got d={degree}, r={ambient}")
    primes = list(sympy.primerange(lo, hi + 1))
    if not primes:
        _invalid(f"no primes in range {lo}..{hi}")

    if jobs is None:
        jobs = os.cpu_count() or 1

    # rows are written as they arrive (prime order preserved by map)
    anomalous = False
    out = sys.stdout if output is None else open(output, "w")
    pool = ProcessPoolExecutor(max_workers=jobs) if jobs > 1 and len(primes) > 1 else None
    try:
        if pool is not None:
            rows = pool.map(_sweep_row, [degree] * len(primes), [ambient] * len(primes), primes)
        else:
            rows = (_sweep_row(degree, ambient, p) for p in primes)
        if fmt == "json":
            for row in rows:
                payload = {c: row[c] for c in SWEEP_COLUMNS}
                envelope = _envelope(
                    "fermat sweep",
                    {"degree": degree, "ambient": ambient, "primes": f"{lo}..{hi}"},
                    payload, row["anomalies"],
                )
                out.write(json.dumps(envelope) + "\n")
                anomalous = anomalous or bool(row["anomalies"])
        elif fmt == "csv":
            writer = csv.writer(out, lineterminator="\n")
            writer.writerow(SWEEP_COLUMNS)
            for row in rows:
                writer.writerow(_row_cells(row))
                anomalous = anomalous or bool(row["anomalies"])
        else:
            widths = [max(len(c), 14) for c in SWEEP_COLUMNS]
            out.write("  ".join(c.ljust(w) for c, w in zip(SWEEP_COLUMNS, widths)).rstrip() + "\n")
            for row in rows:
                cells = _row_cells(row)
                out.write("  ".join(c.ljust(w) for c, w in zip(cells, widths)).rstrip() + "\n")
                anomalous = anomalous or bool(row["anomalies"])
    finally:
        if pool is not None:
            pool.shutdown()
        if output is not None:
            out.close()
    if anomalous:
        sys.exit(EXIT_ANOMALY)


@fermat.command("hodge")
@click.option("-d", "--degree", type=int, required=True)
@click.option("-r", "--ambient", type=int, required=True)
@click.option("--format", "fmt", type=FORMATS, default="table", show_default=True)
@click.option("--output", type=click.Path(dir_okay=False), default=None)
@click.option("--config", type=click.Path(exists=False), default=None)
@click.pass_context
def cmd_hodge(ctx: click.Context, degree: int, ambient: int, fmt: str,
              output: str | None, config: str | None) -> None:
    """Primitive Hodge numbers per pole-order level (characteristic-free)."""
    _apply_config(ctx, config)
    degree, ambient = ctx.params["degree"], ctx.params["ambient"]
    fmt, output = ctx.params["fmt"], ctx.params["output"]
    if degree < 2 or ambient < 2:
        _invalid(f"need degree >= 2 and ambient >= 2, got d={degree}, r={ambient}")
    n = ambient - 1
    counts = [count_restricted_compositions(q * degree, ambient + 1, 1, degree - 1)
              for q in range(1, n + 2)]
    result = {
        "dimension": n,
        "levels": [{"q": q, "hodge_number": c} for q, c in enumerate(counts, start=1)],
        "total": sum(counts),
    }
    envelope = _envelope("fermat hodge", {"degree": degree, "ambient": ambient}, result, [])
    if fmt == "json":
        _write(_json_dumps(envelope), output)
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["q", "hodge_number"])
        for q, c in enumerate(counts, start=1):
            writer.writerow([q, c])
        _write(buf.getvalue(), output)
    else:
        pairs = [(f"q={q}", c) for q, c in enumerate(counts, start=1)]
        pairs.append(("total", sum(counts)))
        _write(_kv_table(pairs), output)


@click.command()
@click.option("-p", "--prime", type=int, required=True)
@click.option("--oracle", "with_oracle", is_flag=True, default=False,
              help="Run the coefficient-extraction oracle comparison.")
@click.option("--format", "fmt", type=FORMATS, default="table", show_default=True)
@click.option("--output", type=click.Path(dir_okay=False), default=None)
@click.option("--config", type=click.Path(exists=False), default=None)
@click.pass_context
def dwork(ctx: click.Context, prime: int, with_oracle: bool, fmt: str,
          output: str | None, config: str | None) -> None:
    """Hasse polynomial report for the Dwork quintic family over F_p."""
    _apply_config(ctx, config)
    prime, with_oracle = ctx.params["prime"], ctx.params["with_oracle"]
    fmt, output = ctx.params["fmt"], ctx.params["output"]
    try:
        fam = DworkFamily(prime)
    except ValueError as exc:
        _invalid(str(exc))
    report = hasse_polynomial(fam)
    fermat_a = a_number(FermatDescriptor(5, 4, prime)).a_number
    anomalies: list[str] = []
    result: dict[str, Any] = {
        "p": prime,
        "hasse_polynomial": _poly_to_json(report.polynomial.terms()),
        "degree": report.degree,
        "ord0": report.ord0,
        "fp_roots": sorted(report.fp_roots),
        "a_number_alpha0": report.a_number_at_alpha0,
        "fermat_cross_check": {"value": fermat_a, "match": fermat_a == report.ord0},
        "oracle": None,
    }
    if fermat_a != report.ord0:
        anomalies.append(
            f"ord0 H = {report.ord0} disagrees with the Fermat-side a-number {fermat_a}"
        )
    if with_oracle:
        cmp = compare_oracle(fam)
        result["oracle"] = {
            "polynomial": _poly_to_json(cmp.oracle.terms()),
            "sparse_checked": cmp.sparse_checked,
            "sparse_agrees": cmp.sparse_agrees,
            "support_matches": cmp.support_matches,
            "ord0_matches": cmp.ord0_matches,
            "substitution_units": list(cmp.substitution_units),
            "expected_unit_found": cmp.expected_unit_found,
        }
        if not cmp.ord0_matches or cmp.sparse_agrees is False:
            anomalies.append("oracle disagreement on ord0 or sparse path")
        if not cmp.expected_unit_found:
            anomalies.append(
                f"finding: no substitution unit 5 relating oracle and H "
                f"(units found: {list(cmp.substitution_units)})"
            )

    envelope = _envelope("dwork", {"prime": prime, "oracle": with_oracle}, result, anomalies)
    if fmt == "json":
        _write(_json_dumps(envelope), output)
    else:
        pairs = [
            ("p", prime),
            ("H", " + ".join(f"{c}*a^{e}" for e, c in sorted(report.polynomial.terms().items(),
                                                             reverse=True))),
            ("degree", report.degree),
            ("ord0", report.ord0),
            ("fp_roots", " ".join(map(str, sorted(report.fp_roots)))),
            ("a_number_alpha0", report.a_number_at_alpha0),
            ("fermat_a_number", fermat_a),
            ("cross_check_match", fermat_a == report.ord0),
        ]
        if with_oracle and result["oracle"] is not None:
            o = result["oracle"]
            pairs += [
                ("oracle_support_matches", o["support_matches"]),
                ("oracle_ord0_matches", o["ord0_matches"]),
                ("substitution_units", " ".join(map(str, o["substitution_units"]))),
                ("expected_unit_found", o["expected_unit_found"]),
            ]
        _write(_kv_csv(pairs) if fmt == "csv" else _kv_table(pairs), output)
    if any(not a.startswith("finding:") for a in anomalies):
        for note in anomalies:
            click.echo(f"anomaly: {note}", err=True)
        sys.exit(EXIT_ANOMALY)
    if anomalies:
        for note in anomalies:
            click.echo(note, err=True)


if __name__ == "__main__":
    fermat()
