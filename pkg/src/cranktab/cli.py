"""Command-line front end.

Subcommands:

* ``table``      -- build a crank-statistic table and export it (CSV/JSON);
* ``verify``     -- run theorem/conjecture sweeps and identity checks;
* ``identity``   -- run one identity-catalog entry;
* ``crosscheck`` -- compare a GF-built table against the enumeration oracle.

Exit status: 0 when everything passed, 1 when any check failed, 2 on usage
or configuration errors.  Outputs are deterministic for identical
configurations, except for the measured ``runtime_ms`` fields in reports.
The ``CRANKTAB_THREADS`` environment variable hints how many checks may be
evaluated concurrently.
"""

from __future__ import annotations

import json
import os
import sys
from dataclasses import dataclass

import click

from cranktab import brute, identities, tables, verify


@dataclass
class RunConfig:
    statistic: str | None = None
    n_max: int | None = None
    order: int | None = None
    k_list: tuple | None = None
    fmt: str = "csv"
    output: str | None = None
    checks: tuple = ()
    threads: int = 1


def _threads_hint() -> int:
    raw = os.environ.get("CRANKTAB_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_reports(reports, output) -> None:
    text = json.dumps(verify.reports_to_json_obj(reports), indent=2) + "\n"
    _emit(text, output)
    code = verify.exit_code(reports)
    if code:
        raise SystemExit(code)


def _parse_k_list(raw: str | None):
    if not raw:
        return None
    try:
        ks = tuple(int(part) for part in raw.split(","))
    except ValueError:
        raise click.UsageError(f"bad k list {raw!r}; expected comma-separated integers")
    if any(k < 2 for k in ks):
        raise click.UsageError("every k must be >= 2")
    return ks


@click.group()
def main():
    """Exact crank-statistic tables and q-series verification."""


@main.command()
@click.option("--stat", required=True,
              type=click.Choice(tables.ALL_STATISTICS), help="Statistic to tabulate.")
@click.option("--k", type=int, default=None, help="Number of colors (kcrank only).")
@click.option("--n-max", type=int, default=50, show_default=True)
@click.option("--order", type=int, default=None,
              help="Truncation order of the generating function (default: n-max).")
@click.option("--provenance", type=click.Choice(["gf", "oracle"]), default=None,
              help="Table backend (default: gf, oracle for rank).")
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv",
              show_default=True)
@click.option("--output", "-o", type=click.Path(), default=None,
              help="Output file (default: stdout).")
def table(stat, k, n_max, order, provenance, fmt, output):
    """Export the weighted count table of one statistic."""
    if provenance is None:
        provenance = "oracle" if stat == "rank" else "gf"
    if stat == "kcrank" and k is None:
        raise click.UsageError("--stat kcrank requires --k")
    if order is not None and n_max > order:
        raise click.UsageError(f"--n-max {n_max} exceeds --order {order}")
    try:
        t = tables.build_table(stat, n_max, provenance, k=k, order=order)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    _emit(t.render(fmt), output)


@main.command("verify")
@click.option("--check", "checks", multiple=True, required=True,
              help="Check id, or 'all'; may be repeated or comma-separated.")
@click.option("--n-max", type=int, default=None, help="Scan ceiling for sweeps.")
@click.option("--order", type=int, default=None, help="Truncation order for identities.")
@click.option("--k", "k_raw", type=str, default=None,
              help="Comma-separated k values for the k-crank checks.")
@click.option("--output", "-o", type=click.Path(), default=None)
def verify_cmd(checks, n_max, order, k_raw, output):
    """Run verification sweeps; exit 0 iff every check passes."""
    ids = [c for chunk in checks for c in chunk.split(",") if c]
    try:
        reports = verify.run_checks(
            ids, n_max=n_max, order=order, k_list=_parse_k_list(k_raw),
            threads=_threads_hint(),
        )
    except KeyError as exc:
        raise click.UsageError(
            f"{exc.args[0]}; available: {', '.join(verify.available_checks())}"
        )
    _emit_reports(reports, output)


@main.command()
@click.option("--id", "entry_id", required=True, help="Identity catalog entry id.")
@click.option("--order", type=int, default=verify.DEFAULT_IDENTITY_ORDER,
              show_default=True)
@click.option("--output", "-o", type=click.Path(), default=None)
def identity(entry_id, order, output):
    """Check one identity-catalog entry at the given truncation order."""
    if entry_id not in identities.CATALOG:
        raise click.UsageError(
            f"unknown identity {entry_id!r}; available: {', '.join(sorted(identities.CATALOG))}"
        )
    report = verify.check_identity(entry_id, order)
    _emit_reports([report], output)


@main.command()
@click.option("--stat", required=True, type=click.Choice(tables.ALL_STATISTICS))
@click.option("--k", type=int, default=None)
@click.option("--n-max", type=int, default=25, show_default=True)
@click.option("--output", "-o", type=click.Path(), default=None)
def crosscheck(stat, k, n_max, output):
    """Compare the GF-built table against the enumeration oracle."""
    if stat == "rank":
        raise click.UsageError("rank has no generating-function backend to cross-check")
    if stat == "kcrank" and k is None:
        raise click.UsageError("--stat kcrank requires --k")
    ceiling = brute.ORACLE_CEILINGS.get(stat)
    if ceiling is not None and n_max > ceiling:
        raise click.UsageError(
            f"--n-max {n_max} exceeds the enumeration ceiling {ceiling} for {stat}"
        )
    gf = tables.build_table(stat, n_max, "gf", k=k)
    oracle = tables.build_table(stat, n_max, "oracle", k=k)
    _emit_reports([verify.check_table_consistency(gf, oracle)], output)


if __name__ == "__main__":
    main()
