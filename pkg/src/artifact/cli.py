"""Command-line front end.

Exit codes: 0 success, 1 input error, 2 reproduction mismatch.  Identical
argv and inputs produce byte-identical outputs; the ``ANALOG_PATH_BUDGET``
environment variable caps simple-path enumeration work.
"""

from __future__ import annotations

import csv
import io
import json
import sys
from typing import Optional

import click

from .dfg import build_dfg, dfg_report, dfg_to_dot, dfg_to_json
from .eventlog import EventLog, LogFormatError, is_proper_sublog, load_log
from .graphs import PathBudget, PathBudgetExceeded
from .logmetrics import log_report
from .petrinet import net_to_dot, net_to_json
from .relations import (
    LOG_MEASURES,
    MINERS,
    FuzzConfig,
    discover_model,
    evidence_to_csv,
    evidence_to_json,
    falsifications,
    fuzz_pairs,
    measured_report,
    model_measures_for,
)
from .reporting import csv_cell, plain_value, report_items, report_to_csv, report_to_json
from .reproduce import SUITES, run_suites


class ReproduceMismatch(click.ClickException):
    exit_code = 2


def _load(path: str) -> EventLog:
    try:
        return load_log(path)
    except (OSError, LogFormatError) as exc:
        raise click.ClickException(f"cannot read event log {path!r}: {exc}")


def _write(output: Optional[str], text: str) -> None:
    if output is None:
        click.echo(text, nl=False)
    else:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)


def _check_miner(miner: str) -> str:
    if miner not in MINERS:
        raise click.ClickException(
            f"unknown miner {miner!r}; choose one of: {', '.join(MINERS)}")
    return miner


_format_option = click.option(
    "--format", "fmt", type=click.Choice(["csv", "json"]), default="csv",
    show_default=True, help="Output format.")
_output_option = click.option(
    "--output", type=click.Path(dir_okay=False, writable=True), default=None,
    help="Write to this file instead of stdout.")
_jobs_option = click.option(
    "--jobs", type=click.IntRange(min=1), default=1, show_default=True,
    help="Maximum worker count (results are deterministic regardless).")


@click.group()
def cli() -> None:
    """Complexity measures for event logs and discovered process models."""


@cli.command("log-metrics")
@click.argument("log_path", type=click.Path(exists=True, dir_okay=False))
@_format_option
@_output_option
def log_metrics(log_path: str, fmt: str, output: Optional[str]) -> None:
    """All log complexity measures of one event log."""
    report = log_report(_load(log_path))
    _write(output, report_to_csv(report) if fmt == "csv"
           else report_to_json(report) + "\n")


@cli.command("discover")
@click.option("--miner", required=True, help=f"One of: {', '.join(MINERS)}.")
@click.argument("log_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--json", "json_path", type=click.Path(dir_okay=False),
              default=None, help="Write the model as JSON to this file.")
@click.option("--dot", "dot_path", type=click.Path(dir_okay=False),
              default=None, help="Write the model as Graphviz DOT to this file.")
def discover(miner: str, log_path: str, json_path: Optional[str],
             dot_path: Optional[str]) -> None:
    """Discover a model; prints JSON unless --json/--dot are given."""
    _check_miner(miner)
    log = _load(log_path)
    try:
        model = build_dfg(log) if miner == "dfg" else discover_model(miner, log)
    except ValueError as exc:
        raise click.ClickException(str(exc))
    to_json = dfg_to_json if miner == "dfg" else net_to_json
    to_dot = dfg_to_dot if miner == "dfg" else net_to_dot
    if json_path:
        _write(json_path, to_json(model) + "\n")
    if dot_path:
        _write(dot_path, to_dot(model) + "\n")
    if not json_path and not dot_path:
        _write(None, to_json(model) + "\n")


@cli.command("model-metrics")
@click.option("--miner", required=True, help=f"One of: {', '.join(MINERS)}.")
@click.argument("log_path", type=click.Path(exists=True, dir_okay=False))
@_format_option
@_output_option
def model_metrics(miner: str, log_path: str, fmt: str,
                  output: Optional[str]) -> None:
    """Model complexity measures of the model discovered from a log."""
    _check_miner(miner)
    try:
        report = measured_report(miner, _load(log_path), PathBudget())
    except (ValueError, PathBudgetExceeded) as exc:
        raise click.ClickException(str(exc))
    _write(output, report_to_csv(report) if fmt == "csv"
           else report_to_json(report) + "\n")


@cli.command("dfg-metrics")
@click.argument("log_path", type=click.Path(exists=True, dir_okay=False))
@_format_option
@_output_option
def dfg_metrics(log_path: str, fmt: str, output: Optional[str]) -> None:
    """Complexity measures of the directly-follows graph of a log."""
    try:
        report = dfg_report(build_dfg(_load(log_path)), PathBudget())
    except (ValueError, PathBudgetExceeded) as exc:
        raise click.ClickException(str(exc))
    _write(output, report_to_csv(report) if fmt == "csv"
           else report_to_json(report) + "\n")


@cli.command("compare")
@click.option("--miner", required=True, help=f"One of: {', '.join(MINERS)}.")
@click.argument("log1", type=click.Path(exists=True, dir_okay=False))
@click.argument("log2", type=click.Path(exists=True, dir_okay=False))
@_format_option
@_output_option
def compare(miner: str, log1: str, log2: str, fmt: str,
            output: Optional[str]) -> None:
    """Measure deltas between a log and a proper superlog."""
    _check_miner(miner)
    l1, l2 = _load(log1), _load(log2)
    if not is_proper_sublog(l1, l2):
        raise click.ClickException(
            f"{log1!r} is not a proper sublog of {log2!r}: every trace count "
            "in the first log must be <= the second, with at least one "
            "strict increase")
    budget = PathBudget()
    try:
        lr1, lr2 = log_report(l1), log_report(l2)
        mr1 = measured_report(miner, l1, budget)
        mr2 = measured_report(miner, l2, budget)
    except (ValueError, PathBudgetExceeded) as exc:
        raise click.ClickException(str(exc))

    def sign(a, b) -> Optional[int]:
        if a is None or b is None:
            return None
        delta = float(b) - float(a)
        return 0 if abs(delta) <= 1e-9 else (1 if delta > 0 else -1)

    rows = [("log", name, getattr(lr1, name), getattr(lr2, name))
            for name in LOG_MEASURES]
    rows += [("model", name, getattr(mr1, name), getattr(mr2, name))
             for name in model_measures_for(miner)]
    if fmt == "json":
        payload = {"miner": miner, "measures": [
            {"kind": kind, "measure": name, "first": plain_value(v1),
             "second": plain_value(v2), "sign": sign(v1, v2)}
            for kind, name, v1, v2 in rows]}
        _write(output, json.dumps(payload, ensure_ascii=False, indent=2) + "\n")
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["kind", "measure", "first", "second", "sign"])
        for kind, name, v1, v2 in rows:
            s = sign(v1, v2)
            writer.writerow([kind, name, csv_cell(v1), csv_cell(v2),
                             "" if s is None else str(s)])
        _write(output, buf.getvalue())


@cli.command("reproduce")
@click.option("--suite", default="all", show_default=True,
              help=f"One of: {', '.join(SUITES)}, all.")
@_output_option
@_jobs_option
def reproduce(suite: str, output: Optional[str], jobs: int) -> None:
    """Replay the embedded corpus and golden values; exit 2 on mismatch."""
    if suite == "all":
        suites = SUITES
    elif suite in SUITES:
        suites = (suite,)
    else:
        raise click.ClickException(
            f"unknown suite {suite!r}; choose one of: {', '.join(SUITES)}, all")
    result = run_suites(suites, PathBudget())
    lines = []
    for check in result.checks:
        status = "ok" if check.ok else "MISMATCH"
        suffix = f" -- {check.detail}" if check.detail else ""
        lines.append(f"{status:8s} {check.suite}/{check.name}{suffix}")
    for miner in sorted(result.evidence_csv):
        lines.append("")
        lines.append(f"evidence matrix ({miner}):")
        lines.append(result.evidence_csv[miner].rstrip("\n"))
    failures = result.failures()
    lines.append("")
    lines.append(f"{len(result.checks) - len(failures)}/{len(result.checks)} "
                 "checks passed")
    _write(output, "\n".join(lines) + "\n")
    if failures:
        raise ReproduceMismatch(
            f"{len(failures)} reproduction check(s) failed")


@cli.command("fuzz")
@click.option("--miner", required=True, help=f"One of: {', '.join(MINERS)}.")
@click.option("--seed", type=int, default=1, show_default=True)
@click.option("--pairs", type=click.IntRange(min=1), default=100,
              show_default=True)
@click.option("--no-closed-form", is_flag=True, default=False,
              help="Skip closed-form consistency checking per pair.")
@_format_option
@_output_option
@_jobs_option
def fuzz(miner: str, seed: int, pairs: int, no_closed_form: bool, fmt: str,
         output: Optional[str], jobs: int) -> None:
    """Seeded random sublog pairs fed to the relation-evidence engine."""
    _check_miner(miner)
    result = fuzz_pairs(seed=seed, config=FuzzConfig(), miner=miner,
                        cells=None, pairs=pairs, budget=PathBudget(),
                        check_closed_form=not no_closed_form)
    if fmt == "json":
        payload = json.loads(evidence_to_json(miner, result.evidence))
        payload["pairs"] = result.pairs
        payload["skipped"] = result.skipped
        payload["closed_form_failures"] = [
            {"source": src, "field": fld, "closed": want, "measured": got}
            for src, fld, want, got in result.closed_form_failures]
        _write(output, json.dumps(payload, ensure_ascii=False, indent=2) + "\n")
    else:
        text = evidence_to_csv(miner, result.evidence)
        summary = (f"# pairs={result.pairs} skipped={result.skipped} "
                   f"closed_form_failures={len(result.closed_form_failures)} "
                   f"falsifications={len(falsifications(result.evidence))}\n")
        _write(output, summary + text)


def run(argv: Optional[list[str]] = None) -> int:
    """Programmatic entry point returning the exit code."""
    try:
        cli.main(args=argv, prog_name="artifact", standalone_mode=False)
    except click.UsageError as exc:
        # click uses exit code 2 for usage errors; this tool reserves 2 for
        # reproduction mismatches, so bad input is always 1.
        exc.show(file=sys.stderr)
        return 1
    except click.ClickException as exc:
        exc.show(file=sys.stderr)
        return exc.exit_code
    except click.exceptions.Abort:
        return 1
    except SystemExit as exc:  # --help and friends
        return int(exc.code or 0)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
