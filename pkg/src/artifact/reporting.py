"""Serialization helpers shared by the report dataclasses.

JSON output keeps full float precision; CSV output rounds floats to four
decimals.  Undefined measures serialize as ``null`` (JSON) / empty cell
(CSV).  Exact rationals are converted to floats only at this boundary.
"""

from __future__ import annotations

import dataclasses
import json
from fractions import Fraction
from typing import Any


def plain_value(value: Any) -> Any:
    """Convert a report value to a JSON-friendly number (or None)."""
    if value is None:
        return None
    if isinstance(value, bool):
        raise TypeError("unexpected boolean report value")
    if isinstance(value, Fraction):
        return int(value) if value.denominator == 1 else float(value)
    return value


def report_items(report: Any) -> list[tuple[str, Any]]:
    """(field, value) pairs in declared field order."""
    return [(f.name, getattr(report, f.name)) for f in dataclasses.fields(report)]


def report_to_dict(report: Any) -> dict[str, Any]:
    return {name: plain_value(value) for name, value in report_items(report)}


def report_to_json(report: Any) -> str:
    return json.dumps(report_to_dict(report), ensure_ascii=False, indent=2)


def csv_cell(value: Any) -> str:
    value = plain_value(value)
    if value is None:
        return ""
    if isinstance(value, int):
        return str(value)
    return f"{value:.4f}"


def report_to_csv(report: Any) -> str:
    items = report_items(report)
    header = ",".join(name for name, _ in items)
    row = ",".join(csv_cell(value) for _, value in items)
    return header + "\n" + row + "\n"
