"""Event-log data model: multisets of traces with stable variant order.

A trace is a tuple of activity names; an event log maps each distinct trace
(variant) to a positive count.  The variant order is the order of first
appearance in the input, which downstream code relies on (it fixes the
concatenation order of the Lempel-Ziv measure and makes all serialized
output deterministic).
"""

from __future__ import annotations

import json
from collections.abc import Iterable, Iterator, Mapping
from typing import Optional

Trace = tuple[str, ...]

#: Counts are stored as unsigned 64-bit integers; anything larger is an error.
U64_MAX = 2**64 - 1

_FORBIDDEN_NAME_CHARS = set(",;\n\r")


class LogFormatError(ValueError):
    """Raised when textual log input is malformed."""


def _check_activity_name(name: str) -> str:
    if not name:
        raise LogFormatError("empty activity name")
    bad = _FORBIDDEN_NAME_CHARS.intersection(name)
    if bad:
        raise LogFormatError(f"activity name {name!r} contains forbidden character")
    return name


def _check_count(count: int) -> int:
    if not isinstance(count, int) or isinstance(count, bool):
        raise LogFormatError(f"count must be an integer, got {count!r}")
    if count <= 0:
        raise LogFormatError(f"count must be positive, got {count}")
    if count > U64_MAX:
        raise LogFormatError(f"count {count} exceeds unsigned 64-bit range")
    return count


class EventLog:
    """Immutable multiset of traces with first-appearance variant order.

    Besides the merged variant map, the log remembers its *segments*: the
    (trace, count) entries in input order, merging only directly adjacent
    repeats.  Equality and the sublog relation ignore segments (they are
    multiset notions); only the Lempel-Ziv concatenation reads them, because
    its value depends on the order in which trace blocks are listed.
    """

    __slots__ = ("_variants", "_segments", "_hash")

    def __init__(self, pairs: Iterable[tuple[Iterable[str], int]] = ()):
        variants: dict[Trace, int] = {}
        segments: list[tuple[Trace, int]] = []
        for trace, count in pairs:
            key = tuple(_check_activity_name(a) for a in trace)
            _check_count(count)
            total = variants.get(key, 0) + count
            if total > U64_MAX:
                raise LogFormatError(f"count for variant {key} overflows 64 bits")
            variants[key] = total
            if segments and segments[-1][0] == key:
                segments[-1] = (key, segments[-1][1] + count)
            else:
                segments.append((key, count))
        self._variants = variants
        self._segments = tuple(segments)
        self._hash: Optional[int] = None

    # -- basic accessors ---------------------------------------------------

    @property
    def variants(self) -> Mapping[Trace, int]:
        return dict(self._variants)

    @property
    def order(self) -> tuple[Trace, ...]:
        """Distinct traces in first-appearance order."""
        return tuple(self._variants)

    def count(self, trace: Iterable[str]) -> int:
        return self._variants.get(tuple(trace), 0)

    def support(self) -> tuple[Trace, ...]:
        return self.order

    def trace_count(self) -> int:
        return sum(self._variants.values())

    def pairs(self) -> Iterator[tuple[Trace, int]]:
        return iter(self._variants.items())

    @property
    def segments(self) -> tuple[tuple[Trace, int], ...]:
        """(trace, count) blocks in input order; repeats merged only when adjacent."""
        return self._segments

    def __len__(self) -> int:
        return len(self._variants)

    def __bool__(self) -> bool:
        return bool(self._variants)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EventLog):
            return NotImplemented
        return self._variants == other._variants

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._variants.items()))
        return self._hash

    def __repr__(self) -> str:
        inner = ", ".join(f"{list(t)}^{c}" for t, c in self._variants.items())
        return f"EventLog([{inner}])"

    def __add__(self, other: "EventLog") -> "EventLog":
        """Multiset sum; variant order is self's order, then other's new variants."""
        if not isinstance(other, EventLog):
            return NotImplemented
        return EventLog(list(self._segments) + list(other._segments))


def parse_log(text: str | bytes) -> EventLog:
    """Parse the line format ``<count>;<a1>,<a2>,...``.

    ``#``-prefixed lines and blank lines are ignored; activity names are
    trimmed of surrounding whitespace.  Repeated variant lines accumulate.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    pairs: list[tuple[list[str], int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head, sep, tail = line.partition(";")
        if not sep:
            raise LogFormatError(f"line {lineno}: missing ';' separator")
        try:
            count = int(head.strip())
        except ValueError:
            raise LogFormatError(f"line {lineno}: malformed count {head.strip()!r}") from None
        _check_count(count)
        activities = [a.strip() for a in tail.split(",")] if tail.strip() else []
        pairs.append((activities, count))
    return EventLog(pairs)


def parse_log_json(text: str | bytes) -> EventLog:
    """Parse the JSON alternative ``{"variants": [{"count": n, "trace": [...]}]}``."""
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise LogFormatError(f"invalid JSON: {exc}") from None
    if not isinstance(payload, dict) or "variants" not in payload:
        raise LogFormatError("JSON log must be an object with a 'variants' list")
    variants = payload["variants"]
    if not isinstance(variants, list):
        raise LogFormatError("'variants' must be a list")
    pairs = []
    for entry in variants:
        if not isinstance(entry, dict) or "count" not in entry or "trace" not in entry:
            raise LogFormatError("each variant needs 'count' and 'trace'")
        trace = entry["trace"]
        if not isinstance(trace, list) or not all(isinstance(a, str) for a in trace):
            raise LogFormatError("'trace' must be a list of strings")
        pairs.append((trace, entry["count"]))
    return EventLog(pairs)


def load_log(path: str) -> EventLog:
    """Load a log file, dispatching on a ``.json`` suffix."""
    with open(path, "r", encoding="utf-8") as handle:
        text = handle.read()
    if path.endswith(".json"):
        return parse_log_json(text)
    return parse_log(text)


def serialize_log(log: EventLog) -> str:
    """Inverse of :func:`parse_log`; preserves segment order."""
    return "\n".join(f"{c};{','.join(t)}" for t, c in log.segments) + "\n"


def serialize_log_json(log: EventLog) -> str:
    payload = {"variants": [{"count": c, "trace": list(t)} for t, c in log.segments]}
    return json.dumps(payload, ensure_ascii=False, indent=2)


def is_proper_sublog(l1: EventLog, l2: EventLog) -> bool:
    """True iff every variant count of ``l1`` is <= that of ``l2`` and ``l1 != l2``."""
    if l1 == l2:
        return False
    return all(c <= l2.count(t) for t, c in l1.pairs())


def alphabet(log: EventLog) -> set[str]:
    acts: set[str] = set()
    for trace in log.order:
        acts.update(trace)
    return acts
