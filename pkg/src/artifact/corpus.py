"""Bundled counterexample corpus and reference data.

The corpus is a set of event-log chains ``L1 ⊏ L2 (⊏ L3)``; each chain is
tied to a miner and, optionally, to the model measures it was designed to
exercise.  The relation-evidence engine replays every chain offline — no
network access is needed.  Reference data for discovery algorithms outside
this artifact ships alongside as plain JSON.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Optional

from .eventlog import EventLog, parse_log

_DATA = resources.files(__name__.rsplit(".", 1)[0]) / "data"


@dataclass(frozen=True)
class CorpusEntry:
    id: str
    miner: str
    logs: tuple[EventLog, ...]
    #: Model measures this chain was designed to exercise (may be empty for
    #: general-purpose chains; the evidence engine always records all cells).
    focus_model_measures: tuple[str, ...]


def _read_log(name: str) -> EventLog:
    text = (_DATA / "corpus" / name).read_text(encoding="utf-8")
    return parse_log(text)


@lru_cache(maxsize=1)
def _all_entries() -> tuple[CorpusEntry, ...]:
    manifest = json.loads((_DATA / "manifest.json").read_text(encoding="utf-8"))
    entries = []
    for ident in sorted(manifest):
        meta = manifest[ident]
        logs = tuple(_read_log(name) for name in meta["logs"])
        entries.append(CorpusEntry(
            id=ident, miner=meta["miner"], logs=logs,
            focus_model_measures=tuple(meta["focus_model_measures"])))
    return tuple(entries)


def corpus_entries(miner: Optional[str] = None) -> tuple[CorpusEntry, ...]:
    """All corpus entries, optionally restricted to one miner."""
    entries = _all_entries()
    if miner is None:
        return entries
    return tuple(e for e in entries if e.miner == miner)


def corpus_entry(ident: str) -> CorpusEntry:
    for entry in _all_entries():
        if entry.id == ident:
            return entry
    raise KeyError(ident)


@lru_cache(maxsize=1)
def running_example_log() -> EventLog:
    """The worked-example log used throughout the golden-value tests."""
    return parse_log((_DATA / "fig1.log").read_text(encoding="utf-8"))


@lru_cache(maxsize=1)
def other_miners_reference() -> dict:
    """Reference relation matrix for miners not implemented here (data only)."""
    return json.loads((_DATA / "other_miners.json").read_text(encoding="utf-8"))
