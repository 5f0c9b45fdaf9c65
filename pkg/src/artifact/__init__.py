"""Complexity measures for event logs and discovered process models.

The package has four layers:

- event logs and their 18 complexity measures (:mod:`artifact.eventlog`,
  :mod:`artifact.logmetrics`);
- workflow nets and their 17 complexity measures (:mod:`artifact.petrinet`,
  :mod:`artifact.netmetrics`);
- discovery algorithms — flower model, trace net, alpha miner,
  directly-follows graphs and the directly-follows miner
  (:mod:`artifact.discovery`, :mod:`artifact.dfg`);
- a relation-evidence engine that replays a bundled counterexample corpus
  and seeded fuzzing against the expected log-vs-model relation tables
  (:mod:`artifact.relations`, :mod:`artifact.corpus`).
"""

from .corpus import CorpusEntry, corpus_entries, corpus_entry, running_example_log
from .dfg import Dfg, DfgReport, build_dfg, dfg_report
from .discovery import alpha_miner, dfm_miner, flower_model, trace_net
from .errors import UndefinedMeasureError
from .eventlog import (
    EventLog,
    LogFormatError,
    is_proper_sublog,
    load_log,
    parse_log,
    serialize_log,
)
from .graphs import PathBudget, PathBudgetExceeded
from .logmetrics import LogReport, log_report
from .netmetrics import ModelReport, model_report
from .petrinet import PetriNet
from .relations import (
    EXPECTED,
    FuzzConfig,
    RelationClass,
    closed_form_report,
    discover_model,
    evaluate_corpus,
    falsifications,
    fuzz_pairs,
    new_evidence,
)

__version__ = "0.1.0"

__all__ = [
    "CorpusEntry",
    "Dfg",
    "DfgReport",
    "EXPECTED",
    "EventLog",
    "FuzzConfig",
    "LogFormatError",
    "LogReport",
    "ModelReport",
    "PathBudget",
    "PathBudgetExceeded",
    "PetriNet",
    "RelationClass",
    "UndefinedMeasureError",
    "alpha_miner",
    "build_dfg",
    "closed_form_report",
    "corpus_entries",
    "corpus_entry",
    "dfg_report",
    "dfm_miner",
    "discover_model",
    "evaluate_corpus",
    "falsifications",
    "flower_model",
    "fuzz_pairs",
    "is_proper_sublog",
    "load_log",
    "log_report",
    "model_report",
    "new_evidence",
    "parse_log",
    "running_example_log",
    "serialize_log",
    "trace_net",
]
