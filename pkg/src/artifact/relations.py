"""Relation semantics between log and model complexity.

This module holds the expected relation matrices for the five implemented
miners, the evidence engine that confirms or falsifies them on the embedded
corpus, closed-form model reports computed from log statistics alone, and a
seeded fuzzer that generates proper-sublog pairs.

A relation class describes how a model measure responds when a log measure
strictly increases between a proper sublog ``L1`` and its superlog ``L2``:
``<`` (model measure strictly increases), ``<=`` (never decreases), ``=``
(never changes), ``>=`` (never increases), ``>`` (strictly decreases) and
``X`` (all directions possible).  Verdicts are evidence-based: ``consistent``
means no witness contradicts the class (and, for ``X``, at least two distinct
orderings were seen), ``falsifies`` carries a concrete witness pair, and
``inconclusive`` means not enough evidence either way.
"""

from __future__ import annotations

import csv
import enum
import io
import json
import math
import random
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Callable, Iterable, Optional, Sequence

from . import dfg as dfgmod
from . import discovery, logmetrics, netmetrics
from .dfg import END, START, DfgReport, build_dfg, dfg_report
from .errors import PathBudgetExceeded, UndefinedMeasureError
from .eventlog import EventLog, is_proper_sublog
from .eventlog import alphabet as _alphabet
from .graphs import PathBudget
from .netmetrics import ModelReport, model_report
from .reporting import plain_value


class RelationClass(enum.Enum):
    LT = "<"
    LE = "<="
    EQ = "="
    GE = ">="
    GT = ">"
    X = "X"


#: Log-complexity measures (report field names) used as relation-table rows.
LOG_MEASURES: tuple[str, ...] = (
    "magnitude", "variety", "trace_count", "tl_avg", "tl_max",
    "level_of_detail", "ties", "lempel_ziv", "distinct_traces",
    "pct_distinct_traces", "structure", "affinity", "deviation_from_random",
    "avg_edit_distance", "variant_entropy", "norm_variant_entropy",
    "sequence_entropy", "norm_sequence_entropy",
)

#: Model-complexity measures (ModelReport field names) used as columns.
MODEL_MEASURES: tuple[str, ...] = (
    "size", "mismatch", "connector_heterogeneity", "cross_connectivity",
    "token_split", "cfc", "separability", "acd", "mcd", "sequentiality",
    "depth", "diameter", "cyclicity", "cnc", "density", "duplicate_tasks",
    "empty_seq_flows",
)

#: DFG measure columns (DfgReport field names).
DFG_MEASURES: tuple[str, ...] = (
    "size", "mismatch", "cross_connectivity", "cfc", "separability",
    "acd", "mcd", "sequentiality", "depth", "diameter", "cyclicity",
    "cnc", "density",
)

MINERS: tuple[str, ...] = ("flower", "tracenet", "alpha", "dfg", "dfm")

#: Miners whose relation tables presuppose more than one distinct trace in L1.
SUPPORT_GUARDED_MINERS: frozenset[str] = frozenset({"tracenet", "dfg"})


def _row(columns: Sequence[str], pattern: dict[str, RelationClass],
         default: RelationClass) -> dict[str, RelationClass]:
    return {column: pattern.get(column, default) for column in columns}


def _build_expected() -> dict[str, dict[tuple[str, str], RelationClass]]:
    lt, le, eq, ge, gt, x = (RelationClass.LT, RelationClass.LE,
                             RelationClass.EQ, RelationClass.GE,
                             RelationClass.GT, RelationClass.X)
    expected: dict[str, dict[tuple[str, str], RelationClass]] = {}

    # flower: nine measures respond monotonically, eight are constant.
    flower_vary = ("size", "cross_connectivity", "cfc", "separability",
                   "acd", "mcd", "sequentiality", "cyclicity", "cnc")
    flower = {}
    for lm in LOG_MEASURES:
        strict = lm == "variety"
        for mm in MODEL_MEASURES:
            if mm in flower_vary:
                flower[(lm, mm)] = lt if strict else le
            else:
                flower[(lm, mm)] = eq
    expected["flower"] = flower

    # trace net
    tn_base = _row(MODEL_MEASURES, {
        "size": le, "cross_connectivity": x, "cfc": le, "acd": le, "mcd": le,
        "sequentiality": x, "diameter": le, "cnc": x, "density": ge,
        "duplicate_tasks": le,
    }, eq)
    tn_strict = dict(tn_base, size=lt, cfc=lt, acd=lt, mcd=lt)
    tn_tlmax = dict(tn_strict, diameter=lt, density=gt)
    tn_ties = dict(tn_strict, density=gt)
    tn_rows = {lm: tn_base for lm in LOG_MEASURES}
    for lm in ("variety", "level_of_detail", "distinct_traces",
               "pct_distinct_traces", "variant_entropy", "norm_variant_entropy"):
        tn_rows[lm] = tn_strict
    tn_rows["tl_max"] = tn_tlmax
    tn_rows["ties"] = tn_ties
    expected["tracenet"] = {(lm, mm): tn_rows[lm][mm]
                            for lm in LOG_MEASURES for mm in MODEL_MEASURES}

    # alpha: everything can go either way except duplicate tasks (always 0).
    expected["alpha"] = {(lm, mm): eq if mm == "duplicate_tasks" else x
                         for lm in LOG_MEASURES for mm in MODEL_MEASURES}

    # DFG
    dfg_base = _row(DFG_MEASURES, {
        "size": le, "cross_connectivity": x, "cfc": le, "mcd": le,
        "diameter": le,
    }, x)
    dfg_variety = dict(dfg_base, size=lt, cfc=lt)
    dfg_lod = dict(dfg_base, cfc=lt)
    dfg_rows = {lm: dfg_base for lm in LOG_MEASURES}
    dfg_rows["variety"] = dfg_variety
    dfg_rows["level_of_detail"] = dfg_lod
    dfg_rows["ties"] = dfg_lod
    expected["dfg"] = {(lm, mm): dfg_rows[lm][mm]
                       for lm in LOG_MEASURES for mm in DFG_MEASURES}

    # directly-follows miner
    dfm_base = _row(MODEL_MEASURES, {
        "size": le, "mismatch": x, "connector_heterogeneity": eq,
        "cross_connectivity": x, "token_split": eq, "cfc": le,
        "separability": x, "acd": x, "mcd": le, "sequentiality": x,
        "depth": x, "diameter": le, "cyclicity": x, "cnc": x,
        "density": ge, "duplicate_tasks": le, "empty_seq_flows": eq,
    }, x)
    dfm_variety = dict(dfm_base, size=lt, cfc=lt, density=gt, duplicate_tasks=lt)
    dfm_lod = dict(dfm_base, size=lt, cfc=lt, duplicate_tasks=lt)
    dfm_rows = {lm: dfm_base for lm in LOG_MEASURES}
    dfm_rows["variety"] = dfm_variety
    dfm_rows["level_of_detail"] = dfm_lod
    dfm_rows["ties"] = dfm_lod
    expected["dfm"] = {(lm, mm): dfm_rows[lm][mm]
                       for lm in LOG_MEASURES for mm in MODEL_MEASURES}
    return expected


#: Expected relation class per (log measure, model measure) cell, per miner.
EXPECTED: dict[str, dict[tuple[str, str], RelationClass]] = _build_expected()

#: X cells for which no equality witness is known (cross-connectivity columns).
X_STAR: dict[str, frozenset[tuple[str, str]]] = {
    miner: frozenset(cell for cell, cls in cells.items()
                     if cls is RelationClass.X and cell[1] == "cross_connectivity")
    for miner, cells in EXPECTED.items()
}
X_STAR["flower"] = frozenset()


def model_measures_for(miner: str) -> tuple[str, ...]:
    return DFG_MEASURES if miner == "dfg" else MODEL_MEASURES


# -- measurement -----------------------------------------------------------


FLOAT_TOLERANCE = 1e-9


def _sign(before: object, after: object) -> Optional[int]:
    """Sign of ``after - before``; None if either value is absent."""
    if before is None or after is None:
        return None
    if isinstance(before, Fraction) and isinstance(after, Fraction):
        diff = after - before
        return (diff > 0) - (diff < 0)
    a, b = float(before), float(after)
    if math.isclose(a, b, rel_tol=FLOAT_TOLERANCE, abs_tol=FLOAT_TOLERANCE):
        return 0
    return 1 if b > a else -1


def discover_model(miner: str, log: EventLog):
    """Run the named miner; returns a PetriNet, or a Dfg for ``dfg``."""
    if miner == "flower":
        return discovery.flower_model(log)
    if miner == "tracenet":
        return discovery.trace_net(log)
    if miner == "alpha":
        return discovery.alpha_miner(log)
    if miner == "dfg":
        return build_dfg(log)
    if miner == "dfm":
        return discovery.dfm_miner(log)
    raise ValueError(f"unknown miner {miner!r}; choose from {', '.join(MINERS)}")


def measured_report(miner: str, log: EventLog,
                    budget: Optional[PathBudget] = None):
    """ModelReport (or DfgReport for ``dfg``) of the discovered model."""
    model = discover_model(miner, log)
    if miner == "dfg":
        return dfg_report(model, budget or PathBudget())
    return model_report(model, budget or PathBudget())


def _report_value(report, measure: str):
    return getattr(report, measure)


def delta_observation(l1: EventLog, l2: EventLog, miner: str,
                      log_measure: str, model_measure: str,
                      budget: Optional[PathBudget] = None
                      ) -> Optional[tuple[int, int]]:
    """(sign of log-measure change, sign of model-measure change).

    Returns ``None`` when either measure is undefined on either side
    (the inconclusive marker).  ``l1`` must be a proper sublog of ``l2``.
    """
    if not is_proper_sublog(l1, l2):
        raise ValueError("delta_observation requires l1 to be a proper sublog of l2")
    lr1, lr2 = logmetrics.log_report(l1), logmetrics.log_report(l2)
    mr1 = measured_report(miner, l1, budget)
    mr2 = measured_report(miner, l2, budget)
    lm_sign = _sign(_report_value(lr1, log_measure), _report_value(lr2, log_measure))
    mm_sign = _sign(_report_value(mr1, model_measure), _report_value(mr2, model_measure))
    if lm_sign is None or mm_sign is None:
        return None
    return lm_sign, mm_sign


# -- evidence --------------------------------------------------------------


@dataclass
class Witness:
    source: str
    log_measure: str
    model_measure: str
    model_sign: int


@dataclass
class EvidenceCell:
    expected: RelationClass
    x_star: bool = False
    observed: set[int] = field(default_factory=set)
    verdict: str = "inconclusive"
    falsifying_witness: Optional[Witness] = None

    def record(self, source: str, log_measure: str, model_measure: str,
               model_sign: int) -> None:
        self.observed.add(model_sign)
        if self.verdict != "falsifies" and not _sign_allowed(self.expected, model_sign):
            self.verdict = "falsifies"
            self.falsifying_witness = Witness(source, log_measure,
                                              model_measure, model_sign)
            return
        if self.verdict != "falsifies":
            if self.expected is RelationClass.X:
                self.verdict = ("consistent" if len(self.observed) >= 2
                                else "inconclusive")
            else:
                self.verdict = "consistent"


_ALLOWED_SIGNS = {
    RelationClass.LT: {1},
    RelationClass.LE: {0, 1},
    RelationClass.EQ: {0},
    RelationClass.GE: {-1, 0},
    RelationClass.GT: {-1},
    RelationClass.X: {-1, 0, 1},
}


def _sign_allowed(cls: RelationClass, sign: int) -> bool:
    return sign in _ALLOWED_SIGNS[cls]


Evidence = dict[tuple[str, str], EvidenceCell]


def new_evidence(miner: str) -> Evidence:
    return {cell: EvidenceCell(expected=cls, x_star=cell in X_STAR[miner])
            for cell, cls in EXPECTED[miner].items()}


def _observe_pair(miner: str, evidence: Evidence, source: str,
                  l1: EventLog, l2: EventLog,
                  budget: Optional[PathBudget] = None) -> None:
    lr1, lr2 = logmetrics.log_report(l1), logmetrics.log_report(l2)
    mr1 = measured_report(miner, l1, budget)
    mr2 = measured_report(miner, l2, budget)
    model_signs = {
        mm: _sign(_report_value(mr1, mm), _report_value(mr2, mm))
        for mm in model_measures_for(miner)
    }
    for lm in LOG_MEASURES:
        lm_sign = _sign(_report_value(lr1, lm), _report_value(lr2, lm))
        if lm_sign is None or lm_sign <= 0:
            continue
        for mm, mm_sign in model_signs.items():
            if mm_sign is None:
                continue
            evidence[(lm, mm)].record(source, lm, mm, mm_sign)


def evaluate_corpus(miner: str, entries: Optional[Iterable] = None,
                    budget: Optional[PathBudget] = None,
                    evidence: Optional[Evidence] = None) -> Evidence:
    """Aggregate chain observations for one miner over the embedded corpus."""
    from .corpus import corpus_entries  # local import to avoid a cycle
    if entries is None:
        entries = corpus_entries(miner)
    evidence = evidence if evidence is not None else new_evidence(miner)
    for entry in entries:
        logs = entry.logs
        for i in range(len(logs)):
            for j in range(i + 1, len(logs)):
                l1, l2 = logs[i], logs[j]
                if miner in SUPPORT_GUARDED_MINERS and len(l1) <= 1:
                    continue
                _observe_pair(miner, evidence, f"{entry.id}[{i + 1}->{j + 1}]",
                              l1, l2, budget)
    return evidence


def falsifications(evidence: Evidence) -> list[tuple[tuple[str, str], Witness]]:
    return [(cell, ev.falsifying_witness) for cell, ev in sorted(evidence.items())
            if ev.verdict == "falsifies"]


# -- closed forms ----------------------------------------------------------


#: Report fields each miner's closed form defines.
CLOSED_FORM_FIELDS: dict[str, tuple[str, ...]] = {
    "flower": MODEL_MEASURES,
    "tracenet": MODEL_MEASURES,
    "alpha": ("size", "mismatch", "connector_heterogeneity", "token_split",
              "cfc", "acd", "mcd", "sequentiality", "cnc", "density",
              "duplicate_tasks", "empty_seq_flows"),
    "dfg": ("size", "mismatch", "cfc", "acd", "mcd", "sequentiality",
            "cnc", "density"),
    "dfm": ("size", "mismatch", "connector_heterogeneity", "token_split",
            "cfc", "acd", "mcd", "sequentiality", "diameter", "cnc",
            "density", "empty_seq_flows"),
}


def _flower_closed_form(log: EventLog) -> ModelReport:
    n = logmetrics.variety(log)
    if n < 1:
        raise ValueError("flower closed form needs a non-empty alphabet")
    cc_num = 4 * n**4 + 44 * n**3 + 143 * n**2 + 164 * n + 59
    cc_den = 4 * (n + 1) ** 2 * (n + 4) * (n + 5)
    return ModelReport(
        size=5 + n,
        mismatch=0,
        connector_heterogeneity=0.0,
        cross_connectivity=Fraction(cc_num, cc_den),
        token_split=0,
        cfc=n + 1,
        separability=Fraction(n, n + 3),
        acd=Fraction(2 * n + 2),
        mcd=2 * n + 2,
        sequentiality=Fraction(n + 1, n + 2),
        depth=1,
        diameter=5,
        cyclicity=Fraction(n + 1, n + 3),
        cnc=Fraction(2 * n + 4, n + 5),
        density=Fraction(1, 2),
        duplicate_tasks=1,
        empty_seq_flows=0,
    )


def _tracenet_closed_form(log: EventLog) -> ModelReport:
    support = log.support()
    if not support or any(len(t) == 0 for t in support):
        raise ValueError("trace net closed form needs non-empty traces")
    dt = len(support)
    n_l = sum(len(t) - 1 for t in support)
    events = n_l + dt  # total transitions = events over the support
    size = 2 + 2 * n_l + dt
    tl_max = max(len(t) for t in support)
    if dt == 1:
        cc = Fraction(1, 2)
    else:
        v_total = Fraction(1, dt * dt) + sum(
            (2 * len(t) - 1) * (Fraction(len(t) - 1) + Fraction(2, dt))
            for t in support)
        cc = 1 - v_total / (size * (size - 1))
    label_counts: dict[str, int] = {}
    for t in support:
        for a in t:
            label_counts[a] = label_counts.get(a, 0) + 1
    return ModelReport(
        size=size,
        mismatch=0,
        connector_heterogeneity=0.0 if dt > 1 else None,
        cross_connectivity=cc,
        token_split=0,
        cfc=dt if dt > 1 else 0,
        separability=Fraction(1) if dt > 1 else Fraction(0),
        acd=Fraction(dt) if dt > 1 else None,
        mcd=dt if dt > 1 else None,
        sequentiality=Fraction(dt, n_l + dt) if dt > 1 else Fraction(0),
        depth=1 if dt > 1 else 0,
        diameter=1 + 2 * tl_max,
        cyclicity=Fraction(0),
        cnc=Fraction(2 * (n_l + dt), size),
        density=Fraction(1, 1 + n_l),
        duplicate_tasks=events - len(label_counts),
        empty_seq_flows=0,
    )


def _entropy_of_ratio(and_count: int, xor_count: int) -> Optional[float]:
    total = and_count + xor_count
    if total == 0:
        return None
    entropy = 0.0
    for part in (and_count, xor_count):
        ratio = part / total
        if ratio > 0:
            entropy -= ratio * math.log2(ratio)
    return entropy


def _alpha_closed_form(log: EventLog) -> ModelReport:
    tuples = discovery.alpha_tuples(log)
    y_l = tuples.y_l
    acts = sorted(_alphabet(log))
    variety = len(acts)
    a_i, a_o = set(tuples.a_i), set(tuples.a_o)
    # Transition degrees derived from tuple membership.
    pre = {a: sum(1 for b, c in y_l if a in c) + (1 if a in a_i else 0)
           for a in acts}
    post = {a: sum(1 for b, c in y_l if a in b) + (1 if a in a_o else 0)
            for a in acts}
    and_splits = {a for a in acts if post[a] > 1}
    and_joins = {a for a in acts if pre[a] > 1}
    and_conn = and_splits | and_joins
    # Place degrees: tuple places plus the source and sink.
    xor_splits = [("p_i", len(a_i))] if len(a_i) > 1 else []
    xor_splits += [(bc, len(bc[1])) for bc in y_l if len(bc[1]) > 1]
    xor_joins = [("p_o", len(a_o))] if len(a_o) > 1 else []
    xor_joins += [(bc, len(bc[0])) for bc in y_l if len(bc[0]) > 1]
    xor_conn_degrees: dict[object, int] = {}
    for place, _ in xor_splits + xor_joins:
        if place == "p_i":
            xor_conn_degrees[place] = len(a_i)
        elif place == "p_o":
            xor_conn_degrees[place] = len(a_o)
        else:
            xor_conn_degrees[place] = len(place[0]) + len(place[1])
    mismatch = (abs(sum(d for _, d in xor_splits) - sum(d for _, d in xor_joins))
                + abs(sum(post[a] for a in and_splits)
                      - sum(pre[a] for a in and_joins)))
    conn_degrees = (list(xor_conn_degrees.values())
                    + [pre[a] + post[a] for a in sorted(and_conn)])
    arcs = len(a_i) + len(a_o) + sum(len(b) + len(c) for b, c in y_l)
    xor_conns = set(xor_conn_degrees)
    plain = 0
    for a in sorted(a_i):
        if "p_i" not in xor_conns and a not in and_conn:
            plain += 1
    for a in sorted(a_o):
        if "p_o" not in xor_conns and a not in and_conn:
            plain += 1
    for b_set, c_set in y_l:
        place_is_conn = (b_set, c_set) in xor_conns
        if place_is_conn:
            continue
        plain += sum(1 for b in b_set if b not in and_conn)
        plain += sum(1 for c in c_set if c not in and_conn)
    return ModelReport(
        size=2 + len(y_l) + variety,
        mismatch=mismatch,
        connector_heterogeneity=_entropy_of_ratio(len(and_conn), len(xor_conns)),
        token_split=sum(post[a] - 1 for a in and_splits),
        cfc=len(and_splits) + sum(d for _, d in xor_splits),
        acd=(Fraction(sum(conn_degrees), len(conn_degrees))
             if conn_degrees else None),
        mcd=max(conn_degrees) if conn_degrees else None,
        sequentiality=(1 - Fraction(plain, arcs)) if arcs else None,
        cnc=Fraction(arcs, 2 + len(y_l) + variety),
        density=(Fraction(arcs, 2 * variety * (1 + len(y_l)))
                 if variety else None),
        duplicate_tasks=0,
        empty_seq_flows=(
            sum(1 for b, c in y_l
                if set(b) <= and_splits and set(c) <= and_joins)
            # The source (sink) has an empty preset (postset), which
            # satisfies the subset condition vacuously.
            + (1 if a_i <= and_joins else 0)
            + (1 if a_o <= and_splits else 0)),
    )


def _follows_stats(log: EventLog):
    """(succ, pred, start activities, end activities) from the follows relation."""
    succ: dict[str, set[str]] = {}
    pred: dict[str, set[str]] = {}
    a_i: set[str] = set()
    a_o: set[str] = set()
    for trace in log.order:
        a_i.add(trace[0])
        a_o.add(trace[-1])
        for i in range(len(trace) - 1):
            succ.setdefault(trace[i], set()).add(trace[i + 1])
            pred.setdefault(trace[i + 1], set()).add(trace[i])
    return succ, pred, a_i, a_o


def _dfg_degrees(log: EventLog):
    succ, pred, a_i, a_o = _follows_stats(log)
    acts = sorted(_alphabet(log))
    outdeg = {a: len(succ.get(a, ())) + (1 if a in a_o else 0) for a in acts}
    indeg = {a: len(pred.get(a, ())) + (1 if a in a_i else 0) for a in acts}
    outdeg[START] = len(a_i)
    indeg[START] = 0
    outdeg[END] = 0
    indeg[END] = len(a_o)
    edges = (sum(len(v) for v in succ.values()) + len(a_i) + len(a_o))
    return acts, outdeg, indeg, edges


def _dfg_closed_form(log: EventLog) -> DfgReport:
    acts, outdeg, indeg, edges = _dfg_degrees(log)
    nodes = [START] + acts + [END]
    splits = {v for v in nodes if outdeg[v] > 1}
    joins = {v for v in nodes if indeg[v] > 1}
    conns = splits | joins
    degrees = sorted(outdeg[v] + indeg[v] for v in conns)
    succ, _, a_i, a_o = _follows_stats(log)
    edge_list = ([(START, a) for a in sorted(a_i)]
                 + [(a, b) for a in sorted(succ) for b in sorted(succ[a])]
                 + [(a, END) for a in sorted(a_o)])
    plain = sum(1 for u, v in edge_list if u not in conns and v not in conns)
    variety = len(acts)
    return DfgReport(
        size=2 + variety,
        mismatch=abs(sum(outdeg[v] for v in splits)
                     - sum(indeg[v] for v in joins)),
        cfc=sum(outdeg[v] for v in splits),
        acd=Fraction(sum(degrees), len(degrees)) if degrees else None,
        mcd=max(degrees) if degrees else None,
        sequentiality=(1 - Fraction(plain, edges)) if edges else None,
        cnc=Fraction(edges, 2 + variety),
        density=Fraction(edges, (2 + variety) * (1 + variety)),
    )


def _dfm_closed_form(log: EventLog, budget: Optional[PathBudget] = None
                     ) -> ModelReport:
    graph = build_dfg(log)
    g_rep = dfg_report(graph, budget or PathBudget())
    acts, outdeg, indeg, edges = _dfg_degrees(log)
    nodes = [START] + acts + [END]
    conns = {v for v in nodes if outdeg[v] > 1 or indeg[v] > 1}
    plain_nodes = [v for v in acts if v not in conns]
    plain = (2 * len(plain_nodes)
             + (1 if START not in conns else 0)
             + (1 if END not in conns else 0))
    variety = len(acts)
    return ModelReport(
        size=(2 + variety) + edges,
        mismatch=g_rep.mismatch,
        # All connectors are xor, so the heterogeneity entropy is 0 whenever
        # any connector exists; with none, the measure is undefined.
        connector_heterogeneity=0.0 if conns else None,
        token_split=0,
        cfc=g_rep.cfc,
        acd=g_rep.acd,
        mcd=g_rep.mcd,
        sequentiality=(1 - Fraction(plain, 2 * edges)) if edges else None,
        diameter=(2 * g_rep.diameter - 1) if g_rep.diameter is not None else None,
        cnc=Fraction(2 * edges, (2 + variety) + edges),
        density=Fraction(1, variety + 1),
        empty_seq_flows=0,
    )


def closed_form_report(miner: str, log: EventLog,
                       budget: Optional[PathBudget] = None):
    """Model report computed from log statistics alone (no net construction).

    Only the fields in ``CLOSED_FORM_FIELDS[miner]`` are meaningful; the
    remaining fields are left absent.
    """
    if miner == "flower":
        return _flower_closed_form(log)
    if miner == "tracenet":
        return _tracenet_closed_form(log)
    if miner == "alpha":
        return _alpha_closed_form(log)
    if miner == "dfg":
        return _dfg_closed_form(log)
    if miner == "dfm":
        return _dfm_closed_form(log, budget)
    raise ValueError(f"unknown miner {miner!r}; choose from {', '.join(MINERS)}")


def closed_form_mismatches(miner: str, log: EventLog,
                           budget: Optional[PathBudget] = None
                           ) -> list[tuple[str, object, object]]:
    """Fields where the measured report disagrees with the closed form."""
    closed = closed_form_report(miner, log, budget)
    measured = measured_report(miner, log, budget)
    problems = []
    for fld in CLOSED_FORM_FIELDS[miner]:
        want = getattr(closed, fld)
        got = getattr(measured, fld)
        if _values_differ(want, got):
            problems.append((fld, want, got))
    return problems


def _values_differ(want: object, got: object) -> bool:
    if want is None or got is None:
        return (want is None) != (got is None)
    if isinstance(want, Fraction) and isinstance(got, Fraction):
        return want != got
    return not math.isclose(float(want), float(got),
                            rel_tol=FLOAT_TOLERANCE, abs_tol=FLOAT_TOLERANCE)


# -- fuzzing ---------------------------------------------------------------


@dataclass(frozen=True)
class FuzzConfig:
    max_alphabet: int = 8
    max_trace_length: int = 8
    max_variants: int = 6
    max_count: int = 50


@dataclass
class FuzzResult:
    evidence: Evidence
    pairs: int = 0
    skipped: int = 0
    closed_form_failures: list[tuple[str, str, object, object]] = field(
        default_factory=list)


def random_log(rng: random.Random, config: FuzzConfig = FuzzConfig()) -> EventLog:
    letters = [chr(ord("a") + i) for i in range(config.max_alphabet)]
    variants = rng.randint(1, config.max_variants)
    pairs = []
    for _ in range(variants):
        length = rng.randint(1, config.max_trace_length)
        trace = [rng.choice(letters) for _ in range(length)]
        pairs.append((trace, rng.randint(1, config.max_count)))
    return EventLog(pairs)


def extend_log(rng: random.Random, log: EventLog,
               config: FuzzConfig = FuzzConfig()) -> EventLog:
    """A random proper superlog of ``log``."""
    letters = [chr(ord("a") + i) for i in range(config.max_alphabet)]
    if rng.random() < 0.3:
        letters = letters + [chr(ord("a") + config.max_alphabet)]
    additions = []
    for _ in range(rng.randint(1, 3)):
        if log and rng.random() < 0.4:
            trace = rng.choice(log.order)
            additions.append((list(trace), rng.randint(1, config.max_count)))
        else:
            length = rng.randint(1, config.max_trace_length)
            additions.append(([rng.choice(letters) for _ in range(length)],
                              rng.randint(1, config.max_count)))
    return log + EventLog(additions)


def fuzz_pairs(seed: int, config: FuzzConfig = FuzzConfig(),
               miner: str = "flower",
               cells: Optional[set[tuple[str, str]]] = None,
               pairs: int = 100,
               budget: Optional[PathBudget] = None,
               check_closed_form: bool = True) -> FuzzResult:
    """Seeded random sublog pairs feeding the evidence engine.

    ``cells`` restricts which (log measure, model measure) cells are updated.
    Pairs on which a resource guard trips are skipped and counted.
    """
    if miner not in MINERS:
        raise ValueError(f"unknown miner {miner!r}; choose from {', '.join(MINERS)}")
    rng = random.Random(seed)
    evidence = new_evidence(miner)
    result = FuzzResult(evidence=evidence)
    while result.pairs + result.skipped < pairs:
        l1 = random_log(rng, config)
        l2 = extend_log(rng, l1, config)
        if not is_proper_sublog(l1, l2):
            result.skipped += 1
            continue
        if miner in SUPPORT_GUARDED_MINERS and len(l1) <= 1:
            result.skipped += 1
            continue
        source = f"fuzz:{seed}:{result.pairs + result.skipped}"
        try:
            scratch: Evidence = new_evidence(miner)
            _observe_pair(miner, scratch, source, l1, l2, budget)
            if check_closed_form:
                for log in (l1, l2):
                    for fld, want, got in closed_form_mismatches(miner, log, budget):
                        result.closed_form_failures.append(
                            (source, fld, plain_value(want), plain_value(got)))
        except (PathBudgetExceeded, RuntimeError):
            result.skipped += 1
            continue
        for cell, scratch_cell in scratch.items():
            if cells is not None and cell not in cells:
                continue
            for sign in sorted(scratch_cell.observed):
                evidence[cell].record(source, cell[0], cell[1], sign)
        result.pairs += 1
    return result


# -- export ----------------------------------------------------------------


def _cell_symbol(cell: EvidenceCell) -> str:
    if cell.verdict != "consistent":
        return "?"
    return cell.expected.value


def evidence_to_csv(miner: str, evidence: Evidence) -> str:
    columns = model_measures_for(miner)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["log_measure", *columns])
    for lm in LOG_MEASURES:
        writer.writerow([lm] + [_cell_symbol(evidence[(lm, mm)])
                                for mm in columns])
    return buf.getvalue()


def evidence_to_json(miner: str, evidence: Evidence) -> str:
    payload = {
        "miner": miner,
        "cells": [
            {
                "log_measure": lm,
                "model_measure": mm,
                "expected": evidence[(lm, mm)].expected.value,
                "x_star": evidence[(lm, mm)].x_star,
                "observed": sorted(evidence[(lm, mm)].observed),
                "verdict": evidence[(lm, mm)].verdict,
                "falsifying_witness": (
                    None if evidence[(lm, mm)].falsifying_witness is None else
                    {
                        "source": evidence[(lm, mm)].falsifying_witness.source,
                        "model_sign": evidence[(lm, mm)].falsifying_witness.model_sign,
                    }),
            }
            for lm in LOG_MEASURES for mm in model_measures_for(miner)
        ],
    }
    return json.dumps(payload, ensure_ascii=False, indent=2, sort_keys=False)
