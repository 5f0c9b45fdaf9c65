"""The eighteen event-log complexity measures.

Count-ratio measures return exact :class:`fractions.Fraction` values; the
entropy family and deviation-from-random return floats.  Measures that are
mathematically undefined for a given log raise
:class:`~artifact.errors.UndefinedMeasureError`; :func:`log_report` converts
that into an explicit absent value per field.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .dfg import build_dfg
from .dfg import level_of_detail as _dfg_level_of_detail
from .errors import UndefinedMeasureError
from .eventlog import EventLog, Trace
from .eventlog import alphabet as _alphabet

#: Hard cap on the concatenation length the Lempel-Ziv scan will process.
LZ_EVENT_LIMIT = 10_000_000


# -- simple counting measures ---------------------------------------------


def magnitude(log: EventLog) -> int:
    return sum(count * len(trace) for trace, count in log.pairs())


def variety(log: EventLog) -> int:
    return len(_alphabet(log))


def trace_count(log: EventLog) -> int:
    return log.trace_count()


def trace_length_stats(log: EventLog) -> tuple[int, Fraction, int]:
    if not log:
        raise UndefinedMeasureError("trace length statistics of an empty log")
    lengths = [(len(trace), count) for trace, count in log.pairs()]
    total = sum(count for _, count in lengths)
    avg = Fraction(sum(length * count for length, count in lengths), total)
    return min(l for l, _ in lengths), avg, max(l for l, _ in lengths)


def distinct_traces(log: EventLog) -> tuple[int, Fraction]:
    if not log:
        raise UndefinedMeasureError("distinct traces of an empty log")
    return len(log), Fraction(len(log), log.trace_count())


def structure(log: EventLog) -> Fraction:
    if not log:
        raise UndefinedMeasureError("structure of an empty log")
    weighted = sum(count * len(set(trace)) for trace, count in log.pairs())
    return Fraction(weighted, log.trace_count())


# -- directly-follows based measures --------------------------------------


def _follows_pairs(trace: Trace) -> list[tuple[str, str]]:
    return [(trace[i], trace[i + 1]) for i in range(len(trace) - 1)]


def directly_follows_counts(log: EventLog) -> dict[tuple[str, str], int]:
    """Multiplicity-weighted activity-pair counts (no sentinels)."""
    counts: dict[tuple[str, str], int] = {}
    for trace, count in log.pairs():
        for pair in _follows_pairs(trace):
            counts[pair] = counts.get(pair, 0) + count
    return counts


def level_of_detail(log: EventLog) -> int:
    if not log:
        raise UndefinedMeasureError("level of detail of an empty log")
    return _dfg_level_of_detail(build_dfg(log))


def number_of_ties(log: EventLog) -> int:
    follows = {pair for trace in log.order for pair in _follows_pairs(trace)}
    return sum(1 for (a, b) in follows if (b, a) not in follows)


def deviation_from_random(log: EventLog) -> float:
    counts = directly_follows_counts(log)
    total = sum(count * (len(trace) - 1) for trace, count in log.pairs())
    n_act = variety(log)
    if total == 0 or n_act == 0:
        raise UndefinedMeasureError("deviation from random needs a directly-follows pair")
    acts = sorted(_alphabet(log))
    mean = total / (n_act * n_act)
    acc = 0.0
    for a in acts:
        for b in acts:
            acc += ((counts.get((a, b), 0) - mean) / total) ** 2
    return 1.0 - math.sqrt(acc)


# -- Lempel-Ziv ------------------------------------------------------------


def _concatenation(log: EventLog) -> list[str]:
    if magnitude(log) > LZ_EVENT_LIMIT:
        raise RuntimeError("log too large for the Lempel-Ziv scan")
    events: list[str] = []
    for trace, count in log.segments:
        events.extend(list(trace) * count)
    return events


def lempel_ziv_phrases(log: EventLog) -> list[Trace]:
    """Dictionary phrases of the LZ78-style parse, in discovery order."""
    phrases: list[Trace] = []
    known: set[Trace] = set()
    current: Trace = ()
    for symbol in _concatenation(log):
        candidate = current + (symbol,)
        if candidate in known:
            current = candidate
        else:
            known.add(candidate)
            phrases.append(candidate)
            current = ()
    return phrases


def lempel_ziv(log: EventLog) -> int:
    return len(lempel_ziv_phrases(log))


# -- pairwise trace measures ----------------------------------------------


def _lcs(v: Trace, w: Trace) -> int:
    if len(v) < len(w):
        v, w = w, v
    previous = [0] * (len(w) + 1)
    for i in range(1, len(v) + 1):
        current = [0] * (len(w) + 1)
        for j in range(1, len(w) + 1):
            if v[i - 1] == w[j - 1]:
                current[j] = previous[j - 1] + 1
            else:
                current[j] = max(previous[j], current[j - 1])
        previous = current
    return previous[len(w)]


def edit_distance(v: Trace, w: Trace) -> int:
    """Insert/delete edit distance via the LCS identity."""
    return len(v) + len(w) - 2 * _lcs(v, w)


def _pairwise_mean(log: EventLog, value: Callable[[Trace, Trace], Fraction],
                   diagonal: Fraction) -> Fraction:
    n = log.trace_count()
    if n < 2:
        raise UndefinedMeasureError("pairwise measure needs at least two traces")
    order = log.order
    total = Fraction(0)
    for i, v in enumerate(order):
        cv = log.count(v)
        # identical-copy pairs (same variant, distinct occurrences)
        total += cv * (cv - 1) * diagonal
        for w in order[i + 1:]:
            cw = log.count(w)
            total += 2 * cv * cw * value(v, w)
    return total / (n * (n - 1))


def affinity(log: EventLog) -> Fraction:
    follows_cache = {trace: frozenset(_follows_pairs(trace)) for trace in log.order}

    def value(v: Trace, w: Trace) -> Fraction:
        fv, fw = follows_cache[v], follows_cache[w]
        union = fv | fw
        if not union:
            # Two distinct variants without any neighborhood share nothing;
            # only identical copies (handled by the diagonal) count as 1.
            return Fraction(0)
        return Fraction(len(fv & fw), len(union))

    return _pairwise_mean(log, value, diagonal=Fraction(1))


def avg_edit_distance(log: EventLog) -> Fraction:
    return _pairwise_mean(log, lambda v, w: Fraction(edit_distance(v, w)),
                          diagonal=Fraction(0))


# -- prefix automaton and entropies ---------------------------------------


class PrefixNode:
    __slots__ = ("prefix", "weight", "terminal", "children")

    def __init__(self, prefix: Trace):
        self.prefix = prefix
        self.weight = 0
        self.terminal = 0
        self.children: dict[str, PrefixNode] = {}


@dataclass(frozen=True)
class PrefixAutomaton:
    root: PrefixNode
    blocks: tuple[tuple[PrefixNode, ...], ...]

    @property
    def nodes(self) -> tuple[PrefixNode, ...]:
        """All non-root nodes of the trie, in DFS order."""
        result = []
        stack = [self.root]
        while stack:
            node = stack.pop()
            if node is not self.root:
                result.append(node)
            for name in sorted(node.children, reverse=True):
                stack.append(node.children[name])
        return tuple(result)


BlockRule = Callable[[PrefixNode, dict[str, int]], str]


def min_subtree_weight_rule(node: PrefixNode, subtree_weights: dict[str, int]) -> str:
    """Continue the incumbent block into the lightest child (name tie-break)."""
    return min(node.children, key=lambda name: (subtree_weights[name], name))


def build_prefix_automaton(log: EventLog,
                           block_rule: BlockRule = min_subtree_weight_rule) -> PrefixAutomaton:
    root = PrefixNode(())
    root.weight = log.trace_count()
    for trace, count in log.pairs():
        node = root
        for activity in trace:
            nxt = node.children.get(activity)
            if nxt is None:
                nxt = PrefixNode(node.prefix + (activity,))
                node.children[activity] = nxt
            nxt.weight += count
            node = nxt
        node.terminal += count

    def subtree_weight(node: PrefixNode) -> int:
        return node.weight + sum(subtree_weight(c) for c in node.children.values())

    blocks: list[list[PrefixNode]] = []

    def descend(node: PrefixNode, block: Optional[list[PrefixNode]]) -> None:
        if node is not root:
            assert block is not None
            block.append(node)
        if not node.children:
            return
        weights = {name: subtree_weight(child) for name, child in node.children.items()}
        if node is root:
            continued = None
        elif len(node.children) == 1:
            continued = next(iter(node.children))
        else:
            continued = block_rule(node, weights)
        for name in sorted(node.children):
            child = node.children[name]
            if name == continued:
                descend(child, block)
            else:
                fresh: list[PrefixNode] = []
                blocks.append(fresh)
                descend(child, fresh)

    descend(root, None)
    return PrefixAutomaton(root=root, blocks=tuple(tuple(b) for b in blocks))


def _entropy(sizes: list[float]) -> float:
    total = sum(sizes)
    if total <= 0:
        return 0.0
    return total * math.log(total) - sum(s * math.log(s) for s in sizes if s > 0)


def variant_entropy(log: EventLog,
                    block_rule: BlockRule = min_subtree_weight_rule
                    ) -> tuple[float, Optional[float]]:
    """Raw and normalized variant entropy.

    With one prefix or fewer the raw value is 0 and the normalization
    denominator |S|·ln|S| vanishes, so the normalized value is ``None``.
    """
    automaton = build_prefix_automaton(log, block_rule)
    node_count = len(automaton.nodes)
    raw = _entropy([float(len(block)) for block in automaton.blocks])
    if node_count <= 1:
        return raw, None
    return raw, raw / (node_count * math.log(node_count))


def sequence_entropy(log: EventLog,
                     block_rule: BlockRule = min_subtree_weight_rule
                     ) -> tuple[float, Optional[float]]:
    """Raw and normalized sequence entropy (prefix weights instead of sizes)."""
    automaton = build_prefix_automaton(log, block_rule)
    block_weights = [float(sum(node.weight for node in block))
                     for block in automaton.blocks]
    raw = _entropy(block_weights)
    total = sum(block_weights)
    if total <= 1:
        return raw, None
    return raw, raw / (total * math.log(total))


# -- report ----------------------------------------------------------------


@dataclass(frozen=True)
class LogReport:
    magnitude: Optional[int] = None
    variety: Optional[int] = None
    trace_count: Optional[int] = None
    tl_min: Optional[int] = None
    tl_avg: Optional[Fraction] = None
    tl_max: Optional[int] = None
    level_of_detail: Optional[int] = None
    ties: Optional[int] = None
    lempel_ziv: Optional[int] = None
    distinct_traces: Optional[int] = None
    pct_distinct_traces: Optional[Fraction] = None
    structure: Optional[Fraction] = None
    affinity: Optional[Fraction] = None
    deviation_from_random: Optional[float] = None
    avg_edit_distance: Optional[Fraction] = None
    variant_entropy: Optional[float] = None
    norm_variant_entropy: Optional[float] = None
    sequence_entropy: Optional[float] = None
    norm_sequence_entropy: Optional[float] = None


def log_report(log: EventLog) -> LogReport:
    values: dict[str, object] = {}

    def attempt(**computations: Callable[[], object]) -> None:
        for name, fn in computations.items():
            try:
                values[name] = fn()
            except UndefinedMeasureError:
                values[name] = None

    attempt(
        magnitude=lambda: magnitude(log),
        variety=lambda: variety(log),
        trace_count=lambda: trace_count(log),
        level_of_detail=lambda: level_of_detail(log),
        ties=lambda: number_of_ties(log),
        lempel_ziv=lambda: lempel_ziv(log),
        structure=lambda: structure(log),
        affinity=lambda: affinity(log),
        deviation_from_random=lambda: deviation_from_random(log),
        avg_edit_distance=lambda: avg_edit_distance(log),
    )
    try:
        values["tl_min"], values["tl_avg"], values["tl_max"] = trace_length_stats(log)
    except UndefinedMeasureError:
        values["tl_min"] = values["tl_avg"] = values["tl_max"] = None
    try:
        values["distinct_traces"], values["pct_distinct_traces"] = distinct_traces(log)
    except UndefinedMeasureError:
        values["distinct_traces"] = values["pct_distinct_traces"] = None
    for name, fn in (("variant_entropy", variant_entropy),
                     ("sequence_entropy", sequence_entropy)):
        if log:
            values[name], values["norm_" + name] = fn(log)
        else:
            values[name] = values["norm_" + name] = None
    return LogReport(**values)
