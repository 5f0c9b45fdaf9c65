"""Directly-follows graphs and the complexity measures adapted to them.

The DFG of a log has one node per activity plus the sentinels ▷ (start)
and □ (end), an edge (x, y) whenever y directly follows x in some trace,
an edge (▷, first(σ)) and (last(σ), □) for every trace σ.  Thirteen of the
model measures translate to this unipartite view; connector heterogeneity,
token split, duplicate tasks and empty sequence flows have no analogue and
are omitted.  On a graph all connectors are xor: splits are nodes with
out-degree > 1, joins are nodes with in-degree > 1.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import graphs
from .errors import UndefinedMeasureError
from .eventlog import EventLog
from .graphs import PathBudget

START = "▷"  # ▷
END = "□"    # □


@dataclass(frozen=True)
class Dfg:
    nodes: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]
    weights: dict[tuple[str, str], int] = field(default_factory=dict, compare=False)
    _succ: dict[str, tuple[str, ...]] = field(init=False, repr=False, compare=False)
    _pred: dict[str, tuple[str, ...]] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        nodes = set(self.nodes)
        if len(nodes) != len(self.nodes):
            raise ValueError("duplicate nodes")
        succ: dict[str, list[str]] = {v: [] for v in self.nodes}
        pred: dict[str, list[str]] = {v: [] for v in self.nodes}
        for u, v in self.edges:
            if u not in nodes or v not in nodes:
                raise ValueError(f"edge {(u, v)} uses unknown node")
            if v == START or u == END:
                raise ValueError("no edge may enter ▷ or leave □")
            succ[u].append(v)
            pred[v].append(u)
        object.__setattr__(self, "_succ", {k: tuple(v) for k, v in succ.items()})
        object.__setattr__(self, "_pred", {k: tuple(v) for k, v in pred.items()})

    def succ_map(self) -> dict[str, tuple[str, ...]]:
        return self._succ

    def pred_map(self) -> dict[str, tuple[str, ...]]:
        return self._pred

    def outdeg(self, v: str) -> int:
        return len(self._succ[v])

    def indeg(self, v: str) -> int:
        return len(self._pred[v])

    @property
    def activities(self) -> tuple[str, ...]:
        return tuple(v for v in self.nodes if v not in (START, END))


def build_dfg(log: EventLog) -> Dfg:
    if not log:
        raise UndefinedMeasureError("DFG of an empty log is undefined")
    acts: set[str] = set()
    weights: dict[tuple[str, str], int] = {}
    for trace, count in log.pairs():
        if not trace:
            raise ValueError("DFG construction requires non-empty traces")
        acts.update(trace)
        edges_of_trace = ([(START, trace[0])]
                          + [(trace[i], trace[i + 1]) for i in range(len(trace) - 1)]
                          + [(trace[-1], END)])
        for edge in edges_of_trace:
            weights[edge] = weights.get(edge, 0) + count
    if START in acts or END in acts:
        raise ValueError("activity names may not equal the ▷/□ sentinels")
    nodes = (START,) + tuple(sorted(acts)) + (END,)
    return Dfg(nodes=nodes, edges=tuple(sorted(weights)), weights=weights)


# -- connector view --------------------------------------------------------


def splits(g: Dfg) -> set[str]:
    return {v for v in g.nodes if g.outdeg(v) > 1}


def joins(g: Dfg) -> set[str]:
    return {v for v in g.nodes if g.indeg(v) > 1}


def connectors(g: Dfg) -> set[str]:
    return splits(g) | joins(g)


# -- measures --------------------------------------------------------------


@dataclass(frozen=True)
class DfgReport:
    size: Optional[int] = None
    mismatch: Optional[int] = None
    cross_connectivity: Optional[Fraction] = None
    cfc: Optional[int] = None
    separability: Optional[Fraction] = None
    acd: Optional[Fraction] = None
    mcd: Optional[int] = None
    sequentiality: Optional[Fraction] = None
    depth: Optional[int] = None
    diameter: Optional[int] = None
    cyclicity: Optional[Fraction] = None
    cnc: Optional[Fraction] = None
    density: Optional[Fraction] = None


def size(g: Dfg) -> int:
    return len(g.nodes)


def mismatch(g: Dfg) -> int:
    return abs(sum(g.outdeg(v) for v in splits(g))
               - sum(g.indeg(v) for v in joins(g)))


def cross_connectivity(g: Dfg, budget: Optional[PathBudget] = None) -> Fraction:
    n = len(g.nodes)
    if n < 2:
        raise UndefinedMeasureError("cross-connectivity needs at least two nodes")
    budget = budget or PathBudget()
    conns = connectors(g)

    def weight(v: str) -> Fraction:
        deg = g.indeg(v) + g.outdeg(v)
        return Fraction(1, deg) if v in conns else Fraction(1)

    total = Fraction(0)
    for src in g.nodes:
        best = graphs.max_weight_paths_from(src, g.succ_map(), weight, budget)
        total += sum(best.values(), Fraction(0))
    return 1 - total / (n * (n - 1))


def cfc(g: Dfg) -> int:
    return sum(g.outdeg(v) for v in splits(g))


def separability(g: Dfg) -> Fraction:
    n = len(g.nodes)
    if n <= 2:
        raise UndefinedMeasureError("separability needs more than two nodes")
    undirected: dict[str, set[str]] = {v: set() for v in g.nodes}
    for u, v in g.edges:
        if u != v:
            undirected[u].add(v)
            undirected[v].add(u)
    cut = graphs.articulation_points(g.nodes, undirected)
    return 1 - Fraction(len(cut), n - 2)


def connector_degree(g: Dfg) -> tuple[Fraction, int]:
    conns = sorted(connectors(g))
    if not conns:
        raise UndefinedMeasureError("no connectors in the graph")
    degrees = [g.indeg(v) + g.outdeg(v) for v in conns]
    return Fraction(sum(degrees), len(degrees)), max(degrees)


def sequentiality(g: Dfg) -> Fraction:
    if not g.edges:
        raise UndefinedMeasureError("sequentiality needs at least one edge")
    conns = connectors(g)
    plain = sum(1 for u, v in g.edges if u not in conns and v not in conns)
    return 1 - Fraction(plain, len(g.edges))


def depth(g: Dfg) -> int:
    s, j = splits(g), joins(g)
    lam_in = graphs.depth_values(g.nodes, g.succ_map(), START, s, j)
    # Reversal swaps the split/join roles.
    lam_out = graphs.depth_values(g.nodes, g.pred_map(), END, j, s)
    return max(min(lam_in[v], lam_out[v]) for v in g.nodes)


def diameter(g: Dfg, budget: Optional[PathBudget] = None) -> int:
    return graphs.longest_simple_path(g.succ_map(), START, END, budget or PathBudget())


def cyclicity(g: Dfg) -> Fraction:
    n = len(g.nodes)
    if n <= 2:
        raise UndefinedMeasureError("cyclicity needs more than two nodes")
    cyclic = graphs.nodes_on_cycles(g.nodes, g.succ_map(), allow_self_loops=True)
    return Fraction(len(cyclic), n - 2)


def cnc(g: Dfg) -> Fraction:
    return Fraction(len(g.edges), len(g.nodes))


def density(g: Dfg) -> Fraction:
    n = len(g.nodes)
    if n < 2:
        raise UndefinedMeasureError("density needs at least two nodes")
    return Fraction(len(g.edges), n * (n - 1))


def level_of_detail(g: Dfg, budget: Optional[PathBudget] = None) -> int:
    """Number of distinct simple ▷→□ paths."""
    return graphs.count_simple_paths(g.succ_map(), START, END, budget or PathBudget())


def dfg_report(g: Dfg, budget: Optional[PathBudget] = None) -> DfgReport:
    budget = budget or PathBudget()
    values = {}
    computations = {
        "size": lambda: size(g),
        "mismatch": lambda: mismatch(g),
        "cross_connectivity": lambda: cross_connectivity(g, budget),
        "cfc": lambda: cfc(g),
        "separability": lambda: separability(g),
        "sequentiality": lambda: sequentiality(g),
        "depth": lambda: depth(g),
        "diameter": lambda: diameter(g, budget),
        "cyclicity": lambda: cyclicity(g),
        "cnc": lambda: cnc(g),
        "density": lambda: density(g),
    }
    for name, fn in computations.items():
        try:
            values[name] = fn()
        except UndefinedMeasureError:
            values[name] = None
    try:
        values["acd"], values["mcd"] = connector_degree(g)
    except UndefinedMeasureError:
        values["acd"] = values["mcd"] = None
    return DfgReport(**values)


# -- serialization ---------------------------------------------------------


def dfg_to_json(g: Dfg) -> str:
    payload = {
        "nodes": list(g.nodes),
        "edges": [{"from": u, "to": v, "weight": g.weights.get((u, v))}
                  for u, v in g.edges],
    }
    return json.dumps(payload, ensure_ascii=False, indent=2)


def dfg_to_dot(g: Dfg, name: str = "dfg") -> str:
    def quote(text: str) -> str:
        return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'

    lines = [f"digraph {quote(name)} {{", "  rankdir=LR;"]
    for v in g.nodes:
        shape = "box" if v in (START, END) else "ellipse"
        lines.append(f"  {quote(v)} [shape={shape}];")
    for u, v in g.edges:
        weight = g.weights.get((u, v))
        attr = f" [label={quote(str(weight))}]" if weight is not None else ""
        lines.append(f"  {quote(u)} -> {quote(v)}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"
