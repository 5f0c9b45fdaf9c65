"""Labeled Petri-net / workflow-net data model and shared graph analytics.

A net stores places and transitions as disjoint id sets, a transition
labeling (``None`` means a silent τ transition), a bipartite arc set, and
optional designated source/sink places.  Outputs of the alpha algorithm may
violate workflow-net constraints (isolated nodes, unreachable fragments);
the type tolerates that and the measures follow their formulas verbatim.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import graphs
from .errors import UndefinedMeasureError
from .graphs import PathBudget


@dataclass(frozen=True)
class ConnectorSets:
    xor_splits: frozenset[str]
    xor_joins: frozenset[str]
    and_splits: frozenset[str]
    and_joins: frozenset[str]

    @property
    def splits(self) -> frozenset[str]:
        return self.xor_splits | self.and_splits

    @property
    def joins(self) -> frozenset[str]:
        return self.xor_joins | self.and_joins

    @property
    def all(self) -> frozenset[str]:
        return self.splits | self.joins

    @property
    def xor(self) -> frozenset[str]:
        return self.xor_splits | self.xor_joins

    @property
    def and_(self) -> frozenset[str]:
        return self.and_splits | self.and_joins


@dataclass(frozen=True)
class PetriNet:
    places: tuple[str, ...]
    transitions: tuple[str, ...]
    labels: dict[str, Optional[str]]
    arcs: tuple[tuple[str, str], ...]
    source: Optional[str] = None
    sink: Optional[str] = None
    _succ: dict[str, tuple[str, ...]] = field(init=False, repr=False, compare=False)
    _pred: dict[str, tuple[str, ...]] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        pset, tset = set(self.places), set(self.transitions)
        if len(pset) != len(self.places) or len(tset) != len(self.transitions):
            raise ValueError("duplicate node ids")
        if pset & tset:
            raise ValueError("place and transition ids must be disjoint")
        if set(self.labels) != tset:
            raise ValueError("labels must cover exactly the transitions")
        succ: dict[str, list[str]] = {v: [] for v in self.places + self.transitions}
        pred: dict[str, list[str]] = {v: [] for v in self.places + self.transitions}
        seen = set()
        for u, v in self.arcs:
            if (u, v) in seen:
                raise ValueError(f"duplicate arc {(u, v)}")
            seen.add((u, v))
            if not ((u in pset and v in tset) or (u in tset and v in pset)):
                raise ValueError(f"arc {(u, v)} is not bipartite")
            succ[u].append(v)
            pred[v].append(u)
        for name in ("source", "sink"):
            node = getattr(self, name)
            if node is not None and node not in pset:
                raise ValueError(f"{name} {node!r} is not a place")
        object.__setattr__(self, "_succ", {k: tuple(v) for k, v in succ.items()})
        object.__setattr__(self, "_pred", {k: tuple(v) for k, v in pred.items()})

    # -- structure ---------------------------------------------------------

    @property
    def nodes(self) -> tuple[str, ...]:
        return self.places + self.transitions

    def postset(self, node: str) -> tuple[str, ...]:
        return self._succ[node]

    def preset(self, node: str) -> tuple[str, ...]:
        return self._pred[node]

    def succ_map(self) -> dict[str, tuple[str, ...]]:
        return self._succ

    def pred_map(self) -> dict[str, tuple[str, ...]]:
        return self._pred

    def undirected(self) -> dict[str, set[str]]:
        adj: dict[str, set[str]] = {v: set() for v in self.nodes}
        for u, v in self.arcs:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def reversed(self) -> "PetriNet":
        return PetriNet(self.places, self.transitions, dict(self.labels),
                        tuple((v, u) for u, v in self.arcs),
                        source=self.sink, sink=self.source)


# -- analytics ------------------------------------------------------------


def connector_sets(net: PetriNet) -> ConnectorSets:
    return ConnectorSets(
        xor_splits=frozenset(p for p in net.places if len(net.postset(p)) > 1),
        xor_joins=frozenset(p for p in net.places if len(net.preset(p)) > 1),
        and_splits=frozenset(t for t in net.transitions if len(net.postset(t)) > 1),
        and_joins=frozenset(t for t in net.transitions if len(net.preset(t)) > 1),
    )


def cut_vertices(net: PetriNet) -> set[str]:
    return graphs.articulation_points(net.nodes, net.undirected())


def simple_path_extrema(net: PetriNet, src: str, dst: str,
                        weights: Optional[dict[str, Fraction]] = None,
                        budget: Optional[PathBudget] = None) -> tuple[int, Fraction]:
    """Longest simple-path length (node count) and max product path weight.

    Returns (0, 0) when no path exists; a path from a node to itself is a
    simple cycle through it.
    """
    budget = budget or PathBudget()
    longest = graphs.longest_simple_path(net.succ_map(), src, dst, budget)
    if weights is None:
        return longest, Fraction(longest > 0)
    best = graphs.max_weight_paths_from(src, net.succ_map(),
                                        lambda v: weights.get(v, Fraction(1)),
                                        budget)
    return longest, best.get(dst, Fraction(0))


def nodes_on_cycles(net: PetriNet) -> set[str]:
    # Bipartiteness forbids self-loops, so SCCs of size >= 2 suffice.
    return graphs.nodes_on_cycles(net.nodes, net.succ_map())


def depth(net: PetriNet, budget: Optional[PathBudget] = None) -> int:
    if net.source is None or net.sink is None:
        raise UndefinedMeasureError("depth requires designated source and sink")
    conns = connector_sets(net)
    rev = net.reversed()
    rconns = connector_sets(rev)
    nodes = net.nodes
    lam_in = graphs.depth_values(nodes, net.succ_map(), net.source,
                                 set(conns.splits), set(conns.joins))
    lam_out = graphs.depth_values(nodes, rev.succ_map(), net.sink,
                                  set(rconns.splits), set(rconns.joins))
    if not nodes:
        return 0
    return max(min(lam_in[v], lam_out[v]) for v in nodes)


# -- serialization --------------------------------------------------------


def net_to_json(net: PetriNet) -> str:
    payload = {
        "places": sorted(net.places),
        "transitions": [{"id": t, "label": net.labels[t]}
                        for t in sorted(net.transitions)],
        "arcs": [list(a) for a in sorted(net.arcs)],
        "source": net.source,
        "sink": net.sink,
    }
    return json.dumps(payload, ensure_ascii=False, indent=2)


def net_from_json(text: str | bytes) -> PetriNet:
    payload = json.loads(text)
    return PetriNet(
        places=tuple(payload["places"]),
        transitions=tuple(t["id"] for t in payload["transitions"]),
        labels={t["id"]: t["label"] for t in payload["transitions"]},
        arcs=tuple((u, v) for u, v in payload["arcs"]),
        source=payload.get("source"),
        sink=payload.get("sink"),
    )


def _dot_quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def net_to_dot(net: PetriNet, name: str = "net") -> str:
    lines = [f"digraph {_dot_quote(name)} {{", "  rankdir=LR;"]
    for p in sorted(net.places):
        label = "" if p not in (net.source, net.sink) else p
        lines.append(f"  {_dot_quote(p)} [shape=circle, label={_dot_quote(label)}];")
    for t in sorted(net.transitions):
        label = net.labels[t]
        if label is None:
            lines.append(f"  {_dot_quote(t)} [shape=box, style=filled, "
                         f"fillcolor=black, label=\"\"];")
        else:
            lines.append(f"  {_dot_quote(t)} [shape=box, label={_dot_quote(label)}];")
    for u, v in sorted(net.arcs):
        lines.append(f"  {_dot_quote(u)} -> {_dot_quote(v)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
