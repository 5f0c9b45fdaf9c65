"""The seventeen model complexity measures over Petri nets.

Degenerate denominators (no connectors, too few nodes, no arcs, missing
source/sink) raise :class:`UndefinedMeasureError`; :func:`model_report`
turns that into explicit absent values so golden tables can assert
definedness.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from . import graphs, petrinet
from .errors import UndefinedMeasureError
from .graphs import PathBudget
from .petrinet import PetriNet


@dataclass(frozen=True)
class ModelReport:
    size: Optional[int] = None
    mismatch: Optional[int] = None
    connector_heterogeneity: Optional[float] = None
    cross_connectivity: Optional[Fraction] = None
    token_split: Optional[int] = None
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
    duplicate_tasks: Optional[int] = None
    empty_seq_flows: Optional[int] = None


def size(net: PetriNet) -> int:
    return len(net.places) + len(net.transitions)


def connector_mismatch(net: PetriNet) -> int:
    conns = petrinet.connector_sets(net)
    xor = abs(sum(len(net.postset(p)) for p in conns.xor_splits)
              - sum(len(net.preset(p)) for p in conns.xor_joins))
    and_ = abs(sum(len(net.postset(t)) for t in conns.and_splits)
               - sum(len(net.preset(t)) for t in conns.and_joins))
    return xor + and_


def connector_heterogeneity(net: PetriNet) -> float:
    conns = petrinet.connector_sets(net)
    total = len(conns.all)
    if total == 0:
        raise UndefinedMeasureError("connector heterogeneity needs a connector")
    entropy = 0.0
    for group in (conns.and_, conns.xor):
        ratio = len(group) / total
        if ratio > 0:
            entropy -= ratio * math.log2(ratio)
    return entropy


def cross_connectivity(net: PetriNet, budget: Optional[PathBudget] = None) -> Fraction:
    n = size(net)
    if n < 2:
        raise UndefinedMeasureError("cross-connectivity needs at least two nodes")
    budget = budget or PathBudget()
    conns = petrinet.connector_sets(net)

    def weight(v: str) -> Fraction:
        # xor connectors (places) are weighted down by their degree;
        # and connectors and plain nodes weigh 1.
        if v in conns.xor:
            return Fraction(1, len(net.preset(v)) + len(net.postset(v)))
        return Fraction(1)

    total = Fraction(0)
    for src in net.nodes:
        best = graphs.max_weight_paths_from(src, net.succ_map(), weight, budget)
        total += sum(best.values(), Fraction(0))
    return 1 - total / (n * (n - 1))


def token_split(net: PetriNet) -> int:
    conns = petrinet.connector_sets(net)
    return sum(len(net.postset(t)) - 1 for t in conns.and_splits)


def control_flow_complexity(net: PetriNet) -> int:
    conns = petrinet.connector_sets(net)
    return len(conns.and_splits) + sum(len(net.postset(p)) for p in conns.xor_splits)


def separability(net: PetriNet) -> Fraction:
    n = size(net)
    if n <= 2:
        raise UndefinedMeasureError("separability needs more than two nodes")
    cut = petrinet.cut_vertices(net)
    return 1 - Fraction(len(cut), n - 2)


def connector_degree(net: PetriNet) -> tuple[Fraction, int]:
    conns = sorted(petrinet.connector_sets(net).all)
    if not conns:
        raise UndefinedMeasureError("no connectors in the net")
    degrees = [len(net.preset(v)) + len(net.postset(v)) for v in conns]
    return Fraction(sum(degrees), len(degrees)), max(degrees)


def sequentiality(net: PetriNet) -> Fraction:
    if not net.arcs:
        raise UndefinedMeasureError("sequentiality needs at least one arc")
    conns = petrinet.connector_sets(net).all
    plain = sum(1 for u, v in net.arcs if u not in conns and v not in conns)
    return 1 - Fraction(plain, len(net.arcs))


def depth(net: PetriNet) -> int:
    return petrinet.depth(net)


def diameter(net: PetriNet, budget: Optional[PathBudget] = None) -> int:
    if net.source is None or net.sink is None:
        raise UndefinedMeasureError("diameter requires designated source and sink")
    longest, _ = petrinet.simple_path_extrema(net, net.source, net.sink,
                                             budget=budget or PathBudget())
    return longest


def cyclicity(net: PetriNet) -> Fraction:
    n = size(net)
    if n <= 2:
        raise UndefinedMeasureError("cyclicity needs more than two nodes")
    return Fraction(len(petrinet.nodes_on_cycles(net)), n - 2)


def coefficient_network_connectivity(net: PetriNet) -> Fraction:
    n = size(net)
    if n == 0:
        raise UndefinedMeasureError("empty net")
    return Fraction(len(net.arcs), n)


def density(net: PetriNet) -> Fraction:
    if len(net.transitions) == 0 or len(net.places) < 2:
        raise UndefinedMeasureError("density needs a transition and two places")
    return Fraction(len(net.arcs), 2 * len(net.transitions) * (len(net.places) - 1))


def duplicate_tasks(net: PetriNet, count_tau_duplicates: bool = True) -> int:
    label_counts: dict[Optional[str], int] = {}
    for t in net.transitions:
        label = net.labels[t]
        label_counts[label] = label_counts.get(label, 0) + 1
    total = sum(count - 1 for label, count in label_counts.items()
                if label is not None)
    if count_tau_duplicates and label_counts.get(None, 0) > 1:
        total += label_counts[None] - 1
    return total


def empty_sequence_flows(net: PetriNet) -> int:
    conns = petrinet.connector_sets(net)
    count = 0
    for p in net.places:
        if (all(t in conns.and_splits for t in net.preset(p))
                and all(t in conns.and_joins for t in net.postset(p))):
            count += 1
    return count


_COMPUTATIONS: dict[str, Callable[..., object]] = {
    "size": size,
    "mismatch": connector_mismatch,
    "connector_heterogeneity": connector_heterogeneity,
    "token_split": token_split,
    "cfc": control_flow_complexity,
    "separability": separability,
    "sequentiality": sequentiality,
    "depth": depth,
    "cyclicity": cyclicity,
    "cnc": coefficient_network_connectivity,
    "density": density,
    "empty_seq_flows": empty_sequence_flows,
}


def model_report(net: PetriNet, budget: Optional[PathBudget] = None,
                 count_tau_duplicates: bool = True) -> ModelReport:
    budget = budget or PathBudget()
    values: dict[str, object] = {}
    for name, fn in _COMPUTATIONS.items():
        try:
            values[name] = fn(net)
        except UndefinedMeasureError:
            values[name] = None
    for name, fn in (("cross_connectivity", cross_connectivity),
                     ("diameter", diameter)):
        try:
            values[name] = fn(net, budget)
        except UndefinedMeasureError:
            values[name] = None
    try:
        values["acd"], values["mcd"] = connector_degree(net)
    except UndefinedMeasureError:
        values["acd"] = values["mcd"] = None
    values["duplicate_tasks"] = duplicate_tasks(net, count_tau_duplicates)
    return ModelReport(**values)
