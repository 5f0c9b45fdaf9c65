"""The five discovery algorithms: flower model, trace net, alpha, DFG
construction (in :mod:`artifact.dfg`) and the directly-follows miner.

All constructions use deterministic node ids (sorted activity names,
lexicographic tuple order) so serialized outputs are byte-stable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .dfg import END, START, Dfg, build_dfg
from .eventlog import EventLog, Trace
from .eventlog import alphabet as _alphabet
from .petrinet import PetriNet

#: Alpha's tuple enumeration is exponential in the worst case; refuse logs
#: with more activities than this.
ALPHA_ACTIVITY_LIMIT = 20


def flower_model(log: EventLog) -> PetriNet:
    acts = sorted(_alphabet(log))
    if not acts:
        raise ValueError("flower model needs a non-empty alphabet")
    places = ("p:i", "p:flower", "p:o")
    transitions = ("t:tau_in", "t:tau_out") + tuple(f"t:{a}" for a in acts)
    labels: dict[str, Optional[str]] = {"t:tau_in": None, "t:tau_out": None}
    labels.update({f"t:{a}": a for a in acts})
    arcs = [("p:i", "t:tau_in"), ("t:tau_in", "p:flower"),
            ("p:flower", "t:tau_out"), ("t:tau_out", "p:o")]
    for a in acts:
        arcs.append(("p:flower", f"t:{a}"))
        arcs.append((f"t:{a}", "p:flower"))
    return PetriNet(places, transitions, labels, tuple(arcs),
                    source="p:i", sink="p:o")


def trace_net(log: EventLog) -> PetriNet:
    if not log:
        raise ValueError("trace net of an empty log")
    places = ["p:i", "p:o"]
    transitions: list[str] = []
    labels: dict[str, Optional[str]] = {}
    arcs: list[tuple[str, str]] = []
    for k, trace in enumerate(log.order):
        if not trace:
            raise ValueError("trace net requires non-empty traces")
        previous = "p:i"
        for j, activity in enumerate(trace):
            tid = f"t:{k}:{j}"
            transitions.append(tid)
            labels[tid] = activity
            arcs.append((previous, tid))
            if j + 1 < len(trace):
                pid = f"p:{k}:{j}"
                places.append(pid)
                arcs.append((tid, pid))
                previous = pid
            else:
                arcs.append((tid, "p:o"))
    return PetriNet(tuple(places), tuple(transitions), labels, tuple(arcs),
                    source="p:i", sink="p:o")


# -- alpha ----------------------------------------------------------------


@dataclass(frozen=True)
class Footprint:
    activities: tuple[str, ...]
    follows: frozenset[tuple[str, str]]

    def relation(self, a: str, b: str) -> str:
        ab = (a, b) in self.follows
        ba = (b, a) in self.follows
        if ab and ba:
            return "||"
        if ab:
            return "→"
        if ba:
            return "←"
        return "#"

    def causal(self, a: str) -> tuple[str, ...]:
        return tuple(b for b in self.activities if self.relation(a, b) == "→")

    def unrelated(self, a: str, b: str) -> bool:
        return self.relation(a, b) == "#"

    def matrix(self) -> dict[tuple[str, str], str]:
        return {(a, b): self.relation(a, b)
                for a in self.activities for b in self.activities}


def footprint(log: EventLog) -> Footprint:
    follows = {(trace[i], trace[i + 1])
               for trace in log.order for i in range(len(trace) - 1)}
    return Footprint(activities=tuple(sorted(_alphabet(log))),
                     follows=frozenset(follows))


@dataclass(frozen=True)
class AlphaTuples:
    x_l: tuple[tuple[tuple[str, ...], tuple[str, ...]], ...]
    y_l: tuple[tuple[tuple[str, ...], tuple[str, ...]], ...]
    a_i: tuple[str, ...]
    a_o: tuple[str, ...]


def _hash_cliques(members: list[str], fp: Footprint) -> list[tuple[str, ...]]:
    """All non-empty subsets of ``members`` that are pairwise (and self) #."""
    eligible = [a for a in members if fp.unrelated(a, a)]
    cliques: list[tuple[str, ...]] = []

    def extend(prefix: list[str], rest: list[str]) -> None:
        for i, a in enumerate(rest):
            if all(fp.unrelated(b, a) for b in prefix):
                prefix.append(a)
                cliques.append(tuple(prefix))
                extend(prefix, rest[i + 1:])
                prefix.pop()

    extend([], eligible)
    return cliques


def alpha_tuples(log: EventLog) -> AlphaTuples:
    acts = sorted(_alphabet(log))
    if len(acts) > ALPHA_ACTIVITY_LIMIT:
        raise ValueError(f"alpha tuple enumeration limited to "
                         f"{ALPHA_ACTIVITY_LIMIT} activities, got {len(acts)}")
    fp = footprint(log)
    a_i = tuple(sorted({trace[0] for trace in log.order if trace}))
    a_o = tuple(sorted({trace[-1] for trace in log.order if trace}))
    x_l: list[tuple[tuple[str, ...], tuple[str, ...]]] = []
    for b_set in _hash_cliques(acts, fp):
        shared = set(fp.causal(b_set[0]))
        for b in b_set[1:]:
            shared.intersection_update(fp.causal(b))
        if not shared:
            continue
        for c_set in _hash_cliques(sorted(shared), fp):
            x_l.append((b_set, c_set))
    x_l.sort()
    y_l = []
    for b_set, c_set in x_l:
        b, c = set(b_set), set(c_set)
        dominated = any((b <= set(b2) and c <= set(c2))
                        and (b, c) != (set(b2), set(c2))
                        for b2, c2 in x_l)
        if not dominated:
            y_l.append((b_set, c_set))
    return AlphaTuples(x_l=tuple(x_l), y_l=tuple(y_l), a_i=a_i, a_o=a_o)


def _tuple_place_id(b_set: tuple[str, ...], c_set: tuple[str, ...]) -> str:
    return "p:({})->({})".format(",".join(b_set), ",".join(c_set))


def alpha_miner(log: EventLog) -> PetriNet:
    if not log:
        raise ValueError("alpha miner needs a non-empty log")
    tuples = alpha_tuples(log)
    acts = sorted(_alphabet(log))
    places = ["p:i", "p:o"]
    transitions = [f"t:{a}" for a in acts]
    labels: dict[str, Optional[str]] = {f"t:{a}": a for a in acts}
    arcs: list[tuple[str, str]] = []
    for b_set, c_set in tuples.y_l:
        pid = _tuple_place_id(b_set, c_set)
        places.append(pid)
        for b in b_set:
            arcs.append((f"t:{b}", pid))
        for c in c_set:
            arcs.append((pid, f"t:{c}"))
    for a in tuples.a_i:
        arcs.append(("p:i", f"t:{a}"))
    for a in tuples.a_o:
        arcs.append((f"t:{a}", "p:o"))
    return PetriNet(tuple(places), tuple(transitions), labels,
                    tuple(sorted(arcs)), source="p:i", sink="p:o")


# -- directly-follows miner ------------------------------------------------


def _dfm_place_id(node: str) -> str:
    return f"p:{node}"


def dfm_miner(log: EventLog) -> PetriNet:
    """Directly-follows miner: one place per DFG node, one transition per edge."""
    graph: Dfg = build_dfg(log)
    places = tuple(_dfm_place_id(v) for v in graph.nodes)
    transitions: list[str] = []
    labels: dict[str, Optional[str]] = {}
    arcs: list[tuple[str, str]] = []
    for e1, e2 in graph.edges:
        tid = f"t:{e1}->{e2}"
        transitions.append(tid)
        labels[tid] = None if e2 == END else e2
        arcs.append((_dfm_place_id(e1), tid))
        arcs.append((tid, _dfm_place_id(e2)))
    return PetriNet(places, tuple(transitions), labels, tuple(arcs),
                    source=_dfm_place_id(START), sink=_dfm_place_id(END))
