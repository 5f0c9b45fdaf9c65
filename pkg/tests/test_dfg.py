from fractions import Fraction

import networkx as nx
from hypothesis import given, settings
from hypothesis import strategies as st

from artifact import dfg as dfgmod
from artifact.dfg import END, START, build_dfg, dfg_report, level_of_detail
from artifact.eventlog import EventLog, parse_log

traces = st.lists(st.sampled_from("abcd"), min_size=1, max_size=5).map(tuple)
logs = st.lists(st.tuples(traces, st.integers(1, 4)),
                min_size=1, max_size=5).map(EventLog)


def test_fig2_structure(fig1):
    # golden: fig2 DFG of the running example
    g = build_dfg(fig1)
    assert len(g.nodes) == 6
    assert len(g.edges) == 9
    assert set(g.edges) == {(START, "a"), ("a", "b"), ("a", "c"), ("b", "c"),
                            ("c", "b"), ("b", "d"), ("c", "d"), ("c", END),
                            ("d", END)}
    assert g.weights[(START, "a")] == 100
    assert g.weights[("a", "b")] == 80


def test_fig2_report(fig1):
    g = build_dfg(fig1)
    r = dfg_report(g)
    assert r.size == 6
    assert r.diameter == 6
    assert r.cfc == 7
    assert r.density == Fraction(9, 30)
    assert r.cnc == Fraction(9, 6)
    assert level_of_detail(g) == 6


def test_self_loop_counts_as_cycle():
    g = build_dfg(parse_log("1;a,a,b\n"))
    assert ("a", "a") in g.edges
    assert dfgmod.cyclicity(g) > 0


@settings(max_examples=40)
@given(logs)
def test_edges_match_follows_relation(log):
    g = build_dfg(log)
    expected = {(t[i], t[i + 1]) for t in log.order for i in range(len(t) - 1)}
    expected |= {(START, t[0]) for t in log.order}
    expected |= {(t[-1], END) for t in log.order}
    assert set(g.edges) == expected


@settings(max_examples=40)
@given(logs)
def test_diameter_matches_networkx(log):
    g = build_dfg(log)
    nxg = nx.DiGraph(list(g.edges))
    # diameter counts nodes on the longest simple sentinel-to-sentinel path
    best = max(len(p) for p in nx.all_simple_paths(nxg, START, END))
    assert dfgmod.diameter(g) == best


@settings(max_examples=40)
@given(logs)
def test_level_of_detail_matches_networkx(log):
    g = build_dfg(log)
    nxg = nx.DiGraph(list(g.edges))
    assert level_of_detail(g) == sum(1 for _ in nx.all_simple_paths(nxg, START, END))


@settings(max_examples=40)
@given(logs)
def test_weights_sum_to_total_follows(log):
    g = build_dfg(log)
    total = sum(c * (len(t) + 1) for t, c in log.pairs())
    assert sum(g.weights.values()) == total
