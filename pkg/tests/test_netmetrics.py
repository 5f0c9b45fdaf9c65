import math
from fractions import Fraction

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from artifact import netmetrics, petrinet
from artifact.discovery import flower_model, trace_net
from artifact.eventlog import EventLog, parse_log
from artifact.netmetrics import model_report
from artifact.relations import closed_form_report

traces = st.lists(st.sampled_from("abcd"), min_size=1, max_size=5).map(tuple)
logs = st.lists(st.tuples(traces, st.integers(1, 4)),
                min_size=1, max_size=5).map(EventLog)


def flower(n):
    return flower_model(parse_log("1;" + ",".join(chr(97 + i) for i in range(n)) + "\n"))


def to_nx(net):
    g = nx.DiGraph()
    g.add_nodes_from(net.places)
    g.add_nodes_from(net.transitions)
    g.add_edges_from(net.arcs)
    return g


def test_flower_n4_row():
    # golden: flower table row n=4
    r = model_report(flower(4))
    assert r.size == 9
    assert r.mismatch == 0
    assert r.connector_heterogeneity == 0.0
    assert math.isclose(float(r.cross_connectivity), 0.9504, abs_tol=1e-3)
    assert r.token_split == 0
    assert r.cfc == 5
    assert r.separability == Fraction(4, 7)
    assert r.acd == Fraction(10)
    assert r.mcd == 10
    assert r.sequentiality == Fraction(5, 6)
    assert r.depth == 1
    assert r.diameter == 5
    assert r.cyclicity == Fraction(5, 7)
    assert r.cnc == Fraction(4, 3)
    assert r.density == Fraction(1, 2)
    assert r.duplicate_tasks == 1
    assert r.empty_seq_flows == 0


def test_flower_closed_form_exact():
    # golden: flower closed-form table, n = 1..10 (exact, rationals included)
    for n in range(1, 11):
        log = parse_log("1;" + ",".join(chr(97 + i) for i in range(n)) + "\n")
        measured = model_report(flower_model(log))
        closed = closed_form_report("flower", log)
        for fld in measured.__dataclass_fields__:
            assert getattr(measured, fld) == getattr(closed, fld), (n, fld)


def test_connector_sets_flower():
    conns = petrinet.connector_sets(flower(3))
    assert conns.xor_splits == {"p:flower"}
    assert conns.xor_joins == {"p:flower"}
    assert conns.and_splits == set() and conns.and_joins == set()


def test_tracenet_fig1_report(fig1):
    # golden: fig1 trace net (size 21, diameter 9, density 1/9)
    r = model_report(trace_net(fig1))
    assert r.size == 21
    assert r.diameter == 9
    assert r.density == Fraction(1, 9)
    assert r.separability == 1
    assert r.cyclicity == 0
    assert r.depth == 1
    assert r.duplicate_tasks == 7


def test_depth_flower_is_one():
    for n in (1, 3, 6):
        assert netmetrics.depth(flower(n)) == 1


@settings(max_examples=40)
@given(logs)
def test_separability_matches_networkx(log):
    net = trace_net(log)
    r = netmetrics.separability(net)
    und = to_nx(net).to_undirected()
    cut = set(nx.articulation_points(und))
    assert r == 1 - Fraction(len(cut), netmetrics.size(net) - 2)
    assert petrinet.cut_vertices(net) == cut


@settings(max_examples=40)
@given(logs)
def test_diameter_matches_networkx_longest_path(log):
    net = trace_net(log)  # acyclic by construction
    g = to_nx(net)
    # diameter counts nodes on the longest source->sink simple path
    best = max(len(p) for p in
               nx.all_simple_paths(g, net.source, net.sink))
    assert netmetrics.diameter(net) == best


@settings(max_examples=40)
@given(logs)
def test_cyclicity_matches_networkx(log):
    net = flower_model(log)
    g = to_nx(net)
    on_cycles = set().union(*(c for c in nx.strongly_connected_components(g)
                              if len(c) > 1), set())
    for v in g.nodes:
        if g.has_edge(v, v):
            on_cycles.add(v)
    assert petrinet.nodes_on_cycles(net) == on_cycles


def test_duplicate_tasks_counts_tau_by_default():
    net = flower(2)
    assert netmetrics.duplicate_tasks(net) == 1  # the two tau transitions
    assert netmetrics.duplicate_tasks(net, count_tau_duplicates=False) == 0


def test_undefined_measures_are_absent():
    # A single-trace trace net has no connectors: heterogeneity/acd/mcd absent.
    r = model_report(trace_net(parse_log("1;a,b\n")))
    assert r.connector_heterogeneity is None
    assert r.acd is None and r.mcd is None
    assert r.cfc == 0
