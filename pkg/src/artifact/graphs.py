"""Directed-graph analytics shared by Petri-net and directly-follows-graph measures.

All functions operate on plain adjacency mappings (node -> iterable of
successors) so the same code serves the bipartite Petri-net view and the
unipartite DFG view.  Exhaustive simple-path searches are guarded by a global
extension budget (env var ``ANALOG_PATH_BUDGET``, default 10**7) because the
underlying problems are worst-case exponential.
"""

from __future__ import annotations

import os
from collections.abc import Hashable, Iterable, Mapping
from fractions import Fraction
from typing import Callable

Node = Hashable
Adjacency = Mapping[Node, Iterable[Node]]

DEFAULT_PATH_BUDGET = 10_000_000


class PathBudgetExceeded(RuntimeError):
    """Raised when a simple-path search exceeds the extension budget."""


class PathBudget:
    """Mutable countdown of allowed path extensions, shared across searches."""

    __slots__ = ("remaining",)

    def __init__(self, limit: int | None = None):
        if limit is None:
            limit = int(os.environ.get("ANALOG_PATH_BUDGET", DEFAULT_PATH_BUDGET))
        self.remaining = limit

    def spend(self, amount: int = 1) -> None:
        self.remaining -= amount
        if self.remaining < 0:
            raise PathBudgetExceeded("simple-path extension budget exhausted")


def _succ_of(succ: Adjacency, node: Node) -> tuple[Node, ...]:
    return tuple(succ.get(node, ()))


def reverse_adjacency(nodes: Iterable[Node], succ: Adjacency) -> dict[Node, list[Node]]:
    pred: dict[Node, list[Node]] = {v: [] for v in nodes}
    for u in pred:
        for v in _succ_of(succ, u):
            pred[v].append(u)
    return pred


def count_simple_paths(succ: Adjacency, src: Node, dst: Node,
                       budget: PathBudget | None = None) -> int:
    """Number of distinct simple src→dst paths (exhaustive DFS)."""
    if src == dst:
        raise ValueError("count_simple_paths does not support src == dst")
    budget = budget or PathBudget()
    count = 0
    # Stack frames: (node, iterator over successors); `on_path` tracks the
    # current partial path for the simple-path constraint.
    on_path = {src}
    stack = [(src, iter(_succ_of(succ, src)))]
    while stack:
        node, it = stack[-1]
        advanced = False
        for nxt in it:
            budget.spend()
            if nxt == dst:
                count += 1
                continue
            if nxt in on_path:
                continue
            on_path.add(nxt)
            stack.append((nxt, iter(_succ_of(succ, nxt))))
            advanced = True
            break
        if not advanced:
            stack.pop()
            on_path.discard(node)
    return count


def longest_simple_path(succ: Adjacency, src: Node, dst: Node,
                        budget: PathBudget | None = None) -> int:
    """Length (node count) of the longest simple src→dst path; 0 if none.

    For ``src == dst`` the result is the longest simple cycle through the
    node (node count, counting the node once), or 0 if it lies on no cycle.
    """
    budget = budget or PathBudget()
    best = 0
    cycle_mode = src == dst
    on_path = {src}
    stack = [(src, iter(_succ_of(succ, src)))]
    while stack:
        node, it = stack[-1]
        advanced = False
        for nxt in it:
            budget.spend()
            if nxt == dst:
                # Path length in node count; in cycle mode dst is not re-counted.
                length = len(stack) + (0 if cycle_mode else 1)
                if length > best:
                    best = length
                continue
            if nxt in on_path:
                continue
            on_path.add(nxt)
            stack.append((nxt, iter(_succ_of(succ, nxt))))
            advanced = True
            break
        if not advanced:
            stack.pop()
            on_path.discard(node)
    return best


def max_weight_paths_from(src: Node, succ: Adjacency,
                          node_weight: Callable[[Node], Fraction],
                          budget: PathBudget | None = None) -> dict[Node, Fraction]:
    """Best simple-path weights from ``src`` to every reachable node.

    The weight of a path is the product of its edge weights, where an edge
    (u, v) weighs ``node_weight(u) * node_weight(v)``.  The entry for ``src``
    itself is the best weight of a simple cycle through ``src`` (absent if
    none exists).  Used by cross-connectivity.
    """
    budget = budget or PathBudget()
    best: dict[Node, Fraction] = {}
    w_cache: dict[Node, Fraction] = {}

    def weight(node: Node) -> Fraction:
        if node not in w_cache:
            w_cache[node] = node_weight(node)
        return w_cache[node]

    on_path = {src}
    stack: list[tuple[Node, Fraction, "object"]] = [
        (src, Fraction(1), iter(_succ_of(succ, src)))]
    while stack:
        node, acc, it = stack[-1]
        advanced = False
        for nxt in it:
            budget.spend()
            value = acc * weight(node) * weight(nxt)
            if nxt == src:
                # closing a simple cycle through src
                if src not in best or value > best[src]:
                    best[src] = value
                continue
            if nxt in on_path:
                continue
            if nxt not in best or value > best[nxt]:
                best[nxt] = value
                on_path.add(nxt)
                stack.append((nxt, value, iter(_succ_of(succ, nxt))))
                advanced = True
                break
            # Even if the value at nxt does not improve, a longer prefix may
            # still improve some node further on, so we must recurse anyway.
            on_path.add(nxt)
            stack.append((nxt, value, iter(_succ_of(succ, nxt))))
            advanced = True
            break
        if not advanced:
            stack.pop()
            on_path.discard(node)
    return best


def articulation_points(nodes: Iterable[Node], undirected: Mapping[Node, set[Node]]) -> set[Node]:
    """Cut vertices of the undirected view (iterative Hopcroft–Tarjan)."""
    nodes = list(nodes)
    visited: set[Node] = set()
    depth: dict[Node, int] = {}
    low: dict[Node, int] = {}
    parent: dict[Node, Node | None] = {}
    points: set[Node] = set()
    for root in nodes:
        if root in visited:
            continue
        root_children = 0
        visited.add(root)
        depth[root] = 0
        low[root] = 0
        parent[root] = None
        stack = [(root, iter(undirected.get(root, ())))]
        while stack:
            node, it = stack[-1]
            advanced = False
            for nxt in it:
                if nxt not in visited:
                    visited.add(nxt)
                    depth[nxt] = depth[node] + 1
                    low[nxt] = depth[nxt]
                    parent[nxt] = node
                    if node == root:
                        root_children += 1
                    stack.append((nxt, iter(undirected.get(nxt, ()))))
                    advanced = True
                    break
                if nxt != parent[node]:
                    low[node] = min(low[node], depth[nxt])
            if not advanced:
                stack.pop()
                par = parent[node]
                if par is not None:
                    low[par] = min(low[par], low[node])
                    if par != root and low[node] >= depth[par]:
                        points.add(par)
        if root_children > 1:
            points.add(root)
    return points


def strongly_connected_components(nodes: Iterable[Node], succ: Adjacency) -> list[set[Node]]:
    """Tarjan SCC, iterative."""
    nodes = list(nodes)
    index: dict[Node, int] = {}
    low: dict[Node, int] = {}
    on_stack: set[Node] = set()
    comp_stack: list[Node] = []
    components: list[set[Node]] = []
    counter = [0]
    for start in nodes:
        if start in index:
            continue
        work = [(start, iter(_succ_of(succ, start)))]
        index[start] = low[start] = counter[0]
        counter[0] += 1
        comp_stack.append(start)
        on_stack.add(start)
        while work:
            node, it = work[-1]
            advanced = False
            for nxt in it:
                if nxt not in index:
                    index[nxt] = low[nxt] = counter[0]
                    counter[0] += 1
                    comp_stack.append(nxt)
                    on_stack.add(nxt)
                    work.append((nxt, iter(_succ_of(succ, nxt))))
                    advanced = True
                    break
                if nxt in on_stack:
                    low[node] = min(low[node], index[nxt])
            if not advanced:
                work.pop()
                if work:
                    low[work[-1][0]] = min(low[work[-1][0]], low[node])
                if low[node] == index[node]:
                    comp: set[Node] = set()
                    while True:
                        member = comp_stack.pop()
                        on_stack.discard(member)
                        comp.add(member)
                        if member == node:
                            break
                    components.append(comp)
    return components


def nodes_on_cycles(nodes: Iterable[Node], succ: Adjacency,
                    allow_self_loops: bool = False) -> set[Node]:
    """Nodes in an SCC of size >= 2, plus self-loop nodes when allowed."""
    result: set[Node] = set()
    for comp in strongly_connected_components(nodes, succ):
        if len(comp) >= 2:
            result.update(comp)
    if allow_self_loops:
        for node in nodes:
            if node in _succ_of(succ, node):
                result.add(node)
    return result


def depth_values(nodes: Iterable[Node], succ: Adjacency, start: Node,
                 splits: set[Node], joins: set[Node]) -> dict[Node, int]:
    """Node-level nesting values λ(v): monotone fixpoint of the connector
    recurrence along edges reachable from ``start``, clamped at 0.

    On an edge (u, v) the value grows by 1 when u is a split and v is no
    join, shrinks by 1 when u is no split and v is a join, and is carried
    over otherwise.  Values are capped at the connector count so cyclic
    gain cannot diverge.
    """
    nodes = list(nodes)
    cap = len(splits | joins)
    values: dict[Node, int] = {start: 0}
    changed = True
    while changed:
        changed = False
        frontier = list(values.items())
        for node, val in frontier:
            for nxt in _succ_of(succ, node):
                gain = 0
                if node in splits and nxt not in joins:
                    gain = 1
                elif node not in splits and nxt in joins:
                    gain = -1
                cand = min(cap, max(0, val + gain))
                if nxt == start:
                    continue
                if cand > values.get(nxt, -1):
                    values[nxt] = cand
                    changed = True
    for node in nodes:
        values.setdefault(node, 0)
    return values


def depth_measure(nodes: Iterable[Node], succ: Adjacency, start: Node, end: Node,
                  splits: set[Node], joins: set[Node],
                  rev_splits: set[Node], rev_joins: set[Node]) -> int:
    """max over nodes of min(in-depth, out-depth)."""
    nodes = list(nodes)
    pred = reverse_adjacency(nodes, succ)
    lam_in = depth_values(nodes, succ, start, splits, joins)
    lam_out = depth_values(nodes, pred, end, rev_splits, rev_joins)
    return max(min(lam_in[v], lam_out[v]) for v in nodes) if nodes else 0
