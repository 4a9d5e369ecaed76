"""Graph primitives: strongly connected components and lasso extraction.

Graphs are given as a successor function ``succ(v)`` returning an ordered
iterable of ``(label, w)`` pairs; vertices must be hashable. Results are
deterministic given a deterministic ``succ``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, Hashable, Iterable


@dataclass(frozen=True)
class Component:
    nodes: tuple
    cyclic: bool  # supports an infinite walk: size > 1 or a self-loop


def scc_decomposition(vertices: Iterable[Hashable], succ: Callable) -> list[Component]:
    """Tarjan's algorithm, iterative.

    Components come out in reverse topological order (a component is listed
    before any component that can reach it). ``succ(v)`` yields
    ``(label, w)`` pairs; see :func:`sccs_of_adjacency` for plain graphs.
    """
    index: dict = {}
    low: dict = {}
    on_stack: set = set()
    stack: list = []
    out: list[Component] = []
    counter = 0

    def targets(v):
        for _, w in succ(v):
            yield w

    for root in vertices:
        if root in index:
            continue
        work = [(root, targets(root))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, targets(w)))
                    advanced = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                u = work[-1][0]
                low[u] = min(low[u], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                comp.reverse()
                cyclic = len(comp) > 1 or any(w == v for w in targets(v))
                out.append(Component(tuple(comp), cyclic))
    return out


def sccs_of_adjacency(adj: dict) -> list[Component]:
    """SCCs of a graph given as ``{vertex: successors}``."""
    return scc_decomposition(adj, lambda v: ((None, w) for w in adj.get(v, ())))


def reachable(starts: Iterable[Hashable], succ: Callable) -> dict:
    """BFS from ``starts``; maps each reached vertex to ``(parent, label)`` or None."""
    parent: dict = {}
    queue = deque()
    for s in starts:
        if s not in parent:
            parent[s] = None
            queue.append(s)
    while queue:
        v = queue.popleft()
        for label, w in succ(v):
            if w not in parent:
                parent[w] = (v, label)
                queue.append(w)
    return parent


def path_to(parent: dict, v) -> list:
    """Labels along the BFS tree path ending at ``v``."""
    labels = []
    while parent[v] is not None:
        v, label = parent[v]
        labels.append(label)
    labels.reverse()
    return labels


def shortest_path(source, goal, succ: Callable, allowed=None) -> list | None:
    """Labels of a shortest nonempty path ``source -> goal`` (a cycle when equal)."""
    parent: dict = {}
    seen = {source}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for label, w in succ(v):
            if allowed is not None and w not in allowed:
                continue
            if w == goal:
                labels = [label]
                while v != source:
                    v, lab = parent[v]
                    labels.append(lab)
                labels.reverse()
                return labels
            if w not in seen:
                seen.add(w)
                parent[w] = (v, label)
                queue.append(w)
    return None


def find_lasso(starts: Iterable[Hashable], succ: Callable, accepting: Callable | None = None):
    """Shortest-stem lasso visiting an accepting vertex infinitely often.

    Returns ``(stem_labels, cycle_labels, vertex)`` where ``vertex`` is the
    accepting vertex the cycle returns to, or None when no run from
    ``starts`` visits an accepting vertex infinitely often (Büchi emptiness).
    With ``accepting=None`` every vertex is accepting.
    """
    starts = list(starts)
    parent = reachable(starts, succ)
    comps = scc_decomposition(parent, succ)
    comp_of = {}
    for c in comps:
        if c.cyclic:
            for v in c.nodes:
                comp_of[v] = c
    # parent was filled in BFS order, so the first hit has a shortest stem
    for v in parent:
        if v in comp_of and (accepting is None or accepting(v)):
            stem = path_to(parent, v)
            cycle = shortest_path(v, v, succ, allowed=set(comp_of[v].nodes))
            return stem, cycle, v
    return None
