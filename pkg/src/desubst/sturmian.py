"""Sturmian words seen through the meta-automaton.

A binary word is Sturmian iff it is infinitely desubstitutable by the four
elementary morphisms ``L0 L1 R0 R1`` along a sequence that switches between
type 0 (``L0 R0``) and type 1 (``L1 R1``) infinitely often. The deciders
here search the pruned meta-automaton for such walks.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from desubst.automaton import Alphabet, OmegaAutomaton, is_total
from desubst.desub import desubstitute, orbit
from desubst.errors import BudgetExceeded, InputError
from desubst.graphs import path_to, reachable, scc_decomposition, shortest_path
from desubst.meta import (
    DEFAULT_BUDGET,
    BuchiAutomaton,
    MetaDecision,
    build_meta,
    prune_nilpotent,
)
from desubst.substitution import DirectiveLasso, Homomorphism, compose_all, split_word

BINARY = Alphabet(("0", "1"))

L0 = Homomorphism.from_mapping({"0": "0", "1": "01"}, BINARY, "L0")
L1 = Homomorphism.from_mapping({"0": "10", "1": "1"}, BINARY, "L1")
R0 = Homomorphism.from_mapping({"0": "0", "1": "10"}, BINARY, "R0")
R1 = Homomorphism.from_mapping({"0": "01", "1": "1"}, BINARY, "R1")
STURMIAN_MORPHISMS = (L0, L1, R0, R1)
TYPE = {"L0": 0, "R0": 0, "L1": 1, "R1": 1}

FIBONACCI = Homomorphism.from_mapping({"0": "01", "1": "0"}, BINARY, "fib")


def _binary(A: OmegaAutomaton) -> None:
    if set(A.alphabet) != {"0", "1"}:
        raise InputError(f"expected the binary alphabet {{0, 1}}, got {' '.join(A.alphabet)}")


def alternation_buchi() -> BuchiAutomaton:
    """Deterministic Büchi automaton for "both types occur infinitely often".

    ``wait0`` waits for a type-0 morphism, ``wait1`` then waits for a type-1
    one and completes the round in ``alt``, the only accepting state.
    """
    edges = []
    for name, t in TYPE.items():
        edges.append(("wait0", name, "wait1" if t == 0 else "wait0"))
        edges.append(("wait1", name, "alt" if t == 1 else "wait1"))
        edges.append(("alt", name, "wait1" if t == 0 else "wait0"))
    return BuchiAutomaton.from_edges(
        ("L0", "L1", "R0", "R1"), ("wait0", "wait1", "alt"), ["wait0"], ["alt"], edges
    )


def decide_sturmian(A: OmegaAutomaton, budget: int = DEFAULT_BUDGET) -> MetaDecision:
    """Does ``A`` accept a Sturmian word?

    Looks for a strongly connected component of the pruned meta-automaton,
    reachable from ``A``, holding an inner edge of each type. The witness
    lasso enters that component and cycles through one edge of each type.
    """
    _binary(A)
    M = build_meta(A, STURMIAN_MORPHISMS, budget)
    P = prune_nilpotent(M)
    if P.initial is None:
        return MetaDecision("sturmian", False, None, len(M), len(P))
    parent = reachable([P.initial], P.succ)
    comp_of = {}
    for c in scc_decomposition(parent, P.succ):
        for v in c.nodes:
            comp_of[v] = c
    checked = set()
    for entry in parent:  # BFS order: shortest stem first
        comp = comp_of[entry]
        if comp in checked:
            continue
        checked.add(comp)
        inside = set(comp.nodes)
        typed: dict[int, tuple] = {}
        for u in sorted(comp.nodes):
            for name, w in P.succ(u):
                if w in inside and TYPE[name] not in typed:
                    typed[TYPE[name]] = (u, name, w)
        if len(typed) < 2:
            continue

        def walk(a, b):
            return [] if a == b else shortest_path(a, b, P.succ, allowed=inside)

        u0, n0, w0 = typed[0]
        u1, n1, w1 = typed[1]
        cyc = walk(entry, u0) + [n0] + walk(w0, u1) + [n1] + walk(w1, entry)
        lasso = DirectiveLasso(path_to(parent, entry), cyc)
        return MetaDecision("sturmian", True, lasso, len(M), len(P))
    return MetaDecision("sturmian", False, None, len(M), len(P))


def coding_automaton(words: Iterable) -> OmegaAutomaton:
    """Flower automaton whose infinite language is ``W^ω``.

    One initial root; each word gets its own cycle through fresh states
    (a one-letter word is a loop on the root).
    """
    ws = sorted({split_word(BINARY, w) for w in words}, key=lambda w: (len(w), w))
    if not ws:
        raise InputError("the word set must be nonempty")
    if any(len(w) == 0 for w in ws):
        raise InputError("the empty word cannot belong to a coding set")
    states = ["root"]
    edges = []
    for i, w in enumerate(ws):
        prev = "root"
        for j, letter in enumerate(w):
            if j == len(w) - 1:
                nxt = "root"
            else:
                nxt = f"w{i}_{j + 1}"
                states.append(nxt)
            edges.append((prev, letter, nxt))
            prev = nxt
    return OmegaAutomaton.from_edges(BINARY, states, ["root"], edges)


def decide_coding(words: Iterable, budget: int = DEFAULT_BUDGET) -> MetaDecision:
    """Does ``W^ω`` contain a Sturmian word?"""
    d = decide_sturmian(coding_automaton(words), budget)
    return MetaDecision("coding", d.answer, d.lasso, d.vertices, d.live_vertices)


@dataclass(frozen=True)
class TotalityPath:
    """Following ``labels`` from ``A`` in the meta-automaton reaches total vertex ``target``."""

    labels: tuple[str, ...]
    target: int

    def morphism(self) -> Homomorphism:
        """The composed substitution ``σ1 ∘ ... ∘ σk``."""
        by_name = {s.name: s for s in STURMIAN_MORPHISMS}
        phi = compose_all([by_name[x] for x in self.labels], BINARY)
        return Homomorphism(phi.alphabet, phi.images, ".".join(self.labels) or "id")

    def to_json(self):
        return {"kind": "totality-path", "labels": list(self.labels), "target": self.target}


def find_total_reachable(
    A: OmegaAutomaton, substitutions=STURMIAN_MORPHISMS, budget: int = DEFAULT_BUDGET
) -> TotalityPath | None:
    """Shortest label path from ``A`` to a total automaton of the meta-automaton.

    Vertices are explored lazily in the same breadth-first order as
    :func:`desubst.meta.build_meta`, so ``target`` is a valid vertex index
    there.
    """
    _binary(A)
    subs = [s.aligned(A.alphabet) for s in substitutions]
    index = {A: 0}
    order = [A]
    parent: list = [None]
    queue = deque([0])
    while queue:
        v = queue.popleft()
        B = order[v]
        if is_total(B):
            labels = []
            u = v
            while parent[u] is not None:
                u, lab = parent[u]
                labels.append(lab)
            return TotalityPath(tuple(reversed(labels)), v)
        for s in subs:
            C = desubstitute(B, s)
            if C not in index:
                if len(order) >= budget:
                    raise BudgetExceeded(f"totality search exceeds the vertex budget of {budget}")
                index[C] = len(order)
                order.append(C)
                parent.append((v, s.name))
                queue.append(index[C])
    return None


def property_h(A: OmegaAutomaton, q) -> bool:
    """Can ``q`` continue forever after a 0 exactly when it can after a 1?"""
    _binary(A)
    if isinstance(q, str):
        q = A.names.index(q)
    live = A.live
    zero = bool(A.rels[A.alphabet.index("0")][q] & live)
    one = bool(A.rels[A.alphabet.index("1")][q] & live)
    return zero == one


def fibonacci_totality(A: OmegaAutomaton) -> int | None:
    """Least ``n`` such that ``fib^{-n}(A)`` is total, or None."""
    _binary(A)
    orb = orbit(A, FIBONACCI)
    for k, B in enumerate(orb.automata):
        if is_total(B):
            return k
    return None


__all__ = [
    "BINARY",
    "FIBONACCI",
    "L0",
    "L1",
    "R0",
    "R1",
    "STURMIAN_MORPHISMS",
    "TYPE",
    "TotalityPath",
    "alternation_buchi",
    "coding_automaton",
    "decide_coding",
    "decide_sturmian",
    "fibonacci_totality",
    "find_total_reachable",
    "property_h",
]
