"""The meta-automaton of desubstitutions and the decisions built on it.

Vertices are the automata reachable from ``A`` by desubstituting along
words over a finite set of named substitutions, stored once each; the edge
``B -σ-> σ^{-1}(B)`` is labelled by the substitution's name. Directive
sequences of accepted infinitely desubstitutable words are exactly the labels
of infinite walks that avoid vertices with an empty language.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from desubst import kernels
from desubst.automaton import Alphabet, OmegaAutomaton, lasso_word, members
from desubst.desub import desubstitute
from desubst.errors import BudgetExceeded, InputError
from desubst.graphs import find_lasso
from desubst.substitution import DirectiveLasso, Homomorphism, apply, compose_all, is_nonerasing

DEFAULT_BUDGET = 100_000


@dataclass(frozen=True)
class MetaAutomaton:
    """Graph on desubstituted automata.

    ``edges[v][i]`` is the target of the ``i``-th substitution from vertex
    ``v``; it is None only in pruned meta-automata, where the target had an
    empty language. ``origin[v]`` is the vertex index before pruning.
    """

    substitutions: tuple[Homomorphism, ...]
    vertices: tuple[OmegaAutomaton, ...]
    edges: tuple[tuple[int | None, ...], ...]
    initial: int | None
    empty: tuple[bool, ...]
    origin: tuple[int, ...]

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(s.name for s in self.substitutions)

    def __len__(self):
        return len(self.vertices)

    def succ(self, v: int):
        """``(name, target)`` pairs out of ``v`` in substitution order."""
        return [(s.name, w) for s, w in zip(self.substitutions, self.edges[v]) if w is not None]

    def follow(self, labels: Sequence[str], start: int | None = None) -> int | None:
        v = self.initial if start is None else start
        pos = {name: i for i, name in enumerate(self.names)}
        for lab in labels:
            if v is None:
                return None
            v = self.edges[v][pos[lab]]
        return v


def _check_substitutions(A: OmegaAutomaton, substitutions) -> tuple[Homomorphism, ...]:
    out = []
    seen = set()
    for i, s in enumerate(substitutions):
        if not is_nonerasing(s):
            raise InputError(f"substitution {s.name or i} is erasing; the meta-automaton needs nonerasing ones")
        name = s.name or f"s{i}"
        if name in seen:
            raise InputError(f"duplicate substitution name {name!r}")
        seen.add(name)
        out.append(Homomorphism(A.alphabet, s.aligned(A.alphabet).images, name))
    if not out:
        raise InputError("at least one substitution is required")
    return tuple(out)


def build_meta(A: OmegaAutomaton, substitutions, budget: int = DEFAULT_BUDGET) -> MetaAutomaton:
    """Breadth-first closure of ``{A}`` under desubstitution by each substitution."""
    subs = _check_substitutions(A, substitutions)
    closure = kernels.meta_closure(A.rels, [s.codes for s in subs], A.n, budget)
    if closure is None:
        raise BudgetExceeded(f"meta-automaton exceeds the vertex budget of {budget}")
    rels_list, edges, lives = closure
    vertices = tuple(A.with_relations(r) for r in rels_list)
    empty = tuple(not (A.initial & live) for live in lives)
    return MetaAutomaton(subs, vertices, tuple(tuple(e) for e in edges), 0, empty, tuple(range(len(vertices))))


def prune_nilpotent(M: MetaAutomaton) -> MetaAutomaton:
    """Induced subgraph on the vertices with a nonempty language."""
    keep = [v for v in range(len(M)) if not M.empty[v]]
    new = {v: i for i, v in enumerate(keep)}
    edges = tuple(tuple(new.get(w) if w is not None else None for w in M.edges[v]) for v in keep)
    return MetaAutomaton(
        M.substitutions,
        tuple(M.vertices[v] for v in keep),
        edges,
        new.get(M.initial) if M.initial is not None else None,
        tuple(False for _ in keep),
        tuple(M.origin[v] for v in keep),
    )


@dataclass(frozen=True)
class MetaDecision:
    problem: str
    answer: bool
    lasso: DirectiveLasso | None
    vertices: int
    live_vertices: int

    def __bool__(self):
        return self.answer

    def to_json(self):
        return {
            "answer": self.answer,
            "witness": None if self.lasso is None else self.lasso.to_json(),
            "diagnostics": {"vertices": self.vertices, "nonempty_vertices": self.live_vertices},
        }


def decide_inf_desub(A: OmegaAutomaton, substitutions, budget: int = DEFAULT_BUDGET) -> MetaDecision:
    """Does ``A`` accept a word infinitely desubstitutable by the substitutions?"""
    M = build_meta(A, substitutions, budget)
    P = prune_nilpotent(M)
    found = None
    if P.initial is not None:
        found = find_lasso([P.initial], P.succ)
    lasso = None if found is None else DirectiveLasso(found[0], found[1])
    return MetaDecision("inf-desub", lasso is not None, lasso, len(M), len(P))


def directive_language(A: OmegaAutomaton, substitutions, budget: int = DEFAULT_BUDGET) -> OmegaAutomaton:
    """Automaton over substitution names whose language is the set of directive sequences.

    States are the nonempty vertices of the meta-automaton, named ``v<index>``
    after their index before pruning.
    """
    P = prune_nilpotent(build_meta(A, substitutions, budget))
    alphabet = Alphabet(P.names)
    if P.initial is None:
        zero = (0,)
        return OmegaAutomaton(alphabet, 1, 0, tuple(zero for _ in alphabet), ("v0",))
    n = len(P)
    rels = [[0] * n for _ in alphabet]
    for v in range(n):
        for i, w in enumerate(P.edges[v]):
            if w is not None:
                rels[i][v] |= 1 << w
    names = tuple(f"v{o}" for o in P.origin)
    return OmegaAutomaton(alphabet, n, 1 << P.initial, tuple(tuple(r) for r in rels), names)


@dataclass(frozen=True)
class BuchiAutomaton:
    """Automaton with a Büchi set: a run is accepting iff it visits ``accepting`` infinitely often."""

    automaton: OmegaAutomaton
    accepting: int

    def __post_init__(self):
        if self.accepting & ~self.automaton.all_states:
            raise InputError("accepting states out of range")

    @classmethod
    def from_edges(cls, alphabet, states, initial, accepting, edges) -> BuchiAutomaton:
        A = OmegaAutomaton.from_edges(alphabet, states, initial, edges)
        pos = {s: i for i, s in enumerate(A.names)}
        try:
            acc = sum(1 << pos[s] for s in set(accepting))
        except KeyError as exc:
            raise InputError(f"unknown accepting state {exc.args[0]!r}") from None
        return cls(A, acc)

    @property
    def alphabet(self) -> Alphabet:
        return self.automaton.alphabet

    @property
    def n(self) -> int:
        return self.automaton.n

    @property
    def initial(self) -> int:
        return self.automaton.initial

    @property
    def names(self) -> tuple[str, ...]:
        return self.automaton.names

    def succ(self, q: int):
        A = self.automaton
        return [(s, r) for s, rows in zip(A.alphabet, A.rels) for r in members(rows[q])]


def buchi_is_empty(R: BuchiAutomaton) -> bool:
    """True iff no run from an initial state visits an accepting state infinitely often."""
    return find_lasso(members(R.initial), R.succ, lambda q: bool((R.accepting >> q) & 1)) is None


def buchi_accepts_lasso(R: BuchiAutomaton, lasso: DirectiveLasso) -> bool:
    """Whether ``R`` accepts the ultimately periodic word ``stem · cycle^ω``."""
    stem, cyc = lasso.stem, lasso.cycle
    A = R.automaton
    codes = [A.alphabet.index(s) for s in stem + cyc]
    k, p = len(stem), len(cyc)

    def succ(node):
        i, q = node
        nxt = i + 1 if i + 1 < k + p else k
        return [(None, (nxt, r)) for r in members(A.rels[codes[i]][q])]

    starts = [(0, q) for q in members(A.initial)]
    return find_lasso(starts, succ, lambda node: bool((R.accepting >> node[1]) & 1)) is not None


def all_sequences_buchi(names: Sequence[str]) -> BuchiAutomaton:
    """One accepting state looping on every name: accepts every infinite sequence."""
    return BuchiAutomaton.from_edges(names, ["all"], ["all"], ["all"], [("all", s, "all") for s in names])


def decide_constrained(
    A: OmegaAutomaton, substitutions, R: BuchiAutomaton, budget: int = DEFAULT_BUDGET
) -> MetaDecision:
    """Is some accepted word infinitely desubstitutable along a sequence accepted by ``R``?

    Büchi emptiness of the product of the pruned meta-automaton with ``R``.
    """
    M = build_meta(A, substitutions, budget)
    if set(R.alphabet) != set(M.names):
        raise InputError(
            f"constraint alphabet {' '.join(R.alphabet)} does not match substitutions {' '.join(M.names)}"
        )
    P = prune_nilpotent(M)
    if P.initial is None:
        return MetaDecision("constrained", False, None, len(M), len(P))
    ridx = [R.alphabet.index(name) for name in P.names]
    rrels = R.automaton.rels

    def succ(node):
        v, r = node
        out = []
        for i, w in enumerate(P.edges[v]):
            if w is None:
                continue
            for r2 in members(rrels[ridx[i]][r]):
                out.append((P.names[i], (w, r2)))
        return out

    starts = [(P.initial, r) for r in members(R.initial)]
    found = find_lasso(starts, succ, lambda node: bool((R.accepting >> node[1]) & 1))
    lasso = None if found is None else DirectiveLasso(found[0], found[1])
    return MetaDecision("constrained", lasso is not None, lasso, len(M), len(P))


def expand_lasso(A: OmegaAutomaton, substitutions, lasso: DirectiveLasso, depth: int, length: int):
    """Concrete accepted prefix built from a directive lasso.

    Desubstitutes ``A`` along the first ``depth`` names of the lasso, takes an
    accepted word of the resulting automaton and maps it back through the
    composed substitution. Returns at least ``length`` letters, or None when
    the desubstituted automaton has an empty language.
    """
    by_name = {s.name: s.aligned(A.alphabet) for s in substitutions}
    labels = lasso.prefix(depth)
    phi = compose_all([by_name[x] for x in labels], A.alphabet)
    B = desubstitute(A, phi)
    lw = lasso_word(B)
    if lw is None:
        return None
    stem, cyc = lw
    word = list(stem)
    while len(word) < length:
        word.extend(cyc)
    return apply(phi, word)
