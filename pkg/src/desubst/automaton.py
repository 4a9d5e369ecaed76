"""ω-automata with the all-runs acceptance condition.

Every infinite walk that starts in an initial state is accepting; there is no
Büchi set. States are dense indices ``0..n-1``, sets of states are int
bitmasks, and the transitions of each letter are stored as a tuple of row
bitmasks (see :mod:`desubst._pykernels`).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from desubst import kernels
from desubst.errors import InputError

Word = tuple[str, ...]


def members(mask: int) -> list[int]:
    """Indices of the set bits of ``mask`` in increasing order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def pairs(rows: Sequence[int]) -> set[tuple[int, int]]:
    """Relation given as row bitmasks, as a set of index pairs."""
    return {(q, r) for q, bits in enumerate(rows) for r in members(bits)}


@dataclass(frozen=True)
class Alphabet:
    """Ordered finite set of symbols; a letter's id is its position."""

    symbols: tuple[str, ...]

    def __post_init__(self):
        symbols = tuple(self.symbols)
        object.__setattr__(self, "symbols", symbols)
        if not symbols:
            raise InputError("alphabet must be nonempty")
        if len(set(symbols)) != len(symbols):
            raise InputError(f"duplicate symbols in alphabet {symbols}")
        for s in symbols:
            if not isinstance(s, str) or not s or any(c.isspace() for c in s):
                raise InputError(f"invalid symbol {s!r}")

    @cached_property
    def _index(self) -> dict[str, int]:
        return {s: i for i, s in enumerate(self.symbols)}

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[str]:
        return iter(self.symbols)

    def __contains__(self, symbol) -> bool:
        return symbol in self._index

    def index(self, symbol: str) -> int:
        try:
            return self._index[symbol]
        except KeyError:
            raise InputError(f"unknown letter {symbol!r} (alphabet {' '.join(self.symbols)})") from None

    def encode(self, word: Iterable[str]) -> tuple[int, ...]:
        return tuple(self.index(s) for s in word)

    def decode(self, codes: Iterable[int]) -> Word:
        return tuple(self.symbols[i] for i in codes)

    @property
    def compact(self) -> bool:
        """True when every symbol is a single character."""
        return all(len(s) == 1 for s in self.symbols)

    def show(self, word: Iterable[str]) -> str:
        word = tuple(word)
        return "".join(word) if self.compact else " ".join(word)


@dataclass(frozen=True)
class OmegaAutomaton:
    """An ω-automaton ``(alphabet, Q, I, T)``.

    Equality and hashing look at the alphabet, the number of states, the
    initial set and the transition bits; display names are ignored.
    """

    alphabet: Alphabet
    n: int
    initial: int
    rels: tuple[tuple[int, ...], ...]
    names: tuple[str, ...] = field(default=(), compare=False, repr=False)

    def __post_init__(self):
        if self.n < 1:
            raise InputError("an automaton needs at least one state")
        full = (1 << self.n) - 1
        if self.initial & ~full:
            raise InputError("initial states out of range")
        if len(self.rels) != len(self.alphabet):
            raise InputError("one relation per letter is required")
        for rows in self.rels:
            if len(rows) != self.n or any(r & ~full for r in rows):
                raise InputError("relation dimensions do not match the state count")
        names = tuple(self.names) or tuple(f"q{i}" for i in range(self.n))
        if len(names) != self.n or len(set(names)) != self.n:
            raise InputError("state names must be distinct, one per state")
        object.__setattr__(self, "names", names)

    @classmethod
    def from_edges(cls, alphabet, states, initial, edges) -> OmegaAutomaton:
        """Build from names: ``edges`` is an iterable of ``(src, symbol, dst)``."""
        if not isinstance(alphabet, Alphabet):
            alphabet = Alphabet(tuple(alphabet))
        states = tuple(states)
        if len(set(states)) != len(states):
            raise InputError("duplicate state names")
        pos = {s: i for i, s in enumerate(states)}

        def state(name):
            try:
                return pos[name]
            except KeyError:
                raise InputError(f"unknown state {name!r}") from None

        rels = [[0] * len(states) for _ in alphabet]
        for src, sym, dst in edges:
            rels[alphabet.index(sym)][state(src)] |= 1 << state(dst)
        init = mask_of(state(s) for s in initial)
        return cls(alphabet, len(states), init, tuple(tuple(r) for r in rels), states)

    @classmethod
    def empty_like(cls, other: OmegaAutomaton) -> OmegaAutomaton:
        """Transition-free automaton with ``other``'s alphabet, states and initials."""
        zero = tuple(0 for _ in range(other.n))
        return cls(other.alphabet, other.n, other.initial, tuple(zero for _ in other.alphabet), other.names)

    def with_relations(self, rels) -> OmegaAutomaton:
        return OmegaAutomaton(self.alphabet, self.n, self.initial, tuple(rels), self.names)

    def with_initial(self, initial: int) -> OmegaAutomaton:
        return OmegaAutomaton(self.alphabet, self.n, initial, self.rels, self.names)

    @property
    def all_states(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> Iterator[tuple[int, int, int]]:
        """Transitions ``(src, letter, dst)`` ordered by src, letter, dst."""
        for q in range(self.n):
            for a, rows in enumerate(self.rels):
                for r in members(rows[q]):
                    yield q, a, r

    def edge_count(self) -> int:
        return sum(bin(r).count("1") for rows in self.rels for r in rows)

    @cached_property
    def live(self) -> int:
        return kernels.live_mask(self.rels, self.n)

    def __str__(self):
        from desubst.formats import format_automaton

        return format_automaton(self)


def path_relation(A: OmegaAutomaton, word: Iterable[str]) -> tuple[int, ...]:
    """Relation ``q -> q'`` iff some computation from ``q`` to ``q'`` reads ``word``.

    The empty word gives the identity.
    """
    return kernels.word_relation(A.rels, A.alphabet.encode(word), A.n)


def live_states(A: OmegaAutomaton) -> int:
    """Bitmask of the states from which an infinite walk starts."""
    return A.live


def is_empty_infinite(A: OmegaAutomaton) -> bool:
    return not (A.initial & A.live)


def reach_mask(A: OmegaAutomaton, start: int, word: Iterable[str]) -> int:
    cur = start
    for a in A.alphabet.encode(word):
        cur = kernels.image_mask(A.rels, a, cur)
    return cur


def accepts_finite_word(A: OmegaAutomaton, word: Iterable[str]) -> bool:
    """True iff ``word`` labels a computation starting in an initial state."""
    return bool(reach_mask(A, A.initial, word))


def accepts_prefix(A: OmegaAutomaton, word: Iterable[str]) -> bool:
    """True iff ``word`` labels an initial computation that extends to infinity.

    Equivalently ``word`` is a prefix of some word of the infinite language.
    """
    return bool(reach_mask(A, A.initial, word) & A.live)


def restrict_states(A: OmegaAutomaton, mask: int) -> OmegaAutomaton:
    """Drop every transition touching a state outside ``mask``; initials are masked too."""
    rels = tuple(tuple(r & mask if (mask >> q) & 1 else 0 for q, r in enumerate(rows)) for rows in A.rels)
    return OmegaAutomaton(A.alphabet, A.n, A.initial & mask, rels, A.names)


def restrict_letters(A: OmegaAutomaton, symbols: Iterable[str]) -> OmegaAutomaton:
    """Keep only the transitions labelled by ``symbols`` (alphabet unchanged)."""
    keep = {A.alphabet.index(s) for s in symbols}
    zero = tuple(0 for _ in range(A.n))
    return A.with_relations(rows if a in keep else zero for a, rows in enumerate(A.rels))


def project_alphabet(A: OmegaAutomaton, symbols: Sequence[str]) -> OmegaAutomaton:
    """Automaton over the sub-alphabet ``symbols`` with the matching transitions."""
    sub = Alphabet(tuple(symbols))
    rels = tuple(A.rels[A.alphabet.index(s)] for s in sub)
    return OmegaAutomaton(sub, A.n, A.initial, rels, A.names)


def is_total(A: OmegaAutomaton) -> bool:
    """True iff every infinite word over the alphabet is accepted.

    The infinite language is closed, so it is the full shift iff every
    finite word labels an initial computation inside the live part. The
    latter is a universality check on the subset construction of the pruned
    automaton.
    """
    pruned = restrict_states(A, A.live)
    return kernels.powerset_universal(pruned.rels, pruned.initial)


def forget(A: OmegaAutomaton) -> OmegaAutomaton:
    """Same transitions, every state initial; the language becomes a sofic shift."""
    return A.with_initial(A.all_states)


def lasso_word(A: OmegaAutomaton) -> tuple[Word, Word] | None:
    """An accepted ultimately periodic word ``stem · cycle^ω``, or None if L∞ is empty.

    The stem is a shortest word leading from an initial state to a live state
    on a cycle of live states; the cycle is a shortest return path to it.
    """
    live = A.live
    start = A.initial & live
    if not start:
        return None
    pruned = restrict_states(A, live)
    succ = [[(a, r) for a, rows in enumerate(pruned.rels) for r in members(rows[q])] for q in range(A.n)]

    def bfs(sources, goal):
        parent = {s: None for s in sources}
        queue = deque(sources)
        while queue:
            q = queue.popleft()
            for a, r in succ[q]:
                if r == goal and goal is not None:
                    return parent, q, a
                if r not in parent:
                    parent[r] = (q, a)
                    queue.append(r)
        return parent, None, None

    # every live state reaches a cycle; pick the first cyclic state met by BFS
    on_cycle = set()
    for q in members(live):
        _, hit, _ = bfs([q], q)
        if hit is not None:
            on_cycle.add(q)
    parent = {s: None for s in members(start)}
    queue = deque(members(start))
    target = None
    while queue:
        q = queue.popleft()
        if q in on_cycle:
            target = q
            break
        for a, r in succ[q]:
            if r not in parent:
                parent[r] = (q, a)
                queue.append(r)
    stem = []
    q = target
    while parent[q] is not None:
        q, a = parent[q]
        stem.append(a)
    stem.reverse()
    # shortest cycle back to target
    cparent, last, a_last = bfs([target], target)
    cycle = [a_last]
    q = last
    while q != target:
        q, a = cparent[q]
        cycle.append(a)
    cycle.reverse()
    return A.alphabet.decode(stem), A.alphabet.decode(cycle)
