"""Random corpora and slow reference implementations for the tests.

The oracles work on explicit edge lists and Python sets, never on the
bitmask kernels, so agreement with the library is a genuine cross-check.
"""

import itertools
import random

from desubst import Homomorphism, OmegaAutomaton

BIN = ("0", "1")


def random_automaton(rng, alphabet=BIN, max_states=6, density=None, min_states=1):
    n = rng.randint(min_states, max_states)
    p = density if density is not None else rng.choice([0.15, 0.25, 0.35, 0.5])
    states = [f"q{i}" for i in range(n)]
    edges = [(s, a, t) for s in states for a in alphabet for t in states if rng.random() < p]
    initial = [s for s in states if rng.random() < 0.5] or [states[0]]
    return OmegaAutomaton.from_edges(alphabet, states, initial, edges)


def random_homomorphism(rng, alphabet, max_len=4, min_len=0):
    return Homomorphism.from_mapping(
        {a: "".join(rng.choice(alphabet) for _ in range(rng.randint(min_len, max_len))) for a in alphabet},
        alphabet,
    )


def random_alphabet(rng, max_size=3):
    return tuple("012"[: rng.randint(1, max_size)])


def corpus(seed, count, **kw):
    rng = random.Random(seed)
    return [random_automaton(rng, **kw) for _ in range(count)]


def h_automaton(rng, max_states=6):
    """Random binary automaton in which every state has property (H).

    Starting from a random automaton, any state that can continue to a live
    state on one letter only gets an extra edge on the other letter.
    Edges are only ever added, so the repair loop terminates.
    """
    A = random_automaton(rng, max_states=max_states)
    states = list(A.names)
    edges = {(A.names[s], A.alphabet.symbols[a], A.names[t]) for s, a, t in A.edges()}
    initial = [A.names[i] for i in range(A.n) if (A.initial >> i) & 1]
    while True:
        live = naive_live(states, edges)
        bad = None
        for q in states:
            can = {a for (s, a, t) in edges if s == q and t in live}
            if len(can) == 1:
                bad = (q, ({"0", "1"} - can).pop())
                break
        if bad is None:
            return OmegaAutomaton.from_edges(BIN, states, initial, sorted(edges))
        edges.add((bad[0], bad[1], rng.choice(sorted(live))))


# ---------------------------------------------------------------- oracles

def edge_list(A):
    return [(A.names[s], A.alphabet.symbols[a], A.names[t]) for s, a, t in A.edges()]


def initial_names(A):
    return {A.names[i] for i in range(A.n) if (A.initial >> i) & 1}


def naive_step(edges, current, letter):
    return {t for (s, a, t) in edges if s in current and a == letter}


def naive_pairs(A, word):
    """Set of (p, q) such that ``word`` labels a path p -> q."""
    edges = edge_list(A)
    out = set()
    for p in A.names:
        cur = {p}
        for letter in word:
            cur = naive_step(edges, cur, letter)
        out |= {(p, q) for q in cur}
    return out


def relation_pairs(A, rows):
    return {(A.names[i], A.names[j]) for i, r in enumerate(rows) for j in range(A.n) if (r >> j) & 1}


def naive_live(states, edges):
    live = set(states)
    while True:
        nxt = {s for s in live if any(e[0] == s and e[2] in live for e in edges)}
        if nxt == live:
            return live
        live = nxt


def naive_desubstitute(A, sigma):
    """Edge set of the desubstituted automaton, by walking each image word."""
    edges = edge_list(A)
    out = set()
    for a in A.alphabet:
        img = sigma.image(a)
        for p in A.names:
            cur = {p}
            for letter in img:
                cur = naive_step(edges, cur, letter)
            out |= {(p, a, q) for q in cur}
    return out


def naive_accepts_lasso(A, stem, cycle):
    """Does ``A`` have an infinite run on ``stem cycle^ω``?

    Product of the automaton with the positions of the lasso word; an infinite
    run exists iff a reachable product node lies on a cycle.
    """
    word = list(stem) + list(cycle)
    ls, lc = len(stem), len(cycle)
    edges = edge_list(A)

    def nxt(pos):
        return pos + 1 if pos + 1 < ls + lc else ls

    def succ(node):
        q, pos = node
        return {(t, nxt(pos)) for (s, a, t) in edges if s == q and a == word[pos]}

    start = {(q, 0) for q in initial_names(A)}
    seen = set(start)
    todo = list(start)
    while todo:
        v = todo.pop()
        for w in succ(v):
            if w not in seen:
                seen.add(w)
                todo.append(w)
    alive = set(seen)
    while True:
        keep = {v for v in alive if succ(v) & alive}
        if keep == alive:
            return bool(alive)
        alive = keep


def readable(A, word):
    cur = initial_names(A)
    edges = edge_list(A)
    for letter in word:
        cur = naive_step(edges, cur, letter)
        if not cur:
            return False
    return True


def brute_total(A, length):
    """Every word of ``length`` letters labels a path from an initial state.

    By König's lemma this is totality once ``length`` exceeds the number of
    subsets of states. Small cases enumerate words outright; larger ones walk
    the same word tree depth first, sharing subtrees that start from the same
    (state set, remaining length) pair.
    """
    edges = edge_list(A)
    letters = tuple(A.alphabet)
    start = frozenset(initial_names(A))
    if len(letters) ** length <= 1 << 12:
        for word in itertools.product(letters, repeat=length):
            if not readable(A, word):
                return False
        return True
    memo = {}

    def ok(cur, remaining):
        if not cur:
            return False
        if remaining == 0:
            return True
        key = (cur, remaining)
        if key not in memo:
            memo[key] = all(ok(frozenset(naive_step(edges, cur, a)), remaining - 1) for a in letters)
        return memo[key]

    return ok(start, length)


def naive_apply(sigma, word):
    return tuple(x for letter in word for x in sigma.image(letter))
