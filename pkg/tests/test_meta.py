import itertools

import pytest

from desubst import (
    BudgetExceeded,
    InputError,
    OmegaAutomaton,
    buchi_is_empty,
    build_meta,
    decide_constrained,
    decide_inf_desub,
    desubstitute,
    directive_language,
    is_empty_infinite,
    is_total,
    prune_nilpotent,
)
from desubst.automaton import accepts_finite_word, accepts_prefix
from desubst.fixtures import A_H, EMPTY1, FULL1, LOOP0, SIGMA_F, SIGMA_H, SIGMA_SWAP, SWAP01, T_TRIANGLE
from desubst.meta import BuchiAutomaton, all_sequences_buchi, buchi_accepts_lasso, expand_lasso
from desubst.substitution import DirectiveLasso, compose_all
from desubst.sturmian import L0, L1, R0, R1, STURMIAN_MORPHISMS, alternation_buchi

import _support as S

KIT = STURMIAN_MORPHISMS


def only(name):
    return BuchiAutomaton.from_edges([name], ["r"], ["r"], ["r"], [("r", name, "r")])


# ------------------------------------------------------------ build / prune

def test_build_examples():
    M = build_meta(A_H, [SIGMA_H])
    assert len(M) == 1 and M.edges == ((0,),)
    M = build_meta(T_TRIANGLE, [SIGMA_SWAP])
    assert len(M) == 2 and M.edges == ((1,), (0,))
    M = build_meta(FULL1, KIT)
    assert len(M) == 1 and M.edges == ((0, 0, 0, 0),)


def test_build_rejects_erasing_and_duplicates():
    from desubst import Homomorphism

    erasing = Homomorphism.from_mapping({"0": "0", "1": ""}, ("0", "1"), "e")
    with pytest.raises(InputError):
        build_meta(FULL1, [erasing])
    with pytest.raises(InputError):
        build_meta(FULL1, [L0, L0])


def test_budget():
    with pytest.raises(BudgetExceeded):
        build_meta(LOOP0, [SIGMA_F], budget=2)
    assert len(build_meta(LOOP0, [SIGMA_F], budget=3)) == 3


def test_prune_examples():
    M = build_meta(A_H, [SIGMA_H])
    assert prune_nilpotent(M) == M
    P = prune_nilpotent(build_meta(EMPTY1, KIT))
    assert len(P) == 0 and P.initial is None
    M = build_meta(LOOP0, [SIGMA_F])
    P = prune_nilpotent(M)
    assert len(M) == 3 and len(P) == 2
    assert P.origin == (0, 1) and P.edges == ((1,), (None,))


def naive_meta(A, subs):
    """Vertex list and edges, built with the set-based desubstitution."""
    def key(edges):
        return frozenset(edges)

    start = key(S.edge_list(A))
    index = {start: 0}
    order = [start]
    edges = []
    i = 0
    while i < len(order):
        cur = OmegaAutomaton.from_edges(A.alphabet.symbols, A.names, sorted(S.initial_names(A)), sorted(order[i]))
        row = []
        for s in subs:
            nxt = key(S.naive_desubstitute(cur, s))
            if nxt not in index:
                index[nxt] = len(order)
                order.append(nxt)
            row.append(index[nxt])
        edges.append(tuple(row))
        i += 1
    return order, edges


def test_meta_matches_naive_closure(rng):
    for _ in range(60):
        A = S.random_automaton(rng, max_states=3)
        M = build_meta(A, KIT)
        order, edges = naive_meta(A, KIT)
        assert len(M) == len(order)
        assert M.edges == tuple(edges)
        for v, B in enumerate(M.vertices):
            assert set(S.edge_list(B)) == order[v]


def test_empty_flags_propagate_forward(rng):
    for _ in range(100):
        A = S.random_automaton(rng, max_states=5)
        M = build_meta(A, KIT)
        for v in range(len(M)):
            assert M.empty[v] == is_empty_infinite(M.vertices[v])
            if M.empty[v]:
                assert all(M.empty[w] for w in M.edges[v])


# ------------------------------------------------------------ inf-desub

def test_inf_desub_examples():
    d = decide_inf_desub(A_H, [SIGMA_H])
    assert d.answer and d.lasso == DirectiveLasso((), ("sigmaH",))
    d = decide_inf_desub(LOOP0, [L0])
    assert d.answer and d.lasso == DirectiveLasso((), ("L0",))
    # swap01 exchanges loop0 and loop1, so 0^ω = swap01(1^ω) desubstitutes forever
    d = decide_inf_desub(LOOP0, [SWAP01])
    assert d.answer and d.lasso == DirectiveLasso((), ("swap01", "swap01"))
    assert infinite_walk_oracle(LOOP0, [SWAP01])
    # a substitution that really kills loop0: L1(0) = 10 needs a 1-edge
    assert not decide_inf_desub(LOOP0, [L1]).answer


def infinite_walk_oracle(A, subs):
    order, edges = naive_meta(A, subs)
    nonempty = set()
    for v, es in enumerate(order):
        states = list(A.names)
        live = S.naive_live(states, es)
        if live & S.initial_names(A):
            nonempty.add(v)
    alive = set(nonempty)
    while True:
        keep = {v for v in alive if any(w in alive for w in edges[v])}
        if keep == alive:
            return 0 in alive
        alive = keep


def test_inf_desub_against_oracle(rng):
    for _ in range(80):
        A = S.random_automaton(rng, max_states=3)
        subs = rng.sample(KIT, rng.randint(1, 4))
        assert decide_inf_desub(A, subs).answer == infinite_walk_oracle(A, subs)


def test_lasso_prefixes_stay_nonempty(rng):
    seen = 0
    for _ in range(150):
        A = S.random_automaton(rng, max_states=5)
        subs = rng.sample(KIT, rng.randint(1, 4))
        d = decide_inf_desub(A, subs)
        if not d.answer:
            continue
        seen += 1
        by_name = {s.name: s for s in subs}
        for k in range(7):
            phi = compose_all([by_name[x] for x in d.lasso.prefix(k)], A.alphabet)
            assert not is_empty_infinite(desubstitute(A, phi))
    assert seen > 10


def test_expanded_lasso_is_accepted(rng):
    seen = 0
    for _ in range(150):
        A = S.random_automaton(rng, max_states=5)
        subs = rng.sample(KIT, rng.randint(1, 4))
        d = decide_inf_desub(A, subs)
        if not d.answer:
            continue
        seen += 1
        depth = len(d.lasso.stem) + 2 * len(d.lasso.cycle)
        word = expand_lasso(A, subs, d.lasso, depth, 32)
        assert word is not None and len(word) >= 32
        assert accepts_prefix(A, word)
    assert seen > 10


# ------------------------------------------------------------ directive language

def test_directive_language_examples():
    D = directive_language(A_H, [SIGMA_H])
    assert D.n == 1 and S.edge_list(D) == [("v0", "sigmaH", "v0")]
    assert is_empty_infinite(directive_language(EMPTY1, KIT))
    D = directive_language(FULL1, KIT)
    assert D.n == 1 and len(S.edge_list(D)) == 4 and is_total(D)


def test_directive_language_truncations(rng):
    for _ in range(40):
        A = S.random_automaton(rng, max_states=4)
        subs = rng.sample(KIT, rng.randint(1, 3))
        D = directive_language(A, subs)
        by_name = {s.name: s for s in subs}
        for k in range(6):
            for labels in itertools.product([s.name for s in subs], repeat=k):
                phi = compose_all([by_name[x] for x in labels], A.alphabet)
                nonempty = not is_empty_infinite(desubstitute(A, phi))
                # walks of the directive automaton are exactly the nonempty label words
                assert accepts_finite_word(D, labels) == nonempty
                if accepts_prefix(D, labels):
                    assert nonempty


# ------------------------------------------------------------ Büchi

def test_buchi_emptiness_examples():
    loop = BuchiAutomaton.from_edges(["x"], ["p"], ["p"], ["p"], [("p", "x", "p")])
    assert not buchi_is_empty(loop)
    dead_end = BuchiAutomaton.from_edges(["x"], ["p", "q"], ["p"], ["q"], [("p", "x", "p"), ("p", "x", "q")])
    assert buchi_is_empty(dead_end)
    dag = BuchiAutomaton.from_edges(["x"], ["p", "q", "r"], ["p"], ["q"],
                                    [("p", "x", "q"), ("q", "x", "r"), ("r", "x", "r")])
    assert buchi_is_empty(dag)


def test_constrained_examples():
    d = decide_constrained(FULL1, KIT, alternation_buchi())
    assert d.answer and buchi_accepts_lasso(alternation_buchi(), d.lasso)
    d = decide_constrained(LOOP0, [L0], only("L0"))
    assert d.answer and d.lasso == DirectiveLasso((), ("L0",))
    assert not decide_constrained(LOOP0, [L1], only("L1")).answer


def test_constrained_alphabet_mismatch():
    with pytest.raises(InputError):
        decide_constrained(LOOP0, [L0], only("L1"))


def test_all_sequences_constraint_matches_inf_desub(rng):
    for _ in range(200):
        A = S.random_automaton(rng, max_states=5)
        subs = rng.sample(KIT, rng.randint(1, 4))
        R = all_sequences_buchi([s.name for s in subs])
        assert decide_constrained(A, subs, R).answer == decide_inf_desub(A, subs).answer


def test_constrained_lasso_is_accepted_by_constraint(rng):
    R = alternation_buchi()
    for _ in range(150):
        A = S.random_automaton(rng, max_states=5)
        d = decide_constrained(A, KIT, R)
        if d.answer:
            assert buchi_accepts_lasso(R, d.lasso)
            depth = len(d.lasso.stem) + 2 * len(d.lasso.cycle)
            assert accepts_prefix(A, expand_lasso(A, KIT, d.lasso, depth, 32))


def test_r1_r0_alone():
    # R0, R1 only: still Sturmian sequences for the full shift
    assert decide_constrained(FULL1, [R0, R1], BuchiAutomaton.from_edges(
        ["R0", "R1"], ["a", "b"], ["a"], ["b"],
        [("a", "R0", "a"), ("a", "R1", "b"), ("b", "R0", "a"), ("b", "R1", "b")],
    )).answer
