"""The ten acceptance criteria, each at its stated tolerance.

Run with ``pytest tests/test_acceptance.py`` (one PASS/FAIL line per
criterion appears in the terminal summary) or directly with
``python3 tests/test_acceptance.py``.
"""

import random
import time

import pytest

from desubst import (
    accepts_prefix,
    apply,
    build_meta,
    compose,
    decide_coding,
    decide_constrained,
    decide_fixed_point,
    decide_inf_desub,
    decide_pure_substitutive,
    decide_sturmian,
    desubstitute,
    fibonacci_totality,
    find_total_reachable,
    is_empty_infinite,
    is_total,
    orbit,
    path_relation,
    property_h,
)
from desubst.fixtures import A_H, FULL1, SIGMA_F, SIGMA_H, SIGMA_SWAP, T_TRIANGLE
from desubst.sturmian import STURMIAN_MORPHISMS, alternation_buchi

import _support as S

pytestmark = pytest.mark.acceptance

RESULTS = {}


def record(number, ok, detail):
    line = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
    RESULTS[number] = line
    print(line)
    assert ok, line


def sturmian_corpus():
    return S.corpus(2024, 600, max_states=6)


def test_criterion_01_triangle_swap():
    t = time.perf_counter()
    orb = orbit(T_TRIANGLE, SIGMA_SWAP)
    d = decide_fixed_point(T_TRIANGLE, SIGMA_SWAP)
    dt = time.perf_counter() - t
    witness_ok = d.answer and tuple(d.prefix(16)) == ("0",) * 16
    ok = (orb.n, orb.m) == (0, 2) and witness_ok and dt < 1.0
    record(1, ok, f"(n,m)=({orb.n},{orb.m}), fixed point {d.witness}, {dt:.3f}s")


def test_criterion_02_sigma_h():
    t = time.perf_counter()
    same = desubstitute(A_H, SIGMA_H) == A_H and desubstitute(A_H, SIGMA_H).rels == A_H.rels
    M = build_meta(A_H, [SIGMA_H])
    d = decide_inf_desub(A_H, [SIGMA_H])
    dt = time.perf_counter() - t
    ok = (
        same
        and not is_total(A_H)
        and len(M) == 1
        and not any(is_total(B) for B in M.vertices)
        and d.answer
        and d.lasso.stem == ()
        and d.lasso.cycle == ("sigmaH",)
        and dt < 1.0
    )
    record(2, ok, f"fixed by desubstitution={same}, vertices={len(M)}, lasso={d.lasso}, {dt:.3f}s")


def test_criterion_03_composition_law():
    rng = random.Random(3)
    t = time.perf_counter()
    failures = 0
    for _ in range(1000):
        alpha = S.random_alphabet(rng)
        A = S.random_automaton(rng, alphabet=alpha, max_states=5)
        sigma = S.random_homomorphism(rng, alpha)
        tau = S.random_homomorphism(rng, alpha)
        lhs = desubstitute(desubstitute(A, sigma), tau)
        rhs = desubstitute(A, compose(sigma, tau))
        failures += lhs != rhs
    dt = time.perf_counter() - t
    record(3, failures == 0 and dt < 30, f"1000 cases, {failures} failures, {dt:.2f}s")


def test_criterion_04_finite_word_contract():
    rng = random.Random(4)
    failures = 0
    for _ in range(1000):
        alpha = S.random_alphabet(rng)
        A = S.random_automaton(rng, alphabet=alpha, max_states=5)
        sigma = S.random_homomorphism(rng, alpha)
        w = tuple(rng.choice(alpha) for _ in range(rng.randint(0, 6)))
        failures += path_relation(desubstitute(A, sigma), w) != path_relation(A, apply(sigma, w))
    record(4, failures == 0, f"1000 cases, {failures} failures")


def test_criterion_05_sturmian_cross_validation():
    R = alternation_buchi()
    t = time.perf_counter()
    autos = sturmian_corpus()
    disagree = 0
    yes = 0
    for A in autos:
        a = decide_sturmian(A).answer
        b = decide_constrained(A, STURMIAN_MORPHISMS, R).answer
        disagree += a != b
        yes += a
    dt = time.perf_counter() - t
    ok = disagree == 0 and len(autos) >= 500 and dt < 300
    record(5, ok, f"{len(autos)} automata ({yes} Sturmian), {disagree} disagreements, {dt:.1f}s")


def test_criterion_06_total_reachable():
    rng = random.Random(6)
    checked = 0
    failures = 0
    for A in sturmian_corpus():
        if not decide_sturmian(A).answer:
            continue
        checked += 1
        path = find_total_reachable(A)
        if path is None:
            failures += 1
            continue
        phi = path.morphism()
        if not is_total(desubstitute(A, phi)):
            failures += 1
            continue
        for _ in range(100):
            x = [rng.choice("01") for _ in range(40)]
            if not accepts_prefix(A, apply(phi, x)):
                failures += 1
                break
    record(6, failures == 0 and checked > 0, f"{checked} Sturmian automata, {failures} failures")


def test_criterion_07_fibonacci():
    d = decide_pure_substitutive(FULL1, SIGMA_F)
    prefix = "".join(d.prefix(8)) if d.answer else ""
    fixture_ok = (
        d.answer
        and d.witness.letter == "0"
        and prefix == "01001010"
        and accepts_prefix(FULL1, prefix)
    )
    fib = "".join(S.naive_apply(SIGMA_F, "0"))
    while len(fib) < 400:
        fib = "".join(S.naive_apply(SIGMA_F, fib))
    accepting = 0
    failures = 0
    for A in sturmian_corpus():
        if not decide_pure_substitutive(A, SIGMA_F).answer:
            continue
        accepting += 1
        if not S.readable(A, fib) or fibonacci_totality(A) is None:
            failures += 1
    ok = fixture_ok and failures == 0 and accepting > 0
    record(7, ok, f"prefix {prefix!r}, {accepting} corpus automata accept f, {failures} failures")


def test_criterion_08_coding():
    cases = [(["0", "01"], True), (["00", "11"], False), (["0"], False)]
    ok = True
    parts = []
    for words, expected in cases:
        t = time.perf_counter()
        got = decide_coding(words).answer
        dt = time.perf_counter() - t
        ok = ok and got == expected and dt < 1.0
        parts.append(f"{{{','.join(words)}}}={'yes' if got else 'no'} ({dt:.3f}s)")
    record(8, ok, ", ".join(parts))


def test_criterion_09_totality_oracle():
    rng = random.Random(9)
    failures = 0
    count = 0
    totals = 0
    for _ in range(400):
        A = S.random_automaton(rng, max_states=4, density=rng.choice([0.3, 0.5, 0.7]))
        want = S.brute_total(A, 2 * 2 ** A.n)
        got = is_total(A)
        failures += want != got
        totals += got
        count += 1
    record(9, failures == 0, f"{count} automata ({totals} total), {failures} failures")


def test_criterion_10_property_h_dichotomy():
    rng = random.Random(10)
    failures = 0
    empties = 0
    for _ in range(500):
        A = S.h_automaton(rng)
        assert all(property_h(A, q) for q in range(A.n))
        empty = is_empty_infinite(A)
        empties += empty
        failures += not (empty or is_total(A))
    record(10, failures == 0, f"500 automata ({empties} empty), {failures} failures")


if __name__ == "__main__":
    import sys

    status = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                status = 1
    sys.exit(status)
