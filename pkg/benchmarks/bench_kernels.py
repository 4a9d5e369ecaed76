"""Compare the compiled and pure-Python kernel backends.

Each backend runs in its own interpreter (the pure one is forced with
DESUBST_PURE_PYTHON=1) on the same seeded workload:

* meta      build the Sturmian meta-automaton of random binary automata
* orbit     desubstitution orbits under random substitutions
* totality  is_total on random automata
* relation  long path relations on 48-state automata

Usage: python3 benchmarks/bench_kernels.py [--count N] [--seed S] [--repeat R]
"""

import argparse
import json
import os
import subprocess
import sys

WORKER = r"""
import json, random, sys, time
import desubst
from desubst import build_meta, is_total, orbit, path_relation, Homomorphism, OmegaAutomaton
from desubst.sturmian import STURMIAN_MORPHISMS

count, seed, repeat = map(int, sys.argv[1:4])

def rand_aut(rng, n_max, alphabet="01"):
    n = rng.randint(1, n_max)
    p = rng.choice([0.15, 0.25, 0.35, 0.5])
    st = [f"q{i}" for i in range(n)]
    edges = [(s, a, t) for s in st for a in alphabet for t in st if rng.random() < p]
    init = [s for s in st if rng.random() < 0.5] or [st[0]]
    return OmegaAutomaton.from_edges(alphabet, st, init, edges)

def rand_sub(rng):
    return Homomorphism.from_mapping(
        {a: "".join(rng.choice("01") for _ in range(rng.randint(1, 4))) for a in "01"}, "01")

rng = random.Random(seed)
autos = [rand_aut(rng, 6) for _ in range(count)]
subs = [rand_sub(rng) for _ in range(count)]
wide = [rand_aut(rng, 48) for _ in range(max(1, count // 20))]
words = ["".join(rng.choice("01") for _ in range(200)) for _ in wide]

def bench(fn):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best

out = {"backend": desubst.BACKEND}
out["meta"] = bench(lambda: [build_meta(A, STURMIAN_MORPHISMS) for A in autos])
out["orbit"] = bench(lambda: [orbit(A, s) for A, s in zip(autos, subs)])
out["totality"] = bench(lambda: [is_total(A) for A in autos])
out["relation"] = bench(lambda: [path_relation(A, w) for A, w in zip(wide, words)])
print(json.dumps(out))
"""


def run(pure, args):
    env = dict(os.environ)
    env.pop("DESUBST_PURE_PYTHON", None)
    if pure:
        env["DESUBST_PURE_PYTHON"] = "1"
    res = subprocess.run(
        [sys.executable, "-c", WORKER, str(args.count), str(args.seed), str(args.repeat)],
        env=env, capture_output=True, text=True, check=True,
    )
    return json.loads(res.stdout)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--count", type=int, default=400, help="random automata per workload")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--repeat", type=int, default=3, help="best of R runs")
    args = parser.parse_args()

    compiled = run(False, args)
    pure = run(True, args)
    if compiled["backend"] != "cython":
        print("compiled kernels are not built; both columns use the pure-Python backend")
    print(f"{'workload':<10} {'compiled s':>11} {'python s':>10} {'speedup':>8}")
    for key in ("meta", "orbit", "totality", "relation"):
        c, p = compiled[key], pure[key]
        print(f"{key:<10} {c:>11.4f} {p:>10.4f} {p / c if c else float('nan'):>7.2f}x")


if __name__ == "__main__":
    main()
