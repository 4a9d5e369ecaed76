"""Command line front end.

Exit status: 0 for a "yes" answer (or a successful transform), 1 for "no",
2 for input errors and unsupported inputs, 3 when the vertex budget is
exhausted.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time

from desubst import __version__
from desubst.automaton import accepts_prefix, is_total
from desubst.desub import desubstitute, orbit
from desubst.errors import BudgetExceeded, DesubstError, InputError, Unsupported
from desubst.formats import (
    export_dot,
    format_automaton,
    load_automaton,
    load_buchi,
    load_substitution,
    load_words,
)
from desubst.meta import build_meta, decide_constrained, decide_inf_desub, directive_language, expand_lasso
from desubst.single import (
    decide_fixed_point,
    decide_fixed_point_power,
    decide_morphic,
    decide_pure_substitutive,
)
from desubst.sturmian import (
    FIBONACCI,
    STURMIAN_MORPHISMS,
    coding_automaton,
    decide_coding,
    decide_sturmian,
    fibonacci_totality,
    find_total_reachable,
    property_h,
)
from desubst.substitution import apply

SCHEMA = 1
YES, NO, INPUT_ERROR, BUDGET = 0, 1, 2, 3


def _common(p: argparse.ArgumentParser, *, automaton=True, subst=False, buchi=False, words=False):
    if automaton:
        p.add_argument("--automaton", required=True, help="automaton file")
    if subst:
        p.add_argument("--subst", action="append", default=[], help="substitution file (repeatable)")
    if buchi:
        p.add_argument("--buchi", required=True, help="Büchi constraint file")
    if words:
        p.add_argument("--words", required=True, help="word-set file, one word per line")
    p.add_argument("--witness-len", type=int, default=64, help="length of generated witness prefixes")
    p.add_argument("--vertex-budget", type=int, default=100_000, help="meta-automaton vertex cap")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--seed", type=int, default=0, help="seed for randomised witness checks")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="desubst", description="Desubstitution of ω-automata.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    _common(sub.add_parser("desub", help="print sigma^-1(A)"), subst=True)
    _common(sub.add_parser("orbit", help="iterate desubstitution until a repeat"), subst=True)
    _common(sub.add_parser("directive-language", help="automaton of directive sequences"), subst=True)
    p = sub.add_parser("export-dot", help="DOT of an automaton, or of its meta-automaton with --subst")
    _common(p, subst=True)
    p.add_argument("--output", help="output path (stdout by default)")

    decide = sub.add_parser("decide", help="decision procedures").add_subparsers(dest="problem", required=True)
    for name in ("fixed-point-power", "fixed-point", "pure-substitutive", "morphic", "inf-desub"):
        _common(decide.add_parser(name), subst=True)
    _common(decide.add_parser("constrained"), subst=True, buchi=True)
    _common(decide.add_parser("sturmian"))
    _common(decide.add_parser("coding"), automaton=False, words=True)

    analyze = sub.add_parser("analyze", help="Sturmian analyses").add_subparsers(dest="problem", required=True)
    _common(analyze.add_parser("totality"))
    p = analyze.add_parser("property-h")
    _common(p)
    p.add_argument("--state", help="check a single state (default: all)")
    _common(analyze.add_parser("fibonacci"))
    return parser


def _one_subst(args, count=1):
    if len(args.subst) != count:
        raise InputError(f"expected exactly {count} --subst file(s), got {len(args.subst)}")
    return [load_substitution(p) for p in args.subst]


def _substs(args):
    if not args.subst:
        raise InputError("at least one --subst file is required")
    return [load_substitution(p) for p in args.subst]


class Report:
    def __init__(self, problem, answer, witness=None, **diagnostics):
        self.problem = problem
        self.answer = answer
        self.witness = witness
        self.diagnostics = diagnostics
        self.text: list[str] = []

    def emit(self, as_json, started):
        self.diagnostics["seconds"] = round(time.perf_counter() - started, 6)
        if as_json:
            payload = {
                "schema": SCHEMA,
                "problem": self.problem,
                "answer": self.answer,
                "witness": self.witness,
                "diagnostics": self.diagnostics,
            }
            print(json.dumps(payload, indent=2, sort_keys=True))
        else:
            print(f"{self.problem}: {'yes' if self.answer else 'no'}")
            for line in self.text:
                print(line)
        return YES if self.answer else NO


def _single(args, A):
    problem = args.problem
    if problem == "morphic":
        sigma, tau = _one_subst(args, 2)
        d = decide_morphic(A, sigma, tau)
    else:
        (sigma,) = _one_subst(args)
        d = {
            "fixed-point-power": decide_fixed_point_power,
            "fixed-point": decide_fixed_point,
            "pure-substitutive": decide_pure_substitutive,
        }[problem](A, sigma)
    payload = d.to_json()
    diag = {}
    if "orbit" in payload:
        diag["orbit"] = payload["orbit"]
    rep = Report(problem, d.answer, payload["witness"], **diag)
    if d.n is not None:
        rep.text.append(f"orbit n={d.n} m={d.m}")
    if d.answer and d.witness is not None:
        prefix = d.prefix(args.witness_len)
        rep.diagnostics["witness_prefix"] = list(prefix)
        rep.diagnostics["validated"] = accepts_prefix(A, prefix)
        rep.text.append(f"witness: {payload['witness']}")
        rep.text.append(f"prefix: {A.alphabet.show(prefix)}")
    return rep


def _meta_report(args, A, subs, d):
    rep = Report(d.problem, d.answer, None if d.lasso is None else d.lasso.to_json(),
                 vertices=d.vertices, nonempty_vertices=d.live_vertices)
    rep.text.append(f"meta-automaton: {d.vertices} vertices, {d.live_vertices} nonempty")
    if d.lasso is not None:
        rep.text.append(f"directive lasso: stem [{' '.join(d.lasso.stem)}] cycle [{' '.join(d.lasso.cycle)}]")
        depth = len(d.lasso.stem) + 2 * len(d.lasso.cycle)
        word = expand_lasso(A, subs, d.lasso, depth, args.witness_len)
        if word is not None:
            rep.diagnostics["witness_prefix"] = list(word[: args.witness_len])
            rep.diagnostics["validated"] = accepts_prefix(A, word)
            rep.text.append(f"prefix: {A.alphabet.show(word[: args.witness_len])}")
    return rep


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    started = time.perf_counter()
    try:
        return _dispatch(args, started)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return BUDGET
    except Unsupported as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return INPUT_ERROR
    except DesubstError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR


def _dispatch(args, started) -> int:
    cmd = args.command
    budget = args.vertex_budget
    if cmd == "decide" and args.problem == "coding":
        words = load_words(args.words)
        d = decide_coding(words, budget)
        return _meta_report(args, coding_automaton(words), STURMIAN_MORPHISMS, d).emit(args.json, started)

    A = load_automaton(args.automaton)

    if cmd == "desub":
        (sigma,) = _one_subst(args)
        sys.stdout.write(format_automaton(desubstitute(A, sigma)))
        return YES
    if cmd == "orbit":
        (sigma,) = _one_subst(args)
        orb = orbit(A, sigma)
        if args.json:
            print(json.dumps({"schema": SCHEMA, "problem": "orbit", "n": orb.n, "m": orb.m,
                              "automata": [format_automaton(B) for B in orb.automata]},
                             indent=2, sort_keys=True))
        else:
            print(f"n={orb.n} m={orb.m}")
        return YES
    if cmd == "directive-language":
        sys.stdout.write(format_automaton(directive_language(A, _substs(args), budget)))
        return YES
    if cmd == "export-dot":
        obj = build_meta(A, [load_substitution(p) for p in args.subst], budget) if args.subst else A
        text = export_dot(obj, args.output)
        if args.output is None:
            sys.stdout.write(text)
        return YES

    if cmd == "decide":
        if args.problem in ("fixed-point-power", "fixed-point", "pure-substitutive", "morphic"):
            return _single(args, A).emit(args.json, started)
        if args.problem == "inf-desub":
            subs = _substs(args)
            return _meta_report(args, A, subs, decide_inf_desub(A, subs, budget)).emit(args.json, started)
        if args.problem == "constrained":
            subs = _substs(args)
            R = load_buchi(args.buchi)
            d = decide_constrained(A, subs, R, budget)
            return _meta_report(args, A, subs, d).emit(args.json, started)
        if args.problem == "sturmian":
            d = decide_sturmian(A, budget)
            return _meta_report(args, A, STURMIAN_MORPHISMS, d).emit(args.json, started)

    if cmd == "analyze":
        if args.problem == "totality":
            path = find_total_reachable(A, budget=budget)
            rep = Report("totality", path is not None, None if path is None else path.to_json())
            if path is not None:
                phi = path.morphism()
                rng = random.Random(args.seed)
                ok = True
                for _ in range(20):
                    x = [rng.choice("01") for _ in range(args.witness_len)]
                    ok = ok and accepts_prefix(A, apply(phi, x))
                rep.diagnostics["validated"] = ok
                rep.text.append(f"path: [{' '.join(path.labels)}] -> vertex {path.target}")
                rep.text.append(f"morphism: {phi}")
            return rep.emit(args.json, started)
        if args.problem == "property-h":
            states = [args.state] if args.state else list(A.names)
            for s in states:
                if s not in A.names:
                    raise InputError(f"unknown state {s!r}")
            per_state = {s: property_h(A, s) for s in states}
            rep = Report("property-h", all(per_state.values()), None, states=per_state)
            rep.text.extend(f"{s}: {'H' if ok else 'not H'}" for s, ok in per_state.items())
            return rep.emit(args.json, started)
        if args.problem == "fibonacci":
            k = fibonacci_totality(A)
            rep = Report("fibonacci", k is not None, None if k is None else {"kind": "orbit-index", "n": k})
            if k is not None:
                rep.text.append(f"fib^-{k}(A) is total")
                rep.diagnostics["validated"] = is_total(orbit(A, FIBONACCI).at(k))
            return rep.emit(args.json, started)
    raise InputError(f"unknown command {cmd}")  # pragma: no cover


def main():
    sys.exit(run())


__all__ = ["build_parser", "main", "run"]
