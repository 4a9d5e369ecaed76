"""Decisions driven by one generating substitution.

Each decider returns a :class:`SingleDecision`; positive answers of the
pure-substitutive, fixed-point and morphic deciders carry a witness from
which arbitrarily long prefixes of an accepted word can be generated.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import islice, cycle as _cycle
from typing import Union

from desubst.automaton import (
    OmegaAutomaton,
    Word,
    is_empty_infinite,
    lasso_word,
    members,
    project_alphabet,
    restrict_letters,
)
from desubst.desub import desubstitute, orbit
from desubst.errors import PreconditionError, Unsupported
from desubst.graphs import path_to, reachable
from desubst.substitution import (
    Homomorphism,
    apply,
    fixed_letters,
    generate_prefix,
    is_nonerasing,
    mortal_letters,
    nonerasing_reduction,
    right_prolongable_letters,
)


@dataclass(frozen=True)
class GeneratingLetter:
    """``lim sigma^k(letter)`` is accepted, read from ``state`` of ``sigma^{-n}(A)``."""

    letter: str
    n: int
    state: str
    coding: str | None = None  # name of the outer morphism of a morphic word

    def to_json(self):
        out = {"kind": "generating-letter", "letter": self.letter, "orbit_index": self.n, "state": self.state}
        if self.coding is not None:
            out["coding"] = self.coding
        return out


@dataclass(frozen=True)
class FixedPointLasso:
    """The fixed point ``stem · cycle^ω`` written over letters fixed by sigma."""

    stem: Word
    cycle: Word

    def to_json(self):
        return {"kind": "fp-lasso", "stem": list(self.stem), "cycle": list(self.cycle)}


@dataclass(frozen=True)
class FixedPointPrefix:
    """The fixed point ``prefix · lim sigma^k(letter)`` with ``prefix`` over fixed letters."""

    prefix: Word
    letter: str
    n: int

    def to_json(self):
        return {"kind": "fp-prefix", "prefix": list(self.prefix), "letter": self.letter, "orbit_index": self.n}


Witness = Union[GeneratingLetter, FixedPointLasso, FixedPointPrefix]


@dataclass(frozen=True)
class SingleDecision:
    problem: str
    answer: bool
    witness: Witness | None = None
    n: int | None = None
    m: int | None = None
    sigma: Homomorphism | None = field(default=None, compare=False, repr=False)
    tau: Homomorphism | None = field(default=None, compare=False, repr=False)

    def __bool__(self):
        return self.answer

    def prefix(self, length: int) -> Word:
        """First ``length`` letters of the witnessed accepted word."""
        w = self.witness
        if w is None:
            raise ValueError("no witness")
        if isinstance(w, FixedPointLasso):
            return w.stem[:length] + tuple(islice(_cycle(w.cycle), max(0, length - len(w.stem))))
        if isinstance(w, FixedPointPrefix):
            tail = generate_prefix(self.sigma, w.letter, length)
            return (w.prefix + tail)[:length]
        word = generate_prefix(self.sigma, w.letter, length)
        if self.tau is not None:
            word = apply(self.tau, word)
        return word[:length]

    def to_json(self):
        out = {"answer": self.answer, "witness": None if self.witness is None else self.witness.to_json()}
        if self.n is not None:
            out["orbit"] = {"n": self.n, "m": self.m}
        return out


def _require_nonerasing(sigma: Homomorphism, what: str):
    if not is_nonerasing(sigma):
        raise PreconditionError(
            f"{what} needs a nonerasing substitution; reduce {sigma} with nonerasing_reduction first"
        )


def decide_fixed_point_power(A: OmegaAutomaton, sigma: Homomorphism) -> SingleDecision:
    """Does ``A`` accept a fixed point of ``sigma^k`` for some ``k >= 1``?

    Existence only: no exponent is computed.
    """
    _require_nonerasing(sigma, "decide_fixed_point_power")
    orb = orbit(A, sigma)
    ok = not is_empty_infinite(orb.automata[orb.n])
    return SingleDecision("fixed-point-power", ok, None, orb.n, orb.m, sigma)


def _pure_substitutive(A: OmegaAutomaton, sigma: Homomorphism) -> SingleDecision:
    orb = orbit(A, sigma)
    B = orb.automata[orb.n]
    live = B.live
    for b in right_prolongable_letters(sigma):
        rows = B.rels[B.alphabet.index(b)]
        for q in members(B.initial):
            if rows[q] & live:
                w = GeneratingLetter(b, orb.n, B.names[q])
                return SingleDecision("pure-substitutive", True, w, orb.n, orb.m, sigma)
    return SingleDecision("pure-substitutive", False, None, orb.n, orb.m, sigma)


def decide_pure_substitutive(A: OmegaAutomaton, sigma: Homomorphism) -> SingleDecision:
    """Does ``A`` accept a purely substitutive word generated by ``sigma``?

    An erasing ``sigma`` is first replaced by its nonerasing reduction, over
    the surviving letters; when that reduction is unsafe :class:`Unsupported`
    is raised.
    """
    sigma = sigma.aligned(A.alphabet)
    if is_nonerasing(sigma):
        return _pure_substitutive(A, sigma)
    if len(mortal_letters(sigma)) == len(sigma.alphabet):
        # every iterate eventually vanishes: no infinite limit word
        return SingleDecision("pure-substitutive", False, None, None, None, sigma)
    reduced = nonerasing_reduction(sigma)
    if reduced is None:
        raise Unsupported(
            f"{sigma}: an erased letter occurs in a generated word, the letter-deletion reduction does not apply"
        )
    return _pure_substitutive(project_alphabet(A, reduced.alphabet.symbols), reduced)


def _fp_reach(A: OmegaAutomaton, fp: tuple[str, ...]):
    """BFS over edges labelled by fixed letters, from the initial states."""
    codes = [A.alphabet.index(b) for b in fp]

    def succ(q):
        for a in codes:
            for r in members(A.rels[a][q]):
                yield A.alphabet.symbols[a], r

    return reachable(members(A.initial), succ)


def decide_fixed_point(A: OmegaAutomaton, sigma: Homomorphism) -> SingleDecision:
    """Does ``A`` accept an infinite word ``x`` with ``sigma(x) == x``?

    Either ``x`` is written over the fixed letters of ``sigma`` (first case),
    or ``x = p · lim sigma^k(b)`` with ``p`` over fixed letters and ``b``
    right-prolongable (second case).
    """
    _require_nonerasing(sigma, "decide_fixed_point")
    sigma = sigma.aligned(A.alphabet)
    fp = fixed_letters(sigma)
    lasso = lasso_word(restrict_letters(A, fp))
    if lasso is not None:
        return SingleDecision("fixed-point", True, FixedPointLasso(*lasso), sigma=sigma)
    parent = _fp_reach(A, fp)
    closure = 0
    for q in parent:
        closure |= 1 << q
    sub = _pure_substitutive(A.with_initial(closure), sigma)
    if not sub.answer:
        return SingleDecision("fixed-point", False, None, sub.n, sub.m, sigma)
    q = A.names.index(sub.witness.state)
    p = tuple(path_to(parent, q))
    w = FixedPointPrefix(p, sub.witness.letter, sub.n)
    return SingleDecision("fixed-point", True, w, sub.n, sub.m, sigma)


def decide_morphic(A: OmegaAutomaton, sigma: Homomorphism, tau: Homomorphism) -> SingleDecision:
    """Does ``A`` accept ``tau(y)`` for a purely substitutive ``y`` of ``sigma``?"""
    if not is_nonerasing(tau):
        raise Unsupported(
            f"coding morphism {tau} is erasing: its image of an infinite word may be finite"
        )
    sub = decide_pure_substitutive(desubstitute(A, tau), sigma)
    w = sub.witness
    if w is not None:
        w = GeneratingLetter(w.letter, w.n, w.state, tau.name or str(tau))
    return SingleDecision("morphic", sub.answer, w, sub.n, sub.m, sub.sigma, tau.aligned(A.alphabet))


__all__ = [
    "FixedPointLasso",
    "FixedPointPrefix",
    "GeneratingLetter",
    "SingleDecision",
    "decide_fixed_point",
    "decide_fixed_point_power",
    "decide_morphic",
    "decide_pure_substitutive",
]
