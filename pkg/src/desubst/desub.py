"""Desubstitution of ω-automata and the orbit of an automaton under it."""

from __future__ import annotations

from dataclasses import dataclass

from desubst import kernels
from desubst.automaton import OmegaAutomaton
from desubst.substitution import Homomorphism


def desubstitute(A: OmegaAutomaton, sigma: Homomorphism) -> OmegaAutomaton:
    """The automaton ``sigma^{-1}(A)``.

    Same states and initial states; ``q -a-> q'`` iff ``sigma(a)`` labels a
    computation from ``q`` to ``q'`` in ``A``. An erased letter gets a loop on
    every state.
    """
    sigma = sigma.aligned(A.alphabet)
    return A.with_relations(kernels.desub_relations(A.rels, sigma.codes, A.n))


@dataclass(frozen=True)
class Orbit:
    """``automata[k] = sigma^{-k}(A)`` for ``k < m``; ``automata[n] == sigma^{-m}(A)``."""

    automata: tuple[OmegaAutomaton, ...]
    n: int
    m: int

    def at(self, k: int) -> OmegaAutomaton:
        """``sigma^{-k}(A)`` for any ``k >= 0``, read off the eventual cycle."""
        if k < self.m:
            return self.automata[k]
        return self.automata[self.n + (k - self.n) % (self.m - self.n)]


def orbit(A: OmegaAutomaton, sigma: Homomorphism) -> Orbit:
    """Iterate desubstitution until the first exact repeat."""
    codes = sigma.aligned(A.alphabet).codes
    seen = {A.rels: 0}
    automata = [A]
    rels = A.rels
    while True:
        rels = kernels.desub_relations(rels, codes, A.n)
        if rels in seen:
            return Orbit(tuple(automata), seen[rels], len(automata))
        seen[rels] = len(automata)
        automata.append(A.with_relations(rels))
