"""Word homomorphisms over a fixed alphabet.

A substitution is a nonerasing homomorphism. Words are tuples of symbols;
any iterable of symbols (a plain ``str`` when symbols are single characters)
is accepted as input.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping

from desubst.automaton import Alphabet, Word
from desubst.errors import InputError, PreconditionError


def split_word(alphabet: Alphabet, text) -> Word:
    """Tokenise ``text`` over ``alphabet``.

    Sequences are taken symbol by symbol. Strings are split per character
    for single-character alphabets and by greedy longest match otherwise.
    """
    if not isinstance(text, str):
        word = tuple(text)
        for s in word:
            alphabet.index(s)
        return word
    if alphabet.compact:
        return tuple(alphabet.symbols[alphabet.index(c)] for c in text)
    by_len = sorted(alphabet.symbols, key=len, reverse=True)
    out = []
    i = 0
    while i < len(text):
        for s in by_len:
            if text.startswith(s, i):
                out.append(s)
                i += len(s)
                break
        else:
            raise InputError(f"cannot split {text!r} over alphabet {' '.join(alphabet.symbols)}")
    return tuple(out)


@dataclass(frozen=True)
class Homomorphism:
    """Total map letter -> finite word, extended by concatenation.

    ``images[i]`` is the image of ``alphabet.symbols[i]``. The name is a
    label for witnesses and DOT output and does not take part in equality.
    """

    alphabet: Alphabet
    images: tuple[Word, ...]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        images = tuple(tuple(img) for img in self.images)
        if len(images) != len(self.alphabet):
            raise InputError("every letter needs exactly one image")
        for img in images:
            for s in img:
                if s not in self.alphabet:
                    raise InputError(f"image letter {s!r} not in the alphabet")
        object.__setattr__(self, "images", images)

    @classmethod
    def from_mapping(cls, mapping: Mapping, alphabet=None, name: str = "") -> Homomorphism:
        """Build from ``{letter: image}``; images may be strings or symbol sequences."""
        if alphabet is None:
            alphabet = Alphabet(tuple(mapping))
        elif not isinstance(alphabet, Alphabet):
            alphabet = Alphabet(tuple(alphabet))
        missing = [s for s in alphabet if s not in mapping]
        if missing:
            raise InputError(f"no image given for {missing}")
        extra = [s for s in mapping if s not in alphabet]
        if extra:
            raise InputError(f"images given for letters outside the alphabet: {extra}")
        return cls(alphabet, tuple(split_word(alphabet, mapping[s]) for s in alphabet), name)

    @classmethod
    def identity(cls, alphabet, name: str = "id") -> Homomorphism:
        if not isinstance(alphabet, Alphabet):
            alphabet = Alphabet(tuple(alphabet))
        return cls(alphabet, tuple((s,) for s in alphabet), name)

    @cached_property
    def codes(self) -> tuple[tuple[int, ...], ...]:
        """Images as tuples of letter indices."""
        return tuple(self.alphabet.encode(img) for img in self.images)

    def image(self, letter: str) -> Word:
        return self.images[self.alphabet.index(letter)]

    def __call__(self, word) -> Word:
        return apply(self, word)

    def aligned(self, alphabet: Alphabet) -> Homomorphism:
        """Same map re-indexed over ``alphabet``, which must hold the same symbols."""
        if alphabet == self.alphabet:
            return self
        if set(alphabet) != set(self.alphabet):
            raise InputError(
                f"alphabet mismatch: {' '.join(self.alphabet)} vs {' '.join(alphabet)}"
            )
        return Homomorphism(alphabet, tuple(self.image(s) for s in alphabet), self.name)

    def __str__(self):
        return "{" + ", ".join(
            f"{s}->{self.alphabet.show(img) or 'eps'}" for s, img in zip(self.alphabet, self.images)
        ) + "}"


def apply(h: Homomorphism, word) -> Word:
    out: list[str] = []
    for a in h.alphabet.encode(split_word(h.alphabet, word)):
        out.extend(h.images[a])
    return tuple(out)


def compose(sigma: Homomorphism, tau: Homomorphism) -> Homomorphism:
    """``sigma ∘ tau``: first ``tau``, then ``sigma``."""
    tau = tau.aligned(sigma.alphabet)
    name = f"{sigma.name}.{tau.name}" if sigma.name and tau.name else ""
    return Homomorphism(sigma.alphabet, tuple(apply(sigma, img) for img in tau.images), name)


def compose_all(morphisms, alphabet) -> Homomorphism:
    """``m1 ∘ m2 ∘ ... ∘ mk``; the identity for an empty sequence."""
    out = Homomorphism.identity(alphabet)
    for m in morphisms:
        out = compose(out, m)
    return out


def power(sigma: Homomorphism, k: int) -> Homomorphism:
    out = Homomorphism.identity(sigma.alphabet)
    for _ in range(k):
        out = compose(out, sigma)
    return out


def is_nonerasing(h: Homomorphism) -> bool:
    return all(h.images)


def right_prolongable_letters(sigma: Homomorphism) -> tuple[str, ...]:
    """Letters ``b`` that are a proper prefix of their image, in alphabet order."""
    return tuple(b for b, img in zip(sigma.alphabet, sigma.images) if len(img) > 1 and img[0] == b)


def fixed_letters(sigma: Homomorphism) -> tuple[str, ...]:
    return tuple(b for b, img in zip(sigma.alphabet, sigma.images) if img == (b,))


def generate_prefix(sigma: Homomorphism, letter: str, length: int) -> Word:
    """Length-``length`` prefix of ``lim sigma^n(letter)``."""
    if length < 1:
        raise PreconditionError("length must be positive")
    if not is_nonerasing(sigma):
        raise PreconditionError("generate_prefix needs a nonerasing morphism")
    if letter not in right_prolongable_letters(sigma):
        raise PreconditionError(f"{letter!r} is not right-prolongable for {sigma}")
    word: Word = (letter,)
    while len(word) < length:
        word = apply(sigma, word)
    return word[:length]


def iteration_reach(sigma: Homomorphism, letters: Iterable[str]) -> set[str]:
    """Letters reachable from ``letters`` in the graph ``a -> letters of sigma(a)``."""
    seen = set(letters)
    queue = deque(seen)
    while queue:
        a = queue.popleft()
        for b in sigma.image(a):
            if b not in seen:
                seen.add(b)
                queue.append(b)
    return seen


def mortal_letters(sigma: Homomorphism) -> tuple[str, ...]:
    """Letters removed by repeatedly deleting letters whose image became empty."""
    dead: set[str] = set()
    while True:
        new = {
            a
            for a, img in zip(sigma.alphabet, sigma.images)
            if a not in dead and all(b in dead for b in img)
        }
        if not new:
            return tuple(a for a in sigma.alphabet if a in dead)
        dead |= new


def nonerasing_reduction(sigma: Homomorphism) -> Homomorphism | None:
    """Nonerasing morphism generating the same purely substitutive words, if safe.

    Mortal letters are deleted from the alphabet and from every image. The
    result is None ("unsupported") when a mortal letter is reachable from a
    right-prolongable letter of the reduced morphism, since deleting it would
    change the generated word, and also when every letter is mortal.
    """
    if is_nonerasing(sigma):
        return sigma
    dead = set(mortal_letters(sigma))
    alive = tuple(a for a in sigma.alphabet if a not in dead)
    if not alive:
        return None
    alphabet = Alphabet(alive)
    reduced = Homomorphism(
        alphabet,
        tuple(tuple(b for b in sigma.image(a) if b not in dead) for a in alive),
        sigma.name,
    )
    if iteration_reach(sigma, right_prolongable_letters(reduced)) & dead:
        return None
    return reduced


@dataclass(frozen=True)
class DirectiveLasso:
    """Eventually periodic directive sequence ``stem · cycle^ω`` of substitution names."""

    stem: tuple[str, ...]
    cycle: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "stem", tuple(self.stem))
        object.__setattr__(self, "cycle", tuple(self.cycle))
        if not self.cycle:
            raise InputError("the cycle of a directive lasso must be nonempty")

    def prefix(self, k: int) -> tuple[str, ...]:
        out = list(self.stem[:k])
        i = 0
        while len(out) < k:
            out.append(self.cycle[i % len(self.cycle)])
            i += 1
        return tuple(out)

    def to_json(self):
        return {"kind": "directive-lasso", "stem": list(self.stem), "cycle": list(self.cycle)}
