"""Text formats and DOT export.

Automaton files are line based, ``#`` starts a comment::

    alphabet: 0 1
    states: a b c
    initial: a
    a 0 a
    a 1 b

Büchi constraint files add a line ``accepting: <state> ...``. Substitution
files hold one ``<letter> -> <word>`` line per letter (``eps`` is the empty
word) after optional ``name:`` and ``alphabet:`` headers. Word-set files hold
one word per line.
"""

from __future__ import annotations

from pathlib import Path

from desubst.automaton import Alphabet, OmegaAutomaton, members
from desubst.errors import InputError, ParseError
from desubst.meta import BuchiAutomaton, MetaAutomaton
from desubst.substitution import Homomorphism, split_word

_HEADERS = ("alphabet", "states", "initial", "accepting")


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line


def _parse_graph(text: str, path, allowed_headers):
    headers: dict[str, tuple[list[str], int]] = {}
    edges = []
    for no, line in _lines(text):
        key, sep, rest = line.partition(":")
        if sep and key.strip() in _HEADERS:
            key = key.strip()
            if key not in allowed_headers:
                raise ParseError(f"unexpected header {key!r}", path, no, key)
            if key in headers:
                raise ParseError(f"duplicate header {key!r}", path, no, key)
            if edges:
                raise ParseError("headers must precede transitions", path, no, key)
            headers[key] = (rest.split(), no)
            continue
        toks = line.split()
        if len(toks) != 3:
            raise ParseError("a transition is '<src> <symbol> <dst>'", path, no, line)
        edges.append((toks, no))
    for key in ("alphabet", "states", "initial"):
        if key not in headers:
            raise ParseError(f"missing '{key}:' header", path)
    try:
        alphabet = Alphabet(tuple(headers["alphabet"][0]))
    except InputError as exc:
        raise ParseError(str(exc), path, headers["alphabet"][1]) from None
    states, states_line = headers["states"]
    if not states:
        raise ParseError("at least one state is required", path, states_line)
    if len(set(states)) != len(states):
        dup = next(s for s in states if states.count(s) > 1)
        raise ParseError("duplicate state name", path, states_line, dup)
    pos = {s: i for i, s in enumerate(states)}

    def state_set(key):
        toks, no = headers.get(key, ([], None))
        out = 0
        for t in toks:
            if t not in pos:
                raise ParseError("unknown state", path, no, t)
            out |= 1 << pos[t]
        return out

    initial = state_set("initial")
    rels = [[0] * len(states) for _ in alphabet]
    for (src, sym, dst), no in edges:
        for t in (src, dst):
            if t not in pos:
                raise ParseError("unknown state", path, no, t)
        if sym not in alphabet:
            raise ParseError("unknown symbol", path, no, sym)
        rels[alphabet.index(sym)][pos[src]] |= 1 << pos[dst]
    A = OmegaAutomaton(alphabet, len(states), initial, tuple(tuple(r) for r in rels), tuple(states))
    return A, state_set


def parse_automaton(text: str, path=None) -> OmegaAutomaton:
    A, _ = _parse_graph(text, path, ("alphabet", "states", "initial"))
    return A


def parse_buchi(text: str, path=None) -> BuchiAutomaton:
    A, state_set = _parse_graph(text, path, _HEADERS)
    return BuchiAutomaton(A, state_set("accepting"))


def format_automaton(A: OmegaAutomaton, accepting: int | None = None) -> str:
    """Canonical text form; ``parse_automaton(format_automaton(A)) == A``."""
    out = [
        "alphabet: " + " ".join(A.alphabet),
        "states: " + " ".join(A.names),
        "initial: " + " ".join(A.names[q] for q in members(A.initial)),
    ]
    if accepting is not None:
        out.append("accepting: " + " ".join(A.names[q] for q in members(accepting)))
    for q, a, r in A.edges():
        out.append(f"{A.names[q]} {A.alphabet.symbols[a]} {A.names[r]}")
    return "\n".join(out) + "\n"


def format_buchi(R: BuchiAutomaton) -> str:
    return format_automaton(R.automaton, R.accepting)


def parse_substitution(text: str, path=None, name: str = "") -> Homomorphism:
    alphabet = None
    images: dict[str, tuple[str, int]] = {}
    for no, line in _lines(text):
        if "->" not in line:
            key, sep, rest = line.partition(":")
            key = key.strip()
            if sep and key == "alphabet":
                try:
                    alphabet = Alphabet(tuple(rest.split()))
                except InputError as exc:
                    raise ParseError(str(exc), path, no) from None
                continue
            if sep and key == "name":
                name = rest.strip()
                continue
            raise ParseError("expected '<letter> -> <word>'", path, no, line)
        lhs, rhs = (s.strip() for s in line.split("->", 1))
        if not lhs or " " in lhs:
            raise ParseError("bad letter", path, no, lhs)
        if " " in rhs or not rhs:
            raise ParseError("the image must be one space-free token (or 'eps')", path, no, rhs)
        if lhs in images:
            raise ParseError("letter given twice", path, no, lhs)
        images[lhs] = (rhs, no)
    if not images:
        raise ParseError("no images given", path)
    if alphabet is None:
        try:
            alphabet = Alphabet(tuple(images))
        except InputError as exc:
            raise ParseError(str(exc), path) from None
    for letter, (_, no) in images.items():
        if letter not in alphabet:
            raise ParseError("letter not in the alphabet", path, no, letter)
    mapping = {}
    for letter in alphabet:
        if letter not in images:
            raise ParseError(f"no image for letter {letter!r}", path)
        rhs, no = images[letter]
        try:
            mapping[letter] = () if rhs == "eps" else split_word(alphabet, rhs)
        except InputError:
            raise ParseError("image is not a word over the alphabet", path, no, rhs) from None
    return Homomorphism.from_mapping(mapping, alphabet, name)


def format_substitution(h: Homomorphism) -> str:
    out = []
    if h.name:
        out.append(f"name: {h.name}")
    out.append("alphabet: " + " ".join(h.alphabet))
    for s, img in zip(h.alphabet, h.images):
        out.append(f"{s} -> {''.join(img) if img else 'eps'}")
    return "\n".join(out) + "\n"


def parse_words(text: str, path=None) -> list[str]:
    words = []
    for no, line in _lines(text):
        if " " in line:
            raise ParseError("one word per line", path, no, line)
        words.append("" if line == "eps" else line)
    if not words:
        raise ParseError("no words given", path)
    return words


def _read(path) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read file: {exc.strerror}", path) from None


def load_automaton(path) -> OmegaAutomaton:
    return parse_automaton(_read(path), path)


def load_buchi(path) -> BuchiAutomaton:
    return parse_buchi(_read(path), path)


def load_substitution(path) -> Homomorphism:
    return parse_substitution(_read(path), path, Path(path).stem)


def load_words(path) -> list[str]:
    return parse_words(_read(path), path)


def _q(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def dot_automaton(A: OmegaAutomaton, name: str = "automaton") -> str:
    """DOT text; nodes by state index, edges by (source, letter, target)."""
    out = [f"digraph {_q(name)} {{", "  rankdir=LR;", "  node [shape=circle];"]
    for q, label in enumerate(A.names):
        extra = " [shape=doublecircle]" if (A.initial >> q) & 1 else ""
        out.append(f"  {_q(label)}{extra};")
    for q, a, r in A.edges():
        out.append(f"  {_q(A.names[q])} -> {_q(A.names[r])} [label={_q(A.alphabet.symbols[a])}];")
    out.append("}")
    return "\n".join(out) + "\n"


def dot_meta(M: MetaAutomaton, name: str = "meta") -> str:
    """DOT text; vertices by index, edges by (vertex, substitution); empty vertices dashed."""
    out = [f"digraph {_q(name)} {{", "  node [shape=box];"]
    for v in range(len(M)):
        attrs = [f"label={_q(str(M.origin[v]))}"]
        if M.empty[v]:
            attrs.append("style=dashed")
        if v == M.initial:
            attrs.append("peripheries=2")
        out.append(f"  v{M.origin[v]} [{', '.join(attrs)}];")
    for v in range(len(M)):
        for s, w in zip(M.substitutions, M.edges[v]):
            if w is not None:
                out.append(f"  v{M.origin[v]} -> v{M.origin[w]} [label={_q(s.name)}];")
    out.append("}")
    return "\n".join(out) + "\n"


def export_dot(obj, path=None) -> str:
    """DOT text for an automaton or meta-automaton, written to ``path`` when given."""
    if isinstance(obj, MetaAutomaton):
        text = dot_meta(obj)
    elif isinstance(obj, OmegaAutomaton):
        text = dot_automaton(obj)
    elif isinstance(obj, BuchiAutomaton):
        text = dot_automaton(obj.automaton)
    else:
        raise TypeError(f"cannot export {type(obj).__name__} to DOT")
    if path is not None:
        Path(path).write_bytes(text.encode("utf-8"))
    return text
