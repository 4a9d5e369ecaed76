"""Small named automata and morphisms used by the tests, docs and data files."""

from desubst.automaton import OmegaAutomaton
from desubst.substitution import Homomorphism
from desubst.sturmian import BINARY, FIBONACCI

TERNARY = ("0", "1", "2")

# 0-loop on every state, 1-edges a -> b -> c -> a
T_TRIANGLE = OmegaAutomaton.from_edges(
    TERNARY,
    ("a", "b", "c"),
    ["a"],
    [
        ("a", "0", "a"), ("b", "0", "b"), ("c", "0", "c"),
        ("a", "1", "b"), ("b", "1", "c"), ("c", "1", "a"),
    ],
)
SIGMA_SWAP = Homomorphism.from_mapping({"0": "0", "1": "2", "2": "1"}, TERNARY, "swap")

TAU_SWAP2 = Homomorphism.from_mapping({"0": "11", "1": "00"}, BINARY, "tau")

A_H = OmegaAutomaton.from_edges(
    TERNARY,
    ("a", "b", "c"),
    ["a", "b", "c"],
    [
        ("a", "0", "a"), ("b", "0", "a"),
        ("c", "1", "c"), ("a", "1", "c"),
        ("b", "2", "b"), ("c", "2", "b"),
    ],
)
SIGMA_H = Homomorphism.from_mapping(
    {"0": "0120", "1": "11220011", "2": "222000111222"}, TERNARY, "sigmaH"
)

FULL1 = OmegaAutomaton.from_edges(BINARY, ("s",), ["s"], [("s", "0", "s"), ("s", "1", "s")])
LOOP0 = OmegaAutomaton.from_edges(BINARY, ("s",), ["s"], [("s", "0", "s")])
LOOP1 = OmegaAutomaton.from_edges(BINARY, ("s",), ["s"], [("s", "1", "s")])
EMPTY1 = OmegaAutomaton.from_edges(BINARY, ("s",), ["s"], [])

# accepts L0(x) for every binary x: a 1 is always followed by a 0
A_L0IMG = OmegaAutomaton.from_edges(
    BINARY, ("u", "v"), ["u"], [("u", "0", "u"), ("u", "1", "v"), ("v", "0", "u")]
)

# only (01)^ω
PERIODIC01 = OmegaAutomaton.from_edges(BINARY, ("p", "q"), ["p"], [("p", "0", "q"), ("q", "1", "p")])

SIGMA_F = FIBONACCI
SWAP01 = Homomorphism.from_mapping({"0": "1", "1": "0"}, BINARY, "swap01")
