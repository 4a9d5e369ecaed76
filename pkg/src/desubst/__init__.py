"""Desubstitution of ω-automata and decision procedures on substitutive words.

The main entry points are re-exported here; see the submodules for details.
"""

__version__ = "0.1.0"

from desubst.automaton import (  # noqa: E402
    Alphabet,
    OmegaAutomaton,
    accepts_finite_word,
    accepts_prefix,
    forget,
    is_empty_infinite,
    is_total,
    live_states,
    path_relation,
)
from desubst.desub import Orbit, desubstitute, orbit  # noqa: E402
from desubst.errors import (  # noqa: E402
    BudgetExceeded,
    DesubstError,
    InputError,
    ParseError,
    PreconditionError,
    Unsupported,
)
from desubst.graphs import scc_decomposition  # noqa: E402
from desubst.kernels import BACKEND  # noqa: E402
from desubst.meta import (  # noqa: E402
    BuchiAutomaton,
    MetaAutomaton,
    buchi_is_empty,
    build_meta,
    decide_constrained,
    decide_inf_desub,
    directive_language,
    prune_nilpotent,
)
from desubst.single import (  # noqa: E402
    decide_fixed_point,
    decide_fixed_point_power,
    decide_morphic,
    decide_pure_substitutive,
)
from desubst.sturmian import (  # noqa: E402
    alternation_buchi,
    coding_automaton,
    decide_coding,
    decide_sturmian,
    fibonacci_totality,
    find_total_reachable,
    property_h,
)
from desubst.substitution import (  # noqa: E402
    DirectiveLasso,
    Homomorphism,
    apply,
    compose,
    fixed_letters,
    generate_prefix,
    is_nonerasing,
    nonerasing_reduction,
    right_prolongable_letters,
)

__all__ = [
    "accepts_finite_word",
    "accepts_prefix",
    "Alphabet",
    "alternation_buchi",
    "apply",
    "BACKEND",
    "buchi_is_empty",
    "BuchiAutomaton",
    "BudgetExceeded",
    "build_meta",
    "coding_automaton",
    "compose",
    "decide_coding",
    "decide_constrained",
    "decide_fixed_point",
    "decide_fixed_point_power",
    "decide_inf_desub",
    "decide_morphic",
    "decide_pure_substitutive",
    "decide_sturmian",
    "DesubstError",
    "desubstitute",
    "directive_language",
    "DirectiveLasso",
    "fibonacci_totality",
    "find_total_reachable",
    "fixed_letters",
    "forget",
    "generate_prefix",
    "Homomorphism",
    "InputError",
    "is_empty_infinite",
    "is_nonerasing",
    "is_total",
    "live_states",
    "MetaAutomaton",
    "nonerasing_reduction",
    "OmegaAutomaton",
    "orbit",
    "Orbit",
    "ParseError",
    "path_relation",
    "PreconditionError",
    "property_h",
    "prune_nilpotent",
    "right_prolongable_letters",
    "scc_decomposition",
    "Unsupported",
    "__version__",
]
