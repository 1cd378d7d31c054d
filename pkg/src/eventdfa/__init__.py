"""Deterministic finite automata over named event alphabets.

Regular expressions are compiled through a Thompson NFA and the subset
construction into total DFAs, minimized with Hopcroft's algorithm, and used
to classify classroom-interaction traces.
"""
from .automata import Alphabet, Configuration, Dfa, accepts, extended_step, run, step
from .classroom import (
    ClassroomModel,
    StudentProfile,
    TraceVerdict,
    classify_trace,
    emotional_model,
    profile_student,
    simple_model,
)
from .compiler import (
    Nfa,
    brute_force_match,
    compile_regex,
    epsilon_closure,
    equivalent,
    hopcroft_minimize,
    subset_construct,
    thompson,
)
from .errors import (
    AlphabetMismatch,
    AutomatonError,
    BadToken,
    FormatError,
    InvalidAutomaton,
    InvalidState,
    RegexSyntaxError,
    UndeclaredSymbol,
    UnknownSymbol,
)
from .regex import parse_regex, print_regex
from .traceio import deserialize_dfa, export_dot, parse_trace, serialize_dfa

__version__ = "0.1.0"
