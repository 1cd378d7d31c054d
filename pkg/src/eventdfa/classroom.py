"""The two classroom-interaction models and trace classification.

Both models are compiled from regular expressions over event names:

* ``simple``: lecture delivery, optional question/answer rounds, and a final
  ``Understand_Lecture``.
* ``emotional``: delivery rounds carrying the four teacher-language events,
  then ``Understand_Lecture``, any number of ``Minimum_Queries . Give_Respect``
  pairs, and a closing ``Understand_Lecture . Give_Respect``.

Event names were normalized to identifier form; ``NORMALIZATION`` maps the
originally printed spellings to the canonical ones.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from .automata import Alphabet, Configuration, Dfa
from .compiler import hopcroft_minimize, subset_construct, thompson
from .errors import UnknownSymbol
from .regex import Regex, parse_regex

SIMPLE = "simple"
EMOTIONAL = "emotional"
MODEL_IDS = (SIMPLE, EMOTIONAL)

SIMPLE_ALPHABET = Alphabet(
    ["Deliver_Lecture", "Response_Queries", "Understand_Lecture", "Ask_Queries"]
)
EMOTIONAL_ALPHABET = Alphabet(
    [
        "Deliver_Lecture",
        "Emotional_Environment",
        "Positive_Behavior",
        "Positive_Language",
        "Extra_Motivation",
        "Understand_Lecture",
        "Minimum_Queries",
        "Give_Respect",
    ]
)

SIMPLE_REGEX = (
    "(Deliver_Lecture)* . Understand_Lecture"
    " + (Deliver_Lecture . (Ask_Queries . Response_Queries)*)* . Understand_Lecture"
)
# juxtaposition inside the first group is concatenation
EMOTIONAL_REGEX = (
    "(Deliver_Lecture (Emotional_Environment Positive_Behavior"
    " . Positive_Language . Extra_Motivation))*"
    " . Understand_Lecture . (Minimum_Queries . Give_Respect)*"
    " . Understand_Lecture . Give_Respect"
)

# Printed spelling -> canonical identifier.  Longer keys first so that
# multi-word names are replaced before any of their parts.
NORMALIZATION = {
    "Emotional Environment": "Emotional_Environment",
    "Positive behavior": "Positive_Behavior",
    "Positive Language": "Positive_Language",
    "Extra Motivation": "Extra_Motivation",
    "Extra motivation": "Extra_Motivation",
    "Resonse_Queries": "Response_Queries",
    "give_respect": "Give_Respect",
}

QUERY_SYMBOL = {SIMPLE: "Ask_Queries", EMOTIONAL: "Minimum_Queries"}


def normalize_events(text: str) -> str:
    """Rewrite printed event spellings into canonical identifiers."""
    for printed, canonical in NORMALIZATION.items():
        text = text.replace(printed, canonical)
    return text


@dataclass(frozen=True)
class ClassroomModel:
    id: str
    alphabet: Alphabet
    source_regex: Regex
    machine: Dfa

    @property
    def query_symbol(self) -> str:
        return QUERY_SYMBOL[self.id]

    def accepts(self, trace: Sequence[str]) -> bool:
        return self.machine.accepts(trace)


def _build(model_id, alphabet, text):
    ast = parse_regex(text, alphabet)
    machine = hopcroft_minimize(subset_construct(thompson(ast, alphabet)))
    return ClassroomModel(model_id, alphabet, ast, machine)


@lru_cache(maxsize=None)
def simple_model() -> ClassroomModel:
    return _build(SIMPLE, SIMPLE_ALPHABET, SIMPLE_REGEX)


@lru_cache(maxsize=None)
def emotional_model() -> ClassroomModel:
    return _build(EMOTIONAL, EMOTIONAL_ALPHABET, EMOTIONAL_REGEX)


def get_model(model_id: str) -> ClassroomModel:
    if model_id == SIMPLE:
        return simple_model()
    if model_id == EMOTIONAL:
        return emotional_model()
    raise ValueError(f"unknown model {model_id!r}; expected one of {', '.join(MODEL_IDS)}")


@dataclass(frozen=True)
class TraceVerdict:
    accepted: bool
    run: list  # list[Configuration]
    failure_offset: Optional[int]
    query_count: int


def failure_offset(machine: Dfa, states: Sequence[int]) -> Optional[int]:
    """First event index whose consumption lands in a dead state.

    ``states`` is the state trajectory of a run (``len(trace) + 1`` entries).
    A dead start state reports offset 0.
    """
    live = machine.live_states()
    if not live[states[0]]:
        return 0
    for i, q in enumerate(states[1:]):
        if not live[q]:
            return i
    return None


def classify_trace(model: ClassroomModel, trace: Sequence[str]) -> TraceVerdict:
    trace = tuple(trace)
    run: list[Configuration] = model.machine.run(trace)
    accepted = run[-1].state in model.machine.accepting
    offset = None if accepted else failure_offset(model.machine, [c.state for c in run])
    return TraceVerdict(accepted, run, offset, trace.count(model.query_symbol))


@dataclass(frozen=True)
class StudentProfile:
    student_id: str
    sessions: int
    accepted_simple: int
    accepted_emotional: int
    mean_query_rate: Fraction

    @property
    def accepted(self) -> int:
        return self.accepted_simple + self.accepted_emotional


class SessionError(UnknownSymbol):
    """UnknownSymbol raised while profiling, tagged with the session index."""

    def __init__(self, session, cause: UnknownSymbol):
        super().__init__(cause.symbol, cause.offset, cause.partial_run)
        self.session = session
        self.args = (f"session {session}: {cause}",)


def profile_student(
    student_id: str, sessions: Iterable[tuple[str, Sequence[str]]]
) -> StudentProfile:
    """Aggregate verdicts over ``(model_id, trace)`` sessions.

    The query rate is total query events over total events, 0 for no events.
    """
    count = 0
    accepted = {SIMPLE: 0, EMOTIONAL: 0}
    queries = events = 0
    for i, (model_id, trace) in enumerate(sessions):
        model = get_model(model_id)
        try:
            verdict = classify_trace(model, trace)
        except UnknownSymbol as exc:
            raise SessionError(i, exc) from exc
        count += 1
        accepted[model_id] += verdict.accepted
        queries += verdict.query_count
        events += len(trace)
    rate = Fraction(queries, events) if events else Fraction(0)
    return StudentProfile(student_id, count, accepted[SIMPLE], accepted[EMOTIONAL], rate)
