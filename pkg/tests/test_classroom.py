import functools
import itertools
import random
from fractions import Fraction

import pytest

from eventdfa import classroom
from eventdfa.classroom import (
    EMOTIONAL_ALPHABET,
    SIMPLE_ALPHABET,
    classify_trace,
    emotional_model,
    normalize_events,
    profile_student,
    simple_model,
)
from eventdfa.compiler import brute_force_match, subset_construct, thompson
from eventdfa.errors import UnknownSymbol
from eventdfa.regex import parse_regex
from eventdfa.traceio import serialize_dfa

from oracles import all_words, brzozowski_size, distinguishable_pairs

DL, UL = "Deliver_Lecture", "Understand_Lecture"
AQ, RQ = "Ask_Queries", "Response_Queries"
EE, PB, PL, EM = "Emotional_Environment", "Positive_Behavior", "Positive_Language", "Extra_Motivation"
MQ, GR = "Minimum_Queries", "Give_Respect"

FULL_CYCLE = [DL, EE, PB, PL, EM, UL, MQ, GR, UL, GR]

# expressions exactly as printed, before token normalization
PRINTED_SIMPLE = (
    "(Deliver_Lecture)* . Understand_Lecture + (Deliver_Lecture . "
    "(Ask_Queries . Resonse_Queries)*)* . Understand_Lecture"
)
PRINTED_EMOTIONAL = (
    "(Deliver_Lecture(Emotional Environment Positive behavior .Positive Language. "
    "Extra Motivation))*.Understand_Lecture .(Minimum_Queries.give_respect)*."
    "Understand_Lecture.give_respect"
)


def test_alphabets():
    assert list(SIMPLE_ALPHABET) == [DL, RQ, UL, AQ]
    assert list(EMOTIONAL_ALPHABET) == [DL, EE, PB, PL, EM, UL, MQ, GR]


def test_printed_expressions_normalize_to_model_sources():
    assert parse_regex(normalize_events(PRINTED_SIMPLE)) == simple_model().source_regex
    assert parse_regex(normalize_events(PRINTED_EMOTIONAL)) == emotional_model().source_regex


@pytest.mark.parametrize(
    "trace, expected",
    [
        ([DL, UL], True),
        ([], False),
        ([DL, AQ, RQ, UL], True),
        ([AQ, UL], False),
        ([UL], True),
        ([DL, DL, AQ, RQ, AQ, RQ, DL, UL], True),
        ([DL, AQ, UL], False),
        ([DL, UL, UL], False),
    ],
)
def test_simple_model(trace, expected):
    model = simple_model()
    assert model.accepts(trace) is expected
    assert brute_force_match(model.source_regex, trace) is expected


@pytest.mark.parametrize(
    "trace, expected",
    [
        ([UL, UL, GR], True),
        (FULL_CYCLE, True),
        ([UL, GR], False),
        ([DL, EE, PB, PL, EM, DL, EE, PB, PL, EM, UL, UL, GR], True),
        ([DL, UL, UL, GR], False),
        ([UL, MQ, GR, MQ, GR, UL, GR], True),
        ([UL, UL, GR, UL, UL, GR], False),
    ],
)
def test_emotional_model(trace, expected):
    model = emotional_model()
    assert model.accepts(trace) is expected
    assert brute_force_match(model.source_regex, trace) is expected


def test_minimal_sizes_frozen():
    # values produced by the pipeline, confirmed by Brzozowski and table filling
    for model, n in ((simple_model(), 5), (emotional_model(), 10)):
        m = model.machine
        assert m.n_states == n
        assert brzozowski_size(m) == n
        assert len(distinguishable_pairs(m)) == n * (n - 1) // 2


@pytest.mark.parametrize("factory", [simple_model, emotional_model])
def test_machine_matches_regex_on_subalphabets(factory):
    model = factory()
    for sub in itertools.combinations(model.alphabet.symbols, 4):
        words = list(all_words(sub, 4))
        got = model.machine.accepts_many(words)
        want = [brute_force_match(model.source_regex, w) for w in words]
        assert got == want


def test_models_are_deterministic():
    first = serialize_dfa(simple_model().machine), serialize_dfa(emotional_model().machine)
    simple_model.cache_clear()
    emotional_model.cache_clear()
    again = serialize_dfa(simple_model().machine), serialize_dfa(emotional_model().machine)
    assert first == again


def test_classify_examples():
    v = classify_trace(simple_model(), [DL, UL])
    assert v.accepted and v.query_count == 0 and len(v.run) == 3 and v.failure_offset is None

    v = classify_trace(simple_model(), [UL, UL])
    assert not v.accepted and v.failure_offset == 1

    v = classify_trace(emotional_model(), [PL])
    assert not v.accepted and v.failure_offset == 0


def test_classify_live_rejection_has_no_offset():
    v = classify_trace(simple_model(), [DL, AQ])
    assert not v.accepted and v.failure_offset is None and v.query_count == 1
    v = classify_trace(simple_model(), [])
    assert not v.accepted and v.failure_offset is None and len(v.run) == 1


def test_classify_unknown_symbol():
    with pytest.raises(UnknownSymbol) as info:
        classify_trace(simple_model(), [DL, GR])
    assert info.value.symbol == GR and info.value.offset == 1


@functools.lru_cache(maxsize=None)
def no_completion(model, prefix, k=4):
    sub = model.alphabet.symbols
    return not any(brute_force_match(model.source_regex, prefix + s) for s in all_words(sub, k))


@functools.lru_cache(maxsize=None)
def _determinized(model):
    return subset_construct(thompson(model.source_regex, model.alphabet))


def dead_prefix_index(model, trace):
    """First i whose prefix trace[:i+1] reaches a dead subset-construction state.

    Uses the unminimized determinization and a local graph search, not the
    model machine or its live-state kernel.
    """
    dfa = _determinized(model)
    q = dfa.start
    for i, event in enumerate(trace):
        q = dfa.step(q, event)
        seen, stack = {q}, [q]
        while stack:
            p = stack.pop()
            for t in dfa.table[p]:
                if t not in seen:
                    seen.add(t)
                    stack.append(t)
        if not seen & dfa.accepting:
            return i
    return None


@pytest.mark.parametrize("factory", [simple_model, emotional_model])
def test_failure_offset_sound_and_exact(factory):
    model = factory()
    rng = random.Random(17)
    sample = list(model.alphabet.symbols)
    for _ in range(60):
        trace = [rng.choice(sample) for _ in range(rng.randint(0, 5))]
        v = classify_trace(model, trace)
        if v.accepted:
            assert v.failure_offset is None
            continue
        if v.failure_offset is not None:
            assert no_completion(model, tuple(trace[: v.failure_offset + 1]))
        assert v.failure_offset == dead_prefix_index(model, trace)


def test_failure_offset_simple_oracle_k4():
    # in the simple model every live prefix completes within 4 events
    model = simple_model()
    for trace in all_words(model.alphabet.symbols, 3):
        v = classify_trace(model, trace)
        if v.accepted:
            continue
        first = next((i for i in range(len(trace)) if no_completion(model, tuple(trace[: i + 1]))), None)
        assert v.failure_offset == first


def test_failure_offset_dead_start():
    # empty-language machine is dead from the start
    from eventdfa.compiler import compile_regex

    model = classroom.ClassroomModel("simple", SIMPLE_ALPHABET, parse_regex("NULL"),
                                     compile_regex("NULL", SIMPLE_ALPHABET))
    assert classify_trace(model, []).failure_offset == 0
    assert classify_trace(model, [DL]).failure_offset == 0


def test_query_count_is_exact():
    rng = random.Random(4)
    for factory in (simple_model, emotional_model):
        model = factory()
        for _ in range(50):
            trace = [rng.choice(model.alphabet.symbols) for _ in range(rng.randint(0, 10))]
            assert classify_trace(model, trace).query_count == trace.count(model.query_symbol)


def test_profile_examples():
    p = profile_student("s1", [])
    assert (p.sessions, p.accepted_simple, p.accepted_emotional, p.mean_query_rate) == (0, 0, 0, 0)

    p = profile_student("s1", [("simple", [DL, AQ, RQ, UL])])
    assert p.accepted_simple == 1 and p.mean_query_rate == Fraction(1, 4)

    p = profile_student("s1", [("simple", [DL, UL]), ("simple", [UL, UL])])
    assert p.sessions == 2 and p.accepted == 1


def test_profile_mixed_models():
    p = profile_student("s2", [("simple", [DL, UL]), ("emotional", [UL, MQ, GR, UL, GR])])
    assert (p.accepted_simple, p.accepted_emotional) == (1, 1)
    assert p.mean_query_rate == Fraction(1, 7)


def test_profile_reports_session_index():
    with pytest.raises(UnknownSymbol) as info:
        profile_student("s3", [("simple", [DL, UL]), ("simple", [DL, MQ])])
    assert info.value.session == 1 and info.value.offset == 1


def test_unknown_model():
    with pytest.raises(ValueError):
        classroom.get_model("bogus")
