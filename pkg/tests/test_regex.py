import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eventdfa.errors import RegexSyntaxError, UndeclaredSymbol
from eventdfa.regex import (
    Concat,
    EmptySet,
    Epsilon,
    Star,
    Sym,
    Union,
    parse_regex,
    print_regex,
    size,
    symbols,
)

from oracles import random_regex, regex_depth

a, b, c = Sym("a"), Sym("b"), Sym("c")


@pytest.mark.parametrize(
    "text, expected",
    [
        (
            "(Deliver_Lecture)* . Understand_Lecture",
            Concat(Star(Sym("Deliver_Lecture")), Sym("Understand_Lecture")),
        ),
        ("EPS", Epsilon()),
        ("NULL", EmptySet()),
        ("a + b . c", Union(a, Concat(b, c))),
        ("a + b . c*", Union(a, Concat(b, Star(c)))),
        ("a b c", Concat(Concat(a, b), c)),
        ("a . b c", Concat(Concat(a, b), c)),
        ("a + b + c", Union(Union(a, b), c)),
        ("a(b + c)", Concat(a, Union(b, c))),
        ("a**", Star(Star(a))),
        ("(a)", a),
        ("  a   # trailing comment\n . b", Concat(a, b)),
        ("EPSx", Sym("EPSx")),
    ],
)
def test_parse(text, expected):
    assert parse_regex(text) == expected


@pytest.mark.parametrize(
    "text, offset",
    [
        ("(a", 2),
        ("", 0),
        ("a +", 3),
        ("a )", 2),
        ("* a", 0),
        ("a ! b", 2),
        ("()", 1),
        ("# only a comment", 16),
        ("# é\n a !", 8),  # offsets count bytes, not characters
    ],
)
def test_syntax_errors_carry_byte_offset(text, offset):
    with pytest.raises(RegexSyntaxError) as info:
        parse_regex(text)
    assert info.value.offset == offset


def test_keywords_are_case_sensitive():
    assert parse_regex("eps") == Sym("eps")
    assert parse_regex("Null") == Sym("Null")


def test_declared_alphabet():
    assert parse_regex("a . b", ["a", "b"]) == Concat(a, b)
    with pytest.raises(UndeclaredSymbol) as info:
        parse_regex("a . zed", ["a", "b"])
    assert info.value.symbol == "zed"
    assert info.value.offset == 4


@pytest.mark.parametrize(
    "node, text",
    [
        (Star(a), "(a)*"),
        (Union(a, b), "a + b"),
        (Concat(a, Star(Union(b, c))), "a . (b + c)*"),
        (Concat(Union(a, b), c), "(a + b) . c"),
        (Concat(a, Concat(b, c)), "a . (b . c)"),
        (Concat(Concat(a, b), c), "a . b . c"),
        (Union(a, Union(b, c)), "a + (b + c)"),
        (Union(Concat(a, b), c), "a . b + c"),
        (Star(Star(a)), "((a)*)*"),
        (Concat(Epsilon(), EmptySet()), "EPS . NULL"),
    ],
)
def test_print(node, text):
    assert print_regex(node) == text
    assert parse_regex(text) == node


def test_round_trip_random():
    rng = random.Random(2024)
    for _ in range(500):
        node = random_regex(rng, rng.randint(0, 6), ["a", "b", "c"])
        assert regex_depth(node) <= 6
        assert parse_regex(print_regex(node)) == node


leaves = st.one_of(
    st.just(EmptySet()), st.just(Epsilon()), st.sampled_from(["a", "b", "c"]).map(Sym)
)
trees = st.recursive(
    leaves,
    lambda kids: st.one_of(
        kids.map(Star),
        st.tuples(kids, kids).map(lambda p: Concat(*p)),
        st.tuples(kids, kids).map(lambda p: Union(*p)),
    ),
    max_leaves=20,
)


@settings(max_examples=300, deadline=None)
@given(trees)
def test_round_trip_property(node):
    text = print_regex(node)
    assert parse_regex(text) == node
    assert parse_regex(text) == parse_regex(text)


def test_symbols_and_size():
    node = parse_regex("b . (a + b)* . c")
    assert symbols(node) == ["b", "a", "c"]
    assert size(node) == 8
