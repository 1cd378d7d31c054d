"""Deterministic finite automata over named event alphabets.

A machine is the usual quintuple ``(Q, Sigma, delta, q0, F)``.  States are
the dense integers ``0 .. n_states - 1``; symbols are identifier strings and
words are tuples of them.  ``delta`` is always total over the alphabet, which
is checked when the machine is built.
"""
from __future__ import annotations

import re
from array import array
from typing import Iterable, Mapping, NamedTuple, Sequence

from . import kernels
from .errors import InvalidAutomaton, InvalidState, InvalidSymbol, UnknownSymbol

Symbol = str
Word = tuple  # tuple[Symbol, ...]; the empty tuple is the empty word

SYMBOL_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


def check_symbol(name) -> Symbol:
    if not isinstance(name, str) or not SYMBOL_RE.match(name):
        raise InvalidSymbol(f"invalid symbol {name!r}")
    return name


class Alphabet:
    """Finite ordered set of symbols; order is the order given."""

    __slots__ = ("symbols", "_index")

    def __init__(self, symbols: Iterable[str]):
        symbols = tuple(check_symbol(s) for s in symbols)
        index = {}
        for i, s in enumerate(symbols):
            if s in index:
                raise ValueError(f"duplicate symbol {s!r} in alphabet")
            index[s] = i
        object.__setattr__(self, "symbols", symbols)
        object.__setattr__(self, "_index", index)

    def __setattr__(self, name, value):
        raise AttributeError("Alphabet is immutable")

    def index(self, symbol: str) -> int:
        try:
            return self._index[symbol]
        except (KeyError, TypeError):
            raise UnknownSymbol(symbol) from None

    def __contains__(self, symbol) -> bool:
        return symbol in self._index

    def __iter__(self):
        return iter(self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def __getitem__(self, i: int) -> str:
        return self.symbols[i]

    def __eq__(self, other):
        if not isinstance(other, Alphabet):
            return NotImplemented
        return self.symbols == other.symbols

    def __hash__(self):
        return hash(self.symbols)

    def __repr__(self):
        return f"Alphabet({list(self.symbols)!r})"

    def encode(self, word: Sequence[str]) -> array:
        """Symbol indices for ``word``; raises UnknownSymbol with the offset."""
        codes = array("i")
        index = self._index
        for offset, sym in enumerate(word):
            try:
                codes.append(index[sym])
            except (KeyError, TypeError):
                raise UnknownSymbol(sym, offset) from None
        return codes


class Configuration(NamedTuple):
    """Snapshot ``[state, remaining input]`` of a run."""

    state: int
    remaining: tuple

    def __str__(self):
        rest = " ".join(self.remaining) if self.remaining else "λ"
        return f"[q{self.state}, {rest}]"


class Dfa:
    """Immutable total DFA.

    ``table[q][i]`` is the successor of state ``q`` on ``alphabet[i]``.
    """

    __slots__ = ("alphabet", "table", "start", "accepting", "_flat", "_live")

    def __init__(
        self,
        alphabet: Alphabet | Iterable[str],
        table: Sequence[Sequence[int]],
        start: int,
        accepting: Iterable[int],
    ):
        if not isinstance(alphabet, Alphabet):
            alphabet = Alphabet(alphabet)
        if len(alphabet) == 0:
            raise InvalidAutomaton("alphabet must be nonempty")
        n = len(table)
        if n < 1:
            raise InvalidAutomaton("a DFA needs at least one state")
        rows = []
        for q, row in enumerate(table):
            row = tuple(row)
            if len(row) != len(alphabet):
                raise InvalidAutomaton(
                    f"state {q} has {len(row)} transitions, expected {len(alphabet)}"
                )
            for t in row:
                if not _is_index(t, n):
                    raise InvalidAutomaton(f"transition target {t!r} of state {q} out of range")
            rows.append(row)
        if not _is_index(start, n):
            raise InvalidAutomaton(f"start state {start!r} out of range")
        accepting = frozenset(accepting)
        for f in accepting:
            if not _is_index(f, n):
                raise InvalidAutomaton(f"accepting state {f!r} out of range")
        set_ = object.__setattr__
        set_(self, "alphabet", alphabet)
        set_(self, "table", tuple(rows))
        set_(self, "start", start)
        set_(self, "accepting", accepting)
        set_(self, "_flat", array("i", [t for row in rows for t in row]))
        set_(self, "_live", None)

    @classmethod
    def from_delta(
        cls,
        alphabet: Alphabet | Iterable[str],
        n_states: int,
        delta: Mapping[tuple[int, str], int],
        start: int,
        accepting: Iterable[int],
    ) -> "Dfa":
        """Build from a ``{(state, symbol): state}`` mapping; must be total."""
        if not isinstance(alphabet, Alphabet):
            alphabet = Alphabet(alphabet)
        table = []
        for q in range(n_states):
            row = []
            for a in alphabet:
                if (q, a) not in delta:
                    raise InvalidAutomaton(f"no transition for state {q} on {a!r}")
                row.append(delta[q, a])
            table.append(row)
        extra = set(delta) - {(q, a) for q in range(n_states) for a in alphabet}
        if extra:
            raise InvalidAutomaton(f"transitions outside Q x Sigma: {sorted(extra)!r}")
        return cls(alphabet, table, start, accepting)

    def __setattr__(self, name, value):
        raise AttributeError("Dfa is immutable")

    @property
    def n_states(self) -> int:
        return len(self.table)

    def __eq__(self, other):
        if not isinstance(other, Dfa):
            return NotImplemented
        return (
            self.alphabet == other.alphabet
            and self.table == other.table
            and self.start == other.start
            and self.accepting == other.accepting
        )

    def __hash__(self):
        return hash((self.alphabet, self.table, self.start, self.accepting))

    def __repr__(self):
        return (
            f"Dfa(states={self.n_states}, alphabet={list(self.alphabet)!r}, "
            f"start={self.start}, accepting={sorted(self.accepting)!r})"
        )

    def _check_state(self, q):
        if not _is_index(q, self.n_states):
            raise InvalidState(q, self.n_states)

    def step(self, q: int, a: str) -> int:
        self._check_state(q)
        return self.table[q][self.alphabet.index(a)]

    def extended_step(self, q: int, word: Sequence[str]) -> int:
        """State reached from ``q`` after consuming ``word`` left to right."""
        self._check_state(q)
        codes = self.alphabet.encode(word)
        return kernels.walk(self._flat, len(self.alphabet), q, codes)

    def accepts(self, word: Sequence[str]) -> bool:
        return self.extended_step(self.start, word) in self.accepting

    def accepts_many(self, words: Iterable[Sequence[str]]) -> list[bool]:
        """Batch acceptance; one table walk over all words."""
        encode = self.alphabet.encode
        codes = array("i")
        offsets = array("i", [0])
        for w in words:
            codes.extend(encode(w))
            offsets.append(len(codes))
        finals = kernels.walk_many(self._flat, len(self.alphabet), self.start, codes, offsets)
        acc = self.accepting
        return [f in acc for f in finals]

    def run(self, word: Sequence[str]) -> list[Configuration]:
        """Configurations ``[q0, w], ..., [q_final, λ]`` of the run on ``word``.

        On a foreign event the UnknownSymbol error carries the configurations
        up to (and including) the one whose head is the offending event.
        """
        word = tuple(word)
        try:
            codes = self.alphabet.encode(word)
        except UnknownSymbol as exc:
            prefix = self.alphabet.encode(word[: exc.offset])
            states = kernels.trajectory(self._flat, len(self.alphabet), self.start, prefix)
            exc.partial_run = [Configuration(q, word[i:]) for i, q in enumerate(states)]
            raise
        states = kernels.trajectory(self._flat, len(self.alphabet), self.start, codes)
        return [Configuration(q, word[i:]) for i, q in enumerate(states)]

    def live_states(self) -> tuple[bool, ...]:
        """Per-state flag: some accepting state is reachable from it."""
        if self._live is None:
            mask = [q in self.accepting for q in range(self.n_states)]
            live = kernels.live_states(self._flat, self.n_states, len(self.alphabet), mask)
            object.__setattr__(self, "_live", tuple(bool(x) for x in live))
        return self._live

    def reachable_states(self) -> list[int]:
        """States reachable from the start, in breadth-first discovery order."""
        seen = {self.start}
        order = [self.start]
        for q in order:
            for t in self.table[q]:
                if t not in seen:
                    seen.add(t)
                    order.append(t)
        return order


def _is_index(x, n) -> bool:
    return isinstance(x, int) and not isinstance(x, bool) and 0 <= x < n


def step(dfa: Dfa, q: int, a: str) -> int:
    return dfa.step(q, a)


def extended_step(dfa: Dfa, q: int, word: Sequence[str]) -> int:
    return dfa.extended_step(q, word)


def accepts(dfa: Dfa, word: Sequence[str]) -> bool:
    return dfa.accepts(word)


def run(dfa: Dfa, word: Sequence[str]) -> list[Configuration]:
    return dfa.run(word)
