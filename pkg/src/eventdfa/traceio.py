"""File formats: event traces, the ``automaton v1`` document, DOT export and
session directories.

Automaton document (line oriented, deterministic)::

    automaton v1
    alphabet: a b
    states: 2
    start: 0
    accept: 1
    trans: 0 a 1
    trans: 0 b 0
    trans: 1 a 1
    trans: 1 b 0

Optional ``label: <state> <token>`` lines follow the transitions.  Labels
never affect the machine.  When reading, blank lines and ``#`` comments are
skipped and ``trans:``/``label:`` lines may appear in any order.
"""
from __future__ import annotations

import os
import re
from pathlib import Path
from typing import Mapping, Optional

from .automata import SYMBOL_RE, Alphabet, Dfa
from .errors import BadToken, FormatError, InvalidAutomaton, InvalidSymbol

VERSION_LINE = "automaton v1"
SESSION_RE = re.compile(r"(?P<student>[A-Za-z][A-Za-z0-9_]*?)__(?P<nn>[0-9]+)\.trace\Z")


def parse_trace(text: str) -> tuple:
    """One event per line; blank lines and ``#`` comment lines are skipped."""
    events = []
    for lineno, line in enumerate(text.splitlines(), 1):
        token = line.strip()
        if not token or token.startswith("#"):
            continue
        if not SYMBOL_RE.match(token):
            raise BadToken(token, lineno)
        events.append(token)
    return tuple(events)


def read_trace(path) -> tuple:
    return parse_trace(Path(path).read_text(encoding="utf-8"))


def format_trace(word) -> str:
    return "".join(f"{event}\n" for event in word)


def serialize_dfa(dfa: Dfa, labels: Optional[Mapping[int, str]] = None) -> str:
    lines = [
        VERSION_LINE,
        "alphabet: " + " ".join(dfa.alphabet),
        f"states: {dfa.n_states}",
        f"start: {dfa.start}",
        " ".join(["accept:", *map(str, sorted(dfa.accepting))]),
    ]
    for q, row in enumerate(dfa.table):
        for a, t in zip(dfa.alphabet, row):
            lines.append(f"trans: {q} {a} {t}")
    for q in sorted(labels or {}):
        label = labels[q]
        if not SYMBOL_RE.match(label):
            raise InvalidSymbol(f"invalid state label {label!r}")
        lines.append(f"label: {q} {label}")
    return "\n".join(lines) + "\n"


def _int(text, lineno, what):
    if not text.isdigit() or not text.isascii():
        raise FormatError(f"expected a nonnegative integer for {what}, got {text!r}", lineno)
    return int(text)


def read_automaton(text: str) -> tuple[Dfa, dict[int, str]]:
    """Parse a document into ``(dfa, labels)``."""
    rows = [
        (n, line.strip())
        for n, line in enumerate(text.splitlines(), 1)
        if line.strip() and not line.strip().startswith("#")
    ]
    if not rows or rows[0][1] != VERSION_LINE:
        raise FormatError(f"expected {VERSION_LINE!r} header", rows[0][0] if rows else 1)
    header = {}
    delta = {}
    labels = {}
    for lineno, line in rows[1:]:
        key, sep, rest = line.partition(":")
        if not sep:
            raise FormatError(f"expected 'key: value', got {line!r}", lineno)
        fields = rest.split()
        if key in ("alphabet", "states", "start", "accept"):
            if key in header:
                raise FormatError(f"duplicate {key!r} line", lineno)
            if delta or labels:
                raise FormatError(f"{key!r} must precede transitions", lineno)
            header[key] = (lineno, fields)
        elif key == "trans":
            if len(fields) != 3:
                raise FormatError("expected 'trans: <state> <symbol> <state>'", lineno)
            src = _int(fields[0], lineno, "source state")
            dst = _int(fields[2], lineno, "target state")
            if (src, fields[1]) in delta:
                raise FormatError(f"duplicate transition for ({src}, {fields[1]})", lineno)
            delta[src, fields[1]] = dst
        elif key == "label":
            if len(fields) != 2:
                raise FormatError("expected 'label: <state> <token>'", lineno)
            q = _int(fields[0], lineno, "state")
            if q in labels:
                raise FormatError(f"duplicate label for state {q}", lineno)
            if not SYMBOL_RE.match(fields[1]):
                raise FormatError(f"invalid label {fields[1]!r}", lineno)
            labels[q] = fields[1]
        else:
            raise FormatError(f"unknown key {key!r}", lineno)
    for key in ("alphabet", "states", "start", "accept"):
        if key not in header:
            raise FormatError(f"missing {key!r} line", rows[-1][0])

    lineno, fields = header["alphabet"]
    try:
        alphabet = Alphabet(fields)
    except (InvalidSymbol, ValueError) as exc:
        raise FormatError(str(exc), lineno) from None
    lineno, fields = header["states"]
    if len(fields) != 1:
        raise FormatError("expected 'states: <count>'", lineno)
    n_states = _int(fields[0], lineno, "states")
    lineno, fields = header["start"]
    if len(fields) != 1:
        raise FormatError("expected 'start: <state>'", lineno)
    start = _int(fields[0], lineno, "start")
    lineno, fields = header["accept"]
    accepting = [_int(f, lineno, "accepting state") for f in fields]
    if len(set(accepting)) != len(accepting):
        raise FormatError("duplicate accepting state", lineno)
    for q in labels:
        if q >= n_states:
            raise InvalidAutomaton(f"label for state {q} out of range")
    dfa = Dfa.from_delta(alphabet, n_states, delta, start, accepting)
    return dfa, labels


def deserialize_dfa(text: str) -> Dfa:
    return read_automaton(text)[0]


def _dot_id(state: int) -> str:
    return f"q{state}"


def export_dot(dfa: Dfa, name: str = "automaton") -> str:
    """DOT digraph, byte-stable for a given machine and name.

    Edges sharing (source, target) are merged and labelled with their
    symbols comma-joined in alphabet order.
    """
    if not SYMBOL_RE.match(name):
        raise InvalidSymbol(f"invalid graph name {name!r}")
    out = [
        f"digraph {name} {{",
        "  rankdir=LR;",
        '  __start [shape=point, style=invis, label=""];',
    ]
    for q in range(dfa.n_states):
        shape = "doublecircle" if q in dfa.accepting else "circle"
        out.append(f'  {_dot_id(q)} [shape={shape}, label="{_dot_id(q)}"];')
    out.append(f"  __start -> {_dot_id(dfa.start)};")
    for q, row in enumerate(dfa.table):
        grouped: dict[int, list[str]] = {}
        for a, t in zip(dfa.alphabet, row):
            grouped.setdefault(t, []).append(a)
        for t, syms in grouped.items():
            out.append(f'  {_dot_id(q)} -> {_dot_id(t)} [label="{",".join(syms)}"];')
    out.append("}")
    return "\n".join(out) + "\n"


def session_files(directory) -> dict[str, list[Path]]:
    """``<student>__<nn>.trace`` files grouped by student, sessions in nn order.

    Files with other extensions are ignored; a ``.trace`` file that does not
    follow the naming scheme is an error.
    """
    directory = Path(directory)
    if not directory.is_dir():
        raise NotADirectoryError(f"not a directory: {directory}")
    found: dict[str, list[tuple[int, Path]]] = {}
    for entry in sorted(os.listdir(directory)):
        path = directory / entry
        if not entry.endswith(".trace") or not path.is_file():
            continue
        m = SESSION_RE.match(entry)
        if m is None:
            raise FormatError(f"session file {entry!r} is not named <student>__<nn>.trace")
        found.setdefault(m["student"], []).append((int(m["nn"]), path))
    return {s: [p for _, p in sorted(v)] for s, v in sorted(found.items())}
