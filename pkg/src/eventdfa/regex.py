"""Regular expressions over event identifiers.

Surface syntax::

    regex   := union ;
    union   := concat { "+" concat } ;
    concat  := star { ("." star) | star } ;
    star    := atom { "*" } ;
    atom    := IDENT | "EPS" | "NULL" | "(" regex ")" ;

``+`` is union (not "one or more"), ``.`` or plain juxtaposition is
concatenation, ``EPS`` is the empty word and ``NULL`` the empty language.
Whitespace is insignificant and ``#`` starts a comment running to the end of
the line.  Concatenation and union associate to the left.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Union as _U

from .automata import Alphabet
from .errors import RegexSyntaxError, UndeclaredSymbol

KEYWORDS = ("EPS", "NULL")


@dataclass(frozen=True)
class EmptySet:
    pass


@dataclass(frozen=True)
class Epsilon:
    pass


@dataclass(frozen=True)
class Sym:
    name: str


@dataclass(frozen=True)
class Concat:
    left: "Regex"
    right: "Regex"


@dataclass(frozen=True)
class Union:
    left: "Regex"
    right: "Regex"


@dataclass(frozen=True)
class Star:
    inner: "Regex"


Regex = _U[EmptySet, Epsilon, Sym, Concat, Union, Star]

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<comment>\#[^\n]*)
  | (?P<ident>[A-Za-z][A-Za-z0-9_]*)
  | (?P<op>[()+.*])
    """,
    re.VERBOSE,
)


def _tokenize(text: str) -> Iterator[tuple[str, str, int]]:
    """Yield ``(kind, value, byte_offset)``; kind is IDENT, a keyword, an operator or EOF."""
    pos = 0
    byte = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise RegexSyntaxError(f"unexpected character {text[pos]!r}", byte)
        value = m.group()
        if m.lastgroup == "ident":
            yield (value if value in KEYWORDS else "IDENT"), value, byte
        elif m.lastgroup == "op":
            yield value, value, byte
        pos = m.end()
        byte += len(value.encode("utf-8"))
    yield "EOF", "", byte


class _Parser:
    def __init__(self, text: str, alphabet: Alphabet | None):
        self.tokens = list(_tokenize(text))
        self.i = 0
        self.alphabet = alphabet

    @property
    def kind(self):
        return self.tokens[self.i][0]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, message):
        kind, value, offset = self.tokens[self.i]
        found = "end of input" if kind == "EOF" else repr(value)
        raise RegexSyntaxError(f"{message}, found {found}", offset)

    def parse(self) -> Regex:
        if self.kind == "EOF":
            self.error("empty regular expression")
        node = self.union()
        if self.kind != "EOF":
            self.error("expected operator or end of input")
        return node

    def union(self):
        node = self.concat()
        while self.kind == "+":
            self.advance()
            node = Union(node, self.concat())
        return node

    def concat(self):
        node = self.star()
        while True:
            if self.kind == ".":
                self.advance()
            elif self.kind not in _ATOM_START:
                return node
            node = Concat(node, self.star())

    def star(self):
        node = self.atom()
        while self.kind == "*":
            self.advance()
            node = Star(node)
        return node

    def atom(self):
        kind, value, offset = self.tokens[self.i]
        if kind == "IDENT":
            self.advance()
            if self.alphabet is not None and value not in self.alphabet:
                raise UndeclaredSymbol(value, offset)
            return Sym(value)
        if kind == "EPS":
            self.advance()
            return Epsilon()
        if kind == "NULL":
            self.advance()
            return EmptySet()
        if kind == "(":
            self.advance()
            node = self.union()
            if self.kind != ")":
                self.error("expected ')'")
            self.advance()
            return node
        self.error("expected identifier, EPS, NULL or '('")


_ATOM_START = frozenset(["IDENT", "EPS", "NULL", "("])


def parse_regex(text: str, alphabet: Alphabet | Iterable[str] | None = None) -> Regex:
    """Parse ``text``; if ``alphabet`` is given every identifier must belong to it."""
    if alphabet is not None and not isinstance(alphabet, Alphabet):
        alphabet = Alphabet(alphabet)
    return _Parser(text, alphabet).parse()


def print_regex(node: Regex) -> str:
    """Canonical text: explicit ``.``, minimal parentheses, starred operands
    always parenthesized.  ``parse_regex(print_regex(r)) == r``."""
    if isinstance(node, EmptySet):
        return "NULL"
    if isinstance(node, Epsilon):
        return "EPS"
    if isinstance(node, Sym):
        return node.name
    if isinstance(node, Star):
        return f"({print_regex(node.inner)})*"
    if isinstance(node, Concat):
        left = print_regex(node.left)
        if isinstance(node.left, Union):
            left = f"({left})"
        right = print_regex(node.right)
        if isinstance(node.right, (Union, Concat)):
            right = f"({right})"
        return f"{left} . {right}"
    if isinstance(node, Union):
        right = print_regex(node.right)
        if isinstance(node.right, Union):
            right = f"({right})"
        return f"{print_regex(node.left)} + {right}"
    raise TypeError(f"not a regex node: {node!r}")


def symbols(node: Regex) -> list[str]:
    """Identifiers in first-occurrence order (left to right)."""
    out: dict[str, None] = {}
    stack = [node]
    while stack:
        n = stack.pop()
        if isinstance(n, Sym):
            out.setdefault(n.name)
        elif isinstance(n, (Concat, Union)):
            stack.append(n.right)
            stack.append(n.left)
        elif isinstance(n, Star):
            stack.append(n.inner)
    return list(out)


def size(node: Regex) -> int:
    """Number of AST nodes."""
    if isinstance(node, (Concat, Union)):
        return 1 + size(node.left) + size(node.right)
    if isinstance(node, Star):
        return 1 + size(node.inner)
    return 1
