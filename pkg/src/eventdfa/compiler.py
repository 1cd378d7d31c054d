"""Regex -> epsilon-NFA -> total DFA -> minimal DFA, plus language equivalence.

State accounting of :func:`thompson`, per AST node:

=========  ================================================
EmptySet   2 fresh states, no transitions
Epsilon    2 fresh states, one epsilon edge start -> accept
Sym        2 fresh states, one symbol edge start -> accept
Concat     0 fresh states, epsilon edge left.accept -> right.start
Union      2 fresh states (new start and accept), 4 epsilon edges
Star       2 fresh states (new start and accept), 4 epsilon edges
=========  ================================================

so an expression with ``n`` nodes yields at most ``2n`` NFA states.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .automata import Alphabet, Dfa
from .errors import AlphabetMismatch, InvalidAutomaton, UndeclaredSymbol
from .regex import Concat, EmptySet, Epsilon, Regex, Star, Sym, Union, parse_regex, symbols


@dataclass(frozen=True)
class Nfa:
    """Thompson-form epsilon-NFA: one start state, one accepting state."""

    n_states: int
    alphabet: Alphabet
    symbol_transitions: frozenset  # {(src, symbol, dst)}
    epsilon_transitions: frozenset  # {(src, dst)}
    start: int
    accept: int
    _eps: tuple = field(init=False, repr=False, compare=False)
    _moves: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        eps = [[] for _ in range(self.n_states)]
        for src, dst in sorted(self.epsilon_transitions):
            eps[src].append(dst)
        moves = [{} for _ in range(self.n_states)]
        for src, sym, dst in self.symbol_transitions:
            moves[src].setdefault(sym, []).append(dst)
        object.__setattr__(self, "_eps", tuple(tuple(e) for e in eps))
        object.__setattr__(self, "_moves", tuple(moves))


class _Builder:
    def __init__(self):
        self.n = 0
        self.sym = []
        self.eps = []

    def fresh(self):
        self.n += 1
        return self.n - 1

    def build(self, node) -> tuple[int, int]:
        if isinstance(node, (EmptySet, Epsilon, Sym)):
            s, f = self.fresh(), self.fresh()
            if isinstance(node, Epsilon):
                self.eps.append((s, f))
            elif isinstance(node, Sym):
                self.sym.append((s, node.name, f))
            return s, f
        if isinstance(node, Concat):
            s1, f1 = self.build(node.left)
            s2, f2 = self.build(node.right)
            self.eps.append((f1, s2))
            return s1, f2
        if isinstance(node, Union):
            s = self.fresh()
            s1, f1 = self.build(node.left)
            s2, f2 = self.build(node.right)
            f = self.fresh()
            self.eps += [(s, s1), (s, s2), (f1, f), (f2, f)]
            return s, f
        if isinstance(node, Star):
            s = self.fresh()
            s1, f1 = self.build(node.inner)
            f = self.fresh()
            self.eps += [(s, s1), (s, f), (f1, s1), (f1, f)]
            return s, f
        raise TypeError(f"not a regex node: {node!r}")


def thompson(ast: Regex, alphabet: Alphabet | Iterable[str]) -> Nfa:
    if not isinstance(alphabet, Alphabet):
        alphabet = Alphabet(alphabet)
    for name in symbols(ast):
        if name not in alphabet:
            raise UndeclaredSymbol(name)
    b = _Builder()
    start, accept = b.build(ast)
    return Nfa(b.n, alphabet, frozenset(b.sym), frozenset(b.eps), start, accept)


def epsilon_closure(nfa: Nfa, states: Iterable[int]) -> frozenset:
    closed = set(states)
    stack = list(closed)
    eps = nfa._eps
    while stack:
        q = stack.pop()
        for t in eps[q]:
            if t not in closed:
                closed.add(t)
                stack.append(t)
    return frozenset(closed)


def subset_construct(nfa: Nfa) -> Dfa:
    """Determinize; DFA states are numbered in breadth-first discovery order.

    The empty subset plays the sink.  It is only materialized when some
    reachable subset has no move on some symbol.
    """
    alphabet = nfa.alphabet
    start = epsilon_closure(nfa, [nfa.start])
    ids = {start: 0}
    order = [start]
    table = []
    for subset in order:
        row = []
        for a in alphabet:
            target = set()
            for q in subset:
                target.update(nfa._moves[q].get(a, ()))
            target = epsilon_closure(nfa, target)
            if target not in ids:
                ids[target] = len(order)
                order.append(target)
            row.append(ids[target])
        table.append(row)
    accepting = [i for i, subset in enumerate(order) if nfa.accept in subset]
    return Dfa(alphabet, table, 0, accepting)


def hopcroft_minimize(dfa: Dfa) -> Dfa:
    """Minimal DFA for the same language.

    Unreachable states are dropped, blocks are refined with Hopcroft's
    "process the smaller half" rule, and the quotient is renumbered breadth-
    first from the start state with symbols in alphabet order.  The result is
    therefore unique per (language, alphabet order).
    """
    reach = dfa.reachable_states()
    n_sym = len(dfa.alphabet)
    table = dfa.table

    inverse = [dict() for _ in range(n_sym)]
    for q in reach:
        for c in range(n_sym):
            inverse[c].setdefault(table[q][c], []).append(q)

    finals = [q for q in reach if q in dfa.accepting]
    others = [q for q in reach if q not in dfa.accepting]
    blocks = [set(b) for b in (finals, others) if b]
    block_of = {}
    for i, b in enumerate(blocks):
        for q in b:
            block_of[q] = i

    work = set()
    if len(blocks) == 2:
        small = 0 if len(blocks[0]) <= len(blocks[1]) else 1
        work = {(small, c) for c in range(n_sym)}
    while work:
        splitter, c = work.pop()
        preds = set()
        for q in blocks[splitter]:
            preds.update(inverse[c].get(q, ()))
        hit = {}
        for p in preds:
            hit.setdefault(block_of[p], set()).add(p)
        for y, inside in hit.items():
            if len(inside) == len(blocks[y]):
                continue
            blocks[y] -= inside
            new = len(blocks)
            blocks.append(inside)
            for q in inside:
                block_of[q] = new
            for d in range(n_sym):
                if (y, d) in work:
                    work.add((new, d))
                elif len(inside) <= len(blocks[y]):
                    work.add((new, d))
                else:
                    work.add((y, d))

    # quotient, renumbered breadth-first
    rep = {b: min(members) for b, members in enumerate(blocks)}
    first = block_of[dfa.start]
    number = {first: 0}
    queue = [first]
    rows = []
    for b in queue:
        row = []
        for c in range(n_sym):
            t = block_of[table[rep[b]][c]]
            if t not in number:
                number[t] = len(queue)
                queue.append(t)
            row.append(number[t])
        rows.append(row)
    accepting = [number[b] for b in queue if rep[b] in dfa.accepting]
    return Dfa(dfa.alphabet, rows, 0, accepting)


def equivalent(d1: Dfa, d2: Dfa) -> Optional[tuple]:
    """``None`` when L(d1) == L(d2), else a shortest word accepted by exactly one.

    The alphabets must hold the same symbols; d1's order drives the search.
    """
    if set(d1.alphabet) != set(d2.alphabet):
        raise AlphabetMismatch(
            f"alphabets differ: {list(d1.alphabet)!r} vs {list(d2.alphabet)!r}"
        )
    cols2 = [d2.alphabet.index(a) for a in d1.alphabet]
    origin = (d1.start, d2.start)
    parent = {origin: None}
    queue = deque([origin])
    while queue:
        pair = queue.popleft()
        p, q = pair
        if (p in d1.accepting) != (q in d2.accepting):
            word = []
            while parent[pair] is not None:
                pair, c = parent[pair]
                word.append(d1.alphabet[c])
            return tuple(reversed(word))
        for c, c2 in enumerate(cols2):
            nxt = (d1.table[p][c], d2.table[q][c2])
            if nxt not in parent:
                parent[nxt] = (pair, c)
                queue.append(nxt)
    return None


def brute_force_match(ast: Regex, word: Sequence[str]) -> bool:
    """Membership by the denotational semantics of the AST.

    Independent of every automaton construction above; used as the oracle.
    Star iterations must consume a nonempty prefix, which guarantees
    termination.  Results are memoized per (node, span).
    """
    word = tuple(word)
    memo = {}

    def match(node, i, j):
        key = (id(node), i, j)
        if key in memo:
            return memo[key]
        if isinstance(node, EmptySet):
            r = False
        elif isinstance(node, Epsilon):
            r = i == j
        elif isinstance(node, Sym):
            r = j == i + 1 and word[i] == node.name
        elif isinstance(node, Concat):
            r = any(match(node.left, i, k) and match(node.right, k, j) for k in range(i, j + 1))
        elif isinstance(node, Union):
            r = match(node.left, i, j) or match(node.right, i, j)
        elif isinstance(node, Star):
            r = i == j or any(
                match(node.inner, i, k) and match(node, k, j) for k in range(i + 1, j + 1)
            )
        else:
            raise TypeError(f"not a regex node: {node!r}")
        memo[key] = r
        return r

    return match(ast, 0, len(word))


def compile_regex(
    source: str | Regex,
    alphabet: Alphabet | Iterable[str] | None = None,
    minimize: bool = True,
) -> Dfa:
    """Text or AST to DFA.

    Without an explicit alphabet the symbols of the expression are used, in
    order of first appearance.
    """
    if alphabet is not None and not isinstance(alphabet, Alphabet):
        alphabet = Alphabet(alphabet)
    ast = parse_regex(source, alphabet) if isinstance(source, str) else source
    if alphabet is None:
        alphabet = Alphabet(symbols(ast))
    if len(alphabet) == 0:
        raise InvalidAutomaton("expression uses no symbols; give an alphabet explicitly")
    dfa = subset_construct(thompson(ast, alphabet))
    return hopcroft_minimize(dfa) if minimize else dfa
