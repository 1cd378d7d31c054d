"""Command line interface.

Exit status: 0 for success / accept / equivalent, 1 for reject /
not equivalent, 2 for usage or input errors.  Wherever an automaton file is
expected, the names ``simple`` and ``emotional`` select the built-in
classroom models (unless a file of that name exists).
"""
from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from . import classroom
from .automata import SYMBOL_RE, Alphabet, Dfa
from .compiler import compile_regex, equivalent, hopcroft_minimize
from .errors import AutomatonError, UnknownSymbol
from .traceio import (
    export_dot,
    format_trace,
    read_automaton,
    read_trace,
    serialize_dfa,
    session_files,
)

EXIT_OK, EXIT_REJECT, EXIT_ERROR = 0, 1, 2


class UsageError(Exception):
    pass


def format_rate(rate: Fraction) -> str:
    """Four decimals, ties rounded to even."""
    n = round(rate * 10000)
    return f"{n // 10000}.{n % 10000:04d}"


def load_machine(ref: str) -> Dfa:
    path = Path(ref)
    if path.exists():
        return read_automaton(path.read_text(encoding="utf-8"))[0]
    if ref in classroom.MODEL_IDS:
        return classroom.get_model(ref).machine
    raise UsageError(f"no such automaton file or built-in model: {ref}")


def _emit(text: str, output) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_compile(args) -> int:
    if args.file:
        text = Path(args.file).read_text(encoding="utf-8")
    elif args.regex is not None:
        text = args.regex
    else:
        raise UsageError("give a regular expression or --file")
    alphabet = None
    if args.alphabet is not None:
        alphabet = Alphabet(s.strip() for s in args.alphabet.split(",") if s.strip())
    dfa = compile_regex(text, alphabet, minimize=args.minimize)
    if args.output:
        _emit(serialize_dfa(dfa), args.output)
        print(dfa.n_states)
    else:
        sys.stdout.write(serialize_dfa(dfa))
        print(dfa.n_states, file=sys.stderr)
    return EXIT_OK


def _print_run(configs) -> None:
    for c in configs:
        print(f"[{c.state}, {len(c.remaining)}]")


def cmd_accept(args) -> int:
    dfa = load_machine(args.automaton)
    trace = read_trace(args.trace)
    try:
        configs = dfa.run(trace)
    except UnknownSymbol as exc:
        if args.show_run and exc.partial_run:
            _print_run(exc.partial_run)
        if not args.reject_unknown:
            raise
        print(f"eventdfa: {exc}", file=sys.stderr)
        print("REJECT")
        return EXIT_REJECT
    if args.show_run:
        _print_run(configs)
    ok = configs[-1].state in dfa.accepting
    print("ACCEPT" if ok else "REJECT")
    return EXIT_OK if ok else EXIT_REJECT


def cmd_minimize(args) -> int:
    _emit(serialize_dfa(hopcroft_minimize(load_machine(args.automaton))), args.output)
    return EXIT_OK


def cmd_equiv(args) -> int:
    witness = equivalent(load_machine(args.first), load_machine(args.second))
    if witness is None:
        return EXIT_OK
    sys.stdout.write(format_trace(witness) if witness else "# empty trace\n")
    return EXIT_REJECT


def cmd_dot(args) -> int:
    name = args.name
    if name is None:
        stem = Path(args.automaton).stem
        name = stem if SYMBOL_RE.match(stem) else "automaton"
    _emit(export_dot(load_machine(args.automaton), name), args.output)
    return EXIT_OK


def cmd_classify(args) -> int:
    model = classroom.get_model(args.model)
    lines = []
    all_ok = True
    for path in args.traces:
        verdict = classroom.classify_trace(model, read_trace(path))
        offset = "-" if verdict.failure_offset is None else str(verdict.failure_offset)
        status = "ACCEPT" if verdict.accepted else "REJECT"
        lines.append(f"{path}\t{status}\t{offset}\t{verdict.query_count}\n")
        all_ok = all_ok and verdict.accepted
    sys.stdout.write("".join(lines))
    return EXIT_OK if all_ok else EXIT_REJECT


def cmd_profile(args) -> int:
    lines = []
    for student, paths in session_files(args.sessions).items():
        sessions = [(args.model, read_trace(p)) for p in paths]
        prof = classroom.profile_student(student, sessions)
        lines.append(
            f"{student}\t{prof.sessions}\t{prof.accepted}\t{format_rate(prof.mean_query_rate)}\n"
        )
    sys.stdout.write("".join(lines))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eventdfa", description="Finite automata over event alphabets."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compile", help="compile a regular expression to an automaton")
    p.add_argument("regex", nargs="?", help="expression text")
    p.add_argument("-f", "--file", help="read the expression from a file")
    p.add_argument("--alphabet", help="comma-separated symbols, in order")
    p.add_argument("--minimize", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_compile)

    p = sub.add_parser("accept", help="run an automaton on a trace file")
    p.add_argument("automaton")
    p.add_argument("trace")
    p.add_argument("--show-run", action="store_true", help="print [state, remaining] per step")
    p.add_argument(
        "--reject-unknown", action="store_true", help="treat foreign events as rejection"
    )
    p.set_defaults(func=cmd_accept)

    p = sub.add_parser("minimize", help="write the canonical minimal automaton")
    p.add_argument("automaton")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_minimize)

    p = sub.add_parser("equiv", help="compare the languages of two automata")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("dot", help="export an automaton as a DOT digraph")
    p.add_argument("automaton")
    p.add_argument("--name", help="graph name (identifier)")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_dot)

    p = sub.add_parser("classroom", help="classroom model workflows")
    csub = p.add_subparsers(dest="classroom_command", required=True)
    c = csub.add_parser("classify", help="classify trace files against a model")
    c.add_argument("--model", required=True, choices=classroom.MODEL_IDS)
    c.add_argument("traces", nargs="+")
    c.set_defaults(func=cmd_classify)
    c = csub.add_parser("profile", help="per-student summary of a sessions directory")
    c.add_argument("--sessions", required=True, help="directory of <student>__<nn>.trace files")
    c.add_argument("--model", default=classroom.SIMPLE, choices=classroom.MODEL_IDS)
    c.set_defaults(func=cmd_profile)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (AutomatonError, UsageError, OSError, ValueError) as exc:
        print(f"eventdfa: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
