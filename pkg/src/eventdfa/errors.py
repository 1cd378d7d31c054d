"""Exception hierarchy shared by every module of the package."""


class AutomatonError(Exception):
    """Base class for all errors raised by eventdfa."""


class InvalidState(AutomatonError):
    def __init__(self, state, n_states):
        self.state = state
        self.n_states = n_states
        super().__init__(f"state {state!r} out of range [0, {n_states})")


class UnknownSymbol(AutomatonError):
    """An event outside the automaton's alphabet was consumed.

    ``offset`` is the position of the event in the input word (``None`` for a
    single ``step``).  ``partial_run`` holds the configurations produced before
    the offending event, when the error came out of a run.
    """

    def __init__(self, symbol, offset=None, partial_run=None):
        self.symbol = symbol
        self.offset = offset
        self.partial_run = partial_run
        where = "" if offset is None else f" at offset {offset}"
        super().__init__(f"unknown symbol {symbol!r}{where}")


class InvalidAutomaton(AutomatonError):
    """Raised when a transition table is partial or otherwise malformed."""


class InvalidSymbol(AutomatonError, ValueError):
    """A token does not match ``[A-Za-z][A-Za-z0-9_]*``."""


class RegexSyntaxError(AutomatonError):
    def __init__(self, message, offset):
        self.offset = offset
        super().__init__(f"{message} at byte offset {offset}")


class UndeclaredSymbol(AutomatonError):
    def __init__(self, symbol, offset=None):
        self.symbol = symbol
        self.offset = offset
        where = "" if offset is None else f" at byte offset {offset}"
        super().__init__(f"symbol {symbol!r} is not in the declared alphabet{where}")


class AlphabetMismatch(AutomatonError):
    pass


class BadToken(AutomatonError):
    def __init__(self, token, line):
        self.token = token
        self.line = line
        super().__init__(f"line {line}: bad event token {token!r}")


class FormatError(AutomatonError):
    def __init__(self, message, line=None):
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")
