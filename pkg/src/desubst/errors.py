"""Exception hierarchy shared by the library and the command line."""


class DesubstError(Exception):
    """Base class for every error raised by :mod:`desubst`."""


class InputError(DesubstError, ValueError):
    """Malformed or inconsistent input (unknown letter, alphabet mismatch...)."""


class PreconditionError(InputError):
    """An operation was called outside its domain, e.g. with an erasing morphism."""


class ParseError(InputError):
    """A text file could not be parsed.

    Carries the offending file, 1-based line number and token so the CLI
    can point at the exact location.
    """

    def __init__(self, message, path=None, line=None, token=None):
        self.path = path
        self.line = line
        self.token = token
        where = []
        if path is not None:
            where.append(str(path))
        if line is not None:
            where.append(f"line {line}")
        if token is not None:
            where.append(f"token {token!r}")
        prefix = ", ".join(where)
        super().__init__(f"{prefix}: {message}" if prefix else message)


class Unsupported(DesubstError):
    """The input is well formed but the requested reduction is not implemented.

    Used where a silent answer could be wrong, e.g. a morphic decision with an
    erasing coding morphism.
    """


class BudgetExceeded(DesubstError):
    """The meta-automaton grew past the configured vertex budget."""
