"""Exception hierarchy shared by every module of the package."""


class LCAError(Exception):
    """Base class for all errors raised by lcaduality."""


class UsageError(LCAError, ValueError):
    """Inputs do not satisfy an operation's preconditions."""


class ResourceError(LCAError, RuntimeError):
    """A configured size cap (ball size, finite dimension) was exceeded."""


class UnsupportedOperation(LCAError, TypeError):
    """The operation is not defined for this kind of group."""


class ParseError(UsageError):
    """Syntax error in an automaton document, with 1-based position."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)
