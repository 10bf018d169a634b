"""
Domain errors raised by defarg.

Every error derives from :class:`DefargError`, itself a ``ValueError``, so
callers may catch either the precise class or the whole family.
"""


class DefargError(ValueError):
    """Base class of every domain error."""


class UnknownArgumentError(DefargError):
    """An argument name is not part of the graph it was looked up in."""


class UnknownNodeError(DefargError):
    """A defense node is not part of the defense graph."""


class DefeaterInInputError(DefargError):
    """A defeater of defenses appears where only defenses are allowed."""


class DefeaterAsDefendeeError(DefeaterInInputError):
    """Defense of a defeater was requested; defeaters are never accepted."""


class InvalidArgumentNameError(DefargError):
    """An argument name violates the token rules."""


class UnknownSemanticsError(DefargError):
    """A semantics token names no supported semantics."""


class InvalidOptionError(DefargError):
    """A configuration value is out of range."""


class EmptyRestrictionError(DefargError):
    """Root equivalence was asked for an empty set of arguments."""


class ArgumentOutsideIntersectionError(DefargError):
    """A restricted argument is missing from one of the compared graphs."""


class TooLargeError(DefargError):
    """An input exceeds the configured bound of an exhaustive procedure."""


class GraphParseError(DefargError):
    """
    A graph document could not be parsed.

    Parameters
    ----------
    message : str
        Description of the problem.
    line : int, optional
        The 1-based line number the problem was found on.
    """

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class MissingSeparatorError(GraphParseError):
    """A TGF document has no lone ``#`` line."""


class UndeclaredEndpointError(GraphParseError):
    """An attack mentions an argument that was never declared."""


class DuplicateArgumentError(GraphParseError):
    """An argument is declared twice."""


class GraphSyntaxError(GraphParseError):
    """A document contains text that is not part of the format."""
