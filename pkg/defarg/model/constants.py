"""
constants.py

This module defines various constants used throughout defarg.
"""

import re
from enum import Enum

from defarg.model.exceptions import UnknownSemanticsError


class Semantics(str, Enum):
    """
    The argumentation semantics supported for argument graphs and, with the
    same names, for defense graphs.
    """

    COMPLETE = 'complete'
    GROUNDED = 'grounded'
    PREFERRED = 'preferred'
    STABLE = 'stable'

    @classmethod
    def parse(cls, token) -> 'Semantics':
        """
        Returns the semantics named by ``token``.

        Parameters
        ----------
        token : str or Semantics
            A semantics name such as ``'complete'`` (case-insensitive).

        Returns
        -------
        Semantics
            The matching enumeration member.

        Raises
        ------
        UnknownSemanticsError
            If the token names no supported semantics.
        """
        if isinstance(token, cls):
            return token
        try:
            return cls(str(token).strip().lower())
        except ValueError:
            raise UnknownSemanticsError(
                f"Unknown semantics: {token!r}. Must be one of "
                f"{[member.value for member in cls]}") from None

    def __str__(self):
        return self.value


class NodeKind(str, Enum):
    """
    The two sorts of nodes in a defense graph.
    """

    DEFENSE = 'defense'  # may be accepted
    DEFEATER = 'defeater'  # attack-only

    def __str__(self):
        return self.value


# Serialized form of the empty defender slot
EMPTY_TOKEN = 'EMPTY'

# Argument names accepted by the constructors (no whitespace, parentheses,
# or comma)
ARGUMENT_NAME = re.compile(r'[^\s(),]+')

# Argument names accepted by the parsers (legal in TGF, APX, and DOT)
PORTABLE_ARGUMENT_NAME = re.compile(r'[A-Za-z0-9_]+')

# Input formats and their file suffixes
GRAPH_FORMATS = {
    'tgf': '.tgf',  # Trivial Graph Format
    'apx': '.apx',  # ASPARTIX facts
}

# Result renderings offered on the command line
OUTPUT_FORMATS = {'text', 'json', 'dot', 'tgf', 'apx'}

# Available solver engines
SOLVERS = {
    'labelling',  # backtracking over three-valued labellings
    'brute-force',  # exhaustive subset enumeration
}

# Oracle bounds
DEFAULT_MAX_ARGUMENTS = 12
DEFAULT_MAX_DEFENSES = 16
MAX_EXHAUSTIVE_ARGUMENTS = 4

# Attack probabilities used for seeded random corpora
EDGE_PROBABILITIES = (0.15, 0.3, 0.5)
