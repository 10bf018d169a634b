"""
Result records handed to the writers.
"""

from dataclasses import dataclass
from typing import Tuple

from defarg.model.argument_graph import ArgId
from defarg.model.constants import Semantics


@dataclass(frozen=True)
class ExtensionsResult:
    semantics: Semantics
    extensions: Tuple[frozenset, ...]


@dataclass(frozen=True)
class DefenseExtensionsResult:
    semantics: Semantics
    extensions: Tuple[frozenset, ...]


@dataclass(frozen=True)
class ReasonsResult:
    argument: ArgId
    kind: str
    semantics: Semantics
    reasons: Tuple[frozenset, ...]
