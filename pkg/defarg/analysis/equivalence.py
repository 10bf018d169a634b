"""
Equivalence of argument graphs and the summarization relation.

Graphs are compared by argument names; no isomorphism matching takes
place. Every negative verdict carries a witness explaining it.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Any, Iterable, Tuple

from defarg.analysis.reasons import ReasonKind, reason_table
from defarg.commons.ordering import canonical_extensions
from defarg.model.argument_graph import ArgumentGraph, ArgId, Extension
from defarg.model.constants import Semantics
from defarg.model.defense_graph import build_defense_graph
from defarg.model.exceptions import (EmptyRestrictionError,
                                     ArgumentOutsideIntersectionError)
from defarg.semantics.argument_semantics import extensions
from defarg.semantics.defense_semantics import defense_extensions
from defarg.solvers.base_solver import Solver

logger = logging.getLogger(__name__)


class EquivalenceKind(str, Enum):
    STANDARD = 'standard'
    STRONG = 'strong'
    DEFENSE = 'defense'
    ROOT = 'root'
    SUMMARIZATION = 'summarization'

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class EquivalenceVerdict:
    """
    The outcome of an equivalence test.

    Attributes
    ----------
    kind : EquivalenceKind
        Which relation was tested.
    semantics : Semantics or None
        The semantics, or None for strong equivalence.
    result : bool
        Whether the relation holds.
    witness : Any
        When `result` is False, what tells the graphs apart: an extension
        present on one side only, the attacks in which the kernels differ,
        or an argument with its two reason bags.

    Raises
    ------
    ValueError
        If a negative verdict is created without a witness.
    """

    kind: EquivalenceKind
    semantics: Semantics | None
    result: bool
    witness: Any = None

    def __post_init__(self):
        if not self.result and self.witness is None:
            raise ValueError("A negative verdict needs a witness")

    def __bool__(self):
        return self.result


@dataclass(frozen=True)
class KernelDifference:
    """Attacks present in only one of two kernels, plus argument mismatches."""

    only_first: frozenset
    only_second: frozenset
    arguments_only_first: frozenset = frozenset()
    arguments_only_second: frozenset = frozenset()


@dataclass(frozen=True)
class ReasonDifference:
    """An argument whose reason bags differ between two graphs."""

    argument: ArgId
    first: tuple
    second: tuple


@dataclass(frozen=True)
class ExtensionDifference:
    """An extension found for exactly one of two graphs."""

    extension: frozenset
    in_first: bool


@dataclass(frozen=True)
class ArgumentSetMismatch:
    """Why one argument set is not a proper subset of another."""

    extra: frozenset
    missing: frozenset


def c_kernel(graph: ArgumentGraph) -> ArgumentGraph:
    """
    Returns the c-kernel of `graph`: the same arguments, without the
    attacks between two distinct self-attacking arguments.

    Examples
    --------
    >>> g = ArgumentGraph('ab', [('a', 'a'), ('b', 'b'), ('a', 'b')])
    >>> sorted(c_kernel(g).attacks)
    [('a', 'a'), ('b', 'b')]
    """
    self_attackers = graph.self_attackers()
    return ArgumentGraph(graph.arguments, [
        (src, dst) for src, dst in graph.attacks
        if src == dst or src not in self_attackers
        or dst not in self_attackers])


def _compare_extensions(kind: EquivalenceKind, semantics: Semantics,
                        first: Tuple[frozenset, ...],
                        second: Tuple[frozenset, ...]) -> EquivalenceVerdict:
    difference = canonical_extensions(set(first) ^ set(second))
    if not difference:
        return EquivalenceVerdict(kind, semantics, True)
    witness = ExtensionDifference(difference[0], difference[0] in first)
    return EquivalenceVerdict(kind, semantics, False, witness)


def standard_equivalent(first: ArgumentGraph, second: ArgumentGraph,
                        semantics: Semantics | str = Semantics.COMPLETE,
                        solver: Solver | None = None) -> EquivalenceVerdict:
    """
    Decides whether both graphs have the same extensions under
    `semantics`.
    """
    semantics = Semantics.parse(semantics)
    return _compare_extensions(EquivalenceKind.STANDARD, semantics,
                               extensions(first, semantics, solver),
                               extensions(second, semantics, solver))


def strong_equivalent_co(first: ArgumentGraph,
                         second: ArgumentGraph) -> EquivalenceVerdict:
    """
    Decides strong equivalence under complete semantics by comparing the
    c-kernels of both graphs.

    The witness of a negative verdict is a :class:`KernelDifference`.
    """
    kernel1, kernel2 = c_kernel(first), c_kernel(second)
    if kernel1 == kernel2:
        return EquivalenceVerdict(EquivalenceKind.STRONG, None, True)
    witness = KernelDifference(
        only_first=kernel1.attacks - kernel2.attacks,
        only_second=kernel2.attacks - kernel1.attacks,
        arguments_only_first=kernel1.arguments - kernel2.arguments,
        arguments_only_second=kernel2.arguments - kernel1.arguments)
    return EquivalenceVerdict(EquivalenceKind.STRONG, None, False, witness)


def defense_equivalent(first: ArgumentGraph, second: ArgumentGraph,
                       semantics: Semantics | str = Semantics.COMPLETE,
                       solver: Solver | None = None) -> EquivalenceVerdict:
    """
    Decides whether the defense graphs of both graphs have the same
    extensions of defenses under `semantics`.
    """
    semantics = Semantics.parse(semantics)
    return _compare_extensions(
        EquivalenceKind.DEFENSE, semantics,
        defense_extensions(build_defense_graph(first), semantics, solver),
        defense_extensions(build_defense_graph(second), semantics, solver))


def root_equivalent(first: ArgumentGraph, second: ArgumentGraph,
                    arguments: Iterable[ArgId],
                    semantics: Semantics | str = Semantics.COMPLETE,
                    solver: Solver | None = None) -> EquivalenceVerdict:
    """
    Decides whether every argument of `arguments` has the same root reasons
    in both graphs; bags are compared as multisets.

    Parameters
    ----------
    first, second : ArgumentGraph
        The graphs to compare.
    arguments : iterable of str
        The arguments to compare on, shared by both graphs.
    semantics : Semantics or str, optional
        The semantics of the extensions of defenses. Default is complete.
    solver : Solver, optional
        The engine to use. Default is the labelling solver.

    Raises
    ------
    EmptyRestrictionError
        If `arguments` is empty.
    ArgumentOutsideIntersectionError
        If an argument is missing from either graph.
    """
    semantics = Semantics.parse(semantics)
    arguments = frozenset(arguments)
    if not arguments:
        raise EmptyRestrictionError("Root equivalence needs at least one "
                                    "argument")
    outside = arguments - (first.arguments & second.arguments)
    if outside:
        raise ArgumentOutsideIntersectionError(
            f"Argument {min(outside)!r} is not shared by both graphs")

    table1 = reason_table(first, ReasonKind.ROOT, semantics, solver)
    table2 = reason_table(second, ReasonKind.ROOT, semantics, solver)
    for argument in sorted(arguments):
        bag1, bag2 = table1[argument], table2[argument]
        if Counter(bag1) != Counter(bag2):
            logger.debug("Root reasons of %s differ: %s vs %s", argument,
                         bag1, bag2)
            return EquivalenceVerdict(
                EquivalenceKind.ROOT, semantics, False,
                ReasonDifference(argument, bag1, bag2))
    return EquivalenceVerdict(EquivalenceKind.ROOT, semantics, True)


def is_summarization(small: ArgumentGraph, big: ArgumentGraph,
                     semantics: Semantics | str = Semantics.COMPLETE,
                     solver: Solver | None = None) -> EquivalenceVerdict:
    """
    Decides whether `small` summarizes `big`: its arguments are a proper
    subset of those of `big`, and it is root equivalent to `big` on them.

    Raises
    ------
    EmptyRestrictionError
        If `small` has no arguments while `big` has some.
    """
    semantics = Semantics.parse(semantics)
    if not small.arguments < big.arguments:
        return EquivalenceVerdict(
            EquivalenceKind.SUMMARIZATION, semantics, False,
            ArgumentSetMismatch(extra=small.arguments - big.arguments,
                                missing=big.arguments - small.arguments))
    verdict = root_equivalent(small, big, small.arguments, semantics, solver)
    return EquivalenceVerdict(EquivalenceKind.SUMMARIZATION, semantics,
                              verdict.result, verdict.witness)


def project_extensions(graph: ArgumentGraph, arguments: Iterable[ArgId],
                       semantics: Semantics | str = Semantics.COMPLETE,
                       solver: Solver | None = None
                       ) -> Tuple[Extension, ...]:
    """
    Returns the extensions of `graph` intersected with `arguments`,
    deduplicated and in canonical order.
    """
    arguments = frozenset(arguments)
    return canonical_extensions(e & arguments for e in
                                extensions(graph, semantics, solver))


def summarization_projection_holds(small: ArgumentGraph, big: ArgumentGraph,
                                   semantics: Semantics | str =
                                   Semantics.COMPLETE,
                                   solver: Solver | None = None) -> bool:
    """
    Checks that the extensions of `small` are the extensions of `big`
    projected onto the arguments of `small`; summarizations satisfy this
    under complete semantics.
    """
    return extensions(small, semantics, solver) == project_extensions(
        big, small.arguments, semantics, solver)
