"""
Direct and root reasons for accepting arguments.

A reason set names the arguments an argument is accepted because of, inside
one extension of defenses. The reasons of an argument under a semantics form
a bag: one reason set per extension of defenses, in canonical extension
order, duplicates kept.
"""

import logging
from enum import Enum
from typing import Dict, FrozenSet, Iterable, Tuple

import networkx as nx

from defarg.model.argument_graph import ArgumentGraph, ArgId
from defarg.model.constants import Semantics
from defarg.model.defense_graph import (DefenseNode, DefenderSlot, EMPTY,
                                        build_defense_graph, defendees)
from defarg.model.exceptions import UnknownArgumentError
from defarg.semantics.defense_semantics import defense_extensions
from defarg.solvers.base_solver import Solver

logger = logging.getLogger(__name__)

ReasonSet = FrozenSet[DefenderSlot]
ReasonBag = Tuple[ReasonSet, ...]

INITIAL_REASON: ReasonSet = frozenset((EMPTY,))


class ReasonKind(str, Enum):
    DIRECT = 'direct'
    ROOT = 'root'

    def __str__(self):
        return self.value


def transitive_closure(nodes: Iterable[DefenseNode]
                       ) -> FrozenSet[Tuple[DefenderSlot, ArgId]]:
    """
    Returns the transitive closure of the defense relation of `nodes` as
    ``(defender, defendee)`` pairs.

    The empty slot only ever appears as a source: ``<EMPTY, y>`` and
    ``<y, z>`` give ``<EMPTY, z>``. An argument on a cycle of defenses gets
    the pair ``(a, a)``.

    Raises
    ------
    DefeaterInInputError
        If a member is a defeater of defenses.

    Examples
    --------
    >>> from defarg.model.defense_graph import defense
    >>> closure = transitive_closure({defense(EMPTY, 'e'), defense('e', 'g')})
    >>> (EMPTY, 'g') in closure
    True
    """
    nodes = frozenset(nodes)
    defendees(nodes)
    relation = nx.DiGraph()
    relation.add_edges_from(n.pair for n in nodes)
    closure = nx.transitive_closure(relation, reflexive=False)
    return frozenset(closure.edges)


def _check_argument(graph: ArgumentGraph, argument: ArgId):
    if argument not in graph:
        raise UnknownArgumentError(f"Unknown argument: {argument!r}")


def direct_reason(graph: ArgumentGraph, argument: ArgId,
                  nodes: Iterable[DefenseNode]) -> ReasonSet:
    """
    Returns the defenders of `argument` in `nodes`, or ``{EMPTY}`` when
    `argument` is initial.

    Raises
    ------
    UnknownArgumentError
        If `argument` is not an argument of `graph`.
    DefeaterInInputError
        If a member of `nodes` is a defeater of defenses.
    """
    _check_argument(graph, argument)
    nodes = frozenset(nodes)
    defendees(nodes)
    if graph.is_initial(argument):
        return INITIAL_REASON
    return frozenset(n.defender for n in nodes if n.defendee == argument)


def root_reason(graph: ArgumentGraph, argument: ArgId,
                nodes: Iterable[DefenseNode]) -> ReasonSet:
    """
    Returns the root reasons of `argument` in `nodes`.

    With ``D+`` the transitive closure of `nodes`, the root reasons of a
    non-initial ``a`` are ``a`` itself when ``(a, a)`` is in ``D+``, plus
    every other argument ``b`` with ``(b, a)`` in ``D+`` that is initial or
    has ``(b, b)`` in ``D+``. Arguments on the same defense cycle as ``a``
    (those with ``(a, b)`` in ``D+`` as well) are represented by ``a``.
    An initial argument has the root reasons ``{EMPTY}``.

    Raises
    ------
    UnknownArgumentError
        If `argument` is not an argument of `graph`.
    DefeaterInInputError
        If a member of `nodes` is a defeater of defenses.
    """
    _check_argument(graph, argument)
    closure = transitive_closure(nodes)
    if graph.is_initial(argument):
        return INITIAL_REASON
    reason = {argument} if (argument, argument) in closure else set()
    for source, target in closure:
        if target != argument or source is EMPTY or source == argument:
            continue
        if (argument, source) in closure:
            continue
        if (source, source) in closure or graph.is_initial(source):
            reason.add(source)
    return frozenset(reason)


_REASONS = {
    ReasonKind.DIRECT: direct_reason,
    ReasonKind.ROOT: root_reason,
}


def reason_table(graph: ArgumentGraph, kind: ReasonKind | str,
                 semantics: Semantics | str,
                 solver: Solver | None = None) -> Dict[ArgId, ReasonBag]:
    """
    Returns the reason bag of every argument of `graph`.

    Parameters
    ----------
    graph : ArgumentGraph
        The graph to explain.
    kind : ReasonKind or str
        'direct' or 'root'.
    semantics : Semantics or str
        The semantics of the extensions of defenses.
    solver : Solver, optional
        The engine to use. Default is the labelling solver.

    Returns
    -------
    dict
        Maps each argument, in canonical order, to one reason set per
        extension of defenses.
    """
    reason = _REASONS[ReasonKind(kind)]
    found = defense_extensions(build_defense_graph(graph), semantics, solver)
    table = {argument: tuple(reason(graph, argument, d) for d in found)
             for argument in graph.nodes}
    logger.debug("Computed %s reasons of %d arguments over %d extensions",
                 kind, len(table), len(found))
    return table


def reasons(graph: ArgumentGraph, argument: ArgId, kind: ReasonKind | str,
            semantics: Semantics | str,
            solver: Solver | None = None) -> ReasonBag:
    """
    Returns the reason bag of one argument.

    Raises
    ------
    UnknownArgumentError
        If `argument` is not an argument of `graph`.
    """
    _check_argument(graph, argument)
    reason = _REASONS[ReasonKind(kind)]
    found = defense_extensions(build_defense_graph(graph), semantics, solver)
    return tuple(reason(graph, argument, d) for d in found)


def direct_reasons(graph: ArgumentGraph, argument: ArgId,
                   semantics: Semantics | str = Semantics.COMPLETE,
                   solver: Solver | None = None) -> ReasonBag:
    """Returns the direct reasons of `argument`, one set per extension."""
    return reasons(graph, argument, ReasonKind.DIRECT, semantics, solver)


def root_reasons(graph: ArgumentGraph, argument: ArgId,
                 semantics: Semantics | str = Semantics.COMPLETE,
                 solver: Solver | None = None) -> ReasonBag:
    """Returns the root reasons of `argument`, one set per extension."""
    return reasons(graph, argument, ReasonKind.ROOT, semantics, solver)
