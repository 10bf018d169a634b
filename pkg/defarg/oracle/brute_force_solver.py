"""
Brute-force reference implementations.

Everything here checks the defining clauses of each semantics literally on
every subset of candidates. Nothing is shared with the labelling search but
the data types, so the two engines can validate each other.
"""

import logging
from itertools import combinations
from typing import Tuple

import networkx as nx

from defarg.commons.ordering import canonical_extensions, member_sort_key
from defarg.model.argument_graph import ArgumentGraph, ArgId
from defarg.model.constants import (Semantics, DEFAULT_MAX_ARGUMENTS,
                                    DEFAULT_MAX_DEFENSES)
from defarg.model.defense_graph import DefenseGraph, EMPTY
from defarg.model.exceptions import TooLargeError, DefeaterInInputError
from defarg.solvers.base_solver import Solver, AttackFramework

logger = logging.getLogger(__name__)


class BruteForceSolver(Solver):
    """
    A solver that enumerates every subset of candidates and keeps those
    satisfying the definition of the semantics.

    Attributes
    ----------
    max_arguments : int
        The largest argument graph accepted.
    max_defenses : int
        The largest number of defenses of a defense graph accepted.
    """

    name = 'brute-force'

    def __init__(self, max_arguments: int = DEFAULT_MAX_ARGUMENTS,
                 max_defenses: int = DEFAULT_MAX_DEFENSES):
        self.max_arguments = max_arguments
        self.max_defenses = max_defenses

    def _subsets(self, framework: AttackFramework):
        candidates = sorted(framework.candidates, key=member_sort_key)
        if isinstance(framework, DefenseGraph):
            bound, what = self.max_defenses, 'defenses'
        else:
            bound, what = self.max_arguments, 'arguments'
        if len(candidates) > bound:
            raise TooLargeError(
                f"{len(candidates)} {what} exceed the brute-force bound of "
                f"{bound}")
        logger.debug("Checking %d subsets", 2 ** len(candidates))
        for size in range(len(candidates) + 1):
            for subset in combinations(candidates, size):
                yield frozenset(subset)

    @staticmethod
    def _attacks(framework, source, target) -> bool:
        return target in framework.attackees(source)

    def _conflict_free(self, framework, subset) -> bool:
        return not any(self._attacks(framework, x, y)
                       for x in subset for y in subset)

    def _defended(self, framework, subset, node) -> bool:
        for attacker in framework.nodes:
            if self._attacks(framework, attacker, node) and not any(
                    self._attacks(framework, z, attacker) for z in subset):
                return False
        return True

    def _admissible(self, framework, subset) -> bool:
        return self._conflict_free(framework, subset) and all(
            self._defended(framework, subset, x) for x in subset)

    def _complete(self, framework, subset) -> bool:
        return self._admissible(framework, subset) and all(
            x in subset for x in framework.candidates
            if self._defended(framework, subset, x))

    def complete_extensions(self, framework: AttackFramework) -> Tuple[
            frozenset, ...]:
        return canonical_extensions(
            s for s in self._subsets(framework)
            if self._complete(framework, s))

    def grounded_extension(self, framework: AttackFramework) -> frozenset:
        complete = self.complete_extensions(framework)
        minimal = [e for e in complete
                   if all(e <= other for other in complete)]
        return minimal[0]

    def preferred_extensions(self, framework: AttackFramework) -> Tuple[
            frozenset, ...]:
        complete = self.complete_extensions(framework)
        return tuple(e for e in complete
                     if not any(e < other for other in complete))

    def stable_extensions(self, framework: AttackFramework) -> Tuple[
            frozenset, ...]:
        found = []
        for subset in self._subsets(framework):
            if not self._conflict_free(framework, subset):
                continue
            exempt = framework.accepted_outside(subset)
            if all(any(self._attacks(framework, z, x) for z in subset)
                   for x in framework.nodes
                   if x not in subset and x not in exempt):
                found.append(subset)
        return canonical_extensions(found)


def brute_force_extensions(graph: ArgumentGraph, semantics: Semantics | str,
                           max_arguments: int = DEFAULT_MAX_ARGUMENTS
                           ) -> Tuple[frozenset, ...]:
    """
    Computes argument extensions by checking every subset of arguments.

    Parameters
    ----------
    graph : ArgumentGraph
        The graph to evaluate.
    semantics : Semantics or str
        The semantics.
    max_arguments : int, optional
        The largest accepted number of arguments. Default is 12.

    Raises
    ------
    TooLargeError
        If the graph has more than `max_arguments` arguments.
    """
    return BruteForceSolver(max_arguments=max_arguments).extensions(
        graph, semantics)


def brute_force_defense_extensions(dg: DefenseGraph,
                                   semantics: Semantics | str,
                                   max_defenses: int = DEFAULT_MAX_DEFENSES
                                   ) -> Tuple[frozenset, ...]:
    """
    Computes defense extensions by checking every subset of defenses.

    Parameters
    ----------
    dg : DefenseGraph
        The defense graph to evaluate.
    semantics : Semantics or str
        The semantics.
    max_defenses : int, optional
        The largest accepted number of defenses. Default is 16.

    Raises
    ------
    TooLargeError
        If the defense graph has more than `max_defenses` defenses.
    """
    return BruteForceSolver(max_defenses=max_defenses).extensions(
        dg, semantics)


def brute_force_root_reason(graph: ArgumentGraph, argument: ArgId,
                            extension) -> frozenset:
    """
    Computes the root reason of `argument` by explicit path search over the
    defense relation of `extension`.

    ``b`` reaches ``a`` when a chain of defenses leads from ``b`` to ``a``;
    the root reason collects ``a`` itself when it reaches itself, and every
    other argument reaching ``a`` that is initial or reaches itself, unless
    ``a`` reaches it back.

    Raises
    ------
    DefeaterInInputError
        If `extension` contains a defeater.
    """
    if graph.is_initial(argument):
        return frozenset((EMPTY,))
    relation = nx.DiGraph()
    for node in extension:
        if not node.is_defense:
            raise DefeaterInInputError(f"{node} is a defeater of defenses")
        relation.add_edge(node.defender, node.defendee)

    def reaches(source, target) -> bool:
        if source not in relation or target not in relation:
            return False
        return any(target == successor or nx.has_path(relation, successor,
                                                       target)
                   for successor in relation.successors(source))

    reason = set()
    if reaches(argument, argument):
        reason.add(argument)
    for candidate in graph.nodes:
        if candidate == argument or not reaches(candidate, argument):
            continue
        if reaches(argument, candidate):
            continue
        if reaches(candidate, candidate) or graph.is_initial(candidate):
            reason.add(candidate)
    return frozenset(reason)
