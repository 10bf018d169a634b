"""
Extensions of defenses over defense graphs and the two maps relating them
to argument extensions.

Only defenses may be accepted; defeaters of defenses stay outside every
extension but keep attacking, so a defense extension must answer them too.
"""

import logging
from dataclasses import dataclass
from typing import FrozenSet, Iterable, Tuple

from defarg.commons.ordering import canonical_extensions
from defarg.model.argument_graph import ArgumentGraph, Extension
from defarg.model.constants import Semantics
from defarg.model.defense_graph import (DefenseGraph, DefenseNode, EMPTY,
                                        build_defense_graph,
                                        enumerate_defenses, def_of)
from defarg.model.exceptions import (DefeaterAsDefendeeError,
                                     DefeaterInInputError,
                                     UnknownArgumentError)
from defarg.semantics.argument_semantics import extensions
from defarg.solvers.base_solver import Solver
from defarg.commons.solver_factory import solver_factory

logger = logging.getLogger(__name__)

DefenseExtension = FrozenSet[DefenseNode]


def d_conflict_free(dg: DefenseGraph,
                    nodes: Iterable[DefenseNode]) -> bool:
    """
    Returns True iff no member of `nodes` attacks a member (itself
    included) in `dg`.

    Raises
    ------
    UnknownNodeError
        If a member is not a node of `dg`.
    """
    nodes = dg.check_nodes(nodes)
    return not any(dg.attackees(n) & nodes for n in nodes)


def d_defends(dg: DefenseGraph, nodes: Iterable[DefenseNode],
              node: DefenseNode) -> bool:
    """
    Returns True iff every node of `dg` attacking `node`, defense or
    defeater, is attacked by some member of `nodes`.

    Parameters
    ----------
    dg : DefenseGraph
        The defense graph.
    nodes : iterable of DefenseNode
        The defending set.
    node : DefenseNode
        The defense whose defense is checked.

    Raises
    ------
    DefeaterAsDefendeeError
        If `node` is a defeater of defenses.
    UnknownNodeError
        If `node` or a member of `nodes` is not a node of `dg`.
    """
    if not node.is_defense:
        raise DefeaterAsDefendeeError(
            f"{node} is a defeater of defenses and is never defended")
    nodes = dg.check_nodes(nodes)
    return all(dg.attackers(attacker) & nodes
               for attacker in dg.attackers(node))


def d_admissible(dg: DefenseGraph, nodes: Iterable[DefenseNode]) -> bool:
    """
    Returns True iff `nodes` is a conflict-free set of defenses defending
    each of its members.

    Raises
    ------
    DefeaterInInputError
        If a member is a defeater of defenses.
    UnknownNodeError
        If a member is not a node of `dg`.
    """
    nodes = dg.check_nodes(nodes)
    for node in nodes:
        if not node.is_defense:
            raise DefeaterInInputError(f"{node} is a defeater of defenses")
    return d_conflict_free(dg, nodes) and all(
        d_defends(dg, nodes, n) for n in nodes)


def defense_extensions(dg: DefenseGraph, semantics: Semantics | str,
                       solver: Solver | None = None
                       ) -> Tuple[DefenseExtension, ...]:
    """
    Returns the extensions of defenses of `dg` under `semantics`.

    Parameters
    ----------
    dg : DefenseGraph
        The defense graph to evaluate.
    semantics : Semantics or str
        One of complete, grounded, preferred or stable.
    solver : Solver, optional
        The engine to use. Default is the labelling solver.

    Returns
    -------
    tuple of frozenset of DefenseNode
        The extensions in canonical order; exactly one for grounded, and
        possibly none for stable.
    """
    semantics = Semantics.parse(semantics)
    solver = solver if solver is not None else solver_factory.get_solver()
    found = solver.extensions(dg, semantics)
    logger.debug("%s found %d %s defense extensions over %r", solver.name,
                 len(found), semantics, dg)
    return found


def d_of_extension(graph: ArgumentGraph,
                   extension: Iterable[str]) -> DefenseExtension:
    """
    Returns the defenses of `graph` whose defender is in `extension` (or
    is the empty slot) and whose defendee is in `extension`.

    Raises
    ------
    UnknownArgumentError
        If a member of `extension` is not an argument of `graph`.

    Examples
    --------
    >>> g = ArgumentGraph('abc', [('a', 'b'), ('b', 'c')])
    >>> sorted(str(n) for n in d_of_extension(g, {'a', 'c'}))
    ['<EMPTY,a>', '<a,c>']
    """
    extension = frozenset(extension)
    unknown = extension - graph.arguments
    if unknown:
        raise UnknownArgumentError(f"Unknown argument: {min(unknown)!r}")
    return frozenset(n for n in enumerate_defenses(graph)
                     if n.defendee in extension
                     and (n.defender is EMPTY or n.defender in extension))


@dataclass(frozen=True)
class CorrespondenceReport:
    """
    Both sides of the correspondence between argument extensions and
    extensions of defenses for one graph and semantics.

    Attributes
    ----------
    semantics : Semantics
        The semantics both sides were computed under.
    argument_extensions : tuple of frozenset
        The argument extensions of the graph.
    defense_extensions : tuple of frozenset
        The extensions of defenses of its defense graph.
    mapped_arguments : tuple of frozenset
        The image of the argument extensions under :func:`d_of_extension`.
    mapped_defenses : tuple of frozenset
        The image of the defense extensions under ``def_of``.
    forward_witness : frozenset or None
        An extension in exactly one of `mapped_arguments` and
        `defense_extensions`, if any.
    backward_witness : frozenset or None
        An extension in exactly one of `argument_extensions` and
        `mapped_defenses`, if any.
    """

    semantics: Semantics
    argument_extensions: Tuple[Extension, ...]
    defense_extensions: Tuple[DefenseExtension, ...]
    mapped_arguments: Tuple[DefenseExtension, ...]
    mapped_defenses: Tuple[Extension, ...]
    forward_witness: frozenset | None = None
    backward_witness: frozenset | None = None

    @property
    def forward_holds(self) -> bool:
        """Whether mapping argument extensions gives the defense extensions."""
        return self.forward_witness is None

    @property
    def backward_holds(self) -> bool:
        """Whether mapping defense extensions gives the argument extensions."""
        return self.backward_witness is None

    @property
    def holds(self) -> bool:
        return self.forward_holds and self.backward_holds


def _witness(left: Tuple[frozenset, ...],
             right: Tuple[frozenset, ...]) -> frozenset | None:
    difference = canonical_extensions(set(left) ^ set(right))
    return difference[0] if difference else None


def correspondence_check(graph: ArgumentGraph, semantics: Semantics | str,
                         solver: Solver | None = None) -> CorrespondenceReport:
    """
    Computes the argument extensions and the defense extensions of `graph`
    and checks that each set is the image of the other.

    Parameters
    ----------
    graph : ArgumentGraph
        The graph to check.
    semantics : Semantics or str
        The semantics of both sides.
    solver : Solver, optional
        The engine to use. Default is the labelling solver.

    Returns
    -------
    CorrespondenceReport
        Both sides, their images and a witness for each failed direction.
    """
    semantics = Semantics.parse(semantics)
    argument_side = extensions(graph, semantics, solver)
    defense_side = defense_extensions(build_defense_graph(graph), semantics,
                                      solver)
    mapped_arguments = canonical_extensions(
        d_of_extension(graph, e) for e in argument_side)
    mapped_defenses = canonical_extensions(def_of(d) for d in defense_side)
    report = CorrespondenceReport(
        semantics=semantics,
        argument_extensions=argument_side,
        defense_extensions=defense_side,
        mapped_arguments=mapped_arguments,
        mapped_defenses=mapped_defenses,
        forward_witness=_witness(mapped_arguments, defense_side),
        backward_witness=_witness(argument_side, mapped_defenses))
    if not report.holds:
        logger.warning("Correspondence fails for %r under %s", graph,
                       semantics)
    return report


def defense_coverage_holds(graph: ArgumentGraph,
                           nodes: Iterable[DefenseNode]) -> bool:
    """
    Checks that the arguments of a set of defenses attack every attacker of
    every argument the set mentions.

    For each ``<x, y>`` in `nodes` and each argument attacking ``x`` or
    ``y``, some member of ``def_of(nodes)`` must attack it. Every complete
    extension of defenses satisfies this.

    Raises
    ------
    DefeaterInInputError
        If a member is a defeater of defenses.
    """
    nodes = frozenset(nodes)
    covered = graph.attacked_by_set(def_of(nodes))
    for node in nodes:
        for argument in node.components:
            missing = graph.attackers(argument) - covered
            if missing:
                logger.debug("%s leaves %s unanswered", node, sorted(missing))
                return False
    return True
