"""
Classical extension semantics of argument graphs.

Every function accepts an optional solver; without one the labelling engine
is used. Results are tuples of frozensets in canonical order.
"""

import logging
from typing import Tuple

from defarg.commons.solver_factory import solver_factory
from defarg.model.argument_graph import ArgumentGraph, Extension
from defarg.model.constants import Semantics
from defarg.solvers.base_solver import Solver

logger = logging.getLogger(__name__)


def _solver(solver: Solver | None) -> Solver:
    return solver if solver is not None else solver_factory.get_solver()


def grounded_extension(graph: ArgumentGraph,
                       solver: Solver | None = None) -> Extension:
    """
    Returns the grounded extension of `graph`, the least fixed point of the
    characteristic function.

    Examples
    --------
    >>> g = ArgumentGraph('abc', [('a', 'b'), ('b', 'c')])
    >>> sorted(grounded_extension(g))
    ['a', 'c']
    """
    return _solver(solver).grounded_extension(graph)


def complete_extensions(graph: ArgumentGraph,
                        solver: Solver | None = None) -> Tuple[Extension, ...]:
    """Returns the complete extensions of `graph`."""
    return _solver(solver).complete_extensions(graph)


def preferred_extensions(graph: ArgumentGraph,
                         solver: Solver | None = None
                         ) -> Tuple[Extension, ...]:
    """Returns the subset-maximal complete extensions of `graph`."""
    return _solver(solver).preferred_extensions(graph)


def stable_extensions(graph: ArgumentGraph,
                      solver: Solver | None = None) -> Tuple[Extension, ...]:
    """Returns the stable extensions of `graph`; there may be none."""
    return _solver(solver).stable_extensions(graph)


def extensions(graph: ArgumentGraph, semantics: Semantics | str,
               solver: Solver | None = None) -> Tuple[Extension, ...]:
    """
    Returns the extensions of `graph` under `semantics`.

    Parameters
    ----------
    graph : ArgumentGraph
        The graph to evaluate.
    semantics : Semantics or str
        One of complete, grounded, preferred or stable.
    solver : Solver, optional
        The engine to use. Default is the labelling solver.

    Returns
    -------
    tuple of frozenset
        The extensions in canonical order; exactly one for grounded.

    Raises
    ------
    UnknownSemanticsError
        If `semantics` names no supported semantics.
    """
    semantics = Semantics.parse(semantics)
    solver = _solver(solver)
    found = solver.extensions(graph, semantics)
    logger.debug("%s found %d %s extensions over %d arguments", solver.name,
                 len(found), semantics, len(graph))
    return found
