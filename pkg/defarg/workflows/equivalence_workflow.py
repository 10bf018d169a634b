import logging
from typing import Iterable

from defarg.analysis.equivalence import (EquivalenceKind, EquivalenceVerdict,
                                         standard_equivalent,
                                         strong_equivalent_co,
                                         defense_equivalent, root_equivalent,
                                         is_summarization)
from defarg.model.argument_graph import ArgumentGraph, ArgId
from defarg.solvers.base_solver import Solver

logger = logging.getLogger(__name__)


def equivalence_workflow(first: ArgumentGraph, second: ArgumentGraph,
                         kind: EquivalenceKind | str, solver: Solver,
                         options,
                         restrict: Iterable[ArgId] | None = None
                         ) -> EquivalenceVerdict:
    """
    Decides one equivalence relation between two graphs.

    Parameters
    ----------
    first: ArgumentGraph
        The first graph; for summarization, the candidate summary.
    second: ArgumentGraph
        The second graph; for summarization, the full graph.
    kind: EquivalenceKind or str
        The relation to decide.
    solver: Solver
        The solver to be used for every enumeration.
    options: Options
        A dictionary containing configuration options for the workflow.
    restrict: iterable of str, optional
        For root equivalence, the arguments to compare on. Default is every
        argument shared by both graphs.

    Returns
    -------
    EquivalenceVerdict
        The verdict, with a witness when negative.
    """
    kind = EquivalenceKind(kind)
    semantics = options['semantics']
    if kind is EquivalenceKind.STANDARD:
        verdict = standard_equivalent(first, second, semantics, solver)
    elif kind is EquivalenceKind.STRONG:
        verdict = strong_equivalent_co(first, second)
    elif kind is EquivalenceKind.DEFENSE:
        verdict = defense_equivalent(first, second, semantics, solver)
    elif kind is EquivalenceKind.ROOT:
        if restrict is None:
            restrict = first.arguments & second.arguments
        verdict = root_equivalent(first, second, restrict, semantics, solver)
    else:
        verdict = is_summarization(first, second, semantics, solver)
    logger.info("%s equivalence: %s", kind, verdict.result)
    return verdict
