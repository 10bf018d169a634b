import logging
from dataclasses import dataclass
from typing import Tuple

from defarg.analysis.equivalence import c_kernel
from defarg.model.argument_graph import ArgumentGraph
from defarg.model.constants import Semantics
from defarg.model.defense_graph import build_defense_graph, decompose_arguments
from defarg.semantics.argument_semantics import complete_extensions
from defarg.semantics.defense_semantics import (correspondence_check,
                                                defense_extensions,
                                                defense_coverage_holds)
from defarg.solvers.base_solver import Solver

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PropertyCheck:
    """
    The outcome of one property check.

    Attributes
    ----------
    name : str
        A stable identifier of the property.
    passed : bool
        Whether the property holds.
    detail : str
        A short description, naming a counterexample on failure.
    """

    name: str
    passed: bool
    detail: str = ''


@dataclass(frozen=True)
class CheckReport:
    semantics: Semantics
    checks: Tuple[PropertyCheck, ...]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)


def check_workflow(graph: ArgumentGraph, solver: Solver, options):
    """
    Runs the structural property checks on one graph.

    The checks are: both directions of the correspondence between argument
    extensions and extensions of defenses under the configured semantics;
    the decomposition of the arguments into those involved in defeaters,
    in defenses, and attacked by the latter; the invariance of complete
    extensions and of complete extensions of defenses under the c-kernel;
    and the coverage of attackers by every extension of defenses.

    Parameters
    ----------
    graph: ArgumentGraph
        The graph to check.
    solver: Solver
        The solver to be used for every enumeration.
    options: Options
        A dictionary containing configuration options for the workflow.

    Returns
    -------
    CheckReport
        One PropertyCheck per property, in a fixed order.
    """
    semantics = options['semantics']
    report = correspondence_check(graph, semantics, solver)
    checks = [
        PropertyCheck('correspondence-forward', report.forward_holds,
                      _describe(report.forward_witness)),
        PropertyCheck('correspondence-backward', report.backward_holds,
                      _describe(report.backward_witness)),
    ]

    in_defeaters, in_defenses, attacked = decompose_arguments(graph)
    uncovered = graph.arguments - (in_defeaters | in_defenses | attacked)
    checks.append(PropertyCheck('decomposition', not uncovered,
                                _describe(uncovered or None)))

    kernel = c_kernel(graph)
    same = complete_extensions(graph, solver) == \
        complete_extensions(kernel, solver)
    checks.append(PropertyCheck('kernel-invariance', same))

    dg = build_defense_graph(graph)
    same = defense_extensions(dg, Semantics.COMPLETE, solver) == \
        defense_extensions(build_defense_graph(kernel), Semantics.COMPLETE,
                           solver)
    checks.append(PropertyCheck('defense-kernel-invariance', same))

    uncovered = [d for d in report.defense_extensions
                 if not defense_coverage_holds(graph, d)]
    checks.append(PropertyCheck('defense-coverage', not uncovered,
                                _describe(uncovered[0] if uncovered
                                          else None)))

    for check in checks:
        if not check.passed:
            logger.warning("Property %s fails on %r", check.name, graph)
    return CheckReport(semantics, tuple(checks))


def _describe(witness) -> str:
    if witness is None:
        return ''
    members = sorted(str(m) for m in witness)
    return f"counterexample {{{','.join(members)}}}"
