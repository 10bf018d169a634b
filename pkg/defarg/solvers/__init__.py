"""
This module provides the extension solvers.
"""

from defarg.solvers.base_solver import Solver, AttackFramework
from defarg.solvers.labelling_solver import LabellingSolver
