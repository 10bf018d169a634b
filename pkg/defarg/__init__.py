"""
DEFARG
"""

__version__ = "0.1.0"

from . import model

from .model.argument_graph import ArgumentGraph, graph_union
from .model.constants import Semantics
from .model.defense_graph import DefenseGraph, DefenseNode, EMPTY, \
    build_defense_graph
from .model.options import Options
