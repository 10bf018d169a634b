"""
This module provides the data model: argument graphs, defense graphs,
configuration options, constants and domain errors.
"""

from . import constants
from . import exceptions
from . import options
from . import argument_graph
from . import defense_graph

from .argument_graph import ArgumentGraph, graph_union
from .constants import Semantics, NodeKind
from .defense_graph import (DefenseGraph, DefenseNode, EMPTY,
                            build_defense_graph)
from .options import Options
