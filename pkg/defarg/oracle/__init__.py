"""
This module provides brute-force reference implementations and the graph
corpora used to validate the main engine.
"""

from defarg.oracle.brute_force_solver import (BruteForceSolver,
                                              brute_force_extensions,
                                              brute_force_defense_extensions,
                                              brute_force_root_reason)
from defarg.oracle.corpus import (enumerate_all_graphs, random_graphs,
                                  random_dags, chain_expansion,
                                  initial_attack)
