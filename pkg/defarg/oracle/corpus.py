"""
Graph corpora for exhaustive and randomized property checks.
"""

import logging
import string
from itertools import product
from typing import Iterator, Tuple

import numpy as np

from defarg.model.argument_graph import ArgumentGraph, Attack
from defarg.model.constants import (MAX_EXHAUSTIVE_ARGUMENTS,
                                    EDGE_PROBABILITIES)
from defarg.model.exceptions import (TooLargeError, UnknownArgumentError,
                                     InvalidOptionError)

logger = logging.getLogger(__name__)


def argument_names(n: int) -> Tuple[str, ...]:
    """
    Returns `n` argument names: single letters while they last, then
    ``a0, a1, ...``.
    """
    if n <= len(string.ascii_lowercase):
        return tuple(string.ascii_lowercase[:n])
    return tuple(f"a{i}" for i in range(n))


def enumerate_all_graphs(n: int,
                         max_arguments: int = MAX_EXHAUSTIVE_ARGUMENTS
                         ) -> Iterator[ArgumentGraph]:
    """
    Yields every labelled directed graph on `n` named arguments, each
    exactly once, self-attacks included.

    Parameters
    ----------
    n : int
        The number of arguments; the corpus has ``2 ** (n * n)`` graphs.
    max_arguments : int, optional
        The largest accepted `n`. Default is 4.

    Yields
    ------
    ArgumentGraph
        The graphs, in the order of their attack bitmasks.

    Raises
    ------
    TooLargeError
        If `n` exceeds `max_arguments`.
    """
    if n > max_arguments:
        raise TooLargeError(
            f"Exhaustive enumeration is limited to {max_arguments} "
            f"arguments, got {n}")
    names = argument_names(n)
    pairs = list(product(names, repeat=2))
    logger.debug("Enumerating %d graphs on %d arguments", 2 ** len(pairs), n)
    for mask in range(2 ** len(pairs)):
        yield ArgumentGraph(names, [pair for bit, pair in enumerate(pairs)
                                    if mask >> bit & 1])


def _check_probability(p: float):
    if p not in EDGE_PROBABILITIES:
        raise InvalidOptionError(
            f"Invalid edge probability: {p}. Must be one of "
            f"{list(EDGE_PROBABILITIES)}.")


def random_graphs(count: int, max_arguments: int = 7, p: float = 0.3,
                  seed: int = 1) -> Iterator[ArgumentGraph]:
    """
    Yields seeded random argument graphs.

    Each graph draws its size uniformly from ``1..max_arguments`` and keeps
    every ordered pair of arguments, self-pairs included, as an attack with
    probability `p`. The same arguments always give the same graphs.

    Parameters
    ----------
    count : int
        The number of graphs.
    max_arguments : int, optional
        The largest graph size. Default is 7.
    p : float, optional
        The attack probability, one of 0.15, 0.3 or 0.5. Default is 0.3.
    seed : int, optional
        The generator seed. Default is 1.

    Raises
    ------
    InvalidOptionError
        If `p` is not one of the supported probabilities.
    """
    _check_probability(p)
    rng = np.random.default_rng(seed)
    for _ in range(count):
        n = int(rng.integers(1, max_arguments + 1))
        names = argument_names(n)
        adjacency = rng.random((n, n)) < p
        rows, cols = np.nonzero(adjacency)
        yield ArgumentGraph(names, [(names[i], names[j])
                                    for i, j in zip(rows, cols)])


def random_dags(count: int, max_arguments: int = 6, p: float = 0.3,
                seed: int = 1) -> Iterator[ArgumentGraph]:
    """
    Yields seeded random acyclic argument graphs: an attack between the
    i-th and j-th argument is only drawn for ``i < j``.

    Parameters are as for :func:`random_graphs`.
    """
    _check_probability(p)
    rng = np.random.default_rng(seed)
    for _ in range(count):
        n = int(rng.integers(1, max_arguments + 1))
        names = argument_names(n)
        adjacency = np.triu(rng.random((n, n)) < p, k=1)
        rows, cols = np.nonzero(adjacency)
        yield ArgumentGraph(names, [(names[i], names[j])
                                    for i, j in zip(rows, cols)])


def initial_attack(graph: ArgumentGraph) -> Attack | None:
    """
    Returns the canonically first attack whose attacker is initial, or None.
    """
    for attack in sorted(graph.attacks):
        if graph.is_initial(attack[0]):
            return attack
    return None


def chain_expansion(graph: ArgumentGraph, attack: Attack,
                    length: int = 2) -> ArgumentGraph:
    """
    Replaces one attack by a chain of fresh arguments.

    The attack ``x -> y`` becomes ``x -> c1 -> ... -> cn -> y``. With an
    even `length` the acceptance status of every original argument is
    unchanged, which makes the original graph a candidate summarization of
    the expanded one.

    Parameters
    ----------
    graph : ArgumentGraph
        The graph to expand.
    attack : tuple of str
        The attack to replace; it must be an attack of `graph`.
    length : int, optional
        The number of fresh arguments, a positive even number. Default is 2.

    Returns
    -------
    ArgumentGraph
        The expanded graph.

    Raises
    ------
    UnknownArgumentError
        If `attack` is not an attack of `graph`.
    ValueError
        If `length` is not a positive even number.
    """
    if attack not in graph.attacks:
        raise UnknownArgumentError(f"Not an attack of the graph: {attack}")
    if length <= 0 or length % 2:
        raise ValueError(f"Chain length must be positive and even, got "
                         f"{length}")
    source, target = attack
    fresh = []
    index = 0
    while len(fresh) < length:
        name = f"{source}_{target}_{index}"
        index += 1
        if name not in graph:
            fresh.append(name)
    path = [source, *fresh, target]
    attacks = (graph.attacks - {attack}) | set(zip(path, path[1:]))
    return ArgumentGraph(graph.arguments | set(fresh), attacks)
