"""
Defenses, defeaters of defenses, and the defense graph of an argument graph.

A defense ``<x, b>`` records that accepting ``x`` is a (partial) reason for
accepting ``b`` because ``x`` attacks an attacker of ``b``; ``<EMPTY, b>``
records that an initial ``b`` needs no reason. Defense-shaped pairs that are
disqualified become defeaters ``(x, b)``: they can attack defenses but are
never accepted.
"""

import enum
import logging
from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, Literal, Tuple, Union

import networkx as nx

from defarg.model.argument_graph import ArgumentGraph, ArgId
from defarg.model.constants import NodeKind, EMPTY_TOKEN
from defarg.model.exceptions import DefeaterInInputError, UnknownNodeError

logger = logging.getLogger(__name__)


class _EmptySlot(enum.Enum):
    EMPTY = EMPTY_TOKEN

    def __repr__(self):
        return 'EMPTY'

    def __str__(self):
        return EMPTY_TOKEN


EMPTY = _EmptySlot.EMPTY
"""The empty defender slot. It is not an argument and attacks nothing."""

DefenderSlot = Union[ArgId, Literal[_EmptySlot.EMPTY]]


def slot_sort_key(slot: DefenderSlot) -> Tuple[int, str]:
    """Sort key placing the empty slot before every argument name."""
    return (0, '') if slot is EMPTY else (1, slot)


@dataclass(frozen=True)
class DefenseNode:
    """
    A node ``[defender, defendee]`` of a defense graph.

    Identity is the ``(defender, defendee)`` pair; `kind` is derived from the
    source graph and takes no part in equality or hashing.

    Attributes
    ----------
    defender : str or EMPTY
        The defending argument, or the empty slot.
    defendee : str
        The defended argument.
    kind : NodeKind
        Whether the pair is a defense or a defeater of defenses.
    """

    defender: DefenderSlot
    defendee: ArgId
    kind: NodeKind = field(default=NodeKind.DEFENSE, compare=False)

    @property
    def is_defense(self) -> bool:
        return self.kind is NodeKind.DEFENSE

    @property
    def pair(self) -> Tuple[DefenderSlot, ArgId]:
        return self.defender, self.defendee

    @property
    def components(self) -> FrozenSet[ArgId]:
        """The arguments of the pair; the empty slot is left out."""
        if self.defender is EMPTY:
            return frozenset((self.defendee,))
        return frozenset((self.defender, self.defendee))

    @property
    def sort_key(self) -> Tuple[int, str, str]:
        return (*slot_sort_key(self.defender), self.defendee)

    def __lt__(self, other):
        if not isinstance(other, DefenseNode):
            return NotImplemented
        return self.sort_key < other.sort_key

    def __str__(self):
        if self.is_defense:
            return f"<{self.defender},{self.defendee}>"
        return f"({self.defender},{self.defendee})"


def defense(defender: DefenderSlot, defendee: ArgId) -> DefenseNode:
    """Shorthand for a Defense node."""
    return DefenseNode(defender, defendee, NodeKind.DEFENSE)


def defeater(defender: DefenderSlot, defendee: ArgId) -> DefenseNode:
    """Shorthand for a Defeater node."""
    return DefenseNode(defender, defendee, NodeKind.DEFEATER)


def enumerate_defenses(graph: ArgumentGraph) -> FrozenSet[DefenseNode]:
    """
    Returns every defense of `graph`.

    ``<a, b>`` is a defense iff ``{a, b}`` is conflict-free and some ``c``
    satisfies ``a -> c -> b``; ``<EMPTY, b>`` is a defense iff ``b`` is
    initial. Self-defenses ``<a, a>`` are included.

    Parameters
    ----------
    graph : ArgumentGraph
        The source argument graph.

    Returns
    -------
    frozenset of DefenseNode
        The defenses, all of kind ``DEFENSE``.
    """
    found = set()
    for alpha in graph.nodes:
        for gamma in graph.attackees(alpha):
            for beta in graph.attackees(gamma):
                if graph.is_conflict_free((alpha, beta)):
                    found.add(defense(alpha, beta))
        if graph.is_initial(alpha):
            found.add(defense(EMPTY, alpha))
    return frozenset(found)


def enumerate_defeaters(graph: ArgumentGraph) -> FrozenSet[DefenseNode]:
    """
    Returns every defeater of defenses of `graph`.

    ``(a, b)`` is a defeater iff ``{a, b}`` is not conflict-free and some
    ``c`` other than ``a`` and ``b`` satisfies ``a -> c -> b``;
    ``(EMPTY, b)`` is a defeater iff ``b`` is self-attacked or attacked by a
    self-attacked argument (one step only).

    Parameters
    ----------
    graph : ArgumentGraph
        The source argument graph.

    Returns
    -------
    frozenset of DefenseNode
        The defeaters, all of kind ``DEFEATER``.
    """
    found = set()
    self_attackers = graph.self_attackers()
    for alpha in graph.nodes:
        for gamma in graph.attackees(alpha):
            if gamma == alpha:
                continue
            for beta in graph.attackees(gamma):
                if beta != gamma and \
                        not graph.is_conflict_free((alpha, beta)):
                    found.add(defeater(alpha, beta))
        if alpha in self_attackers or \
                graph.attackers(alpha) & self_attackers:
            found.add(defeater(EMPTY, alpha))
    return frozenset(found)


def _components_attack(graph: ArgumentGraph, first: DefenseNode,
                       second: DefenseNode) -> bool:
    targets = second.components
    return any(graph.attackees(argument) & targets
               for argument in first.components)


def node_attacks(graph: ArgumentGraph, first: DefenseNode,
                 second: DefenseNode) -> bool:
    """
    Decides whether `first` attacks `second` in the defense graph of `graph`.

    With ``first = [x, a]`` and ``second = [y, b]`` the attack holds iff
    ``x -> y``, ``x -> b``, ``a -> y`` or ``a -> b`` in `graph`; the empty
    slot takes part in no attack.

    Raises
    ------
    UnknownNodeError
        If either node is neither a defense nor a defeater of `graph`.
    """
    nodes = {n.pair: n for n in
             enumerate_defenses(graph) | enumerate_defeaters(graph)}
    for node in (first, second):
        if node.pair not in nodes or nodes[node.pair].kind is not node.kind:
            raise UnknownNodeError(f"{node} is not a node of the defense "
                                   f"graph")
    return _components_attack(graph, first, second)


class DefenseGraph:
    """
    The defense graph ``DG(F) = (dgn(F), ->d)`` of an argument graph.

    Nodes are the defenses and the defeaters of defenses of the source
    graph; edges are the induced attacks, self-loops included. Only defense
    nodes are candidates for membership in extensions.

    Parameters
    ----------
    source : ArgumentGraph
        The argument graph the defense graph was built from.
    nodes : Iterable[DefenseNode]
        Defenses and defeaters.
    edges : Iterable[tuple[DefenseNode, DefenseNode]]
        Attacks between nodes.
    """

    def __init__(self, source: ArgumentGraph, nodes: Iterable[DefenseNode],
                 edges: Iterable[Tuple[DefenseNode, DefenseNode]]):
        self._source = source
        self._nodes = tuple(sorted(nodes))
        self._edges = frozenset(edges)
        self._defenses = frozenset(n for n in self._nodes if n.is_defense)

        digraph = nx.DiGraph()
        digraph.add_nodes_from((n, {'kind': n.kind}) for n in self._nodes)
        digraph.add_edges_from(sorted(self._edges))
        self._digraph = nx.freeze(digraph)

        self._attackers = {n: frozenset(digraph.predecessors(n))
                           for n in self._nodes}
        self._attackees = {n: frozenset(digraph.successors(n))
                           for n in self._nodes}

    @property
    def source(self) -> ArgumentGraph:
        return self._source

    @property
    def nodes(self) -> Tuple[DefenseNode, ...]:
        """All nodes in canonical order."""
        return self._nodes

    @property
    def edges(self) -> FrozenSet[Tuple[DefenseNode, DefenseNode]]:
        return self._edges

    @property
    def defenses(self) -> FrozenSet[DefenseNode]:
        """The defense nodes, ``nmd(F)``."""
        return self._defenses

    @property
    def defeaters(self) -> FrozenSet[DefenseNode]:
        """The defeater nodes, ``und(F)``."""
        return frozenset(self._nodes) - self._defenses

    @property
    def candidates(self) -> FrozenSet[DefenseNode]:
        """Nodes eligible for membership in an extension: the defenses."""
        return self._defenses

    @property
    def digraph(self) -> nx.DiGraph:
        """A frozen networkx view of the node attack relation."""
        return self._digraph

    def check_nodes(self, nodes: Iterable[DefenseNode]
                    ) -> FrozenSet[DefenseNode]:
        """
        Returns `nodes` as a frozenset after checking membership.

        Raises
        ------
        UnknownNodeError
            If a node is not part of this defense graph.
        """
        nodes = frozenset(nodes)
        for node in nodes:
            if node not in self._attackers or \
                    self._digraph.nodes[node]['kind'] is not node.kind:
                raise UnknownNodeError(
                    f"{node} is not a node of the defense graph")
        return nodes

    def attackers(self, node: DefenseNode) -> FrozenSet[DefenseNode]:
        """Returns the nodes attacking `node`."""
        self.check_nodes((node,))
        return self._attackers[node]

    def attackees(self, node: DefenseNode) -> FrozenSet[DefenseNode]:
        """Returns the nodes attacked by `node`."""
        self.check_nodes((node,))
        return self._attackees[node]

    def attacks(self, first: DefenseNode, second: DefenseNode) -> bool:
        """Returns True iff there is an edge from `first` to `second`."""
        self.check_nodes((first, second))
        return (first, second) in self._edges

    def accepted_outside(self, extension: Iterable[DefenseNode]
                         ) -> FrozenSet[DefenseNode]:
        """
        Returns the defeaters whose arguments all belong to
        ``def(extension)``.

        A stable extension need not attack these nodes, for instance
        ``(EMPTY, b)`` with ``b`` accepted although one of its attackers
        attacks itself. Defenses never qualify: an outside defense must
        still be attacked.

        Raises
        ------
        DefeaterInInputError
            If `extension` contains a defeater.
        """
        accepted = def_of(extension)
        return frozenset(n for n in self._nodes
                         if not n.is_defense and n.components <= accepted)

    def __contains__(self, node) -> bool:
        return node in self._attackers

    def __len__(self) -> int:
        return len(self._nodes)

    def __repr__(self) -> str:
        return (f"DefenseGraph({len(self._defenses)} defenses, "
                f"{len(self._nodes) - len(self._defenses)} defeaters, "
                f"{len(self._edges)} attacks)")


def build_defense_graph(graph: ArgumentGraph) -> DefenseGraph:
    """
    Builds the defense graph of `graph`.

    Parameters
    ----------
    graph : ArgumentGraph
        The source argument graph.

    Returns
    -------
    DefenseGraph
        Nodes are the defenses and defeaters of `graph`; every ordered pair
        of nodes, including a node with itself, is tested for an attack.
    """
    nodes = sorted(enumerate_defenses(graph) | enumerate_defeaters(graph))
    edges = [(first, second) for first in nodes for second in nodes
             if _components_attack(graph, first, second)]
    dg = DefenseGraph(graph, nodes, edges)
    logger.debug("Built %r from %d arguments", dg, len(graph))
    return dg


def _require_defenses(nodes: Iterable[DefenseNode]) -> FrozenSet[DefenseNode]:
    nodes = frozenset(nodes)
    for node in nodes:
        if not node.is_defense:
            raise DefeaterInInputError(f"{node} is a defeater of defenses")
    return nodes


def defendees(nodes: Iterable[DefenseNode]) -> FrozenSet[ArgId]:
    """
    Returns the defendees of a set of defenses.

    Raises
    ------
    DefeaterInInputError
        If a node is a defeater.
    """
    return frozenset(n.defendee for n in _require_defenses(nodes))


def defenders(nodes: Iterable[DefenseNode]) -> FrozenSet[ArgId]:
    """
    Returns the defenders of a set of defenses; the empty slot is left out.

    Raises
    ------
    DefeaterInInputError
        If a node is a defeater.
    """
    return frozenset(n.defender for n in _require_defenses(nodes)
                     if n.defender is not EMPTY)


def def_of(nodes: Iterable[DefenseNode]) -> FrozenSet[ArgId]:
    """
    Returns the defenders and defendees of a set of defenses.

    Raises
    ------
    DefeaterInInputError
        If a node is a defeater.
    """
    nodes = _require_defenses(nodes)
    return defendees(nodes) | defenders(nodes)


def decompose_arguments(
        graph: ArgumentGraph
) -> Tuple[FrozenSet[ArgId], FrozenSet[ArgId], FrozenSet[ArgId]]:
    """
    Splits the arguments of `graph` into the three parts whose union is the
    whole argument set.

    Returns
    -------
    tuple of frozenset
        The arguments involved in defeaters, the arguments involved in
        defenses, and the arguments attacked by the latter.
    """
    in_defeaters = frozenset().union(
        *(n.components for n in enumerate_defeaters(graph)))
    in_defenses = def_of(enumerate_defenses(graph))
    attacked = graph.attacked_by_set(in_defenses)
    return in_defeaters, in_defenses, attacked
