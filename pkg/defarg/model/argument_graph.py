import logging
from typing import Iterable, FrozenSet, Tuple

import networkx as nx

from defarg.model.constants import ARGUMENT_NAME, EMPTY_TOKEN
from defarg.model.exceptions import (InvalidArgumentNameError,
                                     UnknownArgumentError)

logger = logging.getLogger(__name__)

ArgId = str
Attack = Tuple[ArgId, ArgId]
Extension = FrozenSet[ArgId]


class ArgumentGraph:
    """
    An immutable argument graph: a finite set of named arguments and a
    binary attack relation between them.

    Arguments are identified by name, globally across graphs, so two graphs
    mentioning the same name mention the same argument. Self-attacks are
    permitted.

    Parameters
    ----------
    arguments : Iterable[str], optional
        The argument names.
    attacks : Iterable[tuple[str, str]], optional
        The attacks as ``(attacker, attacked)`` pairs. Both endpoints must
        be among `arguments`.

    Raises
    ------
    InvalidArgumentNameError
        If a name is empty, contains whitespace, a parenthesis or a
        comma, or is the reserved ``EMPTY``.
    UnknownArgumentError
        If an attack endpoint is not an argument of the graph.

    Examples
    --------
    >>> g = ArgumentGraph('abc', [('a', 'b'), ('b', 'c')])
    >>> sorted(g.attackers('b'))
    ['a']
    """

    def __init__(self, arguments: Iterable[ArgId] = (),
                 attacks: Iterable[Attack] = ()):
        arguments = frozenset(arguments)
        attacks = frozenset((src, dst) for src, dst in attacks)
        for name in arguments:
            if not isinstance(name, str) or \
                    not ARGUMENT_NAME.fullmatch(name):
                raise InvalidArgumentNameError(
                    f"Invalid argument name: {name!r}")
            if name == EMPTY_TOKEN:
                raise InvalidArgumentNameError(
                    f"{EMPTY_TOKEN} is reserved for the empty defender slot")
        for src, dst in attacks:
            for endpoint in (src, dst):
                if endpoint not in arguments:
                    raise UnknownArgumentError(
                        f"Attack ({src}, {dst}) mentions unknown argument "
                        f"{endpoint!r}")

        self._arguments: FrozenSet[ArgId] = arguments
        self._attacks: FrozenSet[Attack] = attacks
        self._sorted = tuple(sorted(arguments))

        digraph = nx.DiGraph()
        digraph.add_nodes_from(self._sorted)
        digraph.add_edges_from(sorted(attacks))
        self._digraph = nx.freeze(digraph)

        self._attackers = {a: frozenset(digraph.predecessors(a))
                           for a in self._sorted}
        self._attackees = {a: frozenset(digraph.successors(a))
                           for a in self._sorted}

    @property
    def arguments(self) -> FrozenSet[ArgId]:
        """The set of argument names."""
        return self._arguments

    @property
    def attacks(self) -> FrozenSet[Attack]:
        """The set of attacks as ``(attacker, attacked)`` pairs."""
        return self._attacks

    @property
    def nodes(self) -> Tuple[ArgId, ...]:
        """The arguments in canonical (lexicographic) order."""
        return self._sorted

    @property
    def candidates(self) -> FrozenSet[ArgId]:
        """The arguments eligible for membership in an extension: all."""
        return self._arguments

    @property
    def digraph(self) -> nx.DiGraph:
        """A frozen networkx view of the attack relation."""
        return self._digraph

    def _check(self, argument: ArgId):
        if argument not in self._arguments:
            raise UnknownArgumentError(f"Unknown argument: {argument!r}")

    def _check_all(self, arguments: Iterable[ArgId]) -> FrozenSet[ArgId]:
        arguments = frozenset(arguments)
        unknown = arguments - self._arguments
        if unknown:
            raise UnknownArgumentError(
                f"Unknown argument: {min(unknown)!r}")
        return arguments

    def attackers(self, argument: ArgId) -> FrozenSet[ArgId]:
        """
        Returns the arguments attacking `argument`.

        Raises
        ------
        UnknownArgumentError
            If `argument` is not in the graph.
        """
        self._check(argument)
        return self._attackers[argument]

    def attackees(self, argument: ArgId) -> FrozenSet[ArgId]:
        """
        Returns the arguments attacked by `argument`.

        Raises
        ------
        UnknownArgumentError
            If `argument` is not in the graph.
        """
        self._check(argument)
        return self._attackees[argument]

    def is_initial(self, argument: ArgId) -> bool:
        """Returns True iff `argument` has no attackers."""
        return not self.attackers(argument)

    def is_self_attacking(self, argument: ArgId) -> bool:
        """Returns True iff `argument` attacks itself."""
        self._check(argument)
        return (argument, argument) in self._attacks

    def self_attackers(self) -> FrozenSet[ArgId]:
        """Returns every argument that attacks itself."""
        return frozenset(nx.nodes_with_selfloops(self._digraph))

    def attacked_by_set(self, arguments: Iterable[ArgId]) -> FrozenSet[ArgId]:
        """Returns the arguments attacked by some member of `arguments`."""
        attacked = set()
        for argument in self._check_all(arguments):
            attacked |= self._attackees[argument]
        return frozenset(attacked)

    def is_conflict_free(self, arguments: Iterable[ArgId]) -> bool:
        """
        Returns True iff no member of `arguments` attacks a member
        (itself included).

        Raises
        ------
        UnknownArgumentError
            If a member is not in the graph.
        """
        arguments = self._check_all(arguments)
        return not any(self._attackees[a] & arguments for a in arguments)

    def set_defends(self, arguments: Iterable[ArgId],
                    argument: ArgId) -> bool:
        """
        Returns True iff every attacker of `argument` is attacked by some
        member of `arguments`.

        Raises
        ------
        UnknownArgumentError
            If `argument` or a member of `arguments` is not in the graph.
        """
        arguments = self._check_all(arguments)
        self._check(argument)
        return all(self._attackers[attacker] & arguments
                   for attacker in self._attackers[argument])

    def accepted_outside(self, extension: Iterable[ArgId]
                         ) -> FrozenSet[ArgId]:
        """An argument outside an extension is never accepted by it."""
        return frozenset()

    def is_admissible(self, arguments: Iterable[ArgId]) -> bool:
        """Returns True iff `arguments` is conflict-free and defends each of
        its members."""
        arguments = self._check_all(arguments)
        return self.is_conflict_free(arguments) and all(
            self.set_defends(arguments, a) for a in arguments)

    def restrict(self, arguments: Iterable[ArgId]) -> 'ArgumentGraph':
        """
        Returns the subgraph induced by `arguments`.

        Raises
        ------
        UnknownArgumentError
            If a member of `arguments` is not in the graph.
        """
        arguments = self._check_all(arguments)
        return ArgumentGraph(arguments,
                             [(src, dst) for src, dst in self._attacks
                              if src in arguments and dst in arguments])

    def union(self, other: 'ArgumentGraph') -> 'ArgumentGraph':
        """Returns the component-wise union of both graphs."""
        return ArgumentGraph(self._arguments | other.arguments,
                             self._attacks | other.attacks)

    __or__ = union

    def __contains__(self, argument) -> bool:
        return argument in self._arguments

    def __len__(self) -> int:
        return len(self._arguments)

    def __iter__(self):
        return iter(self._sorted)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ArgumentGraph):
            return NotImplemented
        return self._arguments == other.arguments and \
            self._attacks == other.attacks

    def __hash__(self) -> int:
        return hash((self._arguments, self._attacks))

    def __repr__(self) -> str:
        attacks = ', '.join(f"{src}->{dst}"
                            for src, dst in sorted(self._attacks))
        return f"ArgumentGraph({{{', '.join(self._sorted)}}}, {{{attacks}}})"


def graph_union(first: ArgumentGraph, second: ArgumentGraph) -> ArgumentGraph:
    """
    Returns ``(AR1 ∪ AR2, att1 ∪ att2)``; arguments are matched by name.

    Parameters
    ----------
    first : ArgumentGraph
        The first operand.
    second : ArgumentGraph
        The second operand.

    Returns
    -------
    ArgumentGraph
        The component-wise union.
    """
    union = first.union(second)
    logger.debug("Union of %d and %d arguments has %d arguments",
                 len(first), len(second), len(union))
    return union
