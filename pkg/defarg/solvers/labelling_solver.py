import logging
from typing import Dict, FrozenSet, Hashable, List, Set, Tuple

from defarg.commons.ordering import canonical_extensions, member_sort_key
from defarg.solvers.base_solver import Solver, AttackFramework

logger = logging.getLogger(__name__)


class _Relation:
    """Attack lookups of one framework, computed once per call."""

    def __init__(self, framework: AttackFramework):
        self.nodes = framework.nodes
        self.candidates = framework.candidates
        self.attackers: Dict[Hashable, FrozenSet] = {
            n: framework.attackers(n) for n in self.nodes}
        self.attackees: Dict[Hashable, FrozenSet] = {
            n: framework.attackees(n) for n in self.nodes}

    def defends(self, inside, node) -> bool:
        return all(self.attackers[attacker] & inside
                   for attacker in self.attackers[node])

    def attacked_by(self, inside) -> Set:
        attacked = set()
        for node in inside:
            attacked |= self.attackees[node]
        return attacked


class LabellingSolver(Solver):
    """
    A solver enumerating complete extensions by backtracking over
    three-valued labellings.

    Candidates are labelled in canonical order. Arguments of the grounded
    extension start labelled in and the arguments they attack start
    labelled out; each remaining candidate is then branched on (in, or not
    in), and a branch is abandoned as soon as it becomes conflicting, a
    rejected candidate becomes defended, or a member has an attacker that
    nothing still open can attack. Non-candidates (defeaters of defenses)
    are never labelled in but keep attacking.
    """

    name = 'labelling'

    def grounded_extension(self, framework: AttackFramework) -> frozenset:
        """
        Computes the grounded extension as the least fixed point of
        ``D(i+1) = {x in candidates | D(i) defends x}`` starting from the
        empty set.

        Parameters
        ----------
        framework : AttackFramework
            The argument graph or defense graph to evaluate.

        Returns
        -------
        frozenset
            The grounded extension.
        """
        return self._grounded(_Relation(framework))

    @staticmethod
    def _grounded(relation: _Relation) -> frozenset:
        current = frozenset()
        rounds = 0
        while True:
            rounds += 1
            following = frozenset(n for n in relation.candidates
                                  if relation.defends(current, n))
            if following == current:
                logger.debug("Grounded fixpoint of %d members after %d "
                             "rounds", len(current), rounds)
                return current
            current = following

    def complete_extensions(self, framework: AttackFramework) -> Tuple[
            frozenset, ...]:
        """
        Enumerates the complete extensions.

        Parameters
        ----------
        framework : AttackFramework
            The argument graph or defense graph to evaluate.

        Returns
        -------
        tuple of frozenset
            The complete extensions in canonical order.
        """
        relation = _Relation(framework)
        grounded = self._grounded(relation)
        excluded = relation.attacked_by(grounded)
        free = [n for n in sorted(relation.candidates, key=member_sort_key)
                if n not in grounded and n not in excluded
                and n not in relation.attackers[n]]
        found: List[frozenset] = []
        visited = self._search(relation, free, 0, set(grounded), set(),
                               found)
        logger.debug("Labelling search visited %d states over %d free "
                     "candidates and found %d complete extensions", visited,
                     len(free), len(found))
        return canonical_extensions(found)

    def _search(self, relation: _Relation, free: list, index: int,
                inside: set, rejected: set, found: list) -> int:
        if index == len(free):
            if self._is_complete(relation, inside):
                found.append(frozenset(inside))
            return 1

        visited = 1
        node = free[index]
        pending = free[index + 1:]

        if not (relation.attackers[node] & inside) and \
                not (relation.attackees[node] & inside):
            inside.add(node)
            if self._consistent(relation, inside, rejected, pending):
                visited += self._search(relation, free, index + 1, inside,
                                        rejected, found)
            inside.remove(node)

        if not relation.defends(inside, node):
            rejected.add(node)
            visited += self._search(relation, free, index + 1, inside,
                                    rejected, found)
            rejected.remove(node)
        return visited

    @staticmethod
    def _consistent(relation: _Relation, inside: set, rejected: set,
                    pending: list) -> bool:
        if any(relation.defends(inside, n) for n in rejected):
            return False
        reachable = inside.union(pending)
        return all(relation.attackers[attacker] & reachable
                   for member in inside
                   for attacker in relation.attackers[member])

    @staticmethod
    def _is_complete(relation: _Relation, inside: set) -> bool:
        if any(relation.attackees[n] & inside for n in inside):
            return False
        for node in relation.candidates:
            if relation.defends(inside, node) != (node in inside):
                return False
        return True

    def preferred_extensions(self, framework: AttackFramework) -> Tuple[
            frozenset, ...]:
        """
        Returns the subset-maximal complete extensions.
        """
        complete = self.complete_extensions(framework)
        return tuple(e for e in complete
                     if not any(e < other for other in complete))

    def stable_extensions(self, framework: AttackFramework) -> Tuple[
            frozenset, ...]:
        """
        Returns the complete extensions that attack every node outside
        them, apart from the nodes the framework reports as accepted through
        the extension; every stable extension is complete.
        """
        relation = _Relation(framework)
        everything = set(relation.nodes)
        return tuple(e for e in self.complete_extensions(framework)
                     if everything - e - framework.accepted_outside(e)
                     <= relation.attacked_by(e))
