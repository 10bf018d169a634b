from abc import ABC, abstractmethod
from typing import FrozenSet, Hashable, Protocol, Tuple

from defarg.model.constants import Semantics


class AttackFramework(Protocol):
    """
    The structure every solver works on: nodes related by attacks, of which
    only the candidates may be accepted.

    ``ArgumentGraph`` (every argument is a candidate) and ``DefenseGraph``
    (only defenses are candidates, defeaters merely attack) both satisfy
    this protocol.
    """

    @property
    def nodes(self) -> Tuple[Hashable, ...]:
        ...

    @property
    def candidates(self) -> FrozenSet[Hashable]:
        ...

    def attackers(self, node) -> FrozenSet[Hashable]:
        ...

    def attackees(self, node) -> FrozenSet[Hashable]:
        ...

    def accepted_outside(self, extension) -> FrozenSet[Hashable]:
        ...


class Solver(ABC):
    """
    Abstract base class for an extension solver.

    This class defines one method per semantics. Every method receives an
    :class:`AttackFramework` and returns extensions as frozensets of
    candidates, without duplicates and in canonical order.
    """

    name: str = 'abstract'

    @abstractmethod
    def grounded_extension(self, framework: AttackFramework) -> frozenset:
        """
        Computes the grounded extension.

        Args:
            framework: The argument graph or defense graph to evaluate.

        Returns:
            The unique subset-minimal complete extension.
        """
        ...

    @abstractmethod
    def complete_extensions(self, framework: AttackFramework) -> Tuple[
            frozenset, ...]:
        """
        Enumerates the complete extensions.

        Args:
            framework: The argument graph or defense graph to evaluate.

        Returns:
            Every admissible set of candidates that contains each candidate
            it defends.
        """
        ...

    @abstractmethod
    def preferred_extensions(self, framework: AttackFramework) -> Tuple[
            frozenset, ...]:
        """
        Enumerates the preferred extensions.

        Args:
            framework: The argument graph or defense graph to evaluate.

        Returns:
            The subset-maximal complete extensions.
        """
        ...

    @abstractmethod
    def stable_extensions(self, framework: AttackFramework) -> Tuple[
            frozenset, ...]:
        """
        Enumerates the stable extensions.

        Args:
            framework: The argument graph or defense graph to evaluate.

        Returns:
            The conflict-free sets of candidates attacking every node outside
            them that the framework does not report as accepted anyway;
            possibly none.
        """
        ...

    def extensions(self, framework: AttackFramework,
                   semantics: Semantics | str) -> Tuple[frozenset, ...]:
        """
        Dispatches to the method of the requested semantics.

        Args:
            framework: The argument graph or defense graph to evaluate.
            semantics: The semantics, as a member or a name.

        Returns:
            The extensions in canonical order; grounded yields exactly one.
        """
        semantics = Semantics.parse(semantics)
        if semantics is Semantics.GROUNDED:
            return (self.grounded_extension(framework),)
        if semantics is Semantics.COMPLETE:
            return self.complete_extensions(framework)
        if semantics is Semantics.PREFERRED:
            return self.preferred_extensions(framework)
        return self.stable_extensions(framework)
