"""
Canonical ordering of arguments, defense nodes and extensions.

Arguments sort lexicographically by name, defense nodes by
``(defender, defendee)`` with the empty slot first, and extensions by
cardinality and then lexicographically by their sorted members.
"""

from typing import Iterable, Tuple

from defarg.model.defense_graph import DefenseNode


def member_sort_key(member):
    """Sort key of an argument name or a defense node."""
    if isinstance(member, DefenseNode):
        return member.sort_key
    return member


def extension_sort_key(extension) -> Tuple:
    """Sort key of an extension: cardinality, then sorted members."""
    return len(extension), tuple(sorted(member_sort_key(m)
                                        for m in extension))


def sorted_members(extension) -> list:
    """Returns the members of `extension` in canonical order."""
    return sorted(extension, key=member_sort_key)


def canonical_extensions(extensions: Iterable) -> Tuple[frozenset, ...]:
    """
    Returns the distinct extensions as frozensets in canonical order.
    """
    return tuple(sorted({frozenset(e) for e in extensions},
                        key=extension_sort_key))
