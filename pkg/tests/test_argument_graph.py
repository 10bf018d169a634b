import pytest
from hypothesis import given

from defarg.model.argument_graph import ArgumentGraph, graph_union
from defarg.model.exceptions import (InvalidArgumentNameError,
                                     UnknownArgumentError)

from graphs import CHAIN, SELF_ATTACK_CHAIN, TRIANGLE
from strategies import argument_graphs


def test_attackers_and_attackees():
    assert CHAIN.attackers('b') == {'a'}
    assert CHAIN.attackers('a') == frozenset()
    assert TRIANGLE.attackers('a') == {'b', 'c'}
    assert CHAIN.attackees('a') == {'b'}
    assert TRIANGLE.attackees('b') == {'a', 'c'}
    assert ArgumentGraph('ab').attackees('a') == frozenset()


def test_is_initial():
    assert CHAIN.is_initial('a')
    assert not CHAIN.is_initial('b')
    assert SELF_ATTACK_CHAIN.is_initial('a')


def test_unknown_argument_raises():
    with pytest.raises(UnknownArgumentError):
        CHAIN.attackers('z')
    with pytest.raises(UnknownArgumentError):
        CHAIN.is_conflict_free({'a', 'z'})
    with pytest.raises(UnknownArgumentError):
        CHAIN.set_defends(set(), 'z')


def test_attack_with_unknown_endpoint_rejected():
    with pytest.raises(UnknownArgumentError):
        ArgumentGraph(['a'], [('a', 'b')])


@pytest.mark.parametrize('name', ['', 'a b', 'f(x)', 'a,b', 'tab\t', 'EMPTY'])
def test_invalid_names_rejected(name):
    with pytest.raises(InvalidArgumentNameError):
        ArgumentGraph([name])


def test_reserved_name_rejected_in_attacks():
    with pytest.raises(InvalidArgumentNameError, match='reserved'):
        ArgumentGraph(['EMPTY', 'b', 'c'], [('EMPTY', 'b'), ('b', 'c')])


def test_conflict_freeness():
    assert CHAIN.is_conflict_free({'a', 'c'})
    assert not TRIANGLE.is_conflict_free({'a', 'b'})
    assert not SELF_ATTACK_CHAIN.is_conflict_free({'b'})
    assert SELF_ATTACK_CHAIN.is_conflict_free(set())


def test_set_defends():
    assert CHAIN.set_defends({'a'}, 'c')
    assert CHAIN.set_defends(set(), 'a')
    assert not CHAIN.set_defends(set(), 'c')


def test_admissibility():
    assert CHAIN.is_admissible({'a', 'c'})
    assert not CHAIN.is_admissible({'c'})
    assert TRIANGLE.is_admissible({'b'})


def test_self_attack_helpers():
    assert SELF_ATTACK_CHAIN.is_self_attacking('b')
    assert not SELF_ATTACK_CHAIN.is_self_attacking('a')
    assert SELF_ATTACK_CHAIN.self_attackers() == {'b'}


def test_restrict_keeps_induced_attacks():
    sub = TRIANGLE.restrict({'a', 'b'})
    assert sub.arguments == {'a', 'b'}
    assert sub.attacks == {('a', 'b'), ('b', 'a')}


def test_union_matches_arguments_by_name():
    first = ArgumentGraph('ab', [('a', 'b')])
    second = ArgumentGraph('bc', [('b', 'c')])
    union = graph_union(first, second)
    assert union == CHAIN
    assert (first | second) == CHAIN


def test_graph_is_value_object():
    copy = ArgumentGraph(['c', 'b', 'a'], [('b', 'c'), ('a', 'b')])
    assert copy == CHAIN
    assert hash(copy) == hash(CHAIN)
    assert list(copy) == ['a', 'b', 'c']
    assert len(copy) == 3
    assert 'a' in copy


def test_digraph_is_frozen():
    import networkx as nx
    with pytest.raises(nx.NetworkXError):
        CHAIN.digraph.add_edge('c', 'a')


@given(argument_graphs())
def test_union_with_itself_is_identity(graph):
    assert graph_union(graph, graph) == graph


@given(argument_graphs())
def test_attackers_mirror_attackees(graph):
    for a in graph.nodes:
        for b in graph.attackees(a):
            assert a in graph.attackers(b)
