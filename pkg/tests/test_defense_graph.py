import pytest
from hypothesis import given

from defarg.model.argument_graph import ArgumentGraph
from defarg.model.defense_graph import (EMPTY, defense, defeater,
                                        enumerate_defenses,
                                        enumerate_defeaters, node_attacks,
                                        build_defense_graph,
                                        decompose_arguments, defendees,
                                        defenders, def_of)
from defarg.model.exceptions import DefeaterInInputError, UnknownNodeError
from defarg.model.constants import NodeKind

from graphs import (SIX_CYCLE, CHAIN, ISOLATED, LONG_CHAIN, ODD_CYCLE,
                    SELF_ATTACK_FORK, SELF_ATTACK_CHAIN, TRIANGLE, DIAMOND)
from strategies import argument_graphs


def test_defenses_of_chain():
    assert enumerate_defenses(CHAIN) == {defense(EMPTY, 'a'),
                                         defense('a', 'c')}
    assert enumerate_defeaters(CHAIN) == frozenset()
    assert enumerate_defenses(LONG_CHAIN) == {
        defense(EMPTY, 'a'), defense('a', 'c'), defense('b', 'd')}
    assert enumerate_defeaters(LONG_CHAIN) == frozenset()


def test_defenses_of_isolated_arguments():
    assert enumerate_defenses(ISOLATED) == {defense(EMPTY, 'a'),
                                            defense(EMPTY, 'c')}


def test_six_cycle_has_six_defenses_and_no_defeaters():
    assert enumerate_defenses(SIX_CYCLE) == {
        defense('a', 'c2'), defense('c1', 'b'), defense('c2', 'c3'),
        defense('b', 'c4'), defense('c3', 'a'), defense('c4', 'c1')}
    assert enumerate_defeaters(SIX_CYCLE) == frozenset()


def test_odd_cycle_gives_defeaters():
    assert enumerate_defenses(ODD_CYCLE) == {
        defense('a2', 'a4'), defense('a3', 'a5'), defense('a4', 'a6')}
    assert enumerate_defeaters(ODD_CYCLE) == {
        defeater('a2', 'a1'), defeater('a3', 'a2'), defeater('a1', 'a3')}


def test_self_attacker_gives_empty_defeaters():
    assert enumerate_defenses(SELF_ATTACK_FORK) == {
        defense(EMPTY, 'a11'), defense('a11', 'a13')}
    assert enumerate_defeaters(SELF_ATTACK_FORK) == {
        defeater(EMPTY, 'a14'), defeater(EMPTY, 'a15'),
        defeater('a14', 'a13')}


def test_self_attacker_in_the_middle():
    assert enumerate_defenses(SELF_ATTACK_CHAIN) == {defense(EMPTY, 'a'),
                                                     defense('a', 'c')}
    assert enumerate_defeaters(SELF_ATTACK_CHAIN) == {
        defeater(EMPTY, 'b'), defeater(EMPTY, 'c'), defeater('b', 'd')}


def test_node_attacks():
    assert node_attacks(TRIANGLE, defense('a', 'a'), defense('b', 'b'))
    assert node_attacks(TRIANGLE, defense('b', 'b'), defense('a', 'a'))
    assert not node_attacks(CHAIN, defense(EMPTY, 'a'), defense('a', 'c'))
    assert node_attacks(TRIANGLE, defeater('a', 'c'), defeater('a', 'c'))


def test_node_attacks_rejects_foreign_nodes():
    with pytest.raises(UnknownNodeError):
        node_attacks(CHAIN, defense('b', 'b'), defense(EMPTY, 'a'))
    with pytest.raises(UnknownNodeError):
        node_attacks(TRIANGLE, defense('a', 'c'), defense('a', 'a'))


def test_chain_defense_graph_is_edgeless():
    dg = build_defense_graph(CHAIN)
    assert dg.nodes == (defense(EMPTY, 'a'), defense('a', 'c'))
    assert dg.edges == frozenset()
    assert build_defense_graph(DIAMOND).nodes == dg.nodes


def test_defense_graph_of_triangle():
    dg = build_defense_graph(TRIANGLE)
    aa, bb = defense('a', 'a'), defense('b', 'b')
    ac, cb, ba = defeater('a', 'c'), defeater('c', 'b'), defeater('b', 'a')
    assert set(dg.nodes) == {aa, bb, ac, cb, ba}
    assert dg.defenses == {aa, bb}
    assert dg.defeaters == {ac, cb, ba}
    assert len(dg.edges) == 21
    assert dg.attackees(aa) == {bb, cb, ba}
    assert dg.attackees(bb) == {aa, ac, cb, ba}
    assert dg.attackees(ac) == set(dg.nodes)
    assert dg.attackees(ba) == set(dg.nodes)
    assert dg.attackees(cb) == {aa, ac, cb, ba}
    assert {n for n in dg.nodes if dg.attacks(n, n)} == {ac, cb, ba}


def test_defense_graph_of_odd_cycle():
    dg = build_defense_graph(ODD_CYCLE)
    assert len(dg) == 6
    assert len(dg.defenses) == 3
    assert {n.kind for n in dg.defeaters} == {NodeKind.DEFEATER}


def test_defense_graph_rejects_wrong_kind():
    dg = build_defense_graph(TRIANGLE)
    with pytest.raises(UnknownNodeError):
        dg.attackers(defense('a', 'c'))
    assert defense('a', 'c') in dg


def test_node_rendering_and_order():
    assert str(defense(EMPTY, 'a')) == '<EMPTY,a>'
    assert str(defeater('b', 'd')) == '(b,d)'
    assert defense(EMPTY, 'z') < defense('a', 'a')
    assert defense('a', 'b') == defeater('a', 'b')


def test_defendees_defenders_def_of():
    nodes = {defense(EMPTY, 'a'), defense('a', 'c')}
    assert defendees(nodes) == {'a', 'c'}
    assert defenders(nodes) == {'a'}
    assert def_of(nodes) == {'a', 'c'}
    assert def_of(set()) == frozenset()
    with pytest.raises(DefeaterInInputError):
        def_of({defeater('b', 'd')})


def test_decomposition_of_self_attack_chain():
    assert decompose_arguments(SELF_ATTACK_CHAIN) == (
        {'b', 'c', 'd'}, {'a', 'c'}, {'b', 'd'})


@given(argument_graphs())
def test_decomposition_covers_every_argument(graph):
    in_defeaters, in_defenses, attacked = decompose_arguments(graph)
    assert in_defeaters | in_defenses | attacked == graph.arguments


@given(argument_graphs())
def test_defenses_and_defeaters_are_disjoint(graph):
    defenses = {n.pair for n in enumerate_defenses(graph)}
    defeaters = {n.pair for n in enumerate_defeaters(graph)}
    assert not defenses & defeaters


@given(argument_graphs())
def test_empty_slot_marks_initial_defendees_only(graph):
    dg = build_defense_graph(graph)
    for node in dg.nodes:
        if node.defender == EMPTY:
            assert graph.is_initial(node.defendee) == node.is_defense
    for argument in graph.arguments:
        if graph.is_initial(argument):
            assert defense(EMPTY, argument) in dg.defenses


@given(argument_graphs())
def test_isolated_argument_adds_a_lone_defense(graph):
    dg = build_defense_graph(graph)
    extended = build_defense_graph(ArgumentGraph(graph.arguments | {'z9'},
                                                 graph.attacks))
    assert set(extended.nodes) == set(dg.nodes) | {defense(EMPTY, 'z9')}
    assert extended.edges == dg.edges
