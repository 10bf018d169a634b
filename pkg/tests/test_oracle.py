import pytest
from hypothesis import given

from defarg.model.argument_graph import ArgumentGraph
from defarg.model.constants import Semantics, EDGE_PROBABILITIES
from defarg.model.defense_graph import (EMPTY, defense, defeater,
                                        build_defense_graph,
                                        decompose_arguments)
from defarg.model.exceptions import (DefeaterInInputError,
                                     InvalidOptionError, TooLargeError,
                                     UnknownArgumentError)
from defarg.oracle import (BruteForceSolver, brute_force_extensions,
                           brute_force_defense_extensions,
                           brute_force_root_reason, enumerate_all_graphs,
                           random_graphs, random_dags, initial_attack,
                           chain_expansion)
from defarg.oracle.corpus import argument_names
from defarg.semantics import (extensions, defense_extensions,
                              correspondence_check, defense_coverage_holds)

from graphs import CHAIN, TRIANGLE, MIXED, EXPANDED, SUMMARY
from strategies import argument_graphs

SEMANTICS = list(Semantics)


def test_argument_names():
    assert argument_names(3) == ('a', 'b', 'c')
    assert argument_names(0) == ()
    assert argument_names(27)[:2] == ('a0', 'a1')


@pytest.mark.parametrize('n, count', [(0, 1), (1, 2), (2, 16)])
def test_exhaustive_corpus_sizes(n, count):
    graphs = list(enumerate_all_graphs(n))
    assert len(graphs) == count
    assert len(set(graphs)) == count


def test_exhaustive_corpus_is_bounded():
    with pytest.raises(TooLargeError):
        next(enumerate_all_graphs(5))


def test_random_graphs_are_reproducible():
    first = list(random_graphs(10, seed=42))
    assert first == list(random_graphs(10, seed=42))
    assert first != list(random_graphs(10, seed=43))
    assert all(1 <= len(g) <= 7 for g in first)


def test_random_dags_are_acyclic():
    names = argument_names(6)
    for graph in random_dags(20, p=0.5, seed=5):
        assert all(names.index(src) < names.index(dst)
                   for src, dst in graph.attacks)


def test_random_corpora_check_probability():
    with pytest.raises(InvalidOptionError):
        next(random_graphs(1, p=0.2))


def test_chain_expansion():
    expanded = chain_expansion(CHAIN, ('a', 'b'))
    assert expanded.arguments == {'a', 'b', 'c', 'a_b_0', 'a_b_1'}
    assert expanded.attacks == {('a', 'a_b_0'), ('a_b_0', 'a_b_1'),
                                ('a_b_1', 'b'), ('b', 'c')}
    with pytest.raises(UnknownArgumentError):
        chain_expansion(CHAIN, ('a', 'c'))
    with pytest.raises(ValueError):
        chain_expansion(CHAIN, ('a', 'b'), length=3)


def test_initial_attack():
    assert initial_attack(CHAIN) == ('a', 'b')
    assert initial_attack(TRIANGLE) is None
    assert initial_attack(ArgumentGraph('a')) is None


def test_brute_force_bounds():
    with pytest.raises(TooLargeError):
        brute_force_extensions(EXPANDED, 'complete', max_arguments=4)
    with pytest.raises(TooLargeError):
        brute_force_defense_extensions(build_defense_graph(MIXED), 'complete',
                                       max_defenses=3)


def test_brute_force_golden_values():
    assert brute_force_extensions(TRIANGLE, 'complete') == (frozenset(),
                                                       frozenset('b'))
    assert brute_force_extensions(SUMMARY, 'grounded') == (
        frozenset({'e1', 'e2', 'e3'}),)
    assert brute_force_defense_extensions(build_defense_graph(TRIANGLE),
                                          'stable') == (
        frozenset({defense('b', 'b')}),)


def test_brute_force_root_reason():
    nodes = {defense(EMPTY, 'a'), defense('a', 'c')}
    assert brute_force_root_reason(CHAIN, 'c', nodes) == {'a'}
    assert brute_force_root_reason(CHAIN, 'a', nodes) == {EMPTY}
    with pytest.raises(DefeaterInInputError):
        brute_force_root_reason(TRIANGLE, 'a', {defeater('a', 'c')})


@given(argument_graphs(max_arguments=4))
def test_engines_agree_on_argument_extensions(graph):
    solver = BruteForceSolver()
    for semantics in SEMANTICS:
        assert extensions(graph, semantics) == \
            extensions(graph, semantics, solver)


@given(argument_graphs(max_arguments=3))
def test_engines_agree_on_defense_extensions(graph):
    dg = build_defense_graph(graph)
    for semantics in SEMANTICS:
        assert defense_extensions(dg, semantics) == \
            brute_force_defense_extensions(dg, semantics)


def test_engines_agree_on_named_graphs(named_graph):
    for semantics in SEMANTICS:
        assert extensions(named_graph, semantics) == \
            brute_force_extensions(named_graph, semantics)
        assert correspondence_check(named_graph, semantics).holds


def test_exhaustive_three_argument_properties():
    for graph in enumerate_all_graphs(3):
        for semantics in SEMANTICS:
            assert correspondence_check(graph, semantics).holds
        in_defeaters, in_defenses, attacked = decompose_arguments(graph)
        assert in_defeaters | in_defenses | attacked == graph.arguments


@pytest.mark.slow
def test_exhaustive_four_argument_properties():
    for graph in enumerate_all_graphs(4):
        for semantics in SEMANTICS:
            report = correspondence_check(graph, semantics)
            assert report.holds
            for d in report.defense_extensions:
                assert defense_coverage_holds(graph, d)


@pytest.mark.slow
@pytest.mark.parametrize('p', EDGE_PROBABILITIES)
def test_random_graph_properties(p):
    seed = 2024
    for graph in random_graphs(1000, p=p, seed=seed):
        for semantics in SEMANTICS:
            report = correspondence_check(graph, semantics)
            assert report.holds, f"seed={seed} p={p} graph={graph!r}"
            for d in report.defense_extensions:
                assert defense_coverage_holds(graph, d)


@pytest.mark.parametrize('n', [
    0, 1, 2, 3, pytest.param(4, marks=pytest.mark.slow)])
def test_exhaustive_engines_agree_on_argument_extensions(n):
    solver = BruteForceSolver()
    for graph in enumerate_all_graphs(n):
        for semantics in SEMANTICS:
            assert extensions(graph, semantics) == \
                extensions(graph, semantics, solver), \
                f"n={n} semantics={semantics.value} graph={graph!r}"


@pytest.mark.parametrize('n', [
    0, 1, 2, pytest.param(3, marks=pytest.mark.slow)])
def test_exhaustive_engines_agree_on_defense_extensions(n):
    for graph in enumerate_all_graphs(n):
        dg = build_defense_graph(graph)
        for semantics in SEMANTICS:
            assert defense_extensions(dg, semantics) == \
                brute_force_defense_extensions(dg, semantics), \
                f"n={n} semantics={semantics.value} graph={graph!r}"


@pytest.mark.parametrize('p', EDGE_PROBABILITIES)
@pytest.mark.parametrize('seed', [7, 2024])
def test_random_engines_agree(p, seed):
    solver = BruteForceSolver()
    for graph in random_graphs(40, max_arguments=6, p=p, seed=seed):
        for semantics in SEMANTICS:
            assert extensions(graph, semantics) == \
                extensions(graph, semantics, solver), \
                f"seed={seed} p={p} graph={graph!r}"
    for graph in random_graphs(20, max_arguments=3, p=p, seed=seed):
        dg = build_defense_graph(graph)
        for semantics in SEMANTICS:
            assert defense_extensions(dg, semantics) == \
                brute_force_defense_extensions(dg, semantics), \
                f"seed={seed} p={p} graph={graph!r}"


@pytest.mark.parametrize('p', EDGE_PROBABILITIES)
def test_random_dags_have_one_complete_extension(p):
    seed = 11
    for graph in random_dags(30, p=p, seed=seed):
        found = extensions(graph, 'complete')
        assert len(found) == 1, f"seed={seed} p={p} graph={graph!r}"
        assert extensions(graph, 'stable') == found
        assert correspondence_check(graph, 'stable').holds
