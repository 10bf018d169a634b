import pytest
from hypothesis import given

from defarg.model.argument_graph import ArgumentGraph
from defarg.model.constants import Semantics
from defarg.model.defense_graph import (EMPTY, defense, defeater,
                                        build_defense_graph, def_of)
from defarg.model.exceptions import (DefeaterAsDefendeeError,
                                     DefeaterInInputError, UnknownNodeError,
                                     UnknownArgumentError,
                                     UnknownSemanticsError)
from defarg.oracle import brute_force_defense_extensions
from defarg.semantics import (grounded_extension, complete_extensions,
                              preferred_extensions, stable_extensions,
                              extensions, d_conflict_free, d_defends,
                              d_admissible, defense_extensions,
                              d_of_extension, correspondence_check,
                              defense_coverage_holds)

from graphs import (SIX_CYCLE, MUTUAL, CHAIN, TRIANGLE, MIXED, SELF_ATTACKER,
                    SELF_ATTACK_CHAIN, EMPTY_GRAPH)
from strategies import argument_graphs

SEMANTICS = list(Semantics)


def ext(*members):
    return frozenset(members)


def test_grounded():
    assert grounded_extension(CHAIN) == {'a', 'c'}
    assert grounded_extension(TRIANGLE) == frozenset()
    assert grounded_extension(MIXED) == {'d', 'e', 'g'}


def test_complete_extensions_in_canonical_order():
    assert complete_extensions(TRIANGLE) == (ext(), ext('b'))
    assert complete_extensions(MUTUAL) == (ext(), ext('a'), ext('b'))
    assert complete_extensions(SIX_CYCLE) == (ext(), ext('a', 'c2', 'c3'),
                                       ext('b', 'c1', 'c4'))
    assert complete_extensions(MIXED) == (ext('d', 'e', 'g'),
                                        ext('a', 'd', 'e', 'g'),
                                        ext('b', 'd', 'e', 'g'))


def test_preferred_and_stable():
    assert preferred_extensions(TRIANGLE) == (ext('b'),)
    assert stable_extensions(TRIANGLE) == (ext('b'),)
    assert preferred_extensions(MUTUAL) == (ext('a'), ext('b'))
    assert stable_extensions(CHAIN) == (ext('a', 'c'),)
    assert stable_extensions(SELF_ATTACKER) == ()
    assert preferred_extensions(SELF_ATTACKER) == (ext(),)


def test_extensions_of_empty_graph():
    for semantics in SEMANTICS:
        assert extensions(EMPTY_GRAPH, semantics) == (ext(),)


def test_extensions_dispatch_by_name():
    assert extensions(CHAIN, 'grounded') == (ext('a', 'c'),)
    with pytest.raises(UnknownSemanticsError):
        extensions(CHAIN, 'ideal')


def test_d_conflict_free():
    dg3, dg10 = build_defense_graph(CHAIN), build_defense_graph(TRIANGLE)
    assert d_conflict_free(dg3, {defense(EMPTY, 'a'), defense('a', 'c')})
    assert not d_conflict_free(dg10, {defense('a', 'a'), defense('b', 'b')})
    assert d_conflict_free(dg10, set())
    with pytest.raises(UnknownNodeError):
        d_conflict_free(dg3, {defense('b', 'b')})


def test_d_defends():
    dg3, dg10 = build_defense_graph(CHAIN), build_defense_graph(TRIANGLE)
    assert d_defends(dg3, set(), defense(EMPTY, 'a'))
    assert d_defends(dg10, {defense('b', 'b')}, defense('b', 'b'))
    assert not d_defends(dg10, set(), defense('a', 'a'))
    with pytest.raises(DefeaterAsDefendeeError):
        d_defends(dg10, set(), defeater('a', 'c'))


def test_d_admissible():
    dg10 = build_defense_graph(TRIANGLE)
    assert d_admissible(dg10, {defense('b', 'b')})
    assert not d_admissible(dg10, {defense('a', 'a')})
    with pytest.raises(DefeaterInInputError):
        d_admissible(dg10, {defeater('a', 'c')})


def test_defense_extensions():
    assert defense_extensions(build_defense_graph(TRIANGLE), 'complete') == (
        ext(), ext(defense('b', 'b')))
    assert defense_extensions(build_defense_graph(SIX_CYCLE), 'complete') == (
        ext(),
        ext(defense('a', 'c2'), defense('c2', 'c3'), defense('c3', 'a')),
        ext(defense('b', 'c4'), defense('c1', 'b'), defense('c4', 'c1')))
    assert defense_extensions(build_defense_graph(CHAIN), 'complete') == (
        ext(defense(EMPTY, 'a'), defense('a', 'c')),)


def test_mixed_has_three_complete_defense_extensions():
    found = defense_extensions(build_defense_graph(MIXED), 'complete')
    core = {defense(EMPTY, 'e'), defense('e', 'g'), defense('g', 'd')}
    assert found == (ext(*core),
                     ext(*core, defense('a', 'a')),
                     ext(*core, defense('b', 'b'), defense('b', 'd')))


def test_stable_defense_extensions_may_not_exist():
    assert defense_extensions(build_defense_graph(SELF_ATTACKER),
                              'stable') == ()


def test_stable_ignores_defeaters_of_accepted_arguments():
    dg = build_defense_graph(SELF_ATTACK_CHAIN)
    accepted = {defense(EMPTY, 'a'), defense('a', 'c')}
    assert dg.accepted_outside(accepted) == {defeater(EMPTY, 'c')}
    assert defense_extensions(dg, 'stable') == (ext(*accepted),)
    assert brute_force_defense_extensions(dg, 'stable') == (ext(*accepted),)
    assert correspondence_check(SELF_ATTACK_CHAIN, 'stable').holds


def test_stable_still_attacks_outside_defenses():
    graph = ArgumentGraph('pqxyz', [('x', 'p'), ('p', 'y'), ('z', 'q'),
                                    ('q', 'y')])
    dg = build_defense_graph(graph)
    everything = ext(defense(EMPTY, 'x'), defense(EMPTY, 'z'),
                     defense('x', 'y'), defense('z', 'y'))
    assert dg.accepted_outside(everything - {defense('x', 'y')}) == \
        frozenset()
    assert defense_extensions(dg, 'stable') == (everything,)
    assert brute_force_defense_extensions(dg, 'stable') == (everything,)


def test_d_of_extension():
    assert d_of_extension(TRIANGLE, {'b'}) == {defense('b', 'b')}
    assert d_of_extension(TRIANGLE, set()) == frozenset()
    assert d_of_extension(CHAIN, {'a', 'c'}) == {defense(EMPTY, 'a'),
                                              defense('a', 'c')}
    with pytest.raises(UnknownArgumentError):
        d_of_extension(CHAIN, {'z'})


@pytest.mark.parametrize('graph, semantics', [
    (TRIANGLE, 'complete'), (CHAIN, 'complete'), (SELF_ATTACKER, 'stable'),
    (MIXED, 'preferred'), (SIX_CYCLE, 'grounded')])
def test_correspondence_examples(graph, semantics):
    report = correspondence_check(graph, semantics)
    assert report.forward_holds
    assert report.backward_holds
    assert report.forward_witness is None


def test_correspondence_report_of_self_attacker():
    report = correspondence_check(SELF_ATTACKER, Semantics.STABLE)
    assert report.argument_extensions == ()
    assert report.defense_extensions == ()
    assert report.holds


def test_defense_coverage():
    assert defense_coverage_holds(CHAIN, {defense(EMPTY, 'a'),
                                          defense('a', 'c')})
    assert defense_coverage_holds(CHAIN, {defense('a', 'c')})
    assert not defense_coverage_holds(TRIANGLE, {defense('a', 'a')})


@given(argument_graphs(max_arguments=5))
def test_correspondence_on_random_graphs(graph):
    for semantics in SEMANTICS:
        assert correspondence_check(graph, semantics).holds


@given(argument_graphs(max_arguments=5))
def test_round_trips_between_extensions(graph):
    for e in complete_extensions(graph):
        assert def_of(d_of_extension(graph, e)) == e
    for d in defense_extensions(build_defense_graph(graph), 'complete'):
        assert d_of_extension(graph, def_of(d)) == d
        assert defense_coverage_holds(graph, d)


@given(argument_graphs(max_arguments=5))
def test_grounded_is_least_complete(graph):
    grounded = grounded_extension(graph)
    complete = complete_extensions(graph)
    assert grounded in complete
    assert all(grounded <= e for e in complete)


@given(argument_graphs(max_arguments=5))
def test_stable_extensions_are_preferred(graph):
    preferred = set(preferred_extensions(graph))
    assert set(stable_extensions(graph)) <= preferred
    assert preferred


def test_defense_extensions_never_contain_defeaters():
    graph = ArgumentGraph('abcd', [('a', 'b'), ('b', 'b'), ('b', 'c'),
                                   ('c', 'd')])
    dg = build_defense_graph(graph)
    for semantics in SEMANTICS:
        for d in defense_extensions(dg, semantics):
            assert all(n.is_defense for n in d)
