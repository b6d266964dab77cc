import random

import pytest

from kstrong.constructions import acyclic_tournament
from kstrong.detection import contains_k_strong
from kstrong.digraph import Digraph, DigraphError
from kstrong.saturation import is_saturated, saturate

from .conftest import random_digraph


def test_acyclic_tournament_is_1_saturated():
    assert is_saturated(acyclic_tournament(4), 1).saturated


def test_single_missing_arc_is_2_saturated():
    report = is_saturated(Digraph.complete(3).remove_arc(2, 0), 2)
    assert report.saturated
    assert report.witness_for[(2, 0)] == {0, 1, 2}


def test_complete_digraph_is_not_free():
    report = is_saturated(Digraph.complete(3), 2)
    assert not report.free
    assert not report.saturated


def test_small_complete_digraphs_are_saturated_by_convention():
    for k in (2, 3, 4):
        assert is_saturated(Digraph.complete(k), k).saturated


def test_violating_arcs_are_reported():
    report = is_saturated(Digraph(3), 1)
    assert report.free
    assert not report.saturated
    assert set(report.violating_arcs) <= set(Digraph(3).complement_arcs())
    assert (0, 1) in report.violating_arcs


def test_saturate_acyclic_tournament_for_k2():
    d = saturate(acyclic_tournament(4), 2)
    assert d.arc_count == 9
    assert is_saturated(d, 2).saturated
    assert set(acyclic_tournament(4).arcs()) <= set(d.arcs())


def test_saturate_fixpoint():
    d = Digraph.complete(4).remove_arc(0, 1)
    assert saturate(d, 3) == d


def test_saturate_empty_for_k1_gives_acyclic_tournament():
    d = saturate(Digraph(5), 1)
    assert d.classify().is_acyclic_tournament


def test_saturate_requires_free_input():
    with pytest.raises(DigraphError):
        saturate(Digraph.complete(3), 2)


def test_saturate_custom_order():
    order = [(3, 2), (2, 1), (1, 0), (3, 1), (3, 0), (2, 0)]
    d = saturate(Digraph(4), 1, order)
    assert d == Digraph(4, order)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_saturate_always_saturates(k):
    rng = random.Random(k)
    for _ in range(40):
        n = rng.randint(k + 1, 6)
        d = random_digraph(rng, n, p=0.3)
        if contains_k_strong(d, k):
            continue
        order = d.complement_arcs()
        rng.shuffle(order)
        s = saturate(d, k, order)
        assert is_saturated(s, k).saturated
        assert set(d.arcs()) <= set(s.arcs())
