import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import bipartite_graphs, complete, graphs, star
from oracles import improvement_in_neighborhood, smallest_hall_set_size
from permls.generators import maximal_matching_cover, random_graph
from permls.graph_core import BipartiteGraph, Graph, is_independent, is_vertex_cover, set_distance
from permls.matching import find_hall_violator
from permls.reductions import CliqueInstance, clique_to_hallset
from permls.strict_ls import (
    CoverInstance,
    HallInstance,
    InvalidCover,
    hall_set_bruteforce,
    improving_sets,
    strict_search,
    strict_search_bruteforce,
)


def test_rejects_non_cover():
    with pytest.raises(InvalidCover):
        CoverInstance(complete(3), frozenset({0}), 2)


def test_single_edge():
    inst = CoverInstance(Graph(2, [(0, 1)]), frozenset({0, 1}), 1)
    found = strict_search(inst)
    assert found is not None and len(found) == 1
    assert strict_search_bruteforce(inst) is not None


def test_star_leaves():
    inst = CoverInstance(star(3), frozenset({1, 2, 3}), 3)
    # first independent S* in lexicographic order is {1, 2}
    assert strict_search(inst) == {0, 3}
    assert strict_search(CoverInstance(star(3), frozenset({1, 2, 3}), 2)) is None


@pytest.mark.parametrize("k", [0, 1, 2, 3, 5])
def test_triangle_optimum(k):
    inst = CoverInstance(complete(3), frozenset({0, 1}), k)
    assert strict_search(inst) is None
    assert strict_search_bruteforce(inst) is None


def test_k_zero_and_redundant_vertex():
    g = Graph(3, [(0, 1)])
    assert strict_search(CoverInstance(g, frozenset({0, 1, 2}), 0)) is None
    assert strict_search(CoverInstance(g, frozenset({0, 1, 2}), 1)) == {1, 2}


@st.composite
def cover_instances(draw, max_n=9):
    g = draw(graphs(max_n=max_n))
    rng = random.Random(draw(st.integers(0, 10**6)))
    cover = set(maximal_matching_cover(g, rng))
    extra = draw(st.lists(st.integers(0, max(g.n - 1, 0)), max_size=2)) if g.n else []
    cover.update(extra)
    return CoverInstance(g, frozenset(cover), draw(st.integers(0, 4)))


@settings(max_examples=300, deadline=None)
@given(cover_instances())
def test_structural_search_matches_hamming_scan(inst):
    found = strict_search(inst)
    assert (found is not None) == improvement_in_neighborhood(inst.graph, inst.cover, inst.k)
    assert (strict_search_bruteforce(inst) is not None) == (found is not None)
    if found is not None:
        assert is_vertex_cover(inst.graph, found)
        assert len(found) < len(inst.cover)
        assert set_distance(found, inst.cover) <= inst.k


@settings(max_examples=100, deadline=None)
@given(cover_instances(max_n=8))
def test_improving_sets_satisfy_conditions(inst):
    for s_star, outside in improving_sets(inst):
        assert s_star <= inst.cover
        assert is_independent(inst.graph, s_star)
        assert len(outside) < len(s_star) and len(outside) + len(s_star) <= inst.k


class TestHallBruteforce:
    def test_star(self):
        bg = BipartiteGraph.from_sides(2, 1, [(0, 0), (1, 0)])
        assert hall_set_bruteforce(HallInstance(bg, 2)) == {0, 1}
        assert hall_set_bruteforce(HallInstance(bg, 1)) is None

    def test_k22(self):
        bg = BipartiteGraph.from_sides(2, 2, [(0, 0), (0, 1), (1, 0), (1, 1)])
        assert hall_set_bruteforce(HallInstance(bg, 2)) is None

    def test_k5_reduction(self):
        red = clique_to_hallset(CliqueInstance(complete(5), 4))
        found = hall_set_bruteforce(red.instance)
        assert found is not None and len(found) == 6
        assert len(red.instance.bg.neighborhood(found)) == 5

    def test_rejects_k_zero(self):
        bg = BipartiteGraph.from_sides(1, 1, [(0, 0)])
        with pytest.raises(ValueError):
            HallInstance(bg, 0)

    @settings(max_examples=300, deadline=None)
    @given(bipartite_graphs(), st.integers(1, 8))
    def test_smallest_size_matches_oracle(self, bg, k):
        found = hall_set_bruteforce(HallInstance(bg, k))
        adjacency = {u: list(bg.graph.neighbors(u)) for u in sorted(bg.a)}
        expected = smallest_hall_set_size(adjacency, k)
        if expected is None:
            assert found is None
        else:
            assert len(found) == expected
            assert found <= bg.a and len(bg.neighborhood(found)) < len(found)

    @settings(max_examples=200, deadline=None)
    @given(bipartite_graphs(), st.integers(1, 8))
    def test_agrees_with_small_matching_violator(self, bg, k):
        w = find_hall_violator(bg)
        if w is not None and len(w) <= k:
            assert hall_set_bruteforce(HallInstance(bg, k)) is not None


def test_random_corpus_agreement():
    rng = random.Random(3)
    for _ in range(60):
        g = random_graph(rng.randint(4, 11), rng.uniform(0.2, 0.5), rng)
        cover = maximal_matching_cover(g, rng)
        for k in (1, 2, 3):
            inst = CoverInstance(g, cover, k)
            assert (strict_search(inst) is None) == (strict_search_bruteforce(inst) is None)
