import pytest
from hypothesis import given

from pmcsolver.config.settings import settings
from pmcsolver.errors import GiveUp, InvalidArgument, TooLarge
from pmcsolver.graphs.graph import Graph
from pmcsolver.graphs.recognition import is_in_class_c, is_long_hole_free, is_p5_free
from pmcsolver.harness import generators
from pmcsolver.harness.generators import (
    complete,
    cycle,
    edgeless,
    path,
    prism,
    random_class_c_graph,
    random_instance,
    random_long_hole_free_graph,
    random_p5_free_graph,
    random_weights,
    star,
)
from pmcsolver.harness.oracles import (
    brute_minimal_separators,
    brute_mwis_weight,
    brute_pmcs_by_definition,
    brute_tw_subgraph,
)
from pmcsolver.separators.minsep import enumerate_pmcs

from .strategies import graphs, sweep_settings, vs


def test_named_families():
    assert prism(3).edge_count == 9
    assert prism(3).has_edge(0, 3) and not prism(3).has_edge(0, 4)
    assert cycle(5).edge_count == 5
    assert path(4).edge_count == 3
    assert complete(4).edge_count == 6
    assert star(3).adjacency[0] == vs(1, 2, 3)
    assert edgeless(3).edge_count == 0


def test_brute_tw_subgraph_examples(c4, k4):
    assert brute_tw_subgraph(c4, None, 1) == vs(1, 3)
    assert brute_tw_subgraph(k4, None, 2) == vs(2, 3)
    assert brute_tw_subgraph(c4, (5, 1, 1, 1), 1) == vs(0, 2)
    assert brute_tw_subgraph(c4, (0, 0, 0, 0), 1) == 0


def test_brute_tw_subgraph_size_cap(monkeypatch, c4):
    monkeypatch.setattr(settings, "brute_force_max_n", 3)
    with pytest.raises(TooLarge):
        brute_tw_subgraph(c4, None, 1)
    with pytest.raises(TooLarge):
        brute_minimal_separators(c4)


def test_brute_mwis_weight(c4, k4):
    assert brute_mwis_weight(c4) == 2
    assert brute_mwis_weight(k4, (1, 7, 2, 3)) == 7
    assert brute_mwis_weight(prism(4)) == 2


def test_definition_oracle_examples(c4, p3):
    assert brute_pmcs_by_definition(p3) == [vs(0, 1), vs(1, 2)]
    assert brute_pmcs_by_definition(c4) == [vs(0, 1, 2), vs(0, 1, 3), vs(0, 2, 3), vs(1, 2, 3)]


def test_definition_oracle_size_cap(monkeypatch, c4):
    monkeypatch.setattr(settings, "definition_oracle_max_n", 3)
    with pytest.raises(TooLarge):
        brute_pmcs_by_definition(c4)


@pytest.mark.slow
def test_pmcs_match_definition_on_every_five_vertex_graph():
    pairs = [(u, v) for u in range(5) for v in range(u + 1, 5)]
    for mask in range(1 << len(pairs)):
        g = Graph.from_edges(5, [pair for i, pair in enumerate(pairs) if mask >> i & 1])
        assert [r.omega for r in enumerate_pmcs(g)] == brute_pmcs_by_definition(g)


@sweep_settings
@given(graphs(max_n=5))
def test_definition_oracle_agrees_with_enumeration(g):
    assert brute_pmcs_by_definition(g) == [r.omega for r in enumerate_pmcs(g)]


def test_random_generators_respect_classes():
    for seed in range(3):
        assert is_in_class_c(random_class_c_graph(8, 0.5, seed))
        assert is_long_hole_free(random_long_hole_free_graph(8, 0.3, seed))
        assert is_p5_free(random_p5_free_graph(8, 0.5, seed))


def test_random_generators_are_deterministic():
    assert random_class_c_graph(8, 0.4, 7) == random_class_c_graph(8, 0.4, 7)
    assert random_weights(5, 3) == random_weights(5, 3)
    assert all(0 <= w <= 100 for w in random_weights(20, 1))
    first = random_instance(6, 0.5, 11)
    second = random_instance(6, 0.5, 11)
    assert first.graph == second.graph and first.weights == second.weights
    assert random_instance(4, 0.5, 1, weighted=False).weights == (1, 1, 1, 1)


def test_generator_arguments_validated():
    with pytest.raises(InvalidArgument):
        random_class_c_graph(65, 0.5, 0)
    with pytest.raises(InvalidArgument):
        random_p5_free_graph(5, 1.5, 0)


def test_generator_gives_up(monkeypatch):
    monkeypatch.setattr(generators, "is_p5_free", lambda g: False)
    monkeypatch.setattr(settings, "generator_max_rejections", 1)
    with pytest.raises(GiveUp):
        random_p5_free_graph(5, 0.5, 0)
