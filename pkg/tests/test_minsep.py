import pytest
from hypothesis import assume, given

from pmcsolver.config.settings import settings
from pmcsolver.errors import BudgetExceeded, NotAPmc, TooLarge
from pmcsolver.graphs.bitset import canonical_family
from pmcsolver.graphs.recognition import is_in_class_c
from pmcsolver.harness.generators import complete, cycle, prism
from pmcsolver.harness.oracles import brute_minimal_separators, brute_pmcs_by_definition
from pmcsolver.separators.minsep import (
    adhesions,
    enumerate_minimal_separators,
    enumerate_pmcs,
    full_components,
    is_minimal_separator,
    is_pmc,
)

from .strategies import graphs, small_graph_settings, sweep_settings, vs


def _omegas(g):
    return [record.omega for record in enumerate_pmcs(g)]


def test_full_components(c4, p4, k4):
    assert full_components(c4, vs(0, 2)).full_components == [vs(1), vs(3)]
    split = full_components(p4, vs(1))
    assert split.full_components == [vs(0), vs(2, 3)]
    assert split.other_components == []
    assert full_components(k4, vs(0, 1, 2)).full_components == [vs(3)]
    neither = full_components(p4, vs(1, 2))
    assert neither.full_components == []
    assert neither.other_components == [vs(0), vs(3)]


def test_is_minimal_separator(c4, k4):
    assert is_minimal_separator(c4, vs(0, 2))
    assert not is_minimal_separator(c4, vs(0, 1))
    assert not is_minimal_separator(k4, vs(0, 1, 2))


@pytest.mark.parametrize("p", [2, 3, 4, 5])
def test_prism_counts(p):
    g = prism(p)
    assert len(enumerate_minimal_separators(g)) == 2 ** p - 2
    assert len(enumerate_pmcs(g)) == p * 2 ** (p - 1)


def test_separator_examples(c5, k4):
    assert enumerate_minimal_separators(c5) == [vs(0, 2), vs(0, 3), vs(1, 3), vs(1, 4), vs(2, 4)]
    assert enumerate_minimal_separators(k4) == []
    assert sum(1 for s in range(1 << 6) if is_minimal_separator(prism(3), s)) == 6


def test_is_pmc_examples(c4, k4):
    assert is_pmc(k4, k4.vertices)
    assert not is_pmc(c4, c4.vertices)
    assert is_pmc(c4, vs(0, 1, 2))
    assert not is_pmc(c4, vs(0, 2))


def test_pmc_examples(p3, c5):
    assert _omegas(p3) == [vs(0, 1), vs(1, 2)]
    assert len(_omegas(c5)) == 10
    assert _omegas(complete(1)) == [vs(0)]
    assert _omegas(complete(0)) == []


def test_adhesions(c4, k4, p4):
    assert adhesions(c4, vs(0, 1, 2)) == [vs(0, 2)]
    assert adhesions(k4, k4.vertices) == []
    assert adhesions(p4, vs(1, 2)) == [vs(1), vs(2)]
    with pytest.raises(NotAPmc):
        adhesions(c4, c4.vertices)


def test_budgets(prism4):
    with pytest.raises(BudgetExceeded):
        enumerate_minimal_separators(prism4, budget=5)
    with pytest.raises(BudgetExceeded):
        enumerate_pmcs(prism4, budget=5)


def test_large_graphs_use_x_rec_route(monkeypatch):
    expected = {g: _omegas(g) for g in (prism(3), cycle(5), complete(4))}
    monkeypatch.setattr(settings, "pmc_scan_max_n", 0)
    for g, omegas in expected.items():
        assert _omegas(g) == omegas


def test_large_graph_outside_class_c_is_rejected(monkeypatch):
    monkeypatch.setattr(settings, "pmc_scan_max_n", 0)
    with pytest.raises(TooLarge):
        enumerate_pmcs(cycle(6))


@small_graph_settings
@given(graphs(max_n=8))
def test_separators_match_subset_scan(g):
    assert enumerate_minimal_separators(g) == canonical_family(brute_minimal_separators(g))


@sweep_settings
@given(graphs(max_n=6))
def test_pmcs_match_minimal_completions(g):
    assert _omegas(g) == brute_pmcs_by_definition(g)


@small_graph_settings
@given(graphs(max_n=8))
def test_pmcs_form_an_antichain_with_separator_adhesions(g):
    records = enumerate_pmcs(g)
    omegas = [record.omega for record in records]
    for a in omegas:
        for b in omegas:
            assert a == b or a & ~b
    separators = set(enumerate_minimal_separators(g))
    for record in records:
        assert all(s in separators for s in record.adhesions)


@sweep_settings
@given(graphs(max_n=7))
def test_x_rec_route_agrees_with_scan_on_class_c(g):
    assume(is_in_class_c(g))
    expected = _omegas(g)
    original = settings.pmc_scan_max_n
    settings.pmc_scan_max_n = 0
    try:
        assert _omegas(g) == expected
    finally:
        settings.pmc_scan_max_n = original
