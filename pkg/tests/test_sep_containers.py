from functools import partial

import pytest

from pmcsolver.errors import (
    BudgetExceeded,
    InvalidArgument,
    NoPrivateVertex,
    NotAClique,
    PrimitiveSeparator,
)
from pmcsolver.graphs.bitset import iter_bits
from pmcsolver.graphs.graph import is_clique, open_neighborhood
from pmcsolver.graphs.recognition import classify
from pmcsolver.harness.generators import complete, cycle, prism, random_class_c_graph
from pmcsolver.harness.oracles import brute_tw_subgraph
from pmcsolver.harness.verify import anticomplete_pair_exists, coloring_of
from pmcsolver.separators.containers import (
    ProfileClass,
    Roles,
    assemble_container,
    build_separator_witness,
    classify_profile,
    enumerate_family_f1,
    extend_family_f2,
    is_container,
    measuring_sets,
    minimal_dominating_clique_z,
    primitive_family_f0,
    private_vertex_f,
    witness_container_for_separator,
)
from pmcsolver.separators.minsep import enumerate_minimal_separators, full_components

from .strategies import vs

# prism(4): a_i = i, b_i = 4 + i; S = {a1, a2, b3, b4} in 1-based naming
PRISM_S = vs(0, 1, 6, 7)
PRISM_L = vs(2, 3)
PRISM_R = vs(4, 5)
PRISM_F = vs(3, 4)


@pytest.fixture
def prism_witness(prism4):
    coloring = coloring_of(prism4, PRISM_F)
    return build_separator_witness(prism4, PRISM_S, PRISM_L, PRISM_R, coloring, PRISM_F)


def test_is_container():
    assert is_container(vs(0, 1, 5), vs(0, 1), vs(2, 3))
    assert not is_container(vs(0, 1, 2), vs(0, 1), vs(2, 3))
    assert is_container(vs(0, 1, 2), vs(0, 1), vs(2, 3), p=1)
    assert not is_container(vs(0), vs(0, 1), 0)


def test_primitive_family_f0(c4, k4):
    f0 = primitive_family_f0(c4)
    assert vs(0, 2) in f0 and vs(1, 3) in f0
    assert primitive_family_f0(k4) == []


def test_minimal_dominating_clique(p4, prism4):
    assert minimal_dominating_clique_z(p4, vs(1), vs(2, 3)) == vs(2)
    assert minimal_dominating_clique_z(prism4, PRISM_S, PRISM_L) == PRISM_L


def test_minimal_dominating_clique_errors(p4):
    c8 = cycle(8)
    with pytest.raises(NotAClique):
        minimal_dominating_clique_z(c8, vs(0, 4), vs(1, 2, 3))
    with pytest.raises(InvalidArgument):
        minimal_dominating_clique_z(p4, vs(0, 3), vs(1))


def test_private_vertex_f(p4, k4, prism4):
    assert private_vertex_f(prism4, PRISM_S, PRISM_L, 2) == 6
    assert private_vertex_f(prism4, PRISM_S, PRISM_L, 3) == 7
    assert private_vertex_f(p4, vs(1), vs(2), 2) == 1
    with pytest.raises(NoPrivateVertex):
        private_vertex_f(k4, vs(0, 1), vs(2, 3), 2)


def test_prism_witness_roles(prism_witness):
    assert prism_witness.z == PRISM_L
    assert prism_witness.z_prime == PRISM_R
    assert prism_witness.f == {2: 6, 3: 7, 4: 0, 5: 1}
    assert prism_witness.g_map == {2: 4, 3: 4, 4: 2, 5: 2}
    assert prism_witness.roles == Roles(
        a1=2, a2=3, b1=6, b2=7, r1=4, r2=4, c1=0, c2=1, d1=4, d2=5, l1=2, l2=2
    )
    assert prism_witness.pivots_l == (3,)
    assert prism_witness.pivots_r == (4,)


def test_prism_measuring_sets(prism4, prism_witness):
    assert measuring_sets(prism4, prism_witness) == (vs(1), vs(7))


def test_assemble_container_from_witness(prism4, prism_witness):
    assert assemble_container(prism4, prism_witness) == vs(0, 1, 5, 6, 7)


def test_prism_profiles(prism4, prism_witness):
    assert classify_profile(prism4, prism_witness, 0) is ProfileClass.UNAMBIGUOUS
    assert classify_profile(prism4, prism_witness, 7) is ProfileClass.UNAMBIGUOUS
    assert classify_profile(prism4, prism_witness, 2) is ProfileClass.STRICTLY_L
    assert classify_profile(prism4, prism_witness, 5) is ProfileClass.STRICTLY_R
    assert ProfileClass.BOTH_LR.l_ambiguous and ProfileClass.BOTH_LR.r_ambiguous
    assert not ProfileClass.UNAMBIGUOUS.l_ambiguous


def test_prism_witness_container(prism4):
    coloring = coloring_of(prism4, PRISM_F)
    container = witness_container_for_separator(
        prism4, PRISM_S, PRISM_L, PRISM_R, coloring, PRISM_F
    )
    assert container == vs(0, 1, 5, 6, 7)
    assert is_container(container, PRISM_S, PRISM_F)


def test_primitive_separator_rejected(c4):
    with pytest.raises(PrimitiveSeparator):
        build_separator_witness(c4, vs(0, 2), vs(1), vs(3), [vs(1, 3)], vs(1, 3))


def test_witness_needs_two_full_components(c4):
    with pytest.raises(InvalidArgument):
        build_separator_witness(c4, vs(0, 2), vs(1), vs(1), [], 0)


@pytest.mark.parametrize("p", [3, 4, 5])
def test_prism_witness_containers_hold(p):
    g = prism(p)
    f_vertices = brute_tw_subgraph(g, None, 1)
    coloring = coloring_of(g, f_vertices)
    for s in enumerate_minimal_separators(g):
        full = full_components(g, s).full_components
        for l_side in full:
            for r_side in full:
                if l_side == r_side:
                    continue
                try:
                    a = witness_container_for_separator(g, s, l_side, r_side, coloring, f_vertices)
                except PrimitiveSeparator:
                    continue
                assert is_container(a, s, f_vertices)


def test_family_f1_examples(p4):
    f1 = enumerate_family_f1(p4, 1)
    assert vs(1) in f1 and vs(2) in f1
    assert enumerate_family_f1(complete(1), 1) == []


def test_family_f1_budget(prism4):
    with pytest.raises(BudgetExceeded):
        enumerate_family_f1(prism4, 1, budget=0)


def test_extend_family_f2(p4):
    assert extend_family_f2(p4, [vs(1)]) == [vs(1)]
    assert extend_family_f2(p4, []) == []
    f2 = extend_family_f2(p4, [vs(0, 1)])
    assert f2 == [vs(0, 1), vs(1)]


@pytest.mark.slow
@pytest.mark.parametrize("seed", range(6))
def test_separators_outside_f2_have_anticomplete_pair(seed):
    g = random_class_c_graph(8, 0.4, seed)
    for k in (1, 2):
        f_vertices = brute_tw_subgraph(g, None, k)
        f2 = set(extend_family_f2(g, enumerate_family_f1(g, k)))
        for s in enumerate_minimal_separators(g):
            full = full_components(g, s).full_components
            if s in f2:
                continue
            for l_side in full:
                for r_side in full:
                    if l_side != r_side:
                        assert anticomplete_pair_exists(g, s, l_side, r_side, f_vertices)


@pytest.mark.parametrize("seed", range(8))
def test_dominating_sets_are_cliques_in_class_c(seed):
    g = random_class_c_graph(9, 0.35, seed)
    assert classify(g).in_class_c
    for s in enumerate_minimal_separators(g):
        for d in full_components(g, s).full_components:
            z = minimal_dominating_clique_z(g, s, d)
            assert is_clique(g, z)
            assert not s & ~open_neighborhood(g, z)


WITNESS_GRAPHS = [pytest.param(partial(prism, p), id=f"prism{p}") for p in (3, 4, 5)] + [
    pytest.param(partial(random_class_c_graph, 7 + seed % 3, 0.35, seed), id=f"class-c-{seed}")
    for seed in range(8)
]


def _witnesses(g, k):
    f_vertices = brute_tw_subgraph(g, None, k)
    coloring = coloring_of(g, f_vertices)
    for s in enumerate_minimal_separators(g):
        full = full_components(g, s).full_components
        for l_side in full:
            for r_side in full:
                if l_side == r_side:
                    continue
                try:
                    witness = build_separator_witness(g, s, l_side, r_side, coloring, f_vertices)
                except PrimitiveSeparator:
                    continue
                yield witness, coloring, f_vertices


def _comparable(x, y):
    return not x & ~y or not y & ~x


@pytest.mark.parametrize("make_graph", WITNESS_GRAPHS)
def test_witness_profiles_and_measuring_sets(make_graph):
    g = make_graph()
    adj = g.adjacency
    for witness, _, _ in _witnesses(g, 1):
        z_l, z_r = measuring_sets(g, witness)
        classes = [classify_profile(g, witness, v) for v in range(g.n)]
        for x in iter_bits(witness.s):
            assert classes[x] is not ProfileClass.NOT_A_PROFILE
            if classes[x].r_ambiguous:
                assert adj[x] & z_l & witness.l_side
            if classes[x].l_ambiguous:
                assert adj[x] & z_r & witness.r_side
        # any nonadjacent pair is an independent set
        for i1 in range(g.n):
            for i2 in iter_bits(~adj[i1] & g.vertices & ~((2 << i1) - 1)):
                if classes[i1].l_ambiguous and classes[i2].l_ambiguous:
                    assert _comparable(adj[i1] & z_r, adj[i2] & z_r)
                if classes[i1].r_ambiguous and classes[i2].r_ambiguous:
                    assert _comparable(adj[i1] & z_l, adj[i2] & z_l)


def _assert_witness_containers(g, k):
    for witness, coloring, f_vertices in _witnesses(g, k):
        a = witness_container_for_separator(
            g, witness.s, witness.l_side, witness.r_side, coloring, f_vertices
        )
        assert a == assemble_container(g, witness)
        assert is_container(a, witness.s, f_vertices)


@pytest.mark.parametrize("k", [1, 2])
@pytest.mark.parametrize("make_graph", WITNESS_GRAPHS)
def test_witness_containers_hold_on_class_c(make_graph, k):
    _assert_witness_containers(make_graph(), k)


@pytest.mark.slow
@pytest.mark.parametrize("seed", range(300))
def test_witness_containers_hold_up_to_twelve_vertices(seed):
    # sparse and dense samples; class C is rare around p = 0.4 at this size
    g = random_class_c_graph(10 + seed % 3, 0.2 if seed % 2 else 0.7, seed)
    for k in (1, 2):
        _assert_witness_containers(g, k)
