"""Brute-force oracles used to cross-check the solvers on small graphs."""
import logging
from itertools import permutations
from typing import List, Optional, Set

import networkx as nx

from pmcsolver.config.settings import settings
from pmcsolver.errors import TooLarge
from pmcsolver.dp.treewidth import exact_treewidth_le
from pmcsolver.graphs.bitset import VertexSet, canonical_family, iter_bits
from pmcsolver.graphs.graph import Graph, WeightMap, check_weights, total_weight
from pmcsolver.separators.minsep import is_minimal_separator

logger = logging.getLogger(__name__)


def _iota(mask: VertexSet, n: int) -> tuple:
    return tuple(mask >> v & 1 for v in range(n))


def brute_tw_subgraph(g: Graph, w: Optional[WeightMap], k: int) -> VertexSet:
    """≺-minimum maximum-weight S with treewidth(G[S]) < k, by full subset scan."""
    if g.n > settings.brute_force_max_n:
        raise TooLarge(f"subset scan capped at {settings.brute_force_max_n} vertices, got {g.n}")
    weights = check_weights(g, w)
    ordered = sorted(
        range(1 << g.n), key=lambda s: (-total_weight(weights, s), _iota(s, g.n))
    )
    for subset in ordered:
        if exact_treewidth_le(g.induced(subset), k - 1):
            return subset
    return 0


def brute_mwis_weight(g: Graph, w: Optional[WeightMap] = None) -> int:
    """Maximum weight of an independent set, by scanning maximal cliques of the complement."""
    weights = check_weights(g, w)
    complement = nx.complement(g.to_networkx())
    best = 0
    for clique in nx.find_cliques(complement):
        best = max(best, sum(weights[v] for v in clique))
    return best


def brute_minimal_separators(g: Graph) -> List[VertexSet]:
    """Every subset with two full components, by subset scan."""
    if g.n > settings.brute_force_max_n:
        raise TooLarge(f"subset scan capped at {settings.brute_force_max_n} vertices, got {g.n}")
    return [s for s in range(1 << g.n) if is_minimal_separator(g, s)]


def _fill_edges(g: Graph, order) -> frozenset:
    rows = list(g.adjacency)
    fill: Set[tuple] = set()
    eliminated = 0
    for v in order:
        later = rows[v] & ~eliminated
        for x in iter_bits(later):
            missing = later & ~rows[x] & ~(1 << x)
            for y in iter_bits(missing):
                if x < y:
                    fill.add((x, y))
                rows[x] |= 1 << y
                rows[y] |= 1 << x
        eliminated |= 1 << v
    return frozenset(fill)


def brute_pmcs_by_definition(g: Graph) -> List[VertexSet]:
    """Maximal cliques of all minimal chordal completions.

    Every elimination order yields a chordal completion, and every minimal
    one is produced by its own perfect elimination order, so the
    inclusion-minimal fill sets over all n! orders are exactly the minimal
    completions.
    """
    if g.n > settings.definition_oracle_max_n:
        raise TooLarge(
            f"definition oracle capped at {settings.definition_oracle_max_n} vertices, got {g.n}"
        )
    fills = {_fill_edges(g, order) for order in permutations(range(g.n))}
    minimal = [f for f in fills if not any(other < f for other in fills)]
    pmcs = set()
    for fill in minimal:
        completed = g.to_networkx()
        completed.add_edges_from(fill)
        if not nx.is_chordal(completed):
            raise AssertionError("elimination fill is not chordal")
        for clique in nx.find_cliques(completed):
            pmcs.add(sum(1 << v for v in clique))
    logger.debug(f"{len(minimal)} minimal completions, {len(pmcs)} PMCs")
    return canonical_family(pmcs)
