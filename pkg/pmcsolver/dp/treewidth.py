"""Exact treewidth decisions for small graphs."""
import logging
from functools import lru_cache

import networkx as nx
from networkx.algorithms.approximation import treewidth_min_fill_in

from pmcsolver.config.settings import settings
from pmcsolver.errors import InvalidArgument, TooLarge
from pmcsolver.graphs.bitset import VertexSet, iter_bits
from pmcsolver.graphs.graph import Graph, complete_on, component_of, open_neighborhood

logger = logging.getLogger(__name__)


def degeneracy(g: Graph) -> int:
    """Largest core number; a lower bound on the treewidth."""
    if g.edge_count == 0:
        return 0
    return max(nx.core_number(g.to_networkx()).values())


def _elimination_reaches_all(g: Graph, bound: int) -> bool:
    # S is reachable iff its vertices can be eliminated first, each with at
    # most ``bound`` later vertices reachable through S.
    full = g.vertices
    seen = {0}
    stack = [0]
    while stack:
        eliminated = stack.pop()
        if eliminated == full:
            return True
        for v in iter_bits(full & ~eliminated):
            grown = eliminated | (1 << v)
            if grown in seen:
                continue
            blob = component_of(g, v, grown)
            if open_neighborhood(g, blob).bit_count() <= bound:
                seen.add(grown)
                stack.append(grown)
    return False


def exact_treewidth_le(g: Graph, bound: int) -> bool:
    """Decide treewidth(g) <= bound.

    Cheap cases first: bound 0 means edgeless, bound 1 means forest, and the
    degeneracy / min-fill bounds settle most instances. The rest is decided by
    a search over eliminated vertex sets.
    """
    if bound < 0:
        return g.n == 0
    if bound >= g.n - 1:
        return True
    if bound == 0:
        return g.edge_count == 0
    if bound == 1:
        return nx.is_forest(g.to_networkx())
    if degeneracy(g) > bound:
        return False
    upper, _ = treewidth_min_fill_in(g.to_networkx())
    if upper <= bound:
        return True
    if g.n > settings.treewidth_max_n:
        raise TooLarge(f"exact treewidth capped at {settings.treewidth_max_n} vertices, got {g.n}")
    return _elimination_reaches_all(g, bound)


@lru_cache(maxsize=1 << 16)
def is_feasible(g: Graph, k: int, q: VertexSet, p: VertexSet) -> bool:
    """Whether G[P ∪ Q] has a decomposition of width < k with Q inside one bag."""
    if q.bit_count() > k:
        raise InvalidArgument(f"|Q| = {q.bit_count()} exceeds k = {k}")
    if p & q:
        raise InvalidArgument("P and Q must be disjoint")
    if not p:
        return True
    keep = p | q
    sub = complete_on(g, q).induced(keep)
    return exact_treewidth_le(sub, k - 1)
