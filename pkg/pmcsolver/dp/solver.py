"""Canonical dynamic program over a container family and the end-to-end solvers.

Solutions are compared by ≺: larger total weight first, then the
characteristic vector that is smaller at the first differing vertex.
"""
import logging
from enum import Enum
from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple

from pmcsolver.config.settings import settings
from pmcsolver.errors import InvalidArgument, NotLongHoleFree, NotP5Free
from pmcsolver.dp.treewidth import is_feasible
from pmcsolver.graphs.bitset import VertexSet, canonical_family, lex_earlier, subsets_up_to
from pmcsolver.graphs.graph import (
    Graph,
    WeightMap,
    check_weights,
    connected_components,
    total_weight,
    unit_weights,
)
from pmcsolver.graphs.recognition import find_long_hole, find_p5
from pmcsolver.pmcs.containers import container_family
from pmcsolver.separators.minsep import enumerate_pmcs

logger = logging.getLogger(__name__)


class DpState(NamedTuple):
    a: VertexSet
    q: VertexSet
    d: VertexSet


class Strategy(str, Enum):
    """Where the container family for ``solve_tw_subgraph`` comes from."""

    ALL_PMCS = "all-pmcs"
    CLASS_C = "class-c"
    FAMILY = "family"


def precedes(weights: WeightMap, b1: VertexSet, b2: VertexSet) -> bool:
    """B1 ≺ B2."""
    w1 = total_weight(weights, b1)
    w2 = total_weight(weights, b2)
    if w1 != w2:
        return w1 > w2
    return lex_earlier(b1, b2)


def glue(q: VertexSet, parts: Iterable[VertexSet]) -> VertexSet:
    result = q
    for part in parts:
        result |= part
    return result


class ContainerDP:
    """Round-based DP computing Υ(A, Q, D) for every state.

    Values start at ∅ and only move down in ≺; every stored value is a
    feasible solution to its state.
    """

    def __init__(self, g: Graph, weights: WeightMap, family: Sequence[VertexSet], k: int):
        if k < 1:
            raise InvalidArgument(f"k must be positive, got {k}")
        full = g.vertices
        for a in family:
            if a & ~full:
                raise InvalidArgument("family sets must lie inside V(G)")
        self.g = g
        self.weights = weights
        self.k = k
        self.family: List[VertexSet] = canonical_family(family)
        self.components: Dict[VertexSet, List[VertexSet]] = {
            a: connected_components(g, a) for a in self.family
        }
        self.traces: Dict[VertexSet, List[VertexSet]] = {
            a: list(subsets_up_to(a, k)) for a in self.family
        }
        self.table: Dict[DpState, VertexSet] = {}
        for a in self.family:
            for q in self.traces[a]:
                for d in self.components[a]:
                    self.table[DpState(a, q, d)] = 0
        self._touching: Dict[Tuple[VertexSet, VertexSet], List[VertexSet]] = {}
        self.rounds_run = 0

    def _touching_components(self, a2: VertexSet, d: VertexSet) -> List[VertexSet]:
        key = (a2, d)
        if key not in self._touching:
            self._touching[key] = [d2 for d2 in self.components[a2] if d2 & d]
        return self._touching[key]

    def _improve(self, state: DpState) -> bool:
        a, q, d = state
        best = self.table[state]
        improved = False
        for a2 in self.family:
            base = q & a2
            room = self.k - base.bit_count()
            if room < 0:
                continue
            touching = self._touching_components(a2, d)
            for extra in subsets_up_to(a2 & ~a, room):
                q2 = base | extra
                candidate = d & glue(q2, (self.table[DpState(a2, q2, d2)] for d2 in touching))
                if candidate == best or not precedes(self.weights, candidate, best):
                    continue
                if is_feasible(self.g, self.k, q, candidate):
                    best = candidate
                    improved = True
        if improved:
            self.table[state] = best
        return improved

    def run(self, visit_order: Optional[Sequence[int]] = None) -> VertexSet:
        """Run up to n rounds and return the ≺-minimum glued solution.

        Args:
            visit_order: Optional permutation of the state indices visited in
                each round; the result does not depend on it.
        """
        states = list(self.table)
        if visit_order is not None:
            if sorted(visit_order) != list(range(len(states))):
                raise InvalidArgument("visit_order must permute the state indices")
            states = [states[i] for i in visit_order]

        for round_no in range(max(self.g.n, 1)):
            updates = sum(1 for state in states if self._improve(state))
            self.rounds_run = round_no + 1
            logger.debug(f"round {round_no + 1}: {updates} updates")
            if updates == 0:
                break

        best = 0
        for a in self.family:
            comps = self.components[a]
            for q in self.traces[a]:
                assembled = glue(q, (self.table[DpState(a, q, d)] for d in comps))
                if assembled == best or not precedes(self.weights, assembled, best):
                    continue
                if not is_feasible(self.g, self.k, q, assembled & ~q):
                    logger.warning(f"discarding infeasible assembly for A={a:#x}, Q={q:#x}")
                    continue
                best = assembled
        logger.info(
            f"DP over {len(self.family)} containers and {len(self.table)} states "
            f"finished after {self.rounds_run} rounds, weight {total_weight(self.weights, best)}"
        )
        return best


def solve_with_containers(
    g: Graph,
    w: Optional[WeightMap],
    family: Sequence[VertexSet],
    k: int,
    visit_order: Optional[Sequence[int]] = None,
) -> VertexSet:
    """≺-minimum maximum-weight vertex set inducing treewidth < k.

    Exact whenever ``family`` holds an F-container for every bag of a suitable
    decomposition of the optimum F, in particular when it holds every PMC.
    """
    weights = check_weights(g, w)
    if not family:
        logger.warning("Empty container family; returning the empty solution")
        return 0
    return ContainerDP(g, weights, family, k).run(visit_order)


def solve_tw_subgraph(
    g: Graph,
    w: Optional[WeightMap],
    k: int,
    strategy: Strategy = Strategy.ALL_PMCS,
    family: Optional[Sequence[VertexSet]] = None,
    budget: Optional[int] = None,
) -> VertexSet:
    """Maximum-weight induced subgraph of treewidth < k with the chosen family.

    Args:
        g: Input graph
        w: Vertex weights (None for unit weights)
        k: Treewidth bound (exclusive)
        strategy: Source of the container family
        family: Explicit family, required for ``Strategy.FAMILY``
        budget: Enumeration budget for the family builders

    Returns:
        The ≺-minimum optimal vertex set
    """
    weights = check_weights(g, w)
    if k < 1:
        raise InvalidArgument(f"k must be positive, got {k}")
    if k >= g.n:
        return sum(1 << v for v in range(g.n) if weights[v] > 0)

    if strategy is Strategy.ALL_PMCS:
        containers = [record.omega for record in enumerate_pmcs(g, budget)]
    elif strategy is Strategy.CLASS_C:
        containers = container_family(g, k, budget)
    elif family is None:
        raise InvalidArgument("strategy 'family' needs an explicit family")
    else:
        containers = list(family)
    logger.info(f"Solving tw<{k} on {g} with {len(containers)} containers ({strategy.value})")
    return solve_with_containers(g, weights, containers, k)


def _auto_strategy(g: Graph) -> Strategy:
    return Strategy.ALL_PMCS if g.n <= settings.all_pmcs_max_n else Strategy.CLASS_C


def solve_mwis(g: Graph, w: Optional[WeightMap] = None) -> VertexSet:
    """Maximum-weight independent set of a long-hole-free graph."""
    hole = find_long_hole(g, 5)
    if hole is not None:
        raise NotLongHoleFree(f"graph has a long hole {hole}")
    return solve_tw_subgraph(g, w, 1, _auto_strategy(g))


def solve_fvs(g: Graph) -> VertexSet:
    """Minimum feedback vertex set of a P5-free graph."""
    path = find_p5(g)
    if path is not None:
        raise NotP5Free(f"graph has an induced P5 {path}")
    forest = solve_tw_subgraph(g, unit_weights(g.n), 2, _auto_strategy(g))
    return g.vertices & ~forest
