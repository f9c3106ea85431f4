"""Minimal separators, full components and potential maximal cliques."""
import logging
from typing import List, NamedTuple, Optional

from pmcsolver.config.settings import settings
from pmcsolver.errors import BudgetExceeded, NotAPmc, TooLarge
from pmcsolver.graphs.bitset import VertexSet, canonical_family, iter_bits
from pmcsolver.graphs.graph import (
    Graph,
    closed_neighborhood,
    connected_components,
    open_neighborhood,
)
from pmcsolver.graphs.recognition import classify

logger = logging.getLogger(__name__)


class Separation(NamedTuple):
    """Components of G - S split by whether they see all of S."""

    s: VertexSet
    full_components: List[VertexSet]
    other_components: List[VertexSet]


class PmcRecord(NamedTuple):
    omega: VertexSet
    adhesions: List[VertexSet]


def full_components(g: Graph, s: VertexSet, removed: VertexSet = 0) -> Separation:
    full, other = [], []
    for component in connected_components(g, s | removed):
        if open_neighborhood(g, component, removed) == s:
            full.append(component)
        else:
            other.append(component)
    return Separation(s, full, other)


def is_minimal_separator(g: Graph, s: VertexSet, removed: VertexSet = 0) -> bool:
    """S is a minimal separator iff it has at least two full components."""
    count = 0
    for component in connected_components(g, s | removed):
        if open_neighborhood(g, component, removed) == s:
            count += 1
            if count == 2:
                return True
    return False


def enumerate_minimal_separators(g: Graph, budget: Optional[int] = None) -> List[VertexSet]:
    """All minimal separators by neighborhood-expansion closure.

    Seeds are N(C) for C in cc(G - N[v]); a separator S in the queue expands
    to N(C) for every C in cc(G - (S | N[x])), x in S, until fixpoint.
    """
    budget = settings.default_budget if budget is None else budget
    found = set()
    queue: List[VertexSet] = []

    def offer(candidate: VertexSet) -> None:
        if candidate in found or not is_minimal_separator(g, candidate):
            return
        found.add(candidate)
        if len(found) > budget:
            raise BudgetExceeded(f"more than {budget} minimal separators")
        queue.append(candidate)

    for v in range(g.n):
        for component in connected_components(g, closed_neighborhood(g, 1 << v)):
            offer(open_neighborhood(g, component))
    while queue:
        s = queue.pop()
        for x in iter_bits(s):
            for component in connected_components(g, s | closed_neighborhood(g, 1 << x)):
                offer(open_neighborhood(g, component))
    logger.info(f"Enumerated {len(found)} minimal separators of {g}")
    return canonical_family(found)


def is_pmc(g: Graph, omega: VertexSet, removed: VertexSet = 0) -> bool:
    """Test whether Omega is a PMC of G - removed.

    Omega is a PMC iff no component D of G - Omega has N(D) = Omega and every
    nonedge inside Omega is covered, i.e. both ends lie in N(D) for some D.
    """
    neighborhoods = []
    for component in connected_components(g, omega | removed):
        nbhd = open_neighborhood(g, component, removed)
        if nbhd == omega:
            return False
        neighborhoods.append(nbhd)
    for x in iter_bits(omega):
        missing = omega & ~g.adjacency[x] & ~(1 << x)
        # only pairs x < y
        missing &= ~((1 << (x + 1)) - 1)
        if not missing:
            continue
        covered = 0
        for nbhd in neighborhoods:
            if nbhd >> x & 1:
                covered |= nbhd
        if missing & ~covered:
            return False
    return True


def adhesions(g: Graph, omega: VertexSet, removed: VertexSet = 0) -> List[VertexSet]:
    """N(D) for every component D of G - Omega, in component order."""
    if not is_pmc(g, omega, removed):
        raise NotAPmc(f"{sorted(iter_bits(omega))} is not a PMC")
    return [
        open_neighborhood(g, component, removed)
        for component in connected_components(g, omega | removed)
    ]


def enumerate_pmcs(g: Graph, budget: Optional[int] = None) -> List[PmcRecord]:
    """Every PMC of G with its adhesions, in canonical order.

    Up to ``settings.pmc_scan_max_n`` vertices this is a subset scan; above it
    the candidates come from X_rec over the components of all minimal
    separators, which holds every PMC when the graph is in class C.
    """
    budget = settings.default_budget if budget is None else budget
    if g.n <= settings.pmc_scan_max_n:
        found = []
        for omega in range(1, 1 << g.n):
            if is_pmc(g, omega):
                found.append(omega)
                if len(found) > budget:
                    raise BudgetExceeded(f"more than {budget} PMCs")
    else:
        from pmcsolver.pmcs.containers import x_rec

        if not classify(g).in_class_c:
            raise TooLarge(
                f"subset scan capped at {settings.pmc_scan_max_n} vertices and the graph is "
                f"outside class C"
            )
        y_family = set()
        for s in enumerate_minimal_separators(g, budget):
            y_family.update(connected_components(g, s))
        found = [omega for omega in x_rec(g, list(y_family), budget) if is_pmc(g, omega)]
        if len(found) > budget:
            raise BudgetExceeded(f"more than {budget} PMCs")
    logger.info(f"Enumerated {len(found)} PMCs of {g}")
    return [PmcRecord(omega, adhesions(g, omega)) for omega in canonical_family(found)]
