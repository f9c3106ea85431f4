"""Containers for potential maximal cliques.

Impure PMCs (some adhesion outside F2) get a container assembled from four
separator containers and a common neighborhood; pure PMCs are recovered
exactly through survival sequences and PMC lifting.
"""
import logging
from typing import Iterable, List, NamedTuple, Optional, Sequence, Set, Tuple

from pmcsolver.config.settings import settings
from pmcsolver.errors import (
    BudgetExceeded,
    ContainerMissesPmc,
    InvalidArgument,
    JNotIndependent,
    LiftFailed,
    NoCoveringComponent,
    NoSuchPair,
    NotAPmc,
    NotInClassC,
    NoZVertices,
    PrimitiveSeparator,
    PurePmc,
    VNotCovered,
)
from pmcsolver.graphs.bitset import (
    VertexSet,
    canonical_family,
    iter_bits,
    subsets_up_to,
    unions_up_to,
)
from pmcsolver.graphs.graph import (
    Graph,
    components_within,
    connected_components,
    is_independent,
    open_neighborhood,
)
from pmcsolver.graphs.recognition import classify
from pmcsolver.separators.containers import (
    enumerate_family_f1,
    extend_family_f2,
    witness_container_for_separator,
)
from pmcsolver.separators.minsep import full_components, is_pmc

logger = logging.getLogger(__name__)


class SurvivalSequence(NamedTuple):
    order: Tuple[int, ...]
    end_pmc: VertexSet


def covering_component(g: Graph, omega: VertexSet, j: VertexSet) -> VertexSet:
    """Smallest component D of G - Omega with J ⊆ N(D).

    Raises:
        JNotIndependent: J has an edge.
        NoCoveringComponent: no such component (the graph is outside class C).
    """
    if j.bit_count() <= 1:
        raise InvalidArgument("j must have at least two vertices")
    if not is_independent(g, j):
        raise JNotIndependent(f"{sorted(iter_bits(j))} is not independent")
    for component in connected_components(g, omega):
        if not j & ~open_neighborhood(g, component):
            return component
    raise NoCoveringComponent(f"no component covers {sorted(iter_bits(j))}")


def two_covering_components(g: Graph, omega: VertexSet, v: int) -> Tuple[VertexSet, VertexSet]:
    """Components D1, D2 (possibly equal) whose neighborhoods contain v and
    together cover Omega - N(v). The first valid pair in component order wins."""
    seeing = []
    for component in connected_components(g, omega):
        nbhd = open_neighborhood(g, component)
        if nbhd >> v & 1:
            seeing.append((component, nbhd))
    if not seeing:
        raise VNotCovered(f"no component of G - Omega sees vertex {v}")
    target = omega & ~g.adjacency[v]
    for i, (d1, n1) in enumerate(seeing):
        for d2, n2 in seeing[i:]:
            if not target & ~(n1 | n2):
                return d1, d2
    raise NoSuchPair(f"no two components cover Omega - N({v})")


def _separator_container(
    g: Graph,
    s: VertexSet,
    f2: Set[VertexSet],
    coloring: Sequence[VertexSet],
    f_vertices: VertexSet,
) -> VertexSet:
    if s in f2:
        return s
    full = full_components(g, s).full_components
    if len(full) < 2:
        raise NotAPmc(f"adhesion {sorted(iter_bits(s))} is not a minimal separator")
    try:
        return witness_container_for_separator(g, s, full[0], full[1], coloring, f_vertices)
    except PrimitiveSeparator:
        return s


def impure_pmc_container(
    g: Graph,
    omega: VertexSet,
    f2: Iterable[VertexSet],
    f_vertices: VertexSet,
    coloring: Sequence[VertexSet],
) -> VertexSet:
    """F-container for an impure PMC.

    Picks the first adhesion S = N(L) outside F2 and a second full component
    R of S, then z_l, z_r in S anticomplete to the solution outside S ∪ L
    (resp. S ∪ R). The result is the union of containers for the four
    separators covering Omega around z_l and z_r, plus N(z_l) ∩ N(z_r).

    Args:
        g: Input graph in class C
        omega: A PMC of g
        f2: The separator family F2
        f_vertices: V(F) of the solution
        coloring: Proper coloring of G[f_vertices]

    Returns:
        A superset of omega meeting f_vertices only inside omega
    """
    f2_set = set(f2)
    picked = None
    for component in connected_components(g, omega):
        s = open_neighborhood(g, component)
        if s not in f2_set:
            picked = (s, component)
            break
    if picked is None:
        raise PurePmc(f"every adhesion of {sorted(iter_bits(omega))} is in F2")
    s, l_side = picked
    others = [c for c in full_components(g, s).full_components if c != l_side]
    if not others:
        raise NotAPmc(f"adhesion {sorted(iter_bits(s))} has a single full component")
    r_side = others[0]

    outside_l = f_vertices & ~(s | l_side)
    outside_r = f_vertices & ~(s | r_side)
    z_l = next((z for z in iter_bits(s) if not g.adjacency[z] & outside_l), None)
    z_r = next((z for z in iter_bits(s) if not g.adjacency[z] & outside_r), None)
    if z_l is None or z_r is None:
        raise NoZVertices(f"separator {sorted(iter_bits(s))} has no anticomplete vertex pair")

    result = g.adjacency[z_l] & g.adjacency[z_r]
    for z in (z_l, z_r):
        for component in two_covering_components(g, omega, z):
            separator = open_neighborhood(g, component)
            result |= _separator_container(g, separator, f2_set, coloring, f_vertices)
    if omega & ~result:
        raise ContainerMissesPmc(f"assembled container misses {sorted(iter_bits(omega & ~result))}")
    return result


def pmc_lift(g: Graph, order: Sequence[int], end_pmc: VertexSet) -> VertexSet:
    """The unique PMC of G for which ``order`` is a survival sequence ending
    in ``end_pmc``.

    Walks the order backwards: the current set either stays a PMC once x_i
    is reinserted or has to absorb x_i.
    """
    if len(set(order)) != len(order):
        raise InvalidArgument("order must list distinct vertices")
    prefixes = [0]
    for x in order:
        prefixes.append(prefixes[-1] | (1 << x))
    if not is_pmc(g, end_pmc, prefixes[-1]):
        raise NotAPmc(f"{sorted(iter_bits(end_pmc))} is not a PMC of the reduced graph")
    current = end_pmc
    for i in range(len(order), 0, -1):
        removed = prefixes[i - 1]
        if is_pmc(g, current, removed):
            continue
        grown = current | (1 << order[i - 1])
        if not is_pmc(g, grown, removed):
            raise LiftFailed(f"cannot lift through vertex {order[i - 1]}")
        current = grown
    return current


def is_survival_sequence(g: Graph, order: Sequence[int], omega: VertexSet) -> bool:
    removed = 0
    if not is_pmc(g, omega, removed):
        return False
    for x in order:
        removed |= 1 << x
        if not is_pmc(g, omega & ~removed, removed):
            return False
    return True


def survival_sequence(g: Graph, order: Sequence[int], omega: VertexSet) -> SurvivalSequence:
    """Record ``order`` as a survival sequence for Omega, or raise NotAPmc."""
    if not is_survival_sequence(g, order, omega):
        raise NotAPmc(f"order {list(order)} is not a survival sequence for {sorted(iter_bits(omega))}")
    removed = 0
    for x in order:
        removed |= 1 << x
    return SurvivalSequence(tuple(order), omega & ~removed)


def _common_neighborhoods(g: Graph) -> Set[VertexSet]:
    """{N(x) ∩ N(y) : x, y ∈ V}, with x = y giving N(x)."""
    return {g.adjacency[x] & g.adjacency[y] for x in range(g.n) for y in range(x, g.n)}


def x_rec(g: Graph, y_family: Iterable[VertexSet], budget: Optional[int] = None) -> List[VertexSet]:
    """Candidates holding every PMC Omega with cc(G - Omega) ⊆ Y.

    The vertex order is 0..n-1 and G_s = G - {0..s-1}. Three groups are
    lifted back to G: the lift of the empty PMC through all vertices; Z =
    N_{G_s}(D) ∪ {s}; and Z = (union of up to four N_{G_s}(D_i) ∪ N(x) ∩ N(y))
    minus {s}, for D, D_i in Y_s. ``budget`` bounds the number of candidate
    sets tested.
    """
    budget = settings.default_budget if budget is None else budget
    y_family = list(y_family)
    order = list(range(g.n))
    result = {pmc_lift(g, order, 0)}
    commons = _common_neighborhoods(g)
    tested = 0

    for s in range(g.n):
        removed = (1 << s) - 1
        v_bit = 1 << s
        y_s = set()
        for d in y_family:
            y_s.update(components_within(g, d & ~removed))
        neighborhoods = {open_neighborhood(g, d, removed) for d in y_s}

        candidates = {nbhd | v_bit for nbhd in neighborhoods}
        unions = unions_up_to(neighborhoods, 4)
        if 0 not in neighborhoods:
            unions.discard(0)
        for union in unions:
            for common in commons:
                candidates.add((union | common) & ~v_bit)

        for z in candidates:
            if not z or z & removed:
                continue
            tested += 1
            if tested > budget:
                raise BudgetExceeded(f"X_rec tested more than {budget} candidates")
            if is_pmc(g, z, removed):
                result.add(pmc_lift(g, order[:s], z))
        logger.debug(f"x_rec step {s}: |Y_s|={len(y_s)}, {len(candidates)} candidates")
    logger.info(f"x_rec over {len(y_family)} sets produced {len(result)} PMCs after {tested} tests")
    return canonical_family(result)


def container_family(g: Graph, k: int, budget: Optional[int] = None) -> List[VertexSet]:
    """X1 ∪ X2 for a class-C graph.

    X1 = {(union of at most four members of F2) ∪ N(u) ∩ N(v)} holds
    containers for impure PMCs; X2 = x_rec over the components of G - S,
    S ∈ F2, holds every pure PMC. The empty set is dropped since no PMC is
    empty.
    """
    report = classify(g)
    if not report.in_class_c:
        raise NotInClassC(
            f"graph has a long hole {report.long_hole} or extended C5 {report.extended_c5}"
        )
    budget = settings.default_budget if budget is None else budget
    f2 = extend_family_f2(g, enumerate_family_f1(g, k, budget))

    family = set()
    commons = _common_neighborhoods(g)
    for union in unions_up_to(f2, 4):
        for common in commons:
            family.add(union | common)
            if len(family) > budget:
                raise BudgetExceeded(f"X1 exceeded {budget} sets")

    y_family = set()
    for s in f2:
        y_family.update(connected_components(g, s))
    family.update(x_rec(g, y_family, budget))
    family.discard(0)
    logger.info(f"Container family for {g}, k={k}: |F2|={len(f2)}, {len(family)} containers")
    return canonical_family(family)


def strip_containers(family: Iterable[VertexSet], p: int, n: int) -> List[VertexSet]:
    """{A - B : A in family, B ⊆ A, |B| <= p}.

    Turns (F, p)-containers into F-containers at an n^p blowup.
    """
    if p < 0:
        raise InvalidArgument("p must be non-negative")
    limit = (1 << n) - 1
    stripped = set()
    for a in family:
        if a & ~limit:
            raise InvalidArgument(f"set {sorted(iter_bits(a))} exceeds 0..{n - 1}")
        for b in subsets_up_to(a, p):
            stripped.add(a & ~b)
    return canonical_family(stripped)
