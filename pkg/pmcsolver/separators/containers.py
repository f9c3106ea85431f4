"""Containers for minimal separators.

For a solution F (an induced subgraph colored with k colors) an F-container
for a set X is a superset A of X with A ∩ V(F) = X ∩ V(F). This module builds
them in two ways: a per-instance witness when S, its full components and F are
known, and the budgeted families F0 ⊆ F1 ⊆ F2 that hold a container for every
minimal separator and every F at once.

Witness roles: Z ⊆ L and Z' ⊆ R are minimal connected dominating sets of S
(cliques inside class C); a1, a2 ∈ Z and d1, d2 ∈ Z' with private separator
neighbors b_i = f(a_i), c_i = f(d_i) and far-side neighbors r_i ∈ R, l_i ∈ L.
"""
import logging
from enum import Enum
from typing import Dict, Iterator, List, NamedTuple, Optional, Sequence, Set, Tuple

from pmcsolver.config.settings import settings
from pmcsolver.errors import (
    BudgetExceeded,
    InvalidArgument,
    NoPrivateVertex,
    NotAClique,
    PrimitiveSeparator,
)
from pmcsolver.graphs.bitset import (
    VertexSet,
    canonical_family,
    iter_bits,
    lowest,
    unions_up_to,
)
from pmcsolver.graphs.graph import (
    Graph,
    closed_neighborhood,
    connected_components,
    is_clique,
    is_connected_set,
    open_neighborhood,
)

logger = logging.getLogger(__name__)

ROLE_NAMES = ("a1", "a2", "b1", "b2", "r1", "r2", "c1", "c2", "d1", "d2", "l1", "l2")
_SLOT = {name: 1 << i for i, name in enumerate(ROLE_NAMES)}

# a profile meets each of these role triples
_TRIPLES = (
    _SLOT["a1"] | _SLOT["b1"] | _SLOT["r1"],
    _SLOT["a2"] | _SLOT["b2"] | _SLOT["r2"],
    _SLOT["c1"] | _SLOT["d1"] | _SLOT["l1"],
    _SLOT["c2"] | _SLOT["d2"] | _SLOT["l2"],
)
_L_LIST = sum(_SLOT[name] for name in ("a1", "a2", "b1", "b2", "c1", "c2", "l1", "l2"))
_R_LIST = sum(_SLOT[name] for name in ("b1", "b2", "c1", "c2", "d1", "d2", "r1", "r2"))


class ProfileClass(str, Enum):
    NOT_A_PROFILE = "not_a_profile"
    UNAMBIGUOUS = "unambiguous"
    STRICTLY_L = "strictly_l"
    STRICTLY_R = "strictly_r"
    BOTH_LR = "both_lr"

    @property
    def l_ambiguous(self) -> bool:
        return self in (ProfileClass.STRICTLY_L, ProfileClass.BOTH_LR)

    @property
    def r_ambiguous(self) -> bool:
        return self in (ProfileClass.STRICTLY_R, ProfileClass.BOTH_LR)


class Roles(NamedTuple):
    """The twelve role slots of W; values may coincide (e.g. r1 == r2)."""

    a1: int
    a2: int
    b1: int
    b2: int
    r1: int
    r2: int
    c1: int
    c2: int
    d1: int
    d2: int
    l1: int
    l2: int


class SeparatorWitness(NamedTuple):
    s: VertexSet
    l_side: VertexSet
    r_side: VertexSet
    z: VertexSet
    z_prime: VertexSet
    f: Dict[int, int]
    g_map: Dict[int, int]
    roles: Roles
    pivots_l: Tuple[Optional[int], ...]
    pivots_r: Tuple[Optional[int], ...]


def is_container(a: VertexSet, target: VertexSet, f_vertices: VertexSet, p: int = 0) -> bool:
    """(F, p)-container test: target ⊆ a and at most p extra vertices of F in a."""
    if target & ~a:
        return False
    return ((a & ~target) & f_vertices).bit_count() <= p


def primitive_family_f0(g: Graph) -> List[VertexSet]:
    """{N(C) : C ∈ cc(G - N[v]), v ∈ V}; holds every primitive separator."""
    family = set()
    for v in range(g.n):
        for component in connected_components(g, closed_neighborhood(g, 1 << v)):
            family.add(open_neighborhood(g, component))
    return canonical_family(family)


def minimal_dominating_clique_z(g: Graph, s: VertexSet, d: VertexSet) -> VertexSet:
    """Inclusion-minimal connected Z ⊆ D with S ⊆ N(Z), peeled greedily from
    the largest vertex down; inside class C the result is a clique."""
    if s & ~open_neighborhood(g, d) or not is_connected_set(g, d):
        raise InvalidArgument("d must be a full component for s")
    z = d
    changed = True
    while changed:
        changed = False
        for v in sorted(iter_bits(z), reverse=True):
            rest = z & ~(1 << v)
            if rest and is_connected_set(g, rest) and not s & ~open_neighborhood(g, rest):
                z = rest
                changed = True
    if not is_clique(g, z):
        raise NotAClique(f"dominating set {sorted(iter_bits(z))} is not a clique")
    return z


def private_vertex_f(g: Graph, s: VertexSet, z: VertexSet, v: int) -> int:
    """Smallest vertex of S adjacent to v and to no other vertex of Z."""
    others = 0
    for u in iter_bits(z & ~(1 << v)):
        others |= g.adjacency[u]
    candidates = s & g.adjacency[v] & ~others
    if not candidates:
        raise NoPrivateVertex(f"vertex {v} has no private neighbor in the separator")
    return lowest(candidates)


def _profile_mask(g: Graph, roles: Sequence[int], v: int) -> int:
    row = g.adjacency[v]
    mask = 0
    for i, vertex in enumerate(roles):
        if row >> vertex & 1:
            mask |= 1 << i
    return mask


def _classify_mask(mask: int) -> ProfileClass:
    if any(not mask & triple for triple in _TRIPLES):
        return ProfileClass.NOT_A_PROFILE
    l_amb = not mask & ~_L_LIST
    r_amb = not mask & ~_R_LIST
    if l_amb and r_amb:
        return ProfileClass.BOTH_LR
    if l_amb:
        return ProfileClass.STRICTLY_L
    if r_amb:
        return ProfileClass.STRICTLY_R
    return ProfileClass.UNAMBIGUOUS


def classify_profile(g: Graph, witness: SeparatorWitness, v: int) -> ProfileClass:
    """Class of the profile N(v) ∩ W, computed per role slot."""
    return _classify_mask(_profile_mask(g, witness.roles, v))


def _measuring_sets(g: Graph, roles: Roles) -> Tuple[VertexSet, VertexSet]:
    adj = g.adjacency
    role_mask = 0
    for vertex in roles:
        role_mask |= 1 << vertex
    z_r = adj[roles.d1] & adj[roles.d2]
    for vertex in (roles.c1, roles.c2, roles.l1, roles.l2):
        z_r &= ~adj[vertex] & ~(1 << vertex)
    z_l = adj[roles.a1] & adj[roles.a2]
    for vertex in (roles.b1, roles.b2, roles.r1, roles.r2):
        z_l &= ~adj[vertex] & ~(1 << vertex)
    return z_l, z_r


def measuring_sets(g: Graph, witness: SeparatorWitness) -> Tuple[VertexSet, VertexSet]:
    """(Z_L, Z_R): Z_R is complete to {d1, d2} and anticomplete to
    {c1, c2, l1, l2}; Z_L is complete to {a1, a2} and anticomplete to
    {b1, b2, r1, r2}."""
    return _measuring_sets(g, witness.roles)


def _blocked(g: Graph, pivots: Sequence[Optional[int]]) -> VertexSet:
    # N(⊥) is empty
    blocked = 0
    for pivot in pivots:
        if pivot is not None:
            blocked |= g.adjacency[pivot]
    return blocked


def _assemble(
    g: Graph,
    roles: Roles,
    classes: Sequence[ProfileClass],
    open_r: VertexSet,
    open_l: VertexSet,
) -> VertexSet:
    result = (1 << roles.b1) | (1 << roles.b2) | (1 << roles.c1) | (1 << roles.c2)
    adj = g.adjacency
    for v, cls in enumerate(classes):
        if cls is ProfileClass.UNAMBIGUOUS:
            result |= 1 << v
        elif cls is ProfileClass.STRICTLY_L:
            if adj[v] & open_r:
                result |= 1 << v
        elif cls is ProfileClass.STRICTLY_R:
            if adj[v] & open_l:
                result |= 1 << v
        elif cls is ProfileClass.BOTH_LR:
            if adj[v] & open_r and adj[v] & open_l:
                result |= 1 << v
    return result


def assemble_container(g: Graph, witness: SeparatorWitness) -> VertexSet:
    """Ŝ for a complete witness (roles and pivots)."""
    roles = witness.roles
    classes = [_classify_mask(_profile_mask(g, roles, v)) for v in range(g.n)]
    z_l, z_r = _measuring_sets(g, roles)
    open_r = z_r & ~_blocked(g, witness.pivots_l)
    open_l = z_l & ~_blocked(g, witness.pivots_r)
    return _assemble(g, roles, classes, open_r, open_l)


def _pick_pivot(
    g: Graph,
    candidates: VertexSet,
    classes: Sequence[ProfileClass],
    measuring: VertexSet,
    want_l: bool,
) -> Optional[int]:
    best, best_size = None, -1
    for v in iter_bits(candidates):
        cls = classes[v]
        if not (cls.l_ambiguous if want_l else cls.r_ambiguous):
            continue
        seen = (g.adjacency[v] & measuring).bit_count()
        # the largest trace is inclusion-maximal; ties go to the smaller vertex
        if seen > best_size:
            best, best_size = v, seen
    return best


def build_separator_witness(
    g: Graph,
    s: VertexSet,
    l: VertexSet,
    r: VertexSet,
    coloring: Sequence[VertexSet],
    f_vertices: VertexSet,
) -> SeparatorWitness:
    """Deterministic witness for a non-primitive minimal separator S with
    full components L and R, pivots chosen from the coloring of F."""
    if l == r or open_neighborhood(g, l) != s or open_neighborhood(g, r) != s:
        raise InvalidArgument("l and r must be two distinct full components of s")
    z = minimal_dominating_clique_z(g, s, l)
    z_prime = minimal_dominating_clique_z(g, s, r)
    if z.bit_count() <= 1 or z_prime.bit_count() <= 1:
        raise PrimitiveSeparator(f"separator {sorted(iter_bits(s))} is primitive")

    f: Dict[int, int] = {}
    g_map: Dict[int, int] = {}
    for v in iter_bits(z):
        f[v] = private_vertex_f(g, s, z, v)
        g_map[v] = lowest(g.adjacency[f[v]] & r)
    for v in iter_bits(z_prime):
        f[v] = private_vertex_f(g, s, z_prime, v)
        g_map[v] = lowest(g.adjacency[f[v]] & l)

    a1, a2 = list(iter_bits(z))[:2]
    d1, d2 = list(iter_bits(z_prime))[:2]
    roles = Roles(
        a1=a1, a2=a2, b1=f[a1], b2=f[a2], r1=g_map[a1], r2=g_map[a2],
        c1=f[d1], c2=f[d2], d1=d1, d2=d2, l1=g_map[d1], l2=g_map[d2],
    )

    classes = [_classify_mask(_profile_mask(g, roles, v)) for v in range(g.n)]
    z_l, z_r = _measuring_sets(g, roles)
    pivots_l = []
    pivots_r = []
    for color_class in coloring:
        members = color_class & f_vertices
        pivots_l.append(_pick_pivot(g, members & ~(s | r), classes, z_r, want_l=True))
        pivots_r.append(_pick_pivot(g, members & ~(s | l), classes, z_l, want_l=False))
    return SeparatorWitness(
        s=s, l_side=l, r_side=r, z=z, z_prime=z_prime, f=f, g_map=g_map, roles=roles,
        pivots_l=tuple(pivots_l), pivots_r=tuple(pivots_r),
    )


def witness_container_for_separator(
    g: Graph,
    s: VertexSet,
    l: VertexSet,
    r: VertexSet,
    coloring: Sequence[VertexSet],
    f_vertices: VertexSet,
) -> VertexSet:
    """An F-container for S built from its witness.

    Raises:
        PrimitiveSeparator: S lies in one open neighborhood (use F0).
        ClassViolation: the class-C promise fails on this instance.
    """
    witness = build_separator_witness(g, s, l, r, coloring, f_vertices)
    return assemble_container(g, witness)


def _half_tuples(g: Graph) -> List[Tuple[int, int, int, int, int, int]]:
    """(x1, x2, y1, y2, w1, w2) with x1 < x2 adjacent, y_i a neighbor of x_i
    only, and w_i a neighbor of y_i outside N[x1] ∪ N[x2]. Both (a, b, r) and
    (d, c, l) have this shape."""
    adj = g.adjacency
    halves = []
    for x1 in range(g.n):
        for x2 in iter_bits(adj[x1] >> (x1 + 1)):
            x2 += x1 + 1
            pair = (1 << x1) | (1 << x2)
            far = ~closed_neighborhood(g, pair)
            for y1 in iter_bits(adj[x1] & ~adj[x2] & ~pair):
                for y2 in iter_bits(adj[x2] & ~adj[x1] & ~pair):
                    for w1 in iter_bits(adj[y1] & far):
                        for w2 in iter_bits(adj[y2] & far):
                            halves.append((x1, x2, y1, y2, w1, w2))
    return halves


def _candidate_roles(g: Graph) -> Iterator[Roles]:
    """Role tuples satisfying the adjacency conditions every true witness meets."""
    adj = g.adjacency
    halves = _half_tuples(g)
    for a1, a2, b1, b2, r1, r2 in halves:
        for d1, d2, c1, c2, l1, l2 in halves:
            left = (1 << a1) | (1 << a2) | (1 << l1) | (1 << l2)
            right = (1 << d1) | (1 << d2) | (1 << r1) | (1 << r2)
            middle = (1 << b1) | (1 << b2) | (1 << c1) | (1 << c2)
            if left & right or middle & (left | right):
                continue
            if open_neighborhood(g, left) & right:
                continue
            roles = Roles(a1, a2, b1, b2, r1, r2, c1, c2, d1, d2, l1, l2)
            if any(
                _classify_mask(_profile_mask(g, roles, x)) is ProfileClass.NOT_A_PROFILE
                for x in (b1, b2, c1, c2)
            ):
                continue
            yield roles


def enumerate_family_f1(g: Graph, k: int, budget: Optional[int] = None) -> List[VertexSet]:
    """F0 plus Ŝ over all role tuples and pivot choices.

    Only ⋃ N(pivot) ∩ Z_R (resp. Z_L) affects Ŝ, so pivot choices are
    enumerated as the distinct unions of at most k traces. ``budget`` bounds
    the number of assemblies.
    """
    if k < 0:
        raise InvalidArgument("k must be non-negative")
    budget = settings.default_budget if budget is None else budget
    family: Set[VertexSet] = set(primitive_family_f0(g))
    assemblies = 0
    for roles in _candidate_roles(g):
        classes = [_classify_mask(_profile_mask(g, roles, v)) for v in range(g.n)]
        z_l, z_r = _measuring_sets(g, roles)
        traces_r = {g.adjacency[v] & z_r for v in range(g.n) if classes[v].l_ambiguous}
        traces_l = {g.adjacency[v] & z_l for v in range(g.n) if classes[v].r_ambiguous}
        open_r_options = {z_r & ~blocked for blocked in unions_up_to(traces_r, k)}
        open_l_options = {z_l & ~blocked for blocked in unions_up_to(traces_l, k)}
        for open_r in open_r_options:
            for open_l in open_l_options:
                assemblies += 1
                if assemblies > budget:
                    raise BudgetExceeded(f"F1 enumeration exceeded {budget} assemblies")
                family.add(_assemble(g, roles, classes, open_r, open_l))
    logger.info(f"F1 for {g}, k={k}: {len(family)} sets from {assemblies} assemblies")
    return canonical_family(family)


def extend_family_f2(g: Graph, f1: Sequence[VertexSet]) -> List[VertexSet]:
    """F1 plus N(D) for every component D of G - Ŝ, Ŝ ∈ F1."""
    family = set(f1)
    for container in f1:
        for component in connected_components(g, container):
            family.add(open_neighborhood(g, component))
    return canonical_family(family)
