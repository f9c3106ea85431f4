"""Immutable graph representation and primitive set/graph operations.

Vertex-deletion views ``G - X`` are never materialized: operations accept a
``removed`` mask and treat those vertices as absent.
"""
import logging
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

import networkx as nx

from pmcsolver.errors import InvalidArgument
from pmcsolver.graphs.bitset import VertexSet, all_vertices, iter_bits

logger = logging.getLogger(__name__)

WeightMap = Tuple[int, ...]


class Graph:
    """Simple undirected graph on vertices 0..n-1 with bitset adjacency rows."""

    __slots__ = ("n", "adjacency", "_edge_count")

    def __init__(self, n: int, adjacency: Sequence[VertexSet]):
        if n < 0 or len(adjacency) != n:
            raise InvalidArgument(f"adjacency has {len(adjacency)} rows for n={n}")
        full = all_vertices(n)
        for v, row in enumerate(adjacency):
            if row >> v & 1:
                raise InvalidArgument(f"self-loop at vertex {v}")
            if row & ~full:
                raise InvalidArgument(f"vertex {v} has a neighbor outside 0..{n - 1}")
            for u in iter_bits(row):
                if not adjacency[u] >> v & 1:
                    raise InvalidArgument(f"asymmetric adjacency between {u} and {v}")
        self.n = n
        self.adjacency: Tuple[VertexSet, ...] = tuple(adjacency)
        self._edge_count = sum(row.bit_count() for row in adjacency) // 2

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise InvalidArgument(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidArgument(f"edge ({u}, {v}) outside 0..{n - 1}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows)

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "Graph":
        """Relabel nodes in sorted order to 0..n-1."""
        nodes = sorted(graph.nodes())
        index = {node: i for i, node in enumerate(nodes)}
        return cls.from_edges(
            len(nodes), ((index[u], index[v]) for u, v in graph.edges() if u != v)
        )

    def to_networkx(self, removed: VertexSet = 0) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(v for v in range(self.n) if not removed >> v & 1)
        graph.add_edges_from((u, v) for u, v in self.edges() if not (removed >> u | removed >> v) & 1)
        return graph

    @property
    def vertices(self) -> VertexSet:
        return all_vertices(self.n)

    @property
    def edge_count(self) -> int:
        return self._edge_count

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u] >> v & 1)

    def neighbors(self, v: int) -> VertexSet:
        return self.adjacency[v]

    def closed_neighbors(self, v: int) -> VertexSet:
        return self.adjacency[v] | (1 << v)

    def edges(self) -> Iterator[Tuple[int, int]]:
        """Edges (u, v) with u < v in ascending order."""
        for u in range(self.n):
            for v in iter_bits(self.adjacency[u] >> (u + 1)):
                yield u, u + 1 + v

    def induced(self, keep: VertexSet) -> "Graph":
        """Induced subgraph relabelled to 0..|keep|-1 (ascending order preserved)."""
        members = list(iter_bits(keep))
        index = {v: i for i, v in enumerate(members)}
        rows = []
        for v in members:
            row = 0
            for u in iter_bits(self.adjacency[v] & keep):
                row |= 1 << index[u]
            rows.append(row)
        return Graph(len(members), rows)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.adjacency == other.adjacency

    def __hash__(self) -> int:
        return hash(self.adjacency)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self._edge_count})"


def open_neighborhood(g: Graph, x: VertexSet, removed: VertexSet = 0) -> VertexSet:
    """N(X): vertices outside X (and outside ``removed``) with a neighbor in X."""
    result = 0
    for v in iter_bits(x):
        result |= g.adjacency[v]
    return result & ~x & ~removed


def closed_neighborhood(g: Graph, x: VertexSet, removed: VertexSet = 0) -> VertexSet:
    return (open_neighborhood(g, x, removed) | x) & ~removed


def component_of(g: Graph, start: int, allowed: VertexSet) -> VertexSet:
    """Vertices reachable from ``start`` inside ``allowed`` (start must be allowed)."""
    component = 1 << start
    frontier = component
    while frontier:
        grown = 0
        for v in iter_bits(frontier):
            grown |= g.adjacency[v]
        frontier = grown & allowed & ~component
        component |= frontier
    return component


def connected_components(g: Graph, removed: VertexSet = 0) -> List[VertexSet]:
    """cc(G - removed), ordered by ascending minimum element."""
    remaining = g.vertices & ~removed
    allowed = remaining
    components = []
    while remaining:
        start = (remaining & -remaining).bit_length() - 1
        component = component_of(g, start, allowed)
        components.append(component)
        remaining &= ~component
    return components


def components_within(g: Graph, region: VertexSet) -> List[VertexSet]:
    """cc(G[region])."""
    return connected_components(g, g.vertices & ~region)


def is_connected_set(g: Graph, x: VertexSet) -> bool:
    if not x:
        return False
    start = (x & -x).bit_length() - 1
    return component_of(g, start, x) == x


def is_clique(g: Graph, x: VertexSet) -> bool:
    """True iff every pair of ``x`` is adjacent (vacuous for |x| <= 1)."""
    for v in iter_bits(x):
        if (x & ~(1 << v)) & ~g.adjacency[v]:
            return False
    return True


def is_independent(g: Graph, x: VertexSet) -> bool:
    return all(not g.adjacency[v] & x for v in iter_bits(x))


def complete_on(g: Graph, q: VertexSet) -> Graph:
    """G plus every missing edge inside ``q``."""
    if not q:
        return g
    rows = list(g.adjacency)
    for v in iter_bits(q):
        rows[v] |= q & ~(1 << v)
    return Graph(g.n, rows)


def total_weight(weights: Optional[WeightMap], x: VertexSet) -> int:
    """w(X); a missing weight map means unit weights."""
    if weights is None:
        return x.bit_count()
    return sum(weights[v] for v in iter_bits(x))


def unit_weights(n: int) -> WeightMap:
    return (1,) * n


def check_weights(g: Graph, weights: Optional[WeightMap]) -> WeightMap:
    """Validate a weight map against the graph; None becomes unit weights."""
    if weights is None:
        return unit_weights(g.n)
    if len(weights) != g.n:
        raise InvalidArgument(f"expected {g.n} weights, got {len(weights)}")
    if any(w < 0 for w in weights):
        raise InvalidArgument("weights must be non-negative")
    if sum(weights) >= 1 << 64:
        raise InvalidArgument("total weight must fit in 64 bits")
    return tuple(weights)
