"""Recognizers for the hereditary classes the solvers rely on.

Class C excludes holes of length >= 6 and extended C5s; it contains every
long-hole-free and every P5-free graph. Inputs to the container machinery are
promised to be in C, so these checks guard the public entry points.
"""
import logging
from typing import Iterator, List, Optional

import networkx as nx
from pydantic import BaseModel

from pmcsolver.errors import InvalidArgument
from pmcsolver.graphs.bitset import VertexSet, iter_bits
from pmcsolver.graphs.graph import Graph, closed_neighborhood

logger = logging.getLogger(__name__)


class ClassReport(BaseModel):
    """Class membership of a graph together with the witnesses found."""

    in_class_c: bool
    long_hole: Optional[List[int]] = None
    extended_c5: Optional[List[int]] = None
    p5: Optional[List[int]] = None
    is_long_hole_free: bool
    is_p5_free: bool

    def to_cli_json(self) -> dict:
        """Shape used by ``pmcsolver recognize`` and ``POST /recognize``."""
        return {
            "in_class_c": self.in_class_c,
            "long_hole_free": self.is_long_hole_free,
            "p5_free": self.is_p5_free,
            "witnesses": {
                "long_hole": self.long_hole,
                "extended_c5": self.extended_c5,
                "p5": self.p5,
            },
        }


def induced_paths(g: Graph, length: int) -> Iterator[List[int]]:
    """Ordered induced paths on ``length`` vertices, each listed once
    (first vertex smaller than last)."""

    def extend(path: List[int], used: VertexSet, forbidden: VertexSet) -> Iterator[List[int]]:
        if len(path) == length:
            if length == 1 or path[0] < path[-1]:
                yield list(path)
            return
        last = path[-1]
        # the next vertex sees the last one and nothing earlier on the path
        for u in iter_bits(g.adjacency[last] & ~used & ~forbidden):
            path.append(u)
            yield from extend(path, used | (1 << u), forbidden | g.adjacency[last])
            path.pop()

    for start in range(g.n):
        yield from extend([start], 1 << start, 0)


def find_long_hole(g: Graph, min_len: int) -> Optional[List[int]]:
    """An induced cycle with at least ``min_len`` vertices, or None.

    Every such hole contains an induced path p1..p(min_len-1) of consecutive
    hole vertices; the rest of the hole is a p_last -> p1 path avoiding the
    closed neighborhoods of the inner path vertices, and a shortest such path
    closes an induced cycle.
    """
    if min_len not in (5, 6):
        raise InvalidArgument(f"min_len must be 5 or 6, got {min_len}")
    graph = g.to_networkx()
    for path in induced_paths(g, min_len - 1):
        first, last = path[0], path[-1]
        inner = 0
        for v in path[1:-1]:
            inner |= 1 << v
        blocked = closed_neighborhood(g, inner) & ~(1 << first) & ~(1 << last)
        open_part = nx.subgraph_view(graph, filter_node=lambda v, b=blocked: not b >> v & 1)
        try:
            closing = nx.shortest_path(open_part, last, first)
        except nx.NetworkXNoPath:
            continue
        return path + closing[1:-1]
    return None


def find_extended_c5(g: Graph) -> Optional[List[int]]:
    """(h1..h5, x) with h1..h5 an induced C5 and x adjacent to exactly one hole
    vertex or to exactly two consecutive ones; None if absent."""
    for p1, p2, p3, p4 in induced_paths(g, 4):
        closers = g.adjacency[p1] & g.adjacency[p4] & ~g.adjacency[p2] & ~g.adjacency[p3]
        closers &= ~((1 << p1) | (1 << p2) | (1 << p3) | (1 << p4))
        for h5 in iter_bits(closers):
            hole = [p1, p2, p3, p4, h5]
            hole_mask = sum(1 << v for v in hole)
            for x in iter_bits(g.vertices & ~hole_mask):
                touched = [i for i, h in enumerate(hole) if g.adjacency[x] >> h & 1]
                if len(touched) == 1:
                    return hole + [x]
                if len(touched) == 2:
                    i, j = touched
                    if j - i == 1 or (i == 0 and j == 4):
                        return hole + [x]
    return None


def find_p5(g: Graph) -> Optional[List[int]]:
    """An induced path on five vertices, or None."""
    return next(induced_paths(g, 5), None)


def classify(g: Graph) -> ClassReport:
    """Membership in class C, long-hole-freeness and P5-freeness with witnesses."""
    hole5 = find_long_hole(g, 5)
    long_hole = find_long_hole(g, 6) if hole5 is not None else None
    extended_c5 = find_extended_c5(g) if hole5 is not None else None
    p5 = find_p5(g)
    report = ClassReport(
        in_class_c=long_hole is None and extended_c5 is None,
        long_hole=long_hole,
        extended_c5=extended_c5,
        p5=p5,
        is_long_hole_free=hole5 is None,
        is_p5_free=p5 is None,
    )
    logger.debug(f"classify {g}: class_c={report.in_class_c}, "
                 f"long_hole_free={report.is_long_hole_free}, p5_free={report.is_p5_free}")
    return report


def is_in_class_c(g: Graph) -> bool:
    return find_long_hole(g, 6) is None and find_extended_c5(g) is None


def is_long_hole_free(g: Graph) -> bool:
    return find_long_hole(g, 5) is None


def is_p5_free(g: Graph) -> bool:
    return find_p5(g) is None


def degeneracy_coloring(g: Graph) -> List[VertexSet]:
    """Greedy coloring along a smallest-last order.

    Uses at most degeneracy + 1 colors, hence at most k colors when the
    treewidth is below k. Classes are ordered by their smallest vertex.
    """
    if g.n == 0:
        return []
    colors = nx.greedy_color(g.to_networkx(), strategy="smallest_last")
    classes = {}
    for v, color in colors.items():
        classes[color] = classes.get(color, 0) | (1 << v)
    return sorted(classes.values(), key=lambda mask: (mask & -mask).bit_length())
