"""Text formats for graphs and set families.

Graph files::

    n m
    u v          (m lines, 0 <= u < v < n)
    w i value    (optional, default weight 1)

Family files list one set per line as space-separated vertex ids.
"""
import logging
from pathlib import Path
from typing import List, Optional, Tuple, Union

from pmcsolver.errors import GraphParseError, InvalidArgument
from pmcsolver.graphs.bitset import VertexSet, format_set
from pmcsolver.graphs.graph import Graph, WeightMap

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


def _ints(tokens: List[str], line_no: int) -> List[int]:
    try:
        return [int(token) for token in tokens]
    except ValueError:
        raise GraphParseError(f"line {line_no}: expected integers, got {' '.join(tokens)!r}")


def parse_graph(text: str) -> Tuple[Graph, WeightMap]:
    """Parse a graph file body into the graph and its weight map."""
    lines = [(i + 1, line.split()) for i, line in enumerate(text.splitlines())]
    lines = [(no, tokens) for no, tokens in lines if tokens]
    if not lines:
        raise GraphParseError("empty graph file")

    header_no, header = lines[0]
    if len(header) != 2:
        raise GraphParseError(f"line {header_no}: header must be 'n m'")
    n, m = _ints(header, header_no)
    if n < 0 or m < 0:
        raise GraphParseError(f"line {header_no}: n and m must be non-negative")
    if len(lines) - 1 < m:
        raise GraphParseError(f"expected {m} edge lines, found {len(lines) - 1}")

    edges = set()
    for no, tokens in lines[1 : m + 1]:
        if len(tokens) != 2:
            raise GraphParseError(f"line {no}: edge lines are 'u v'")
        u, v = _ints(tokens, no)
        if not 0 <= u < v < n:
            raise GraphParseError(f"line {no}: edge ({u}, {v}) needs 0 <= u < v < {n}")
        if (u, v) in edges:
            raise GraphParseError(f"line {no}: duplicate edge ({u}, {v})")
        edges.add((u, v))

    weights = [1] * n
    for no, tokens in lines[m + 1 :]:
        if len(tokens) != 3 or tokens[0] != "w":
            raise GraphParseError(f"line {no}: unexpected line {' '.join(tokens)!r}")
        i, value = _ints(tokens[1:], no)
        if not 0 <= i < n:
            raise GraphParseError(f"line {no}: weight for unknown vertex {i}")
        if value < 0:
            raise GraphParseError(f"line {no}: weights must be non-negative")
        weights[i] = value
    if sum(weights) >= 1 << 64:
        raise GraphParseError("total weight must fit in 64 bits")

    try:
        graph = Graph.from_edges(n, sorted(edges))
    except InvalidArgument as e:
        raise GraphParseError(str(e))
    return graph, tuple(weights)


def _read_text(path: PathLike) -> str:
    try:
        return Path(path).read_text()
    except OSError as e:
        raise GraphParseError(f"cannot read {path}: {e}")


def read_graph(path: PathLike) -> Tuple[Graph, WeightMap]:
    logger.debug(f"Reading graph from {path}")
    return parse_graph(_read_text(path))


def format_graph(g: Graph, weights: Optional[WeightMap] = None) -> str:
    lines = [f"{g.n} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    if weights is not None:
        lines.extend(f"w {i} {value}" for i, value in enumerate(weights) if value != 1)
    return "\n".join(lines) + "\n"


def write_graph(path: PathLike, g: Graph, weights: Optional[WeightMap] = None) -> None:
    Path(path).write_text(format_graph(g, weights))


def parse_family(text: str, n: int) -> List[VertexSet]:
    """One set per non-blank line; ids must lie in 0..n-1."""
    family = []
    for no, line in enumerate(text.splitlines(), start=1):
        tokens = line.split()
        if not tokens:
            continue
        mask = 0
        for v in _ints(tokens, no):
            if not 0 <= v < n:
                raise GraphParseError(f"line {no}: vertex {v} outside 0..{n - 1}")
            mask |= 1 << v
        family.append(mask)
    return family


def read_family(path: PathLike, n: int) -> List[VertexSet]:
    return parse_family(_read_text(path), n)


def format_family(family: List[VertexSet]) -> str:
    return "".join(format_set(s) + "\n" for s in family)
