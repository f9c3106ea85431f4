"""Named graph families and seeded random instances."""
import logging
import random
from typing import Callable, NamedTuple, Optional

import networkx as nx

from pmcsolver.config.settings import settings
from pmcsolver.errors import GiveUp, InvalidArgument
from pmcsolver.graphs.graph import Graph, WeightMap, unit_weights
from pmcsolver.graphs.recognition import classify, is_long_hole_free, is_p5_free

logger = logging.getLogger(__name__)


class Instance(NamedTuple):
    graph: Graph
    weights: WeightMap
    name: str


def prism(p: int) -> Graph:
    """Two p-cliques a_i = i and b_i = p + i joined by the matching a_i b_i."""
    edges = []
    for i in range(p):
        edges.append((i, p + i))
        for j in range(i + 1, p):
            edges.append((i, j))
            edges.append((p + i, p + j))
    return Graph.from_edges(2 * p, edges)


def cycle(n: int) -> Graph:
    return Graph.from_networkx(nx.cycle_graph(n))


def path(n: int) -> Graph:
    return Graph.from_networkx(nx.path_graph(n))


def complete(n: int) -> Graph:
    return Graph.from_networkx(nx.complete_graph(n))


def star(leaves: int) -> Graph:
    """Center 0 with leaves 1..leaves."""
    return Graph.from_networkx(nx.star_graph(leaves))


def edgeless(n: int) -> Graph:
    return Graph.from_networkx(nx.empty_graph(n))


def _rejection_sample(
    n: int, edge_prob: float, seed: int, accept: Callable[[Graph], bool], label: str
) -> Graph:
    if not 0 <= n <= 64:
        raise InvalidArgument(f"n must be in 0..64, got {n}")
    if not 0.0 <= edge_prob <= 1.0:
        raise InvalidArgument(f"edge probability must be in [0, 1], got {edge_prob}")
    rng = random.Random(seed)
    for attempt in range(settings.generator_max_rejections):
        g = Graph.from_networkx(nx.gnp_random_graph(n, edge_prob, seed=rng.randrange(1 << 30)))
        if accept(g):
            logger.debug(f"{label} sample accepted after {attempt + 1} attempts")
            return g
    raise GiveUp(
        f"no {label} graph with n={n}, p={edge_prob} in {settings.generator_max_rejections} attempts"
    )


def random_class_c_graph(n: int, edge_prob: float, seed: int) -> Graph:
    """G(n, p) samples until one lies in class C; deterministic per seed."""
    return _rejection_sample(n, edge_prob, seed, lambda g: classify(g).in_class_c, "class-C")


def random_long_hole_free_graph(n: int, edge_prob: float, seed: int) -> Graph:
    return _rejection_sample(n, edge_prob, seed, is_long_hole_free, "long-hole-free")


def random_p5_free_graph(n: int, edge_prob: float, seed: int) -> Graph:
    return _rejection_sample(n, edge_prob, seed, is_p5_free, "P5-free")


def random_weights(n: int, seed: int, high: int = 100) -> WeightMap:
    rng = random.Random(seed)
    return tuple(rng.randint(0, high) for _ in range(n))


def random_instance(
    n: int, edge_prob: float, seed: int, weighted: bool = True, name: Optional[str] = None
) -> Instance:
    """Unrestricted G(n, p) graph with optional random weights in [0, 100]."""
    rng = random.Random(seed)
    g = Graph.from_networkx(nx.gnp_random_graph(n, edge_prob, seed=rng.randrange(1 << 30)))
    weights = random_weights(n, rng.randrange(1 << 30)) if weighted else unit_weights(n)
    return Instance(g, weights, name or f"gnp-{n}-{edge_prob}-{seed}")
