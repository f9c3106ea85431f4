"""Shared fixtures: small named graphs used across the suites."""
import pytest

from pmcsolver.graphs.graph import Graph
from pmcsolver.harness.generators import complete, cycle, edgeless, path, prism


@pytest.fixture
def c4() -> Graph:
    return cycle(4)


@pytest.fixture
def c5() -> Graph:
    return cycle(5)


@pytest.fixture
def p3() -> Graph:
    return path(3)


@pytest.fixture
def p4() -> Graph:
    return path(4)


@pytest.fixture
def k4() -> Graph:
    return complete(4)


@pytest.fixture
def prism3() -> Graph:
    return prism(3)


@pytest.fixture
def prism4() -> Graph:
    return prism(4)


@pytest.fixture
def edgeless3() -> Graph:
    return edgeless(3)
