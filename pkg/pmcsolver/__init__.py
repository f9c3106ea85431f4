"""Exact bounded-treewidth induced subgraph solver built on potential maximal cliques."""

__version__ = "0.1.0"
