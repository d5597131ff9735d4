from __future__ import annotations

import sys
from pathlib import Path

import numpy as np

from cyclerank import EdgeList, Graph, build_graph

sys.path.insert(0, str(Path(__file__).parent))  # make `oracles` importable


def graph_from_edges(n: int, edges) -> Graph:
    """Graph on nodes 0..n-1 labeled by their decimal index."""
    labels = [str(i) for i in range(n)]
    pairs = [(str(u), str(v)) for u, v in edges]
    return build_graph(EdgeList(edges=pairs, declared_labels=labels))


def labeled_graph(edges) -> Graph:
    """Graph from (label, label) pairs in first-occurrence order."""
    return build_graph(EdgeList(edges=list(edges)))


def random_edge_set(rng: np.random.Generator, n: int, p: float, self_loops=False):
    """Each ordered pair becomes an edge independently with probability p."""
    edges = []
    for u in range(n):
        for v in range(n):
            if u == v and not self_loops:
                continue
            if rng.random() < p:
                edges.append((u, v))
    return edges
