"""Input validation helpers for the estimator layer."""
from __future__ import annotations

from .graph import EdgeList, Graph, build_graph

__all__ = ["check_graph", "check_source"]


def check_graph(X) -> Graph:
    """Coerce estimator input to a :class:`Graph`.

    Accepts a Graph, an :class:`EdgeList`, or an iterable of
    (source_label, target_label) pairs.
    """
    if isinstance(X, Graph):
        return X
    if isinstance(X, EdgeList):
        return build_graph(X)
    try:
        edges = [(str(a), str(b)) for a, b in X]
    except (TypeError, ValueError):
        raise TypeError(
            "X must be a Graph, an EdgeList, or an iterable of (source, target) pairs"
        ) from None
    return build_graph(EdgeList(edges=edges))


def check_source(g: Graph, source) -> int:
    """Resolve a reference node given as label or index; require it to exist."""
    if source is None:
        raise ValueError("this algorithm requires a source (reference node)")
    if isinstance(source, str):
        return g.resolve(source)
    idx = int(source)
    if not 0 <= idx < g.node_count:
        raise ValueError(f"source index {idx} outside [0,{g.node_count})")
    return idx
