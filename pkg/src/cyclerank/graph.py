"""Immutable directed graph in dual compressed adjacency form.

A :class:`Graph` keeps both out-edges and in-edges as CSR-style
(indptr, indices) integer arrays, so successor and predecessor
queries are O(degree) slices.  Nodes are dense integer indices with a
label string per node and the inverse label -> index mapping.

Graphs are immutable after construction and safe to share across
threads; ``transpose()`` just swaps the two adjacency directions
without copying.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .exceptions import UnknownNodeError

__all__ = ["EdgeList", "Graph", "build_graph"]


@dataclass
class EdgeList:
    """Raw parse result: labeled edges plus an optional declared node universe.

    ``declared_labels`` is set by parsers whose format carries a node
    count header (Pajek, ASD); it fixes the node set and its index
    order, so isolated nodes survive graph construction.  Without it,
    nodes are taken from the edges in first-occurrence order.
    """

    edges: list[tuple[str, str]] = field(default_factory=list)
    declared_labels: list[str] | None = None

    @property
    def declared_node_count(self) -> int | None:
        return None if self.declared_labels is None else len(self.declared_labels)


class Graph:
    """Immutable directed graph with dual CSR adjacency and node labels."""

    __slots__ = (
        "out_indptr",
        "out_indices",
        "in_indptr",
        "in_indices",
        "labels",
        "label_index",
    )

    def __init__(
        self,
        out_indptr: np.ndarray,
        out_indices: np.ndarray,
        in_indptr: np.ndarray,
        in_indices: np.ndarray,
        labels: tuple[str, ...],
    ):
        self.out_indptr = _frozen(out_indptr)
        self.out_indices = _frozen(out_indices)
        self.in_indptr = _frozen(in_indptr)
        self.in_indices = _frozen(in_indices)
        self.labels = labels
        self.label_index = {lab: i for i, lab in enumerate(labels)}
        if len(self.label_index) != len(labels):
            raise ValueError("node labels must be distinct")

    @property
    def node_count(self) -> int:
        return len(self.labels)

    @property
    def edge_count(self) -> int:
        return int(self.out_indices.shape[0])

    def successors(self, node: int) -> np.ndarray:
        """Sorted successor indices of ``node`` (read-only view)."""
        return self.out_indices[self.out_indptr[node] : self.out_indptr[node + 1]]

    def predecessors(self, node: int) -> np.ndarray:
        """Sorted predecessor indices of ``node`` (read-only view)."""
        return self.in_indices[self.in_indptr[node] : self.in_indptr[node + 1]]

    def out_degrees(self) -> np.ndarray:
        return np.diff(self.out_indptr)

    def in_degrees(self) -> np.ndarray:
        return np.diff(self.in_indptr)

    def resolve(self, label: str) -> int:
        """Map a node label to its index.

        Raises :class:`UnknownNodeError` for labels not in the graph.
        """
        try:
            return self.label_index[label]
        except KeyError:
            raise UnknownNodeError(label) from None

    def transpose(self) -> "Graph":
        """Graph with every edge reversed; labels preserved, arrays shared."""
        g = Graph.__new__(Graph)
        g.out_indptr = self.in_indptr
        g.out_indices = self.in_indices
        g.in_indptr = self.out_indptr
        g.in_indices = self.out_indices
        g.labels = self.labels
        g.label_index = self.label_index
        return g

    def edges(self):
        """Iterate (source_index, target_index) pairs in CSR order."""
        for u in range(self.node_count):
            for v in self.successors(u):
                yield u, int(v)

    def labeled_edges(self) -> set[tuple[str, str]]:
        """The edge set as (source_label, target_label) pairs."""
        return {(self.labels[u], self.labels[v]) for u, v in self.edges()}

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.labels == other.labels
            and np.array_equal(self.out_indptr, other.out_indptr)
            and np.array_equal(self.out_indices, other.out_indices)
        )

    def __hash__(self):
        return hash((self.labels, self.out_indices.tobytes()))

    def __repr__(self) -> str:
        return f"Graph(nodes={self.node_count}, edges={self.edge_count})"


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr = np.ascontiguousarray(arr, dtype=np.int64)
    arr.setflags(write=False)
    return arr


def _csr_from_pairs(src: np.ndarray, dst: np.ndarray, n: int):
    order = np.lexsort((dst, src))
    src, dst = src[order], dst[order]
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.add.at(indptr, src + 1, 1)
    np.cumsum(indptr, out=indptr)
    return indptr, dst.astype(np.int64)


def build_graph(edge_list: EdgeList) -> Graph:
    """Construct a :class:`Graph` from a parsed :class:`EdgeList`.

    Labels get indices in first-occurrence order unless the edge list
    declares a node universe, in which case the declared order wins.
    Parallel duplicate edges are collapsed; self-loops are kept.
    """
    if edge_list.declared_labels is not None:
        labels = list(edge_list.declared_labels)
        index = {lab: i for i, lab in enumerate(labels)}
        if len(index) != len(labels):
            raise ValueError("declared node labels must be distinct")
    else:
        labels = []
        index = {}
        for a, b in edge_list.edges:
            for lab in (a, b):
                if lab not in index:
                    index[lab] = len(labels)
                    labels.append(lab)

    n = len(labels)
    if edge_list.edges:
        try:
            pairs = np.asarray(
                [(index[a], index[b]) for a, b in edge_list.edges], dtype=np.int64
            )
        except KeyError as exc:
            raise ValueError(f"edge references undeclared label {exc.args[0]!r}") from None
        pairs = np.unique(pairs, axis=0)
        src, dst = pairs[:, 0], pairs[:, 1]
    else:
        src = dst = np.zeros(0, dtype=np.int64)

    out_indptr, out_indices = _csr_from_pairs(src, dst, n)
    in_indptr, in_indices = _csr_from_pairs(dst, src, n)
    return Graph(out_indptr, out_indices, in_indptr, in_indices, tuple(labels))
