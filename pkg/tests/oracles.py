"""Independent reference implementations used only by tests.

These deliberately avoid the package's own code paths: cycle counts
come from permutation enumeration (not DFS), walk scores from a dense
transition matrix (not sparse ops with a separate dangling term), and
rank combination from plain sorted() with key tuples.
"""
from __future__ import annotations

import itertools

import numpy as np


def brute_force_cycle_counts(n: int, edges, reference: int, max_length: int):
    """Count simple cycles through ``reference`` by checking every
    permutation of intermediate nodes against the edge set.

    Returns a (max_length+1) x n list-of-lists; entry [L][i] counts the
    length-L simple cycles containing both reference and i.
    """
    edge_set = set(edges)
    counts = [[0] * n for _ in range(max_length + 1)]
    others = [v for v in range(n) if v != reference]
    for length in range(2, max_length + 1):
        for middle in itertools.permutations(others, length - 1):
            nodes = (reference,) + middle
            ok = all(
                (nodes[i], nodes[i + 1]) in edge_set for i in range(length - 1)
            ) and (nodes[-1], reference) in edge_set
            if ok:
                for u in nodes:
                    counts[length][u] += 1
    return counts


def eq1_scores(counts, weight) -> list[float]:
    """Weighted cycle-count sum per node, straight from the definition."""
    max_length = len(counts) - 1
    n = len(counts[0])
    return [
        sum(weight(length) * counts[length][i] for length in range(2, max_length + 1))
        for i in range(n)
    ]


def dense_walk_scores(
    n: int,
    edges,
    alpha: float,
    reference: int | None = None,
    tol: float = 1e-15,
    max_iter: int = 20000,
) -> np.ndarray:
    """Power iteration on an explicitly built dense transition matrix.

    Dangling rows are replaced by the teleport distribution before the
    damping is applied, so the matrix is exactly stochastic.
    """
    adjacency = np.zeros((n, n))
    for u, v in set(edges):
        adjacency[u, v] = 1.0
    if reference is None:
        teleport = np.full(n, 1.0 / n)
    else:
        teleport = np.zeros(n)
        teleport[reference] = 1.0

    transition = np.empty((n, n))
    for i in range(n):
        degree = adjacency[i].sum()
        transition[i] = adjacency[i] / degree if degree > 0 else teleport
    matrix = alpha * transition + (1.0 - alpha) * np.outer(np.ones(n), teleport)

    x = np.full(n, 1.0 / n)
    for _ in range(max_iter):
        x_next = x @ matrix
        x_next /= x_next.sum()
        done = np.abs(x_next - x).sum() < tol
        x = x_next
        if done:
            break
    return x


def ranks_by_sorting(scores) -> list[int]:
    """1-based ranks with the descending-score, ascending-index tie-break."""
    order = sorted(range(len(scores)), key=lambda i: (-scores[i], i))
    ranks = [0] * len(scores)
    for position, node in enumerate(order, start=1):
        ranks[node] = position
    return ranks


def two_d_rule(ranks_a, ranks_b) -> list[int]:
    """Best-first order by (worse rank, better rank, index), via sorted()."""
    n = len(ranks_a)
    return sorted(
        range(n),
        key=lambda i: (max(ranks_a[i], ranks_b[i]), min(ranks_a[i], ranks_b[i]), i),
    )
