"""Bounded simple-cycle counting through a reference node.

The counter runs a depth-bounded DFS from the reference node over the
out-adjacency, keeping the current path as a visited set so only simple
cycles are found.  A successor is expanded only when the path length
plus its shortest way back to the reference (a BFS over in-edges,
computed once) still fits the bound; the bound is a true lower bound on
the remaining edges, so pruning never drops a completable cycle.

Counts are exact: ``counts[n][i]`` is the number of simple directed
cycles of length n that pass through both the reference and node i.
Scores are a weighted sum of counts over cycle lengths and deliberately
stay separate from counting, so cached counts can be re-scored under a
different weighting without re-enumeration.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .exceptions import ComputationCancelled
from .graph import Graph

__all__ = [
    "MAX_CYCLE_LENGTH",
    "SCORING_FUNCTIONS",
    "CycleCounts",
    "resolve_scoring",
    "reverse_distances",
    "count_cycles",
    "score_from_counts",
    "cyclerank_scores",
]

MAX_CYCLE_LENGTH = 10  # enumeration is exponential in the bound

SCORING_FUNCTIONS: dict[str, Callable[[int], float]] = {
    "exponential": lambda n: float(np.exp(-n)),
    "reciprocal": lambda n: 1.0 / n,
    "constant": lambda n: 1.0,
}

_SCORING_ALIASES = {"exp": "exponential", "rec": "reciprocal", "const": "constant"}


def resolve_scoring(name: str) -> str:
    """Canonical scoring-function name, accepting short aliases."""
    canonical = _SCORING_ALIASES.get(name, name)
    if canonical not in SCORING_FUNCTIONS:
        choices = sorted(SCORING_FUNCTIONS)
        raise ValueError(f"unknown scoring function {name!r}; expected one of {choices}")
    return canonical


@dataclass
class CycleCounts:
    """Per-length, per-node cycle counts for one reference node.

    ``counts[n][i]`` is the number of simple cycles of length n through
    the reference that also contain node i, for n in 2..max_length
    (rows 0 and 1 are always zero).
    """

    counts: np.ndarray
    reference: int
    max_length: int


def validate_cycle_params(g: Graph, reference: int, max_length: int) -> None:
    if not 2 <= max_length <= MAX_CYCLE_LENGTH:
        raise ValueError(
            f"max cycle length must be in [2,{MAX_CYCLE_LENGTH}], got {max_length}"
        )
    if not 0 <= reference < g.node_count:
        raise ValueError(f"reference index {reference} outside [0,{g.node_count})")


def reverse_distances(g: Graph, reference: int, cap: int) -> np.ndarray:
    """Shortest directed distance from each node to ``reference``.

    BFS over in-edges starting at the reference, stopped at depth
    ``cap``; unreached nodes report infinity.
    """
    dist = np.full(g.node_count, np.inf)
    dist[reference] = 0.0
    frontier = [reference]
    depth = 0
    while frontier and depth < cap:
        depth += 1
        nxt = []
        for node in frontier:
            for pred in g.predecessors(node):
                if dist[pred] == np.inf:
                    dist[pred] = depth
                    nxt.append(int(pred))
        frontier = nxt
    return dist


def count_cycles(
    g: Graph,
    reference: int,
    max_length: int,
    prune: bool = True,
    should_stop: Callable[[], bool] | None = None,
) -> CycleCounts:
    """Count all simple cycles of length 2..max_length through ``reference``.

    ``prune=False`` disables the distance bound (same counts, more work);
    it exists so tests can check the pruning is lossless.
    """
    validate_cycle_params(g, reference, max_length)
    n = g.node_count
    counts = np.zeros((max_length + 1, n), dtype=np.int64)
    dist = reverse_distances(g, reference, max_length) if prune else None

    succ_cache: dict[int, list[int]] = {}

    def successors(u: int) -> list[int]:
        cached = succ_cache.get(u)
        if cached is None:
            cached = succ_cache[u] = [int(v) for v in g.successors(u)]
        return cached

    path = [reference]
    on_path = np.zeros(n, dtype=bool)
    on_path[reference] = True
    stack = [iter(successors(reference))]

    while stack:
        if len(stack) == 1 and should_stop is not None and should_stop():
            raise ComputationCancelled("cycle enumeration cancelled")
        for v in stack[-1]:
            if v == reference:
                length = len(path)
                if length >= 2:  # a self-loop at the reference is length 1
                    counts[length, path] += 1
            elif not on_path[v]:
                budget = dist[v] if prune else 1.0
                if len(path) + budget <= max_length:
                    path.append(v)
                    on_path[v] = True
                    stack.append(iter(successors(v)))
                    break
        else:
            on_path[path.pop()] = False
            stack.pop()

    return CycleCounts(counts=counts, reference=reference, max_length=max_length)


def score_from_counts(cycle_counts: CycleCounts, scoring: str = "exponential") -> np.ndarray:
    """Weighted sum of cycle counts: score[i] = sum_n weight(n) * counts[n][i]."""
    weight = SCORING_FUNCTIONS[resolve_scoring(scoring)]
    lengths = np.arange(2, cycle_counts.max_length + 1)
    weights = np.array([weight(int(n)) for n in lengths])
    return weights @ cycle_counts.counts[2:].astype(np.float64)


def cyclerank_scores(
    g: Graph,
    reference: int,
    max_length: int = 3,
    scoring: str = "exponential",
    prune: bool = True,
    should_stop: Callable[[], bool] | None = None,
) -> tuple[np.ndarray, CycleCounts]:
    """Cycle-based relevance scores with respect to ``reference``.

    Scores are absolute (not normalized to sum 1); the reference node
    always attains the maximum since it lies on every counted cycle.
    """
    cc = count_cycles(g, reference, max_length, prune=prune, should_stop=should_stop)
    return score_from_counts(cc, scoring), cc
