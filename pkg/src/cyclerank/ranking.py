"""Shared ranking helpers.

Every ranking in this package uses the same tie-break: descending
score, then ascending node index.  Rank numbers are 1-based.
"""
from __future__ import annotations

from typing import NamedTuple

import numpy as np

__all__ = ["RankedRow", "rank_order", "ranks_from_scores", "top_k_rows"]


class RankedRow(NamedTuple):
    label: str
    rank: int
    score: float | None


def rank_order(scores: np.ndarray) -> np.ndarray:
    """Node indices sorted best-first (descending score, ascending index)."""
    n = scores.shape[0]
    return np.lexsort((np.arange(n), -scores))


def ranks_from_scores(scores: np.ndarray) -> np.ndarray:
    """1-based rank per node under the standard tie-break."""
    order = rank_order(scores)
    ranks = np.empty(scores.shape[0], dtype=np.int64)
    ranks[order] = np.arange(1, scores.shape[0] + 1)
    return ranks


def top_k_rows(
    labels, order: np.ndarray, scores: np.ndarray | None, k: int
) -> list[RankedRow]:
    """First min(k, n) entries of a ranking as (label, rank, score) rows."""
    if k < 1:
        raise ValueError("k must be >= 1")
    rows = []
    for rank, node in enumerate(order[:k], start=1):
        score = None if scores is None else float(scores[node])
        rows.append(RankedRow(labels[node], rank, score))
    return rows
