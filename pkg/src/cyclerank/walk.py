"""Damped random-walk scores: the PageRank family.

One power-iteration kernel serves both the global and the personalized
variants; they differ only in the teleport vector and in where dangling
mass goes.  The global walk teleports uniformly and spreads dangling
mass uniformly; the personalized walk sends both to the reference node,
which keeps all probability inside the reference's reachable set.

CheiRank variants are the same walks on the transposed graph and the
2D combination is rank-only; both live at the estimator level
(see rankers.py), this module is just the numerics.
"""
from __future__ import annotations

from typing import Callable

import numpy as np
import scipy.sparse as sp

from .exceptions import ComputationCancelled
from .graph import Graph
from .ranking import ranks_from_scores

__all__ = ["walk_scores", "combine_rank_orders", "two_d_order"]

DEFAULT_ALPHA = 0.85
DEFAULT_TOL = 1e-9
DEFAULT_MAX_ITER = 200


def validate_walk_params(alpha: float, tol: float, max_iter: int) -> None:
    if not 0.0 < alpha < 1.0:
        raise ValueError(f"alpha must be in (0,1), got {alpha}")
    if tol < 0.0:
        raise ValueError(f"tolerance must be >= 0, got {tol}")
    if max_iter < 1:
        raise ValueError(f"max_iterations must be >= 1, got {max_iter}")


def walk_scores(
    g: Graph,
    alpha: float = DEFAULT_ALPHA,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
    reference: int | None = None,
    should_stop: Callable[[], bool] | None = None,
) -> tuple[np.ndarray, int, bool]:
    """Stationary scores of the damped walk on ``g``.

    With ``reference=None`` this is global PageRank (uniform teleport,
    dangling mass spread uniformly); with a reference node index both
    teleport and dangling mass go to that node (personalized variant).

    Returns ``(scores, n_iter, converged)`` where scores sum to 1.
    Iteration stops when the L1 residual drops below ``tol``; hitting
    ``max_iter`` first reports ``converged=False`` but still returns
    the latest vector.
    """
    validate_walk_params(alpha, tol, max_iter)
    n = g.node_count
    if n == 0:
        raise ValueError("graph has no nodes")
    if reference is not None and not 0 <= reference < n:
        raise ValueError(f"reference index {reference} outside [0,{n})")

    adj = sp.csr_matrix(
        (np.ones(g.edge_count, dtype=np.float64), g.out_indices, g.out_indptr),
        shape=(n, n),
    )
    deg = g.out_degrees().astype(np.float64)
    dangling = deg == 0.0
    inv_deg = np.divide(1.0, deg, out=np.zeros_like(deg), where=~dangling)

    if reference is None:
        teleport = np.full(n, 1.0 / n)
        redistribute = teleport
    else:
        teleport = np.zeros(n)
        teleport[reference] = 1.0
        redistribute = teleport

    x = teleport.copy()
    converged = False
    n_iter = 0
    for n_iter in range(1, max_iter + 1):
        if should_stop is not None and should_stop():
            raise ComputationCancelled("walk cancelled")
        y = alpha * ((x * inv_deg) @ adj)
        dangling_mass = float(x[dangling].sum())
        y += (alpha * dangling_mass) * redistribute
        y += (1.0 - alpha) * teleport
        residual = float(np.abs(y - x).sum())
        x = y
        if residual < tol:
            converged = True
            break

    x /= x.sum()
    return x, n_iter, converged


def combine_rank_orders(first_ranks: np.ndarray, second_ranks: np.ndarray) -> np.ndarray:
    """Merge two 1-based rank vectors into a single best-first node order.

    Nodes sort by their worse rank ascending, then their better rank
    ascending, then node index ascending.
    """
    if first_ranks.shape != second_ranks.shape:
        raise ValueError("rank vectors must have equal length")
    worse = np.maximum(first_ranks, second_ranks)
    better = np.minimum(first_ranks, second_ranks)
    return np.lexsort((np.arange(first_ranks.shape[0]), better, worse))


def two_d_order(incoming_scores: np.ndarray, outgoing_scores: np.ndarray) -> np.ndarray:
    """Rank-only combination of an in-link and an out-link score vector."""
    return combine_rank_orders(
        ranks_from_scores(incoming_scores), ranks_from_scores(outgoing_scores)
    )
