"""Estimator-style rankers over directed graphs.

Every ranker follows the scikit-learn protocol: hyperparameters in
``__init__`` (so ``get_params``/``set_params``/``clone`` work), a
``fit(X)`` that accepts a :class:`~cyclerank.graph.Graph` (or anything
:func:`~cyclerank.validation.check_graph` coerces), and fitted
attributes with trailing underscores:

* ``scores_``   per-node relevance scores (None for the rank-only 2D
  combination)
* ``ranking_``  node indices best-first under the shared tie-break
* ``graph_``    the fitted graph, kept for label lookups in ``top_k``

Walk-based rankers also expose ``n_iter_`` and ``converged_``;
non-convergence is reported there rather than raised, so results can
still be displayed.
"""
from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from . import cycles, walk
from .ranking import RankedRow, rank_order, top_k_rows
from .validation import check_graph, check_source

__all__ = [
    "ALGORITHMS",
    "PERSONALIZED_ALGORITHMS",
    "PageRank",
    "PersonalizedPageRank",
    "CheiRank",
    "PersonalizedCheiRank",
    "TwoDRank",
    "PersonalizedTwoDRank",
    "CycleRank",
    "make_ranker",
]


class BaseRanker(BaseEstimator):
    """Shared plumbing: fitted-state bookkeeping and top-k extraction."""

    # cooperative-cancellation hook for long runs; set post-construction
    # by the task executor, not a hyperparameter
    _should_stop = None

    def top_k(self, k: int = 50) -> list[RankedRow]:
        """First min(k, n) ranked rows as (label, rank, score) tuples."""
        check_is_fitted(self, "ranking_")
        return top_k_rows(self.graph_.labels, self.ranking_, self.scores_, k)

    def _finish(self, g, scores: np.ndarray | None, ranking: np.ndarray):
        self.graph_ = g
        self.scores_ = scores
        self.ranking_ = ranking
        return self


class _WalkRanker(BaseRanker):
    """Common fit logic for the PageRank family."""

    _personalized = False
    _transposed = False

    def __init__(self, alpha=walk.DEFAULT_ALPHA, tol=walk.DEFAULT_TOL,
                 max_iter=walk.DEFAULT_MAX_ITER):
        self.alpha = alpha
        self.tol = tol
        self.max_iter = max_iter

    def _walk(self, g, reference=None):
        return walk.walk_scores(
            g, alpha=self.alpha, tol=self.tol, max_iter=self.max_iter,
            reference=reference, should_stop=self._should_stop,
        )

    def fit(self, X, y=None):
        g = check_graph(X)
        target = g.transpose() if self._transposed else g
        reference = check_source(g, self.source) if self._personalized else None
        scores, self.n_iter_, self.converged_ = self._walk(target, reference)
        return self._finish(g, scores, rank_order(scores))


class PageRank(_WalkRanker):
    """Global in-link relevance: stationary distribution of the damped walk.

    Dangling mass is spread uniformly, the teleport vector is uniform,
    and the result is normalized to sum 1.
    """


class PersonalizedPageRank(_WalkRanker):
    """Damped walk that teleports only to the source node.

    Dangling mass is also redirected to the source, keeping all
    probability within the source's reachable set.
    """

    _personalized = True

    def __init__(self, source=None, alpha=walk.DEFAULT_ALPHA, tol=walk.DEFAULT_TOL,
                 max_iter=walk.DEFAULT_MAX_ITER):
        super().__init__(alpha=alpha, tol=tol, max_iter=max_iter)
        self.source = source


class CheiRank(_WalkRanker):
    """PageRank of the transposed graph: out-link based relevance."""

    _transposed = True


class PersonalizedCheiRank(PersonalizedPageRank):
    """Personalized PageRank of the transposed graph."""

    _transposed = True


class _TwoDBase(BaseRanker):
    """Rank-only combination of the in-link and out-link walks.

    Nodes order by the worse of their two ranks, then the better one,
    then node index; no scores are attached.
    """

    _personalized = False

    def __init__(self, alpha=walk.DEFAULT_ALPHA, tol=walk.DEFAULT_TOL,
                 max_iter=walk.DEFAULT_MAX_ITER):
        self.alpha = alpha
        self.tol = tol
        self.max_iter = max_iter

    def fit(self, X, y=None):
        g = check_graph(X)
        reference = check_source(g, self.source) if self._personalized else None
        kw = dict(alpha=self.alpha, tol=self.tol, max_iter=self.max_iter,
                  reference=reference, should_stop=self._should_stop)
        fwd, it_f, ok_f = walk.walk_scores(g, **kw)
        rev, it_r, ok_r = walk.walk_scores(g.transpose(), **kw)
        self.n_iter_ = max(it_f, it_r)
        self.converged_ = ok_f and ok_r
        return self._finish(g, None, walk.two_d_order(fwd, rev))


class TwoDRank(_TwoDBase):
    pass


class PersonalizedTwoDRank(_TwoDBase):
    _personalized = True

    def __init__(self, source=None, alpha=walk.DEFAULT_ALPHA, tol=walk.DEFAULT_TOL,
                 max_iter=walk.DEFAULT_MAX_ITER):
        super().__init__(alpha=alpha, tol=tol, max_iter=max_iter)
        self.source = source


class CycleRank(BaseRanker):
    """Relevance by weighted counts of bounded simple cycles through the source.

    ``max_length`` bounds the cycle length (2..10); ``scoring`` picks the
    per-length weight (exponential e^-n by default, or reciprocal /
    constant).  Scores are absolute, not normalized; the source node
    always ranks first or ties for first.
    """

    def __init__(self, source=None, max_length=3, scoring="exponential", prune=True):
        self.source = source
        self.max_length = max_length
        self.scoring = scoring
        self.prune = prune

    def fit(self, X, y=None):
        g = check_graph(X)
        reference = check_source(g, self.source)
        scores, self.counts_ = cycles.cyclerank_scores(
            g, reference, max_length=self.max_length,
            scoring=self.scoring, prune=self.prune,
            should_stop=self._should_stop,
        )
        return self._finish(g, scores, rank_order(scores))


ALGORITHMS = {
    "pagerank": PageRank,
    "personalized_pagerank": PersonalizedPageRank,
    "cheirank": CheiRank,
    "personalized_cheirank": PersonalizedCheiRank,
    "2drank": TwoDRank,
    "personalized_2drank": PersonalizedTwoDRank,
    "cyclerank": CycleRank,
}

PERSONALIZED_ALGORITHMS = frozenset(
    ["personalized_pagerank", "personalized_cheirank", "personalized_2drank", "cyclerank"]
)

SCORELESS_ALGORITHMS = frozenset(["2drank", "personalized_2drank"])


def make_ranker(algorithm: str, source=None, alpha=None, k=None, sigma=None,
                tol=None, max_iter=None) -> BaseRanker:
    """Build a configured ranker from CLI/service style parameters.

    ``k`` and ``sigma`` configure cycle counting; ``alpha`` the damped
    walks.  Missing values fall back to each estimator's defaults.
    """
    if algorithm not in ALGORITHMS:
        choices = sorted(ALGORITHMS)
        raise ValueError(f"unknown algorithm {algorithm!r}; expected one of {choices}")

    if algorithm == "cyclerank":
        params = {"source": source}
        if k is not None:
            params["max_length"] = k
        if sigma is not None:
            params["scoring"] = cycles.resolve_scoring(sigma)
    else:
        params = {}
        if alpha is not None:
            params["alpha"] = alpha
        if tol is not None:
            params["tol"] = tol
        if max_iter is not None:
            params["max_iter"] = max_iter
        if algorithm in PERSONALIZED_ALGORITHMS:
            params["source"] = source
    return ALGORITHMS[algorithm](**params)
