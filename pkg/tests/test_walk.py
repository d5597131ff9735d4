import numpy as np
import pytest

from cyclerank import (
    CheiRank,
    PageRank,
    PersonalizedCheiRank,
    PersonalizedPageRank,
    PersonalizedTwoDRank,
    TwoDRank,
)
from cyclerank.walk import combine_rank_orders, walk_scores

from conftest import graph_from_edges, labeled_graph, random_edge_set
from oracles import dense_walk_scores, ranks_by_sorting, two_d_rule

TRIANGLE = [("a", "b"), ("b", "c"), ("c", "a")]


def test_pagerank_cycle_is_uniform():
    est = PageRank().fit(labeled_graph(TRIANGLE))
    np.testing.assert_allclose(est.scores_, 1.0 / 3.0, atol=1e-9)


def test_pagerank_dangling_two_nodes():
    # frozen from the dense oracle on the 2x2 system with uniform
    # dangling redistribution
    est = PageRank(alpha=0.85).fit(labeled_graph([("a", "b")]))
    np.testing.assert_allclose(est.scores_, [0.35087719, 0.64912281], atol=1e-7)
    assert abs(est.scores_.sum() - 1.0) < 1e-6


def test_pagerank_normalization_random():
    rng = np.random.default_rng(5)
    for _ in range(20):
        n = int(rng.integers(1, 30))
        g = graph_from_edges(n, random_edge_set(rng, n, 0.2, self_loops=True))
        scores = PageRank().fit(g).scores_
        assert abs(scores.sum() - 1.0) < 1e-6
        assert (scores >= 0).all()


def test_pagerank_empty_graph_rejected():
    from cyclerank import EdgeList, build_graph

    with pytest.raises(ValueError):
        PageRank().fit(build_graph(EdgeList(edges=[], declared_labels=[])))


def test_pagerank_matches_dense_oracle():
    rng = np.random.default_rng(42)
    for _ in range(15):
        n = int(rng.integers(2, 50))
        edges = random_edge_set(rng, n, 0.15, self_loops=True)
        g = graph_from_edges(n, edges)
        got = PageRank().fit(g).scores_
        want = dense_walk_scores(n, edges, 0.85)
        assert np.abs(got - want).max() <= 1e-8


def test_personalized_two_cycle():
    # p_a = 0.15 + 0.85 p_b, p_b = 0.85 p_a
    g = labeled_graph([("a", "b"), ("b", "a")])
    est = PersonalizedPageRank(source="a", alpha=0.85).fit(g)
    np.testing.assert_allclose(est.scores_, [0.54054054, 0.45945946], atol=1e-7)


def test_personalized_self_loop_only():
    est = PersonalizedPageRank(source="a").fit(labeled_graph([("a", "a")]))
    np.testing.assert_allclose(est.scores_, [1.0])


def test_personalized_unreachable_gets_zero():
    # c is disconnected from the a<->b component
    g = graph_from_edges(3, [(0, 1), (1, 0)])
    est = PersonalizedPageRank(source="0").fit(g)
    assert est.scores_[2] < 1e-12


def test_personalized_matches_dense_oracle():
    rng = np.random.default_rng(99)
    for _ in range(15):
        n = int(rng.integers(2, 50))
        edges = random_edge_set(rng, n, 0.15, self_loops=True)
        g = graph_from_edges(n, edges)
        ref = int(rng.integers(0, n))
        got = PersonalizedPageRank(source=ref).fit(g).scores_
        want = dense_walk_scores(n, edges, 0.85, reference=ref)
        assert np.abs(got - want).max() <= 1e-8


def test_personalized_requires_source():
    with pytest.raises(ValueError):
        PersonalizedPageRank().fit(labeled_graph(TRIANGLE))


def test_cheirank_equals_pagerank_of_transpose():
    rng = np.random.default_rng(3)
    for _ in range(20):
        n = int(rng.integers(1, 20))
        g = graph_from_edges(n, random_edge_set(rng, n, 0.25, self_loops=True))
        chei = CheiRank().fit(g).scores_
        pr_t = PageRank().fit(g.transpose()).scores_
        assert (chei == pr_t).all()  # bitwise


def test_personalized_cheirank_duality():
    rng = np.random.default_rng(4)
    for _ in range(20):
        n = int(rng.integers(2, 20))
        g = graph_from_edges(n, random_edge_set(rng, n, 0.25))
        ref = int(rng.integers(0, n))
        chei = PersonalizedCheiRank(source=ref).fit(g).scores_
        ppr_t = PersonalizedPageRank(source=ref).fit(g.transpose()).scores_
        assert (chei == ppr_t).all()


def test_cheirank_reverses_flow():
    # with only b->a reversed-edge flow, a personalized cheirank from b
    # must give a positive score to a
    g = labeled_graph([("a", "b")])
    est = PersonalizedCheiRank(source="b").fit(g)
    assert est.scores_[0] > 0.0


def test_combine_rank_orders_spec_case():
    order = combine_rank_orders(np.array([1, 2, 3]), np.array([3, 1, 2]))
    assert order.tolist() == [1, 0, 2]


def test_two_d_rank_agreement_case():
    # pagerank and cheirank orders coincide on this symmetric 2-cycle
    # plus a dangling appendix, so 2drank must equal that order
    g = labeled_graph([("a", "b"), ("b", "a")])
    est = TwoDRank().fit(g)
    pr_order = PageRank().fit(g).ranking_
    assert est.ranking_.tolist() == pr_order.tolist()
    assert est.scores_ is None


def test_two_d_rank_matches_rule_oracle():
    rng = np.random.default_rng(12)
    for _ in range(25):
        n = 8
        edges = random_edge_set(rng, n, 0.3)
        g = graph_from_edges(n, edges)
        est = TwoDRank().fit(g)
        ranks_in = ranks_by_sorting(PageRank().fit(g).scores_)
        ranks_out = ranks_by_sorting(CheiRank().fit(g).scores_)
        assert est.ranking_.tolist() == two_d_rule(ranks_in, ranks_out)
        assert sorted(est.ranking_.tolist()) == list(range(n))


def test_personalized_two_d_rank_two_cycle():
    g = labeled_graph([("a", "b"), ("b", "a")])
    est = PersonalizedTwoDRank(source="a").fit(g)
    assert [g.labels[i] for i in est.ranking_] == ["a", "b"]


def test_personalized_two_d_rank_isolated_self_loop():
    g = graph_from_edges(3, [(0, 0), (1, 2), (2, 1)])
    est = PersonalizedTwoDRank(source=0).fit(g)
    assert est.ranking_[0] == 0


def test_non_convergence_reported_not_raised():
    rng = np.random.default_rng(8)
    g = graph_from_edges(20, random_edge_set(rng, 20, 0.2))
    est = PageRank(max_iter=2).fit(g)
    assert est.converged_ is False
    assert est.n_iter_ == 2


def test_walk_param_validation():
    g = labeled_graph(TRIANGLE)
    for bad in (0.0, 1.0, -0.3, 1.5):
        with pytest.raises(ValueError):
            PageRank(alpha=bad).fit(g)
    with pytest.raises(ValueError):
        PageRank(tol=-1e-3).fit(g)
    with pytest.raises(ValueError):
        PageRank(max_iter=0).fit(g)


def test_walk_determinism_bitwise():
    rng = np.random.default_rng(21)
    g = graph_from_edges(30, random_edge_set(rng, 30, 0.2))
    a, _, _ = walk_scores(g)
    b, _, _ = walk_scores(g)
    assert (a == b).all()
