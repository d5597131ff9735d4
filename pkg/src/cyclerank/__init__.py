"""Personalized relevance rankers for directed graphs.

Cycle-based relevance (CycleRank) plus the PageRank family (PageRank,
Personalized PageRank, CheiRank, 2DRank and personalized variants),
with parsers for edgelist CSV, Pajek and ASD graph files, a batch CLI
(``cyclerank run|compare|serve``) and an HTTP task service.
"""

from .cycles import CycleCounts, count_cycles, reverse_distances, score_from_counts
from .exceptions import ComputationCancelled, GraphFormatError, UnknownNodeError
from .formats import detect_format, load_graph, parse, serialize
from .graph import EdgeList, Graph, build_graph
from .rankers import (
    ALGORITHMS,
    PERSONALIZED_ALGORITHMS,
    CheiRank,
    CycleRank,
    PageRank,
    PersonalizedCheiRank,
    PersonalizedPageRank,
    PersonalizedTwoDRank,
    TwoDRank,
    make_ranker,
)
from .ranking import RankedRow

__version__ = "0.1.0"

__all__ = [
    "ALGORITHMS",
    "PERSONALIZED_ALGORITHMS",
    "CheiRank",
    "ComputationCancelled",
    "CycleCounts",
    "CycleRank",
    "EdgeList",
    "Graph",
    "GraphFormatError",
    "PageRank",
    "PersonalizedCheiRank",
    "PersonalizedPageRank",
    "PersonalizedTwoDRank",
    "RankedRow",
    "TwoDRank",
    "UnknownNodeError",
    "build_graph",
    "count_cycles",
    "detect_format",
    "load_graph",
    "make_ranker",
    "parse",
    "reverse_distances",
    "score_from_counts",
    "serialize",
]
