"""Maximum-leaf spanning trees: exact search, lower bounds and constructions."""

from fractions import Fraction

from . import _core
from ._core import (
    Graph,
    LeafspanError,
    SpanningTree,
    blocks,
    bridges,
    chain_metric,
    construct_theorem1,
    construct_theorem2,
    cutpoints,
    cycle_spine,
    exact_mlst,
    extremal_chain,
    girth,
    graph_hash,
    greedy_leafy,
    make_tree,
    parse_graph,
    random_constrained_graph,
    remove_large_blocks,
    s_count,
    serialize_graph,
    to_dot,
    triangle_tree,
    verify_corpus,
)


def bound_theorem1(s: int) -> Fraction:
    return Fraction(*_core.bound_theorem1(s))


def bound_kw(v: int) -> Fraction:
    return Fraction(*_core.bound_kw(v))


def bound_theorem2(v: int, g: int, k: int) -> Fraction:
    return Fraction(*_core.bound_theorem2(v, g, k))


def alpha(g: int, k: int) -> Fraction:
    return Fraction(*_core.alpha(g, k))


def max_leaves(graph: Graph) -> int:
    """u(G): the largest leaf count over all spanning trees."""
    u, _, exhaustive = exact_mlst(graph)
    if not exhaustive:
        raise RuntimeError("node budget exhausted")
    return u


__all__ = [name for name in dir() if not name.startswith("_")]
