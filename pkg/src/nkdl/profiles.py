"""Degree lists: degree sequence, NDL, N_kDL and distance degree sequences.

A degree list is a tuple of ints in descending order.  A profile set (the
graph-level invariant) is a tuple of degree lists sorted descending by
``(len, entries)`` so that equality of profile sets is multiset equality.
"""
from __future__ import annotations

from collections import Counter
from enum import IntEnum
from typing import Iterable, Sequence

from .errors import NotSubmultisetError, OutOfRangeError, RangeError
from .graph_core import Graph, shells

DegreeList = tuple
ProfileSet = tuple


class Order(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def degree_list(values: Iterable[int]) -> DegreeList:
    return tuple(sorted(values, reverse=True))


def profile_set(lists: Iterable[Sequence[int]]) -> ProfileSet:
    return tuple(sorted((tuple(x) for x in lists), key=lambda x: (len(x), x), reverse=True))


def degree_sequence(g: Graph) -> DegreeList:
    return degree_list(g.degrees)


def nkdl_vertex(g: Graph, v: int, k: int) -> DegreeList:
    """Degrees of the vertices at distance exactly ``k`` from ``v``, descending."""
    if k < 1:
        raise OutOfRangeError(f"k must be positive, got {k}")
    if k == 1:
        return degree_list(g.degrees[u] for u in g.neighbors(v))
    layers = shells(g, v)
    if k >= len(layers):
        return ()
    return degree_list(g.degrees[u] for u in layers[k])


def ndl_vertex(g: Graph, v: int) -> DegreeList:
    return nkdl_vertex(g, v, 1)


def labeled_profile(g: Graph, k: int) -> tuple[DegreeList, ...]:
    """Per-vertex N_kDL, indexed by vertex."""
    return tuple(nkdl_vertex(g, v, k) for v in range(g.n))


def nkdl_graph(g: Graph, k: int) -> ProfileSet:
    if k < 1:
        raise OutOfRangeError(f"k must be positive, got {k}")
    return profile_set(labeled_profile(g, k))


def ndl_graph(g: Graph) -> ProfileSet:
    return nkdl_graph(g, 1)


def distance_degree_sequence(g: Graph, v: int) -> tuple[int, ...]:
    """``(1, |N_1(v)|, ..., |N_e(v)(v)|)`` over v's component."""
    return tuple(len(layer) for layer in shells(g, v))


def lex_compare(a: Sequence[int], b: Sequence[int]) -> Order:
    """Entrywise comparison; a proper prefix is smaller than its extension."""
    for x, y in zip(a, b):
        if x != y:
            return Order.LESS if x < y else Order.GREATER
    if len(a) == len(b):
        return Order.EQUAL
    return Order.LESS if len(a) < len(b) else Order.GREATER


def degree_from_shell2(n: int, shell2_size: int) -> int:
    """Degree of a vertex in a diameter-2 graph from the size of its 2-shell."""
    if shell2_size < 0 or shell2_size > n - 1:
        raise RangeError(f"shell size {shell2_size} impossible for n={n}")
    return n - 1 - shell2_size


def complement_profile(vertex_list: Sequence[int], own_degree: int,
                       global_degrees: Sequence[int]) -> DegreeList:
    """``global_degrees - vertex_list - {own_degree}`` as a descending list.

    In a diameter-2 graph this turns N_2DL(v) into NDL(v) and back.
    """
    rest = Counter(global_degrees)
    rest.subtract(vertex_list)
    rest[own_degree] -= 1
    if any(c < 0 for c in rest.values()):
        raise NotSubmultisetError(
            f"{tuple(vertex_list)} + ({own_degree},) is not contained in {tuple(global_degrees)}")
    return degree_list(rest.elements())
