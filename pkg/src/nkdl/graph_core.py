"""Immutable simple graphs on vertices 0..n-1.

Adjacency is kept twice: as a frozenset of ``(u, v)`` pairs with ``u < v`` and
as one integer bitmask per vertex.  Everything that looks like a mutation
returns a new :class:`Graph`.
"""
from __future__ import annotations

import math
from collections import deque
from typing import Iterable, Sequence

from .errors import OutOfRangeError, SelfLoopError, SizeLimitError

UNREACHABLE = None
INFINITE = math.inf

#: exact canonicalization / isomorphism search refuses graphs above this size
CANON_LIMIT = 12


class Graph:
    __slots__ = ("n", "edges", "adj", "_nbrs", "degrees", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise OutOfRangeError(f"negative vertex count {n}")
        canon = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise OutOfRangeError(f"edge ({u}, {v}) outside 0..{n - 1}")
            if u == v:
                raise SelfLoopError(f"self-loop at vertex {u}")
            canon.add((u, v) if u < v else (v, u))
        adj = [0] * n
        for u, v in canon:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.edges = frozenset(canon)
        self.adj = tuple(adj)
        self._nbrs = tuple(tuple(_bits(a)) for a in adj)
        self.degrees = tuple(a.bit_count() for a in adj)
        self._hash = None

    # -- basic queries -----------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check(v)
        return self._nbrs[v]

    def degree(self, v: int) -> int:
        self._check(v)
        return self.degrees[v]

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return bool(self.adj[u] >> v & 1)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise OutOfRangeError(f"vertex {v} outside 0..{self.n - 1}")

    # -- derived graphs ----------------------------------------------------

    def relabel(self, mapping: Sequence[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed to ``mapping[v]``."""
        return Graph(self.n, ((mapping[u], mapping[v]) for u, v in self.edges))

    def edit(self, remove: Iterable[tuple[int, int]] = (), add: Iterable[tuple[int, int]] = ()) -> Graph:
        edges = set(self.edges)
        for u, v in remove:
            edges.discard((u, v) if u < v else (v, u))
        edges.update(add)
        return Graph(self.n, edges)

    # -- value semantics ---------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.edges))
        return self._hash

    def __repr__(self):
        return f"Graph({self.n}, {self.sorted_edges()})"


def _bits(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def build(n: int, edge_list: Iterable[tuple[int, int]]) -> Graph:
    """Construct a graph, deduplicating symmetric pairs; loops are rejected."""
    return Graph(n, edge_list)


# -- distances -------------------------------------------------------------


def bfs_distances(g: Graph, v: int) -> list:
    """Shortest-path distance from ``v`` to every vertex (``None`` if unreachable)."""
    g._check(v)
    dist = [UNREACHABLE] * g.n
    dist[v] = 0
    queue = deque([v])
    nbrs = g._nbrs
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in nbrs[u]:
            if dist[w] is None:
                dist[w] = du
                queue.append(w)
    return dist


def shells(g: Graph, v: int) -> list[list[int]]:
    """``shells(g, v)[k]`` is the sorted list of vertices at distance exactly k."""
    dist = bfs_distances(g, v)
    out: list[list[int]] = []
    for u, d in enumerate(dist):
        if d is None:
            continue
        while len(out) <= d:
            out.append([])
        out[d].append(u)
    return out


def neighborhood_k(g: Graph, v: int, k: int) -> set[int]:
    if k < 1:
        raise OutOfRangeError(f"k must be positive, got {k}")
    layers = shells(g, v)
    return set(layers[k]) if k < len(layers) else set()


def eccentricity_and_diameter(g: Graph) -> tuple[list, float | int]:
    """Per-vertex eccentricities and the diameter.

    Both are ``INFINITE`` for a disconnected graph.  The one-vertex (and the
    empty) graph has diameter 0.
    """
    ecc = []
    for v in range(g.n):
        dist = bfs_distances(g, v)
        ecc.append(INFINITE if None in dist else max(dist))
    return ecc, max(ecc, default=0)


def diameter(g: Graph) -> float | int:
    return eccentricity_and_diameter(g)[1]


def is_connected(g: Graph) -> bool:
    return g.n == 0 or None not in bfs_distances(g, 0)


def delete_vertex(g: Graph, v: int) -> Graph:
    """Remove ``v``; vertices above it shift down by one."""
    g._check(v)
    shift = lambda u: u - 1 if u > v else u  # noqa: E731
    return Graph(g.n - 1, ((shift(a), shift(b)) for a, b in g.edges if v not in (a, b)))


# -- canonical form ----------------------------------------------------------


def _refine(adj: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement of an ordered partition.

    Each cell is split by the vector of neighbour counts into every cell;
    the pieces are ordered by that vector so the result is labelling-invariant.
    """
    while True:
        masks = [sum(1 << v for v in c) for c in cells]
        out = []
        split = False
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            groups: dict[tuple, list[int]] = {}
            for v in c:
                a = adj[v]
                groups.setdefault(tuple((a & m).bit_count() for m in masks), []).append(v)
            if len(groups) > 1:
                split = True
                out.extend(groups[key] for key in sorted(groups))
            else:
                out.append(c)
        cells = out
        if not split:
            return cells


def _code(adj: Sequence[int], order: Sequence[int]) -> int:
    # graph6 bit order: (0,1), (0,2), (1,2), (0,3), ...
    code = 0
    for j in range(1, len(order)):
        row = adj[order[j]]
        for i in range(j):
            code = (code << 1) | (row >> order[i] & 1)
    return code


def canonical_labeling(g: Graph, limit: int = CANON_LIMIT) -> tuple[int, ...]:
    """Return ``order`` such that ``g`` relabeled by ``order[i] -> i`` is canonical.

    Individualization-refinement search over all leaves of the refinement tree,
    keeping the lexicographically largest adjacency code.  Vertices of a cell
    that are twins of an already explored vertex are skipped, since swapping
    twins is an automorphism that fixes the current partition.
    """
    if g.n > limit:
        raise SizeLimitError(f"canonical form limited to n <= {limit}, got {g.n}")
    adj = g.adj
    if g.n == 0:
        return ()
    best_code = -1
    best_order: tuple[int, ...] = ()

    def search(cells):
        nonlocal best_code, best_order
        cells = _refine(adj, cells)
        target = None
        for i, c in enumerate(cells):
            if len(c) > 1 and (target is None or len(c) < len(cells[target])):
                target = i
        if target is None:
            order = [c[0] for c in cells]
            code = _code(adj, order)
            if code > best_code:
                best_code, best_order = code, tuple(order)
            return
        cell = cells[target]
        tried: list[int] = []
        for v in cell:
            bit_v = 1 << v
            if any((adj[u] & ~bit_v) == (adj[v] & ~(1 << u)) for u in tried):
                continue
            tried.append(v)
            rest = [u for u in cell if u != v]
            search(cells[:target] + [[v], rest] + cells[target + 1:])

    search([list(range(g.n))])
    return best_order


def canonical_form(g: Graph, limit: int = CANON_LIMIT) -> bytes:
    """Byte string that is equal for two graphs iff they are isomorphic."""
    order = canonical_labeling(g, limit)
    code = _code(g.adj, order)
    bits = g.n * (g.n - 1) // 2
    return bytes([g.n]) + code.to_bytes((bits + 7) // 8, "big")


def canonical_graph(g: Graph, limit: int = CANON_LIMIT) -> Graph:
    order = canonical_labeling(g, limit)
    inverse = [0] * g.n
    for i, v in enumerate(order):
        inverse[v] = i
    return g.relabel(inverse)


# -- isomorphism -----------------------------------------------------------


def is_isomorphism(g: Graph, h: Graph, mapping: Sequence[int]) -> bool:
    if g.n != h.n or len(mapping) != g.n or sorted(mapping) != list(range(g.n)):
        return False
    if g.m != h.m:
        return False
    return all(h.has_edge(mapping[u], mapping[v]) for u, v in g.edges)


def find_isomorphism(g: Graph, h: Graph, limit: int = CANON_LIMIT) -> tuple[int, ...] | None:
    """A bijection ``pi`` with ``{u,v}`` in E(g) iff ``{pi[u], pi[v]}`` in E(h), or None.

    Backtracking over candidates that share a colour under joint refinement of
    the disjoint union of both graphs.
    """
    if max(g.n, h.n) > limit:
        raise SizeLimitError(f"isomorphism search limited to n <= {limit}")
    if g.n != h.n or g.m != h.m or sorted(g.degrees) != sorted(h.degrees):
        return None
    n = g.n
    if n == 0:
        return ()
    union = list(g.adj) + [a << n for a in h.adj]
    cells = _refine(union, [list(range(2 * n))])
    color = [0] * (2 * n)
    for c_idx, c in enumerate(cells):
        g_side = sum(1 for v in c if v < n)
        if 2 * g_side != len(c):
            return None
        for v in c:
            color[v] = c_idx
    candidates = [[u - n for u in cells[color[v]] if u >= n] for v in range(n)]

    # visit g's vertices so that each one (where possible) touches a mapped vertex
    order: list[int] = []
    seen = 0
    for start in sorted(range(n), key=lambda v: (len(candidates[v]), v)):
        if seen >> start & 1:
            continue
        queue = deque([start])
        seen |= 1 << start
        while queue:
            v = queue.popleft()
            order.append(v)
            for w in sorted(g._nbrs[v], key=lambda w: (len(candidates[w]), w)):
                if not seen >> w & 1:
                    seen |= 1 << w
                    queue.append(w)

    mapping = [-1] * n
    used = 0

    def extend(i):
        nonlocal used
        if i == n:
            return True
        v = order[i]
        for x in candidates[v]:
            if used >> x & 1:
                continue
            ok = True
            for u in order[:i]:
                if bool(g.adj[v] >> u & 1) != bool(h.adj[x] >> mapping[u] & 1):
                    ok = False
                    break
            if ok:
                mapping[v] = x
                used |= 1 << x
                if extend(i + 1):
                    return True
                used &= ~(1 << x)
                mapping[v] = -1
        return False

    return tuple(mapping) if extend(0) else None
