"""Explicit degree-restricted switch certificates between graphs with equal NDL.

The constructive route canonicalizes both graphs around a vertex of maximum
degree, deletes that vertex and recurses.  Every existence claim the route
relies on is checked at runtime; when one fails a :class:`ProofGapEvent` is
recorded and that recursion level is solved by breadth-first search over
isomorphism classes instead (:func:`fallback_search`).
"""
from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Sequence

from .errors import (
    DiameterViolationError,
    FallbackExhaustedError,
    InternalMismatchError,
    InvalidStepError,
    NotEquivalentError,
    NotReachableError,
    SizeLimitError,
)
from .formats import write_graph6
from .graph_core import Graph, canonical_form, delete_vertex, diameter, find_isomorphism, is_isomorphism
from .profiles import (
    Order,
    complement_profile,
    degree_from_shell2,
    degree_list,
    labeled_profile,
    lex_compare,
    profile_set,
)
from .switches import SwitchKind, TwoSwitch, apply_switch, classify_switch, enumerate_switches, inverse_switch

FALLBACK_BOUND = 8

CANONICALIZE_NO_Y = "CANONICALIZE_NO_Y"
RECURSION_NDL_MISMATCH = "RECURSION_NDL_MISMATCH"
LIFT_INVALID = "LIFT_INVALID"


@dataclass(frozen=True)
class ProofGapEvent:
    stage: str
    vertices: tuple[int, ...]
    graph: str  # graph6 of the graph the event was raised on

    def to_json(self) -> dict:
        return {"stage": self.stage, "vertices": list(self.vertices), "graph": self.graph}


@dataclass
class Telemetry:
    max_depth: int = 0
    canonicalization_switches: int = 0
    fallback_invocations: int = 0
    proof_gaps: list[ProofGapEvent] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "max_depth": self.max_depth,
            "canonicalization_switches": self.canonicalization_switches,
            "fallback_invocations": self.fallback_invocations,
            "proof_gaps": [e.to_json() for e in self.proof_gaps],
        }


@dataclass
class TransformResult:
    seq_g: list[TwoSwitch]
    seq_h: list[TwoSwitch]
    bijection: tuple[int, ...]
    telemetry: Telemetry

    def to_json(self) -> dict:
        return {
            "seq_g": [list(s) for s in self.seq_g],
            "seq_h": [list(s) for s in self.seq_h],
            "bijection": list(self.bijection),
            "telemetry": self.telemetry.to_json(),
        }


# -- certificate checking ------------------------------------------------------


def replay(g: Graph, seq: Sequence[TwoSwitch]) -> Graph:
    """Apply ``seq`` to ``g``; every step must be degree-restricted when applied."""
    for i, s in enumerate(seq):
        kind = classify_switch(g, TwoSwitch(*s))
        if kind is not SwitchKind.DEGREE_RESTRICTED:
            raise InvalidStepError(i, f"{tuple(s)} is {kind.value}")
        g = apply_switch(g, TwoSwitch(*s))
    return g


def single_path(result: TransformResult) -> list[TwoSwitch]:
    """One sequence on G's labels that ends at H relabeled by the inverse bijection.

    ``replay(g, single_path(r)).relabel(r.bijection) == h``.
    """
    inv = [0] * len(result.bijection)
    for u, x in enumerate(result.bijection):
        inv[x] = u
    back = [TwoSwitch(*(inv[x] for x in inverse_switch(s))) for s in reversed(result.seq_h)]
    return list(result.seq_g) + back


def check_result(g: Graph, h: Graph, result: TransformResult) -> None:
    g_end = replay(g, result.seq_g)
    h_end = replay(h, result.seq_h)
    if not is_isomorphism(g_end, h_end, result.bijection):
        raise InternalMismatchError("certificate endpoints are not related by the bijection")


# -- constructive route ------------------------------------------------------------


def _desc_key(deg: Sequence[int], ndl: Sequence[tuple]):
    # (degree desc, NDL lex desc, index asc); equal degrees imply equal NDL length
    return lambda v: (-deg[v], tuple(-d for d in ndl[v]), v)


def canonicalize_around(g: Graph, w: int, events: list | None = None) -> tuple[Graph, list[TwoSwitch]]:
    """Swap neighbours of ``w`` for same-degree non-neighbours with larger NDL.

    Degree-restricted switches keep every vertex's NDL, so the NDLs are
    computed once.  Each switch strictly raises the multiset of NDLs on
    ``N(w)``, which bounds the number of restarts.
    """
    g._check(w)
    ndl = labeled_profile(g, 1)
    deg = g.degrees
    key = _desc_key(deg, ndl)
    seq: list[TwoSwitch] = []
    reported = set()
    while True:
        for z in sorted(g.neighbors(w), key=key):
            pool = [x for x in range(g.n)
                    if x != w and not g.adj[w] >> x & 1 and deg[x] == deg[z]]
            if not pool:
                continue
            x = min(pool, key=lambda v: (tuple(-d for d in ndl[v]), v))
            if lex_compare(ndl[x], ndl[z]) is not Order.GREATER:
                continue
            ys = [y for y in g.neighbors(x)
                  if y not in (w, z) and not g.adj[z] >> y & 1 and deg[y] == deg[w]]
            if not ys:
                if events is not None and (z, x) not in reported:
                    reported.add((z, x))
                    events.append(ProofGapEvent(CANONICALIZE_NO_Y, (w, z, x), write_graph6(g)))
                continue
            s = TwoSwitch(w, z, ys[0], x)
            g = apply_switch(g, s)
            seq.append(s)
            break
        else:
            return g, seq


def _pick_root(g: Graph, ndl) -> int:
    return min(range(g.n), key=_desc_key(g.degrees, ndl))


def _lift(seq, v):
    up = lambda x: x + 1 if x >= v else x  # noqa: E731
    return [TwoSwitch(*(up(x) for x in s)) for s in seq]


def _restricted_along(g: Graph, seq) -> bool:
    try:
        replay(g, seq)
    except InvalidStepError:
        return False
    return True


class _Solver:
    def __init__(self, fallback_bound: int):
        self.fallback_bound = fallback_bound
        self.tel = Telemetry()

    def fallback(self, g: Graph, h: Graph):
        self.tel.fallback_invocations += 1
        if g.n > self.fallback_bound:
            raise FallbackExhaustedError(
                f"constructive route failed on n={g.n} > fallback bound {self.fallback_bound}")
        seq, pi = fallback_search(g, h, self.fallback_bound)
        return seq, [], pi

    def gap(self, stage, vertices, g):
        self.tel.proof_gaps.append(ProofGapEvent(stage, tuple(vertices), write_graph6(g)))

    def solve(self, g: Graph, h: Graph, depth: int):
        self.tel.max_depth = max(self.tel.max_depth, depth)
        if g.n <= 4 or g.m == 0:
            pi = find_isomorphism(g, h, limit=max(g.n, 1))
            if pi is not None:
                return [], [], pi
            return self.fallback(g, h)

        ndl_g = labeled_profile(g, 1)
        ndl_h = labeled_profile(h, 1)
        w = _pick_root(g, ndl_g)
        w_h = min((v for v in range(h.n) if ndl_h[v] == ndl_g[w]), key=_desc_key(h.degrees, ndl_h))

        events = self.tel.proof_gaps
        g_star, seq_g = canonicalize_around(g, w, events)
        h_star, seq_h = canonicalize_around(h, w_h, events)
        self.tel.canonicalization_switches += len(seq_g) + len(seq_h)

        around_g = Counter((g.degrees[z], ndl_g[z]) for z in g_star.neighbors(w))
        around_h = Counter((h.degrees[z], ndl_h[z]) for z in h_star.neighbors(w_h))
        g_sub = delete_vertex(g_star, w)
        h_sub = delete_vertex(h_star, w_h)
        if around_g != around_h or profile_set(labeled_profile(g_sub, 1)) != profile_set(labeled_profile(h_sub, 1)):
            self.gap(RECURSION_NDL_MISMATCH, (w, w_h), g)
            return self.fallback(g, h)

        sub_g, sub_h, sub_pi = self.solve(g_sub, h_sub, depth + 1)
        lifted_g = _lift(sub_g, w)
        lifted_h = _lift(sub_h, w_h)
        pi = [0] * g.n
        pi[w] = w_h
        for i, x in enumerate(sub_pi):
            pi[i + 1 if i >= w else i] = x + 1 if x >= w_h else x

        if _restricted_along(g_star, lifted_g) and _restricted_along(h_star, lifted_h):
            if is_isomorphism(replay(g_star, lifted_g), replay(h_star, lifted_h), pi):
                return seq_g + lifted_g, seq_h + lifted_h, tuple(pi)
        self.gap(LIFT_INVALID, (w, w_h), g)
        return self.fallback(g, h)


def transform_by_ndl(g: Graph, h: Graph, fallback_bound: int = FALLBACK_BOUND) -> TransformResult:
    """Certificate that ``g`` can be turned into a copy of ``h`` by degree-restricted switches.

    Raises :class:`NotEquivalentError` if the NDL profile sets differ.
    """
    if g.n != h.n or profile_set(labeled_profile(g, 1)) != profile_set(labeled_profile(h, 1)):
        raise NotEquivalentError("graphs have different neighborhood degree lists")
    solver = _Solver(fallback_bound)
    seq_g, seq_h, pi = solver.solve(g, h, 0)
    result = TransformResult(seq_g, seq_h, tuple(pi), solver.tel)
    check_result(g, h, result)
    return result


def ndl_from_n2dl(n: int, n2dl: Sequence[tuple]) -> tuple[tuple[int, ...], list[tuple]]:
    """Recover degrees and per-vertex NDLs of a diameter-2 graph from its N_2DLs."""
    degrees = tuple(degree_from_shell2(n, len(lst)) for lst in n2dl)
    global_degrees = degree_list(degrees)
    return degrees, [complement_profile(lst, d, global_degrees) for lst, d in zip(n2dl, degrees)]


def transform_by_n2dl(g: Graph, h: Graph, fallback_bound: int = FALLBACK_BOUND) -> TransformResult:
    """Same as :func:`transform_by_ndl` for two diameter-2 graphs compared by N_2DL."""
    dg, dh = diameter(g), diameter(h)
    if dg != 2 or dh != 2:
        raise DiameterViolationError(f"diameters are {dg} and {dh}, both must be 2")
    if g.n != h.n:
        raise NotEquivalentError("different vertex counts")
    n2_g = labeled_profile(g, 2)
    n2_h = labeled_profile(h, 2)
    if profile_set(n2_g) != profile_set(n2_h):
        raise NotEquivalentError("graphs have different 2-neighborhood degree lists")
    derived = {}
    for name, graph, n2 in (("g", g, n2_g), ("h", h, n2_h)):
        degrees, ndl = ndl_from_n2dl(graph.n, n2)
        if degrees != graph.degrees or tuple(ndl) != labeled_profile(graph, 1):
            raise InternalMismatchError(f"NDL derived from N_2DL disagrees with direct NDL on {name}")
        derived[name] = profile_set(ndl)
    if derived["g"] != derived["h"]:
        raise InternalMismatchError("equal N_2DL but derived NDL profile sets differ")
    return transform_by_ndl(g, h, fallback_bound)


# -- exhaustive fallback -------------------------------------------------------------


def fallback_search(g: Graph, h: Graph, bound: int = FALLBACK_BOUND) -> tuple[list[TwoSwitch], tuple[int, ...]]:
    """Shortest degree-restricted switch path from ``g`` to a copy of ``h``.

    Breadth-first over isomorphism classes; each class keeps the labelled graph
    actually reached from ``g`` so the returned path applies to ``g`` directly.
    """
    if max(g.n, h.n) > bound:
        raise SizeLimitError(f"fallback search limited to n <= {bound}")
    if g.n != h.n:
        raise NotReachableError("different vertex counts")
    target = canonical_form(h)
    start = canonical_form(g)
    parent: dict[bytes, tuple[bytes, TwoSwitch] | None] = {start: None}
    found = g if start == target else None
    queue = deque([g])
    while queue and found is None:
        cur = queue.popleft()
        cur_form = canonical_form(cur)
        for s in enumerate_switches(cur, restricted=True):
            nxt = apply_switch(cur, s)
            form = canonical_form(nxt)
            if form in parent:
                continue
            parent[form] = (cur_form, s)
            if form == target:
                found = nxt
                break
            queue.append(nxt)
    if found is None:
        raise NotReachableError("no degree-restricted switch path")
    path = []
    node = target
    while parent[node] is not None:
        node, s = parent[node]
        path.append(s)
    path.reverse()
    pi = find_isomorphism(found, h, limit=max(bound, h.n))
    assert pi is not None
    return path, pi
