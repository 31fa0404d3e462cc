"""Exhaustive small-graph enumeration and brute-force checks of the NDL results.

Everything here works on isomorphism classes: a graph is represented by its
canonically relabeled copy, and the switch meta-graph has one node per class.
"""
from __future__ import annotations

import time
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterable, Sequence

from .errors import GraphError, SizeLimitError
from .formats import write_graph6
from .graph_core import Graph, canonical_form, canonical_graph, diameter, shells
from .profiles import degree_sequence, nkdl_graph
from .switches import apply_switch, enumerate_switches
from .transform import FALLBACK_BOUND, transform_by_ndl

ENUMERATION_CAP = 8


@lru_cache(maxsize=None)
def _classes(n: int) -> tuple[Graph, ...]:
    if n == 0:
        return (Graph(0),)
    seen: dict[bytes, Graph] = {}
    for base in _classes(n - 1):
        edges = base.sorted_edges()
        for mask in range(1 << (n - 1)):
            g = Graph(n, edges + [(u, n - 1) for u in range(n - 1) if mask >> u & 1])
            form = canonical_form(g)
            if form not in seen:
                seen[form] = canonical_graph(g)
    return tuple(seen[f] for f in sorted(seen, key=lambda f: (seen[f].m, f)))


def enumerate_graphs(n: int, cap: int = ENUMERATION_CAP) -> list[Graph]:
    """One canonical representative per isomorphism class on ``n`` vertices.

    Built by adding vertex ``n-1`` with every neighbour set to each class on
    ``n-1`` vertices and rejecting isomorphs by canonical form.  Ordered by
    edge count, then canonical form.
    """
    if n < 0 or n > cap:
        raise SizeLimitError(f"enumeration limited to 0 <= n <= {cap}, got {n}")
    return list(_classes(n))


def labeled_sweep_count(n: int) -> int:
    """Number of classes found by canonicalizing all 2^(n choose 2) labeled graphs."""
    if n > 6:
        raise SizeLimitError("labeled sweep is only practical for n <= 6")
    pairs = list(combinations(range(n), 2))
    forms = set()
    for mask in range(1 << len(pairs)):
        forms.add(canonical_form(Graph(n, [p for i, p in enumerate(pairs) if mask >> i & 1])))
    return len(forms)


def partition_by_profile(graphs: Iterable[Graph], k: int, diameter_filter: int | None = None) -> dict:
    """Group graphs by their N_kDL profile set, optionally keeping one diameter only."""
    classes: dict[tuple, list[Graph]] = {}
    for g in graphs:
        if diameter_filter is not None and diameter(g) != diameter_filter:
            continue
        classes.setdefault(nkdl_graph(g, k), []).append(g)
    return classes


class _UnionFind:
    def __init__(self):
        self.parent: dict = {}

    def find(self, x):
        self.parent.setdefault(x, x)
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def switch_neighbors(g: Graph, restricted: bool = True) -> set[bytes]:
    """Canonical forms reachable from ``g`` by one (restricted) switch."""
    return {canonical_form(apply_switch(g, s)) for s in enumerate_switches(g, restricted)}


def reachability_components(graphs: Sequence[Graph], restricted: bool = True,
                            keep: Callable[[Graph], bool] | None = None) -> dict[Graph, int]:
    """Component id of every graph in the switch meta-graph.

    ``graphs`` must be closed under switching (a full enumeration is).  With
    ``keep`` given, meta-edges are only followed between graphs that satisfy it.
    Ids are assigned in order of first appearance in ``graphs``.
    """
    forms = {g: canonical_form(g) for g in graphs}
    allowed = {f for g, f in forms.items() if keep is None or keep(g)}
    uf = _UnionFind()
    for g, f in forms.items():
        uf.find(f)
        if f not in allowed:
            continue
        for other in switch_neighbors(g, restricted):
            if other in allowed:
                uf.union(f, other)
    ids: dict[bytes, int] = {}
    out = {}
    for g in graphs:
        root = uf.find(forms[g])
        out[g] = ids.setdefault(root, len(ids))
    return out


@dataclass
class VerificationReport:
    n: int
    graphs_total: int = 0
    diameter2_total: int = 0
    shell2_degree_violations: list = field(default_factory=list)
    partition_by_ndl: list[int] = field(default_factory=list)
    partition_by_n2dl: list[int] = field(default_factory=list)
    reachability_components: list[int] = field(default_factory=list)
    mismatches: list[dict] = field(default_factory=list)
    transform_pairs: int = 0
    proofgap_rate: float = 0.0
    fallback_rate: float = 0.0
    mixed_pairs_same_component: int = 0
    mixed_pairs_equal_n2dl: int = 0
    diameter2_detour_pairs: int = 0
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.mismatches and not self.shell2_degree_violations

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "counts": {"graphs": self.graphs_total, "diameter2": self.diameter2_total},
            "shell2_degree_violations": self.shell2_degree_violations,
            "partition_by_ndl": self.partition_by_ndl,
            "partition_by_n2dl": self.partition_by_n2dl,
            "reachability_components": self.reachability_components,
            "mismatches": self.mismatches,
            "transform": {
                "pairs": self.transform_pairs,
                "proofgap_rate": round(self.proofgap_rate, 6),
                "fallback_rate": round(self.fallback_rate, 6),
            },
            "mixed_diameter_pairs": {
                "same_component": self.mixed_pairs_same_component,
                "equal_n2dl": self.mixed_pairs_equal_n2dl,
            },
            "diameter2_detour_pairs": self.diameter2_detour_pairs,
            "elapsed": round(self.elapsed, 3),
        }


def _sizes(classes: Iterable[Sequence]) -> list[int]:
    return sorted((len(c) for c in classes), reverse=True)


def _compare_partitions(label: str, keys: dict[Graph, object], comp: dict[Graph, int]) -> list[dict]:
    """Witnesses wherever the partition induced by ``keys`` differs from ``comp``."""
    out = []
    by_key: dict[object, dict[int, Graph]] = defaultdict(dict)
    by_comp: dict[int, dict[object, Graph]] = defaultdict(dict)
    for g, key in keys.items():
        by_key[key].setdefault(comp[g], g)
        by_comp[comp[g]].setdefault(key, g)
    for reps in by_key.values():
        if len(reps) > 1:
            a, b = list(reps.values())[:2]
            out.append({"check": label, "kind": "same profile, different component",
                        "graphs": [write_graph6(a), write_graph6(b)]})
    for reps in by_comp.values():
        if len(reps) > 1:
            a, b = list(reps.values())[:2]
            out.append({"check": label, "kind": "same component, different profile",
                        "graphs": [write_graph6(a), write_graph6(b)]})
    return out


def _transform_class(graphs: Sequence[Graph], fallback_bound: int) -> tuple[int, int, int, list[dict]]:
    pairs = gaps = fallbacks = 0
    bad = []
    for a, b in combinations(graphs, 2):
        pairs += 1
        try:
            r = transform_by_ndl(a, b, fallback_bound)
        except GraphError as exc:
            bad.append({"check": "transform_by_ndl", "kind": type(exc).__name__,
                        "graphs": [write_graph6(a), write_graph6(b)], "detail": str(exc)})
            continue
        gaps += bool(r.telemetry.proof_gaps)
        fallbacks += bool(r.telemetry.fallback_invocations)
    return pairs, gaps, fallbacks, bad


def verify_all(n: int, cap: int = ENUMERATION_CAP, check_transform: bool = True,
               reachability: Callable = reachability_components, jobs: int = 1,
               fallback_bound: int = FALLBACK_BOUND) -> VerificationReport:
    """Run every exhaustive check on all graphs with ``n`` vertices.

    ``reachability`` is injectable so the checks can be exercised against a
    deliberately broken meta-graph.
    """
    start = time.perf_counter()
    graphs = enumerate_graphs(n, cap)
    rep = VerificationReport(n=n, graphs_total=len(graphs))

    diam = {g: diameter(g) for g in graphs}
    d2 = [g for g in graphs if diam[g] == 2]
    rep.diameter2_total = len(d2)

    for g in d2:
        for v in range(n):
            layers = shells(g, v)
            n2 = len(layers[2]) if len(layers) > 2 else 0
            if g.degrees[v] != n - 1 - n2:
                rep.shell2_degree_violations.append({"graph": write_graph6(g), "vertex": v})

    ndl = {g: nkdl_graph(g, 1) for g in graphs}
    n2dl = {g: nkdl_graph(g, 2) for g in d2}
    comp = reachability(graphs, restricted=True)

    ndl_classes = defaultdict(list)
    for g in graphs:
        ndl_classes[ndl[g]].append(g)
    rep.partition_by_ndl = _sizes(ndl_classes.values())
    n2_classes = defaultdict(list)
    for g in d2:
        n2_classes[n2dl[g]].append(g)
    rep.partition_by_n2dl = _sizes(n2_classes.values())
    comp_classes = defaultdict(list)
    for g in graphs:
        comp_classes[comp[g]].append(g)
    rep.reachability_components = _sizes(comp_classes.values())

    # NDL classes refine degree-sequence classes
    for key, members in ndl_classes.items():
        if len({degree_sequence(g) for g in members}) > 1:
            rep.mismatches.append({"check": "ndl_refines_degree_sequence", "kind": "mixed degree sequences",
                                   "graphs": [write_graph6(g) for g in members[:2]]})

    rep.mismatches += _compare_partitions("ndl_vs_reachability", ndl, comp)
    rep.mismatches += _compare_partitions("n2dl_vs_reachability", n2dl, {g: comp[g] for g in d2})
    ndl_d2 = {g: ndl[g] for g in d2}
    for a, b in combinations(d2, 2):
        if (n2dl[a] == n2dl[b]) != (ndl_d2[a] == ndl_d2[b]):
            rep.mismatches.append({"check": "n2dl_iff_ndl", "kind": "disagreement",
                                   "graphs": [write_graph6(a), write_graph6(b)]})

    for members in comp_classes.values():
        ins = [g for g in members if diam[g] == 2]
        outs = [g for g in members if diam[g] != 2]
        rep.mixed_pairs_same_component += len(ins) * len(outs)
        for a in ins:
            for b in outs:
                rep.mixed_pairs_equal_n2dl += n2dl[a] == nkdl_graph(b, 2)

    if d2:
        inner = reachability_components(graphs, restricted=True, keep=lambda g: diam[g] == 2)
        for a, b in combinations(d2, 2):
            if comp[a] == comp[b] and inner[a] != inner[b]:
                rep.diameter2_detour_pairs += 1

    if check_transform:
        units = [members for members in ndl_classes.values() if len(members) > 1]
        if jobs > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                results = list(pool.map(_transform_class, units, [fallback_bound] * len(units)))
        else:
            results = [_transform_class(u, fallback_bound) for u in units]
        pairs = gaps = fallbacks = 0
        for p, gp, fb, bad in results:
            pairs += p
            gaps += gp
            fallbacks += fb
            rep.mismatches += bad
        rep.transform_pairs = pairs
        rep.proofgap_rate = gaps / pairs if pairs else 0.0
        rep.fallback_rate = fallbacks / pairs if pairs else 0.0

    rep.elapsed = time.perf_counter() - start
    return rep
