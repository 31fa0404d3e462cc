"""N_kDL feature vectors and a deterministic same-degree anomaly score.

The score is a heuristic: each vertex is compared against every other vertex
of the same degree, shell by shell, with shell ``k`` weighted by ``2**(1-k)``;
the score is the median of those distances.  It ranks vertices, it does not
classify them.  Only per-vertex BFS is used, so it runs on large graphs.
"""
from __future__ import annotations

from dataclasses import dataclass
from statistics import median
from typing import Sequence

from .errors import OutOfRangeError
from .graph_core import Graph, shells
from .profiles import degree_list


@dataclass(frozen=True)
class FeatureVector:
    vertex: int
    shells: dict  # k -> DegreeList, k = 1..k_max


@dataclass(frozen=True)
class AnomalyScore:
    vertex: int
    degree: int
    score: float
    cohort_size: int

    def to_json(self) -> dict:
        return {"vertex": self.vertex, "degree": self.degree, "score": self.score,
                "cohort_size": self.cohort_size}


def feature(g: Graph, v: int, k_max: int) -> FeatureVector:
    if k_max < 1:
        raise OutOfRangeError(f"k_max must be positive, got {k_max}")
    layers = shells(g, v)
    deg = g.degrees
    return FeatureVector(v, {
        k: degree_list(deg[u] for u in layers[k]) if k < len(layers) else ()
        for k in range(1, k_max + 1)
    })


def shell_distance(a: Sequence[int], b: Sequence[int]) -> float:
    """L1 distance of zero-padded lists, divided by ``1 + max(len)``."""
    size = max(len(a), len(b))
    a = list(a) + [0] * (size - len(a))
    b = list(b) + [0] * (size - len(b))
    return sum(abs(x - y) for x, y in zip(a, b)) / (1 + size)


def feature_distance(fa: FeatureVector, fb: FeatureVector) -> float:
    return sum(2.0 ** (1 - k) * shell_distance(fa.shells[k], fb.shells[k]) for k in fa.shells)


def anomaly_scores(g: Graph, k_max: int) -> list[AnomalyScore]:
    """Scores for every vertex, sorted by score descending then vertex ascending.

    The cohort of ``v`` is every other vertex with the same degree.
    ``cohort_size`` counts ``v`` itself, so a size of 1 means no peers and a
    score of 0.
    """
    feats = [feature(g, v, k_max) for v in range(g.n)]
    by_degree: dict[int, list[int]] = {}
    for v in range(g.n):
        by_degree.setdefault(g.degrees[v], []).append(v)
    # distances only depend on the feature values, so identical features share work
    cache: dict[tuple, float] = {}

    def dist(u, v):
        key = (tuple(feats[u].shells.values()), tuple(feats[v].shells.values()))
        if key not in cache:
            cache[key] = cache[key[::-1]] = feature_distance(feats[u], feats[v])
        return cache[key]

    out = []
    for v in range(g.n):
        cohort = [u for u in by_degree[g.degrees[v]] if u != v]
        score = float(median(dist(v, u) for u in cohort)) if cohort else 0.0
        out.append(AnomalyScore(v, g.degrees[v], score, len(cohort) + 1))
    out.sort(key=lambda s: (-s.score, s.vertex))
    return out
