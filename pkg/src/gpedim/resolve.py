"""Edge-to-vertex distances, representations, generator predicates and bounds.

Landmark sets are always handled in ascending vertex-id order, so the j-th
coordinate of a representation belongs to the j-th smallest landmark.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import DistanceMatrix, Graph, degree_summary, is_path

Representation = tuple[int, ...]


def vertex_set(members: Iterable[int], g: Graph | None = None) -> tuple[int, ...]:
    """Canonical sorted, duplicate-free landmark tuple."""
    s = tuple(sorted(set(members)))
    if g is not None and s and not (0 <= s[0] and s[-1] < g.vertex_count):
        raise ValueError(f"vertex ids {s} out of range for {g.vertex_count} vertices")
    return s


def edge_vertex_distance(d: DistanceMatrix, g: Graph, w: int, e: int) -> int:
    a, b = g.edges[e]
    row = d[w]
    return min(row[a], row[b])


def edge_distance_column(d: DistanceMatrix, g: Graph, w: int) -> tuple[int, ...]:
    """Distances from ``w`` to every edge, indexed by edge id."""
    row = d[w]
    return tuple(min(row[a], row[b]) for a, b in g.edges)


def edge_representation(d: DistanceMatrix, g: Graph, e: int, s: Iterable[int]) -> Representation:
    return tuple(edge_vertex_distance(d, g, w, e) for w in vertex_set(s))


def edge_representations(d: DistanceMatrix, g: Graph, s: Iterable[int]) -> list[Representation]:
    cols = [edge_distance_column(d, g, w) for w in vertex_set(s)]
    return list(zip(*cols))


def vertex_representations(d: DistanceMatrix, s: Iterable[int]) -> list[Representation]:
    cols = [d[w] for w in vertex_set(s)]
    return list(zip(*cols))


def first_collision(reps: Sequence[Representation]) -> tuple[int, int] | None:
    """First pair of indices (in scan order) sharing a representation."""
    seen: dict[Representation, int] = {}
    for i, r in enumerate(reps):
        j = seen.setdefault(r, i)
        if j != i:
            return j, i
    return None


@dataclass(frozen=True)
class GeneratorCheck:
    ok: bool
    collision: tuple[str, str] | None = None
    representation: Representation | None = None

    def to_json(self) -> dict:
        doc = {"ok": self.ok}
        if not self.ok:
            doc["collision"] = list(self.collision)
            doc["representation"] = list(self.representation)
        return doc


def check_edge_generator(g: Graph, d: DistanceMatrix, s: Iterable[int]) -> GeneratorCheck:
    reps = edge_representations(d, g, s)
    hit = first_collision(reps)
    if hit is None:
        return GeneratorCheck(True)
    return GeneratorCheck(False, (g.edge_label(hit[0]), g.edge_label(hit[1])), reps[hit[0]])


def check_metric_generator(g: Graph, d: DistanceMatrix, r: Iterable[int]) -> GeneratorCheck:
    reps = vertex_representations(d, r)
    hit = first_collision(reps)
    if hit is None:
        return GeneratorCheck(True)
    return GeneratorCheck(False, (g.labels[hit[0]], g.labels[hit[1]]), reps[hit[0]])


def is_edge_metric_generator(g: Graph, d: DistanceMatrix, s: Iterable[int]) -> bool:
    return check_edge_generator(g, d, s).ok


def is_metric_generator(g: Graph, d: DistanceMatrix, r: Iterable[int]) -> bool:
    return check_metric_generator(g, d, r).ok


@dataclass(frozen=True)
class BoundReport:
    delta_bound: int
    max_degree_bound: int
    combined: int
    path_exception: bool
    exact: int | None = None

    def to_json(self) -> dict:
        return {
            "delta_bound": self.delta_bound,
            "max_degree_bound": self.max_degree_bound,
            "combined": self.combined,
            "path_exception": self.path_exception,
            "exact": self.exact,
        }


def _ceil_log2(x: int) -> int:
    return (x - 1).bit_length() if x > 0 else 0


def lower_bound_edge_dim(g: Graph) -> BoundReport:
    """Minimum-degree bound ``1 + ceil(log2 δ)`` and max-degree bound ``ceil(log2 Δ)``.

    The max-degree bound is rounded up since the dimension is an integer.
    Paths are flagged, their edge metric dimension being exactly 1.
    """
    deg = degree_summary(g)
    delta_bound = 1 + _ceil_log2(deg.min_degree) if deg.min_degree > 0 else 1
    max_degree_bound = _ceil_log2(deg.max_degree)
    path = is_path(g)
    return BoundReport(
        delta_bound=delta_bound,
        max_degree_bound=max_degree_bound,
        combined=max(1, delta_bound, max_degree_bound),
        path_exception=path,
        exact=1 if path else None,
    )


def prune_candidates(g: Graph, k: int) -> tuple[int, ...]:
    """Vertices that may belong to an edge metric basis of size ``k``.

    A basis vertex of degree d sees its d incident edges at distance 0 while
    every other landmark separates them into at most two classes, so
    ``d <= 2**(k-1)``.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    limit = 1 << (k - 1)
    return tuple(v for v in range(g.vertex_count) if g.degree(v) <= limit)
