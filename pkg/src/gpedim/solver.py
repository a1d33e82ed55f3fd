"""Exact dimensions by exhaustive search over vertex subsets.

Cardinalities are tried in increasing order starting at a proven lower
bound; inside one cardinality subsets are scanned in lexicographic order of
vertex ids, so the witness returned is the lexicographically smallest
minimum generator. Parallel runs split the subset stream into contiguous
rank ranges and keep the lowest-rank hit, which makes results independent
of scheduling.
"""
from __future__ import annotations

import enum
import itertools
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .errors import CardinalityCapExceeded
from .graph import Graph, all_pairs_distances, line_graph
from .resolve import (
    edge_distance_column,
    is_edge_metric_generator,
    is_metric_generator,
    lower_bound_edge_dim,
    prune_candidates,
    vertex_set,
)

# below this many subsets per cardinality a process pool costs more than it saves
PARALLEL_THRESHOLD = 5000


class SolveKind(str, enum.Enum):
    EDGE_DIM = "edim"
    VERTEX_DIM = "mdim"
    LINE_EDGE_DIM = "ledim"

    @classmethod
    def parse(cls, value: "str | SolveKind") -> "SolveKind":
        if isinstance(value, cls):
            return value
        aliases = {"edge_dim": cls.EDGE_DIM, "vertex_dim": cls.VERTEX_DIM,
                   "line_edge_dim": cls.LINE_EDGE_DIM}
        return aliases.get(value) or cls(value)


@dataclass
class SolveOptions:
    use_pruning: bool = True
    parallelism: int = 1
    max_cardinality: int | None = None


@dataclass
class SolveResult:
    kind: SolveKind
    dimension: int
    basis: tuple[int, ...]
    basis_labels: tuple[str, ...]
    subsets_examined: int
    pruned_vertices: int
    elapsed: float = field(default=0.0, compare=False)

    def to_json(self) -> dict:
        return {
            "kind": self.kind.value,
            "dimension": self.dimension,
            "basis": list(self.basis_labels),
            "subsets_examined": self.subsets_examined,
            "pruned_vertices": self.pruned_vertices,
            "elapsed_ms": round(self.elapsed * 1000.0, 3),
        }


# lexicographic k-subsets of range(p)


def combination_rank(combo: Sequence[int], p: int) -> int:
    k = len(combo)
    rank = 0
    prev = -1
    for i, c in enumerate(combo):
        for x in range(prev + 1, c):
            rank += math.comb(p - 1 - x, k - 1 - i)
        prev = c
    return rank


def combination_unrank(rank: int, p: int, k: int) -> tuple[int, ...]:
    if not 0 <= rank < math.comb(p, k):
        raise ValueError(f"rank {rank} out of range for C({p},{k})")
    combo = []
    x = 0
    for i in range(k):
        while True:
            block = math.comb(p - 1 - x, k - 1 - i)
            if rank < block:
                break
            rank -= block
            x += 1
        combo.append(x)
        x += 1
    return tuple(combo)


def combinations_from(p: int, k: int, start: int, stop: int) -> Iterator[tuple[int, ...]]:
    """Subsets with ranks ``start <= r < stop`` in lexicographic order."""
    if start >= stop:
        return
    c = list(combination_unrank(start, p, k))
    for _ in range(stop - start):
        yield tuple(c)
        i = k - 1
        while i >= 0 and c[i] == p - k + i:
            i -= 1
        if i < 0:
            return
        c[i] += 1
        for j in range(i + 1, k):
            c[j] = c[j - 1] + 1


def split_ranges(total: int, parts: int) -> list[tuple[int, int]]:
    parts = max(1, min(parts, total))
    step, extra = divmod(total, parts)
    out, lo = [], 0
    for i in range(parts):
        hi = lo + step + (1 if i < extra else 0)
        out.append((lo, hi))
        lo = hi
    return out


# scanning

_WORKER_STATE: dict = {}


def _init_worker(columns, items):
    _WORKER_STATE["columns"] = columns
    _WORKER_STATE["items"] = items


def _scan(columns, items, pool, k, lo, hi):
    """Return ``(rank or None, subsets examined)`` for ranks in ``[lo, hi)``."""
    cols = [columns[v] for v in pool]
    p = len(pool)
    examined = 0
    if lo == 0 and hi == math.comb(p, k):
        stream = itertools.combinations(range(p), k)
    else:
        stream = combinations_from(p, k, lo, hi)
    for offset, combo in enumerate(stream):
        examined += 1
        if len(set(zip(*[cols[i] for i in combo]))) == items:
            return lo + offset, examined
    return None, examined


def _scan_in_worker(pool, k, lo, hi):
    return _scan(_WORKER_STATE["columns"], _WORKER_STATE["items"], pool, k, lo, hi)


def _search_graph(g: Graph, kind: SolveKind, options: SolveOptions) -> SolveResult:
    t0 = time.perf_counter()
    d = all_pairs_distances(g)
    if kind is SolveKind.EDGE_DIM:
        columns = [edge_distance_column(d, g, w) for w in range(g.vertex_count)]
        items = g.edge_count
        bound = lower_bound_edge_dim(g)
        start = bound.exact if bound.path_exception else bound.combined
    else:
        columns = list(d.dist)
        items = g.vertex_count
        start = 1

    cap = options.max_cardinality
    if cap is None:
        cap = max(1, g.vertex_count - 1)
    examined = 0
    executor = None
    try:
        for k in range(start, cap + 1):
            if kind is SolveKind.EDGE_DIM and options.use_pruning:
                pool = prune_candidates(g, k)
            else:
                pool = tuple(range(g.vertex_count))
            total = math.comb(len(pool), k)
            if total == 0:
                continue
            if options.parallelism > 1 and total >= PARALLEL_THRESHOLD:
                if executor is None:
                    executor = ProcessPoolExecutor(
                        max_workers=options.parallelism,
                        initializer=_init_worker, initargs=(columns, items))
                ranges = split_ranges(total, 4 * options.parallelism)
                futures = [executor.submit(_scan_in_worker, pool, k, lo, hi) for lo, hi in ranges]
                hit = None
                # ranges are contiguous, so the first range in order with a hit holds the minimum rank
                for fut in futures:
                    hit, n = fut.result()
                    examined += n
                    if hit is not None:
                        break
                for fut in futures:
                    fut.cancel()
            else:
                hit, n = _scan(columns, items, pool, k, 0, total)
                examined += n
            if hit is not None:
                basis = tuple(pool[i] for i in combination_unrank(hit, len(pool), k))
                return SolveResult(
                    kind=kind,
                    dimension=k,
                    basis=basis,
                    basis_labels=tuple(g.labels[v] for v in basis),
                    subsets_examined=examined,
                    pruned_vertices=g.vertex_count - len(pool),
                    elapsed=time.perf_counter() - t0,
                )
    finally:
        if executor is not None:
            executor.shutdown(wait=True, cancel_futures=True)
    raise CardinalityCapExceeded(f"no generator with at most {cap} vertices")


def solve(g: Graph, kind: "SolveKind | str" = SolveKind.EDGE_DIM,
          options: SolveOptions | None = None, **overrides) -> SolveResult:
    """Exact edge metric dimension, metric dimension or line-graph metric dimension.

    ``overrides`` are forwarded to `SolveOptions` (``use_pruning``,
    ``parallelism``, ``max_cardinality``). For ``ledim`` the basis is a set
    of edge ids of ``g``. Pruning only applies to ``edim``.
    """
    kind = SolveKind.parse(kind)
    options = options or SolveOptions(**overrides)
    if kind is SolveKind.LINE_EDGE_DIM:
        result = _search_graph(line_graph(g), SolveKind.VERTEX_DIM, options)
        result.kind = kind
        return result
    return _search_graph(g, kind, options)


def verify_basis(g: Graph, kind: "SolveKind | str", s) -> bool:
    kind = SolveKind.parse(kind)
    s = vertex_set(s)
    if not s:
        raise ValueError("basis must be non-empty")
    if kind is SolveKind.LINE_EDGE_DIM:
        g = line_graph(g)
    d = all_pairs_distances(g)
    vertex_set(s, g)
    if kind is SolveKind.EDGE_DIM:
        return is_edge_metric_generator(g, d, s)
    return is_metric_generator(g, d, s)
