"""Simple connected undirected graphs, their constructors and BFS distances.

Vertices are the integers ``0..vertex_count-1``; each carries a display label.
Edges are stored as a sorted tuple of ``(a, b)`` pairs with ``a < b`` and the
position of an edge in that tuple is its edge id.
"""
from __future__ import annotations

import json
import re
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import (
    Disconnected,
    DuplicateEdge,
    InvalidSpec,
    ParseError,
    SelfLoop,
    TooSmall,
)

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    labels: tuple[str, ...]
    adjacency: tuple[tuple[int, ...], ...]
    edges: tuple[Edge, ...]
    _edge_index: dict = field(default=None, repr=False, compare=False, hash=False)

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[Sequence[int]],
                   labels: Sequence[str] | None = None) -> "Graph":
        """Validate and build a graph.

        Raises SelfLoop, DuplicateEdge or Disconnected; vertex ids outside
        the range raise InvalidSpec.
        """
        if vertex_count < 1:
            raise InvalidSpec("a graph needs at least one vertex")
        if labels is None:
            labels = [str(i) for i in range(vertex_count)]
        labels = tuple(str(x) for x in labels)
        if len(labels) != vertex_count:
            raise InvalidSpec(f"{len(labels)} labels for {vertex_count} vertices")
        if len(set(labels)) != vertex_count:
            raise InvalidSpec("vertex labels must be unique")

        seen: set[Edge] = set()
        nbrs: list[list[int]] = [[] for _ in range(vertex_count)]
        for a, b in edges:
            a, b = int(a), int(b)
            if not (0 <= a < vertex_count and 0 <= b < vertex_count):
                raise InvalidSpec(f"edge ({a}, {b}) references a missing vertex")
            if a == b:
                raise SelfLoop(f"self-loop at {labels[a]}")
            key = (a, b) if a < b else (b, a)
            if key in seen:
                raise DuplicateEdge(f"duplicate edge {labels[key[0]]} {labels[key[1]]}")
            seen.add(key)
            nbrs[a].append(b)
            nbrs[b].append(a)

        g = cls(
            vertex_count=vertex_count,
            labels=labels,
            adjacency=tuple(tuple(sorted(x)) for x in nbrs),
            edges=tuple(sorted(seen)),
        )
        if not g._connected():
            raise Disconnected("graph is not connected")
        return g

    def __post_init__(self):
        object.__setattr__(self, "_edge_index", {e: i for i, e in enumerate(self.edges)})

    def _connected(self) -> bool:
        seen = {0}
        stack = [0]
        while stack:
            x = stack.pop()
            for y in self.adjacency[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == self.vertex_count

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def edge_id(self, a: int, b: int) -> int:
        """Edge id of the edge joining ``a`` and ``b`` (KeyError if absent)."""
        return self._edge_index[(a, b) if a < b else (b, a)]

    def has_edge(self, a: int, b: int) -> bool:
        return ((a, b) if a < b else (b, a)) in self._edge_index

    def vertex(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(label) from None

    def edge_label(self, e: int) -> str:
        a, b = self.edges[e]
        return self.labels[a] + self.labels[b]

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Isomorphic copy in which old vertex ``v`` becomes ``perm[v]``."""
        labels = [""] * self.vertex_count
        for v, p in enumerate(perm):
            labels[p] = self.labels[v]
        return Graph.from_edges(self.vertex_count,
                                [(perm[a], perm[b]) for a, b in self.edges], labels)

    # serialization

    def to_edge_list(self) -> str:
        return "".join(f"{self.labels[a]} {self.labels[b]}\n" for a, b in self.edges)

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {name} {{"]
        if self.edge_count == 0:
            lines.extend(f'  "{x}";' for x in self.labels)
        lines.extend(f'  "{self.labels[a]}" -- "{self.labels[b]}";' for a, b in self.edges)
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {"labels": list(self.labels), "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json(cls, doc: dict | str) -> "Graph":
        if isinstance(doc, str):
            doc = json.loads(doc)
        labels = doc["labels"]
        return cls.from_edges(len(labels), doc["edges"], labels)


# construction


def build_generalized_petersen(n: int, k: int) -> Graph:
    """GP(n, k) with ``u_i = i`` and ``v_i = n + i``."""
    if n < 3 or k < 1 or 2 * k >= n:
        raise InvalidSpec(f"GP({n},{k}) needs n >= 3 and 1 <= k < n/2")
    edges = []
    for i in range(n):
        edges.append((i, (i + 1) % n))
        edges.append((i, n + i))
        edges.append((n + i, n + (i + k) % n))
    labels = [f"u{i}" for i in range(n)] + [f"v{i}" for i in range(n)]
    return Graph.from_edges(2 * n, edges, labels)


def figure3_graph() -> Graph:
    """The 4-vertex, 5-edge graph G1 (a diamond with v1v2 as its chord)."""
    return Graph.from_edges(4, [(0, 1), (1, 2), (0, 2), (1, 3), (2, 3)],
                            [f"v{i}" for i in range(4)])


def build_named(family: str, n: int = 0) -> Graph:
    if family == "figure3_G1":
        return figure3_graph()
    if family == "path":
        if n < 1:
            raise InvalidSpec("path needs n >= 1")
        return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])
    if family == "cycle":
        if n < 3:
            raise InvalidSpec("cycle needs n >= 3")
        return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])
    if family == "complete":
        # K_1 and K_2 are accepted so baselines can run down to n = 2
        if n < 1:
            raise InvalidSpec("complete graph needs n >= 1")
        return Graph.from_edges(n, [(a, b) for a in range(n) for b in range(a + 1, n)])
    if family == "star":
        if n < 2:
            raise InvalidSpec("star needs n >= 2 leaves plus a centre")
        return Graph.from_edges(n + 1, [(0, i) for i in range(1, n + 1)])
    raise InvalidSpec(f"unknown family {family!r}")


NAMED_FAMILIES = ("path", "cycle", "complete", "star", "figure3_G1")


def load_edge_list(text: str) -> Graph:
    """Parse one ``a b`` edge per line; ids follow first appearance."""
    ids: dict[str, int] = {}
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected two vertex tokens, got {len(parts)}")
        for tok in parts:
            ids.setdefault(tok, len(ids))
        edges.append((ids[parts[0]], ids[parts[1]]))
    if not ids:
        raise ParseError("edge list contains no edges")
    return Graph.from_edges(len(ids), edges, list(ids))


def canonicalize(g: Graph) -> Graph:
    """Renumber vertices in BFS order from vertex 0.

    The result is a fixed point of ``load_edge_list(to_edge_list(.))``: every
    vertex first appears in the sorted edge list next to its BFS parent.
    """
    order = [0]
    seen = {0}
    for x in order:
        for y in g.adjacency[x]:
            if y not in seen:
                seen.add(y)
                order.append(y)
    perm = [0] * g.vertex_count
    for new, old in enumerate(order):
        perm[old] = new
    return g.relabel(perm)


# queries


@dataclass(frozen=True)
class DistanceMatrix:
    dist: tuple[tuple[int, ...], ...]

    def __getitem__(self, v: int) -> tuple[int, ...]:
        return self.dist[v]

    def __len__(self) -> int:
        return len(self.dist)

    @property
    def diameter(self) -> int:
        return max(max(row) for row in self.dist)


def bfs(g: Graph, source: int) -> list[int]:
    dist = [-1] * g.vertex_count
    dist[source] = 0
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y in g.adjacency[x]:
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    return DistanceMatrix(tuple(tuple(bfs(g, s)) for s in range(g.vertex_count)))


def _line_labels(g: Graph) -> list[str]:
    joined = [g.labels[a] + g.labels[b] for a, b in g.edges]
    if len(set(joined)) == len(joined):
        return joined
    return [f"{g.labels[a]}-{g.labels[b]}" for a, b in g.edges]


def line_graph(g: Graph) -> Graph:
    """L(g): one vertex per edge id, adjacent when the edges share an endpoint."""
    if g.edge_count < 2:
        raise TooSmall("line graph needs at least two edges")
    incident: list[list[int]] = [[] for _ in range(g.vertex_count)]
    for e, (a, b) in enumerate(g.edges):
        incident[a].append(e)
        incident[b].append(e)
    pairs = set()
    for group in incident:
        for i, e in enumerate(group):
            for f in group[i + 1:]:
                pairs.add((e, f))
    return Graph.from_edges(g.edge_count, sorted(pairs), _line_labels(g))


@dataclass(frozen=True)
class DegreeSummary:
    degrees: tuple[int, ...]
    max_degree: int
    min_degree: int


def degree_summary(g: Graph) -> DegreeSummary:
    degrees = tuple(len(a) for a in g.adjacency)
    return DegreeSummary(degrees, max(degrees), min(degrees))


def is_path(g: Graph) -> bool:
    if g.vertex_count == 1:
        return True
    return g.edge_count == g.vertex_count - 1 and max(map(len, g.adjacency)) <= 2


_GP_LABEL = re.compile(r"([uv])(\d+)")


def parse_gp_vertex(label: str, n: int) -> int:
    m = _GP_LABEL.fullmatch(label)
    if not m or int(m.group(2)) >= n:
        raise ParseError(f"{label!r} is not a vertex of a GP graph on n={n}")
    i = int(m.group(2))
    return i if m.group(1) == "u" else n + i


def parse_gp_edge(label: str, n: int) -> tuple[int, int]:
    """``"u0u1"`` / ``"v2v4"`` to a pair of canonical GP vertex ids."""
    parts = re.fullmatch(r"([uv]\d+)([uv]\d+)", label)
    if not parts:
        raise ParseError(f"{label!r} is not an edge label like 'u0u1'")
    return parse_gp_vertex(parts.group(1), n), parse_gp_vertex(parts.group(2), n)
