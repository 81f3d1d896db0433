"""Labeled undirected graphs, BFS distances and vertex-to-edge distance."""

from __future__ import annotations

import enum
import re
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping, NamedTuple

import numpy as np

DistanceMatrix = np.ndarray


class GraphError(ValueError):
    """Raised for malformed graph input."""


class Family(str, enum.Enum):
    P1 = "p1"
    P2 = "p2"
    Q1 = "q1"
    Q2 = "q2"
    R1 = "r1"
    R2 = "r2"
    S1 = "s1"
    S2 = "s2"
    T1 = "t1"
    T2 = "t2"
    U1 = "u1"
    U2 = "u2"

    def __str__(self) -> str:
        return self.value


_LABEL_RE = re.compile(r"^\s*([pqrstu][12])\s*[:_,]\s*(\d+)\s*$", re.IGNORECASE)


@dataclass(frozen=True, order=True)
class VertexLabel:
    family: Family
    index: int

    def __post_init__(self):
        if not isinstance(self.family, Family):
            object.__setattr__(self, "family", Family(str(self.family).lower()))
        if self.index < 1:
            raise GraphError(f"label index must be >= 1, got {self.index}")

    def __str__(self) -> str:
        return f"{self.family.value}:{self.index}"

    @classmethod
    def parse(cls, text: str) -> "VertexLabel":
        """Parse ``"p1:3"`` (also accepts ``p1_3`` and ``p1,3``)."""
        m = _LABEL_RE.match(text)
        if not m:
            raise GraphError(f"cannot parse vertex label {text!r}")
        return cls(Family(m.group(1).lower()), int(m.group(2)))


class Edge(NamedTuple):
    """Undirected edge in canonical (smaller id first) form."""

    u: int
    v: int

    @classmethod
    def of(cls, a: int, b: int) -> "Edge":
        return cls(a, b) if a < b else cls(b, a)


@dataclass(frozen=True, eq=False)
class LabeledGraph:
    """Immutable simple undirected graph on vertex ids ``0..n-1``.

    ``labels`` is optional; when present it is a bijection id -> VertexLabel.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    labels: Mapping[int, VertexLabel] = field(default_factory=dict)
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "_by_label", {lab: v for v, lab in self.labels.items()})
        edges = sorted(Edge(u, w) for u in range(self.n) for w in self.adjacency[u] if u < w)
        object.__setattr__(self, "_edges", tuple(edges))

    @property
    def edges(self) -> tuple[Edge, ...]:
        """All edges, lexicographically ordered."""
        return self._edges

    @property
    def m(self) -> int:
        return len(self._edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def vertex(self, label: VertexLabel | str) -> int:
        if isinstance(label, str):
            label = VertexLabel.parse(label)
        try:
            return self._by_label[label]
        except KeyError:
            raise GraphError(f"no vertex labelled {label}") from None

    def has_label(self, label: VertexLabel) -> bool:
        return label in self._by_label

    def label(self, v: int) -> str:
        lab = self.labels.get(v)
        return str(lab) if lab is not None else str(v)

    def edge_label(self, e: Edge) -> str:
        return f"{self.label(e.u)}-{self.label(e.v)}"

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return int((_bfs(self.adjacency, 0) >= 0).sum()) == self.n

    def is_path(self) -> bool:
        return (
            self.n >= 1
            and self.m == self.n - 1
            and max(self.degrees(), default=0) <= 2
            and self.is_connected()
        )

    def relabeled(self, perm: Iterable[int]) -> "LabeledGraph":
        """Isomorphic copy where old vertex ``v`` becomes ``perm[v]``."""
        perm = list(perm)
        if sorted(perm) != list(range(self.n)):
            raise GraphError("perm must be a permutation of 0..n-1")
        edges = [(perm[e.u], perm[e.v]) for e in self.edges]
        labels = {perm[v]: lab for v, lab in self.labels.items()}
        return graph_from_edges(self.n, edges, labels, name=self.name)


def graph_from_edges(
    n: int,
    edges: Iterable[tuple[int, int]],
    labels: Mapping[int, VertexLabel] | None = None,
    *,
    validate_connected: bool = False,
    name: str = "",
) -> LabeledGraph:
    """Build a :class:`LabeledGraph`, rejecting loops, duplicates and bad ids."""
    if n < 0:
        raise GraphError("vertex count must be nonnegative")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for a, b in edges:
        a, b = int(a), int(b)
        if not (0 <= a < n and 0 <= b < n):
            raise GraphError(f"edge ({a}, {b}) has an id outside [0, {n})")
        if a == b:
            raise GraphError(f"loop edge at vertex {a}")
        if b in nbrs[a]:
            raise GraphError(f"duplicate edge {Edge.of(a, b)}")
        nbrs[a].add(b)
        nbrs[b].add(a)
    labels = dict(labels or {})
    seen: dict[VertexLabel, int] = {}
    for v, lab in labels.items():
        if not 0 <= v < n:
            raise GraphError(f"label for vertex {v} outside [0, {n})")
        if lab in seen:
            raise GraphError(f"duplicate label {lab} on vertices {seen[lab]} and {v}")
        seen[lab] = v
    g = LabeledGraph(n, tuple(tuple(sorted(s)) for s in nbrs), labels, name)
    if validate_connected and not g.is_connected():
        raise GraphError("graph is not connected")
    return g


def _bfs(adjacency, source: int) -> np.ndarray:
    dist = np.full(len(adjacency), -1, dtype=np.int64)
    dist[source] = 0
    queue = deque([source])
    while queue:
        x = queue.popleft()
        dx = dist[x] + 1
        for y in adjacency[x]:
            if dist[y] < 0:
                dist[y] = dx
                queue.append(y)
    return dist


def all_pairs_distances(g: LabeledGraph) -> DistanceMatrix:
    """Exact hop distances by one BFS per vertex. Raises on disconnected input."""
    dm = np.empty((g.n, g.n), dtype=np.int64)
    for s in range(g.n):
        row = _bfs(g.adjacency, s)
        if (row < 0).any():
            raise GraphError(f"graph is disconnected: vertex {int(np.argmin(row))} unreachable from {s}")
        dm[s] = row
    dm.setflags(write=False)
    return dm


def distance_vertex_edge(dm: DistanceMatrix, v: int, e: Edge | tuple[int, int]) -> int:
    """d(v, xy) = min(d(v, x), d(v, y))."""
    n = dm.shape[0]
    x, y = e
    for w in (v, x, y):
        if not 0 <= w < n:
            raise GraphError(f"vertex id {w} out of range")
    return int(min(dm[v, x], dm[v, y]))


def edge_distance_table(dm: DistanceMatrix, edges: Iterable[Edge]) -> np.ndarray:
    """Matrix of shape (n, m): entry [v, i] = d(v, edges[i])."""
    edges = list(edges)
    if not edges:
        return np.zeros((dm.shape[0], 0), dtype=dm.dtype)
    ends = np.asarray(edges, dtype=np.int64)
    return np.minimum(dm[:, ends[:, 0]], dm[:, ends[:, 1]])


# -- text formats ----------------------------------------------------------


def to_edgelist(g: LabeledGraph) -> str:
    lines = [f"{g.n} {g.m}"]
    for v in range(g.n):
        lab = g.labels.get(v)
        if lab is not None:
            lines.append(f"# label {v} {lab.family.value.upper()} {lab.index}")
    lines.extend(f"{e.u} {e.v}" for e in g.edges)
    return "\n".join(lines) + "\n"


def parse_edgelist(text: str, *, name: str = "") -> LabeledGraph:
    """Read the ``"n m"`` / ``"u v"`` format with optional ``# label`` lines."""
    header = None
    edges: list[tuple[int, int]] = []
    labels: dict[int, VertexLabel] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            parts = line[1:].split()
            if parts and parts[0] == "label":
                if len(parts) != 4:
                    raise GraphError(f"line {lineno}: expected '# label u FAMILY g'")
                try:
                    labels[int(parts[1])] = VertexLabel(Family(parts[2].lower()), int(parts[3]))
                except ValueError as exc:
                    raise GraphError(f"line {lineno}: {exc}") from None
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected two integers")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphError(f"line {lineno}: expected two integers") from None
        if header is None:
            header = (a, b)
        else:
            edges.append((a, b))
    if header is None:
        raise GraphError("empty edge list")
    n, m = header
    if m != len(edges):
        raise GraphError(f"header announces {m} edges, found {len(edges)}")
    return graph_from_edges(n, edges, labels, name=name)


def to_dot(g: LabeledGraph) -> str:
    name = re.sub(r"\W", "_", g.name) or "G"
    lines = [f"graph {name} {{", "  node [shape=circle, fontsize=10];"]
    for v in range(g.n):
        lines.append(f'  {v} [label="{g.label(v)}"];')
    lines.extend(f"  {e.u} -- {e.v};" for e in g.edges)
    lines.append("}")
    return "\n".join(lines) + "\n"
