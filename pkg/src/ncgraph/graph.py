"""Simple undirected graphs with BFS-derived distance invariants.

Adjacency is stored as one integer bitmask per vertex: bit ``v`` of
``adjacency[u]`` is set iff ``u ~ v``.  Graphs here are small and dense, so
this doubles as a compact dense bit matrix with O(1) edge queries.
"""

from __future__ import annotations

import json
import shlex
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator, Sequence, Union

from .errors import GraphDisconnected, InvalidParameter, OutOfRange

__all__ = [
    "SimpleGraph",
    "DistanceMatrix",
    "UNREACHABLE",
    "degree",
    "edge_count",
    "bfs_distances",
    "eccentricity",
    "vertex_transmission",
    "graph_transmission",
    "mean_distance",
    "induced_subgraph",
    "is_connected",
    "iter_bits",
]


class _Unreachable:
    """Marker for vertex pairs in different components; never an integer."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "UNREACHABLE"

    def __reduce__(self):
        return (_Unreachable, ())


UNREACHABLE = _Unreachable()

Distance = Union[int, _Unreachable]


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class SimpleGraph:
    """Labeled simple undirected graph (no loops, no multi-edges).

    Treat instances as immutable.  The BFS distance matrix is computed lazily
    and cached; the cache is idempotent so concurrent readers are harmless.
    """

    def __init__(self, labels: Sequence[str], adjacency: Sequence[int]):
        labels = tuple(str(x) for x in labels)
        adjacency = tuple(int(m) for m in adjacency)
        p = len(labels)
        if len(adjacency) != p:
            raise InvalidParameter(f"{p} labels but {len(adjacency)} adjacency rows")
        if len(set(labels)) != p:
            raise InvalidParameter("vertex labels must be unique")
        full = (1 << p) - 1
        for u, row in enumerate(adjacency):
            if row & ~full or row < 0:
                raise InvalidParameter(f"vertex {u} has a neighbour outside 0..{p - 1}")
            if row >> u & 1:
                raise InvalidParameter(f"loop at vertex {u}")
            for v in iter_bits(row):
                if not adjacency[v] >> u & 1:
                    raise InvalidParameter(f"adjacency not symmetric at ({u}, {v})")
        self.labels = labels
        self.adjacency = adjacency
        self._index = {x: i for i, x in enumerate(labels)}

    @classmethod
    def from_edges(
        cls, labels: Sequence[str], edges: Iterable[tuple[int, int]]
    ) -> "SimpleGraph":
        """Build from vertex-index pairs; duplicates are merged, loops rejected."""
        adj = [0] * len(labels)
        for u, v in edges:
            if not (0 <= u < len(labels) and 0 <= v < len(labels)):
                raise OutOfRange(f"edge ({u}, {v}) outside 0..{len(labels) - 1}")
            if u == v:
                raise InvalidParameter(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(labels, adj)

    @classmethod
    def from_matrix(cls, labels: Sequence[str], matrix: Sequence[Sequence[bool]]) -> "SimpleGraph":
        adj = [sum(1 << v for v, bit in enumerate(row) if bit) for row in matrix]
        return cls(labels, adj)

    @classmethod
    def complete(cls, p: int) -> "SimpleGraph":
        full = (1 << p) - 1
        return cls([str(i) for i in range(p)], [full ^ (1 << u) for u in range(p)])

    @classmethod
    def empty(cls, p: int) -> "SimpleGraph":
        return cls([str(i) for i in range(p)], [0] * p)

    @classmethod
    def path(cls, p: int) -> "SimpleGraph":
        return cls.from_edges([str(i) for i in range(p)], [(i, i + 1) for i in range(p - 1)])

    @classmethod
    def cycle(cls, p: int) -> "SimpleGraph":
        return cls.from_edges([str(i) for i in range(p)], [(i, (i + 1) % p) for i in range(p)])

    def __len__(self) -> int:
        return len(self.labels)

    @property
    def order(self) -> int:
        return len(self.labels)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimpleGraph):
            return NotImplemented
        return self.labels == other.labels and self.adjacency == other.adjacency

    def __hash__(self) -> int:
        return hash((self.labels, self.adjacency))

    def __repr__(self) -> str:
        return f"SimpleGraph(order={self.order}, edges={edge_count(self)})"

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise OutOfRange(f"no vertex labelled {label!r}") from None

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return bool(self.adjacency[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        self._check(v)
        return list(iter_bits(self.adjacency[v]))

    def edges(self) -> Iterator[tuple[int, int]]:
        """Unordered edges as ``(u, v)`` with ``u < v``, in lexicographic order."""
        for u, row in enumerate(self.adjacency):
            for v in iter_bits(row >> (u + 1)):
                yield u, u + 1 + v

    def adjacency_matrix(self) -> list[list[bool]]:
        p = self.order
        return [[bool(row >> v & 1) for v in range(p)] for row in self.adjacency]

    def _check(self, v: int) -> None:
        if not isinstance(v, int) or not 0 <= v < len(self.labels):
            raise OutOfRange(f"vertex {v!r} outside 0..{len(self.labels) - 1}")

    @cached_property
    def distances(self) -> "DistanceMatrix":
        return _bfs_all(self)

    # export ------------------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "vertices": list(self.labels),
            "edges": [[self.labels[u], self.labels[v]] for u, v in self.edges()],
        }

    @classmethod
    def from_json(cls, doc: dict | str) -> "SimpleGraph":
        if isinstance(doc, str):
            doc = json.loads(doc)
        labels = [str(x) for x in doc["vertices"]]
        index = {x: i for i, x in enumerate(labels)}
        try:
            edges = [(index[str(u)], index[str(v)]) for u, v in doc["edges"]]
        except KeyError as exc:
            raise InvalidParameter(f"edge names unknown vertex {exc.args[0]!r}") from None
        return cls.from_edges(labels, edges)

    def to_edge_list(self) -> str:
        """One ``u v`` line per edge; labels containing whitespace are shell-quoted."""
        lab = [shlex.quote(x) if _needs_quoting(x) else x for x in self.labels]
        return "".join(f"{lab[u]} {lab[v]}\n" for u, v in self.edges())

    @classmethod
    def from_edge_list(cls, text: str, labels: Sequence[str] | None = None) -> "SimpleGraph":
        """Inverse of :meth:`to_edge_list`.

        Isolated vertices cannot be recovered from an edge list; pass ``labels``
        to fix the vertex set and order.  Otherwise vertices appear in order of
        first mention.
        """
        pairs = []
        for line in text.splitlines():
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            toks = shlex.split(line)
            if len(toks) != 2:
                raise InvalidParameter(f"edge line needs two vertices: {line!r}")
            pairs.append(toks)
        if labels is None:
            seen: dict[str, None] = {}
            for u, v in pairs:
                seen.setdefault(u)
                seen.setdefault(v)
            labels = list(seen)
        index = {x: i for i, x in enumerate(labels)}
        try:
            edges = [(index[u], index[v]) for u, v in pairs]
        except KeyError as exc:
            raise InvalidParameter(f"edge names unknown vertex {exc.args[0]!r}") from None
        return cls.from_edges(labels, edges)


def _needs_quoting(label: str) -> bool:
    return not label or label.startswith("#") or any(c.isspace() or c in "'\"\\" for c in label)


class DistanceMatrix:
    """All-pairs shortest-path lengths, with :data:`UNREACHABLE` across components."""

    __slots__ = ("dist",)

    def __init__(self, dist: Sequence[Sequence[Distance]]):
        self.dist = tuple(tuple(row) for row in dist)

    def __getitem__(self, uv: tuple[int, int]) -> Distance:
        u, v = uv
        return self.dist[u][v]

    def __len__(self) -> int:
        return len(self.dist)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DistanceMatrix):
            return NotImplemented
        return self.dist == other.dist

    def __repr__(self) -> str:
        return f"DistanceMatrix({self.dist!r})"

    def row(self, u: int) -> tuple[Distance, ...]:
        return self.dist[u]

    @property
    def connected(self) -> bool:
        return all(x is not UNREACHABLE for row in self.dist for x in row)


def _bfs_from(g: SimpleGraph, source: int) -> list[Distance]:
    adj = g.adjacency
    dist: list[Distance] = [UNREACHABLE] * g.order
    dist[source] = 0
    seen = frontier = 1 << source
    level = 0
    while frontier:
        level += 1
        reach = 0
        for w in iter_bits(frontier):
            reach |= adj[w]
        frontier = reach & ~seen
        seen |= frontier
        for v in iter_bits(frontier):
            dist[v] = level
    return dist


def _bfs_all(g: SimpleGraph) -> DistanceMatrix:
    return DistanceMatrix([_bfs_from(g, s) for s in range(g.order)])


def bfs_distances(g: SimpleGraph) -> DistanceMatrix:
    """All-pairs shortest paths by one breadth-first search per vertex."""
    return g.distances


def is_connected(g: SimpleGraph) -> bool:
    if g.order == 0:
        return True
    adj = g.adjacency
    seen = frontier = 1
    while frontier:
        reach = 0
        for w in iter_bits(frontier):
            reach |= adj[w]
        frontier = reach & ~seen
        seen |= frontier
    return seen == (1 << g.order) - 1


def degree(g: SimpleGraph, v: int) -> int:
    g._check(v)
    return g.adjacency[v].bit_count()


def edge_count(g: SimpleGraph) -> int:
    return sum(row.bit_count() for row in g.adjacency) // 2


def _connected_row(g: SimpleGraph, v: int) -> tuple[int, ...]:
    g._check(v)
    row = g.distances.row(v)
    if any(x is UNREACHABLE for x in row):
        raise GraphDisconnected(f"vertex {g.labels[v]!r} cannot reach every vertex")
    return row  # type: ignore[return-value]


def eccentricity(g: SimpleGraph, v: int) -> int:
    """Largest shortest-path distance from ``v``."""
    return max(_connected_row(g, v))


def vertex_transmission(g: SimpleGraph, v: int) -> int:
    """Sum of shortest-path distances from ``v`` to all vertices."""
    return sum(_connected_row(g, v))


def graph_transmission(g: SimpleGraph) -> int:
    """Sum of all vertex transmissions, i.e. distances over ordered pairs."""
    return sum(vertex_transmission(g, v) for v in range(g.order))


def mean_distance(g: SimpleGraph) -> Fraction:
    p = g.order
    if p < 2:
        raise InvalidParameter(f"mean distance needs at least 2 vertices, got {p}")
    return Fraction(graph_transmission(g), p * (p - 1))


def induced_subgraph(g: SimpleGraph, vertices: Iterable[int]) -> SimpleGraph:
    """Subgraph on ``vertices``, keeping the given order (duplicates dropped)."""
    keep: list[int] = []
    for v in vertices:
        g._check(v)
        if v not in keep:
            keep.append(v)
    adj = []
    for v in keep:
        row = g.adjacency[v]
        adj.append(sum(1 << i for i, w in enumerate(keep) if row >> w & 1))
    return SimpleGraph([g.labels[v] for v in keep], adj)
