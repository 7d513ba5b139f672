"""Non-commuting graphs of finite groups and structural classifiers for D_2n."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Literal

from .errors import AbelianGroup, CentralElement, InvalidParameter, ShapeMismatch
from .graph import SimpleGraph, degree, edge_count, induced_subgraph, iter_bits
from .group import FiniteGroup, center, centralizer, dihedral_group, dihedral_label, is_abelian

__all__ = [
    "noncommuting_graph",
    "dihedral_graph",
    "vertex_elements",
    "OmegaPartition",
    "omega_partition",
    "ShapeDescriptor",
    "classify_omega1",
    "classify_omega2",
    "star_check",
    "SplitPartition",
    "split_partition",
    "is_split_partition",
    "degree_via_centralizer",
]

BRUTE_FORCE_SPLIT_BELOW = 16


def vertex_elements(g: FiniteGroup) -> list[int]:
    """Group elements that become vertices: the non-central ones, in group order."""
    z = center(g)
    return [a for a in range(g.order) if a not in z]


def noncommuting_graph(g: FiniteGroup) -> SimpleGraph:
    """Graph on ``G - Z(G)`` with an edge between each pair that does not commute."""
    if is_abelian(g):
        raise AbelianGroup("group is abelian; its non-commuting graph has no vertices")
    verts = vertex_elements(g)
    t = g.table
    adj = []
    for a in verts:
        row = 0
        for i, b in enumerate(verts):
            if t[a][b] != t[b][a]:
                row |= 1 << i
        adj.append(row)
    return SimpleGraph([g.names[a] for a in verts], adj)


def dihedral_graph(n: int) -> SimpleGraph:
    return noncommuting_graph(dihedral_group(n))


def degree_via_centralizer(g: FiniteGroup, a: int) -> int:
    """Degree of ``a`` in the non-commuting graph, as ``|G| - |C_G(a)|``."""
    c = centralizer(g, a)
    if len(c) == g.order:
        raise CentralElement(f"element {g.names[a]!r} is central and is not a vertex")
    return g.order - len(c)


# Omega partition -------------------------------------------------------------


@dataclass(frozen=True)
class OmegaPartition:
    """Vertex indices of Γ(D_2n): non-central rotations and reflections.

    ``omega2[i]`` is the vertex of ``s r^i``.
    """

    n: int
    omega1: tuple[int, ...]
    omega2: tuple[int, ...]


def omega_partition(n: int) -> OmegaPartition:
    if not isinstance(n, int) or n < 3:
        raise InvalidParameter(f"omega partition needs n >= 3, got {n!r}")
    group = dihedral_group(n)
    rot: list[int] = []
    ref: list[int] = []
    for v, a in enumerate(vertex_elements(group)):
        (rot if dihedral_label(n, a).kind == "rotation" else ref).append(v)
    return OmegaPartition(n, tuple(rot), tuple(ref))


# shape classifiers -----------------------------------------------------------


@dataclass(frozen=True)
class ShapeDescriptor:
    kind: Literal["EmptyGraph", "Complete", "CompleteMinusPerfectMatching"]
    size: int
    matching: tuple[tuple[int, int], ...] = ()

    def describe(self, labels: tuple[str, ...] | None = None) -> str:
        if self.kind == "EmptyGraph":
            return f"empty({self.size})"
        if self.kind == "Complete":
            return f"K{self.size}"
        show = (lambda v: labels[v]) if labels else str
        pairs = ",".join(f"({show(u)},{show(v)})" for u, v in self.matching)
        return f"K{self.size}-{len(self.matching)}K2[{pairs}]"


def classify_omega1(g: SimpleGraph, p: OmegaPartition) -> ShapeDescriptor:
    """Confirm the rotations induce an edgeless graph."""
    for u, v in combinations(p.omega1, 2):
        if g.has_edge(u, v):
            raise ShapeMismatch(
                f"rotations {g.labels[u]} and {g.labels[v]} are adjacent", (u, v)
            )
    return ShapeDescriptor("EmptyGraph", len(p.omega1))


def classify_omega2(g: SimpleGraph, p: OmegaPartition, n: int) -> ShapeDescriptor:
    """Confirm the reflections induce K_n (odd n) or K_n minus its antipodal matching."""
    if len(p.omega2) != n:
        raise ShapeMismatch(f"expected {n} reflections, got {len(p.omega2)}")
    half = n // 2
    missing = set()
    if n % 2 == 0:
        missing = {(p.omega2[i], p.omega2[i + half]) for i in range(half)}
    for u, v in combinations(p.omega2, 2):
        expected = (u, v) not in missing
        if g.has_edge(u, v) != expected:
            what = "missing" if expected else "unexpected"
            raise ShapeMismatch(f"{what} edge {g.labels[u]}-{g.labels[v]}", (u, v))
    if n % 2:
        return ShapeDescriptor("Complete", n)
    return ShapeDescriptor("CompleteMinusPerfectMatching", n, tuple(sorted(missing)))


def _is_star(h: SimpleGraph) -> bool:
    k = h.order
    if k < 2:
        return False
    degs = sorted(degree(h, v) for v in range(k))
    if edge_count(h) != k - 1:
        return False
    if k == 2:
        return degs == [1, 1]
    return degs[-1] == k - 1 and degs[:-1] == [1] * (k - 1)


def star_check(g: FiniteGroup, h: Iterable[int], n: int | None = None) -> bool:
    """Whether the non-commuting graph induced on elements ``h`` is the star K_{1,n-1}.

    ``n`` defaults to ``|G| / 2``, which is the dihedral parameter for D_2n.
    The decision is made on the induced graph's shape alone.
    """
    h = list(dict.fromkeys(h))
    if n is None:
        n = g.order // 2
    z = center(g)
    for a in h:
        g._check(a)
        if a in z:
            raise InvalidParameter(f"element {g.names[a]!r} is central")
    if len(h) != n:
        return False
    graph = noncommuting_graph(g)
    index = {a: v for v, a in enumerate(vertex_elements(g))}
    return _is_star(induced_subgraph(graph, [index[a] for a in h]))


# split graphs ----------------------------------------------------------------


@dataclass(frozen=True)
class SplitPartition:
    independent: frozenset[int]
    clique: frozenset[int]


def is_split_partition(g: SimpleGraph, independent: Iterable[int], clique: Iterable[int]) -> bool:
    s, k = set(independent), set(clique)
    if s & k or s | k != set(range(g.order)):
        return False
    smask = sum(1 << v for v in s)
    kmask = sum(1 << v for v in k)
    if any(g.adjacency[v] & smask for v in s):
        return False
    return all((g.adjacency[v] | 1 << v) & kmask == kmask for v in k)


def split_partition(g: SimpleGraph) -> SplitPartition | None:
    """Partition the vertices into an independent set and a clique, or ``None``.

    Uses the degree-sequence test: with degrees sorted d_1 >= ... >= d_p and
    m = max{i : d_i >= i - 1}, the graph is split iff
    ``sum_{i<=m} d_i == m(m-1) + sum_{i>m} d_i``; the m highest-degree
    vertices then form a clique.  Clique vertices with no neighbour in the
    independent side are moved across while that side is non-empty, so the
    witness has a maximal independent set where one exists.
    """
    p = g.order
    order = sorted(range(p), key=lambda v: (-degree(g, v), v))
    degs = [degree(g, v) for v in order]
    m = max((i for i in range(1, p + 1) if degs[i - 1] >= i - 1), default=0)
    if sum(degs[:m]) == m * (m - 1) + sum(degs[m:]):
        clique = set(order[:m])
        indep = set(order[m:])
        if is_split_partition(g, indep, clique):
            return _tidy(g, indep, clique)
    if p < BRUTE_FORCE_SPLIT_BELOW:
        found = _split_brute_force(g)
        return _tidy(g, *found) if found else None
    return None


def _tidy(g: SimpleGraph, indep: set[int], clique: set[int]) -> SplitPartition:
    moved = True
    while moved and indep:
        moved = False
        smask = sum(1 << v for v in indep)
        for v in sorted(clique):
            if not g.adjacency[v] & smask:
                clique.discard(v)
                indep.add(v)
                moved = True
                break
    return SplitPartition(frozenset(indep), frozenset(clique))


def _split_brute_force(g: SimpleGraph) -> tuple[set[int], set[int]] | None:
    p = g.order
    for mask in range(1 << p):
        clique = set(iter_bits(mask))
        indep = set(range(p)) - clique
        if is_split_partition(g, indep, clique):
            return indep, clique
    return None
