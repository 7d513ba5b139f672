"""Exact detour (longest simple path) distances.

For a fixed start vertex ``u`` the search keeps, for every vertex subset ``S``,
a bitmask ``reach[S]`` of the vertices ``w`` such that some simple path from
``u`` visits exactly ``S`` and ends at ``w``.  Subsets are processed one
popcount layer at a time so each layer is a handful of vectorised numpy
operations.  Memory is ``2^p`` words per start vertex.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np

from .errors import SameVertex, TooLarge, UnreachableError
from .graph import SimpleGraph, is_connected
from .polynomial import SparsePolynomial

__all__ = [
    "EXACT_LIMIT",
    "DetourMatrix",
    "detour_distance",
    "detour_matrix",
    "detour_polynomial",
    "detour_index",
    "detour_row",
]

# Largest vertex count accepted by the exact solver unless ``limit`` is passed.
EXACT_LIMIT = 24

# reach masks are stored as uint32
_HARD_LIMIT = 32

_LAYER_CACHE: dict[int, list[np.ndarray]] = {}


def _layers(p: int) -> list[np.ndarray]:
    """Subsets of ``range(p)`` grouped by popcount."""
    if p not in _LAYER_CACHE:
        masks = np.arange(1 << p, dtype=np.int64)
        counts = np.zeros(1 << p, dtype=np.int8)
        for b in range(p):
            counts += ((masks >> b) & 1).astype(np.int8)
        _LAYER_CACHE.clear()
        _LAYER_CACHE[p] = [masks[counts == k] for k in range(p + 1)]
    return _LAYER_CACHE[p]


def _check_size(g: SimpleGraph, limit: int | None) -> None:
    cap = min(EXACT_LIMIT if limit is None else limit, _HARD_LIMIT)
    if g.order > cap:
        raise TooLarge(f"{g.order} vertices exceeds the exact-solve limit of {cap}")


def detour_row(g: SimpleGraph, u: int, limit: int | None = None) -> list[int | None]:
    """Longest-path lengths from ``u`` to every vertex (``None`` where unreachable).

    The entry for ``u`` itself is 0.
    """
    _check_size(g, limit)
    g._check(u)
    p = g.order
    full = (1 << p) - 1
    nbr = np.array(g.adjacency, dtype=np.int64)

    reach = np.zeros(1 << p, dtype=np.uint32)
    reach[1 << u] = 1 << u
    layers = _layers(p)
    for k in range(1, p):
        layer = layers[k]
        layer = layer[(layer >> u) & 1 == 1]
        ends = reach[layer].astype(np.int64)
        live = ends != 0
        layer, ends = layer[live], ends[live]
        if not len(layer):
            break
        for x in range(p):
            bit = 1 << x
            ok = ((layer & bit) == 0) & ((ends & nbr[x]) != 0)
            if ok.any():
                reach[layer[ok] | bit] |= bit

    out: list[int | None] = [None] * p
    out[u] = 0
    todo = full ^ (1 << u)
    # any path covering every vertex is already the longest possible
    for k in range(p, 1, -1):
        if not todo:
            break
        layer = layers[k]
        layer = layer[(layer >> u) & 1 == 1]
        hit = int(np.bitwise_or.reduce(reach[layer].astype(np.int64))) if len(layer) else 0
        found = hit & todo
        while found:
            low = found & -found
            out[low.bit_length() - 1] = k - 1
            found ^= low
        todo &= ~hit
    return out


def detour_distance(g: SimpleGraph, u: int, v: int, limit: int | None = None) -> int:
    """Length (in edges) of a longest simple ``u``-``v`` path."""
    g._check(u)
    g._check(v)
    if u == v:
        raise SameVertex(f"detour distance needs two distinct vertices, got {u} twice")
    d = detour_row(g, u, limit)[v]
    if d is None:
        raise UnreachableError(f"no path between {g.labels[u]!r} and {g.labels[v]!r}")
    return d


class DetourMatrix:
    """Symmetric matrix of pairwise detour distances with zero diagonal."""

    __slots__ = ("ddist",)

    def __init__(self, ddist):
        self.ddist = tuple(tuple(int(x) for x in row) for row in ddist)

    def __getitem__(self, uv: tuple[int, int]) -> int:
        u, v = uv
        return self.ddist[u][v]

    def __len__(self) -> int:
        return len(self.ddist)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DetourMatrix):
            return NotImplemented
        return self.ddist == other.ddist

    def __repr__(self) -> str:
        return f"DetourMatrix({self.ddist!r})"

    def pairs(self):
        """Unordered pairs ``(u, v, D(u, v))`` with ``u < v``."""
        for u, v in combinations(range(len(self.ddist)), 2):
            yield u, v, self.ddist[u][v]

    def off_diagonal_values(self) -> set[int]:
        return {d for _, _, d in self.pairs()}


def detour_matrix(g: SimpleGraph, limit: int | None = None) -> DetourMatrix:
    _check_size(g, limit)
    if not is_connected(g):
        raise UnreachableError("graph is disconnected; some detour distances are undefined")
    rows = [detour_row(g, u, limit) for u in range(g.order)]
    return DetourMatrix(rows)


def detour_polynomial(g: SimpleGraph, limit: int | None = None) -> SparsePolynomial:
    """Sum of ``x^D(u, v)`` over unordered pairs of distinct vertices."""
    return SparsePolynomial((d, 1) for _, _, d in detour_matrix(g, limit).pairs())


def detour_index(g: SimpleGraph, limit: int | None = None) -> int:
    return detour_polynomial(g, limit).derivative_at_one()
