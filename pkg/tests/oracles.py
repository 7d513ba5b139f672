"""Slow, obviously-correct reference computations used only by the tests.

Nothing here imports the algorithms it is meant to check.
"""

from __future__ import annotations

from itertools import combinations


def adjacency_sets(adj_masks: list[int]) -> list[set[int]]:
    p = len(adj_masks)
    return [{v for v in range(p) if m >> v & 1} for m in adj_masks]


def all_simple_path_longest(nbrs: list[set[int]]) -> list[list[int | None]]:
    """Longest simple path length for every ordered pair, by enumerating every
    simple path from every start with plain depth-first search (no pruning)."""
    p = len(nbrs)
    best: list[list[int | None]] = [[None] * p for _ in range(p)]

    for start in range(p):
        row = best[start]
        row[start] = 0
        on_path = [False] * p
        on_path[start] = True

        def walk(v: int, length: int) -> None:
            if row[v] is None or length > row[v]:
                row[v] = length
            for w in nbrs[v]:
                if not on_path[w]:
                    on_path[w] = True
                    walk(w, length + 1)
                    on_path[w] = False

        walk(start, 0)
    return best


def floyd_warshall(nbrs: list[set[int]]) -> list[list[float]]:
    p = len(nbrs)
    inf = float("inf")
    d = [[0 if u == v else (1 if v in nbrs[u] else inf) for v in range(p)] for u in range(p)]
    for k in range(p):
        for i in range(p):
            for j in range(p):
                if d[i][k] + d[k][j] < d[i][j]:
                    d[i][j] = d[i][k] + d[k][j]
    return d


def is_split_brute(nbrs: list[set[int]]) -> bool:
    p = len(nbrs)
    for mask in range(1 << p):
        k = [v for v in range(p) if mask >> v & 1]
        s = [v for v in range(p) if not mask >> v & 1]
        if all(b in nbrs[a] for a, b in combinations(k, 2)) and not any(
            b in nbrs[a] for a, b in combinations(s, 2)
        ):
            return True
    return False


def dihedral_permutations(n: int) -> list[tuple[int, ...]]:
    """D_2n as symmetries of the n-gon, listed as 1, r, ..., r^(n-1), s, sr, ...

    r rotates vertex i to i+1, s reflects i to -i; products compose as
    functions, (ab)(x) = a(b(x)).
    """
    r = tuple((i + 1) % n for i in range(n))
    s = tuple((-i) % n for i in range(n))
    ident = tuple(range(n))

    def compose(a, b):
        return tuple(a[b[x]] for x in range(n))

    rots = [ident]
    for _ in range(n - 1):
        rots.append(compose(rots[-1], r))
    return rots + [compose(s, x) for x in rots]


def dihedral_table_from_permutations(n: int) -> list[list[int]]:
    perms = dihedral_permutations(n)
    index = {p: i for i, p in enumerate(perms)}

    def compose(a, b):
        return tuple(a[b[x]] for x in range(n))

    return [[index[compose(a, b)] for b in perms] for a in perms]


def quaternion_table() -> tuple[list[str], list[list[int]]]:
    """Q8 from Hamilton's rules on unit quaternions (a, b, c, d) = a + bi + cj + dk."""

    def mul(x, y):
        a1, b1, c1, d1 = x
        a2, b2, c2, d2 = y
        return (
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )

    units = {
        "1": (1, 0, 0, 0), "-1": (-1, 0, 0, 0),
        "i": (0, 1, 0, 0), "-i": (0, -1, 0, 0),
        "j": (0, 0, 1, 0), "-j": (0, 0, -1, 0),
        "k": (0, 0, 0, 1), "-k": (0, 0, 0, -1),
    }
    names = list(units)
    vals = [units[x] for x in names]
    return names, [[vals.index(mul(a, b)) for b in vals] for a in vals]
