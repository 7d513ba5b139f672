"""Finite groups backed by a Cayley table.

Elements are plain integer indices into ``FiniteGroup.names``; the table is the
single source of truth for multiplication.  Dihedral groups are built
symbolically and then materialised into a table, so everything downstream sees
the same representation regardless of where a group came from.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Literal, NamedTuple, Sequence

from .errors import (
    InvalidParameter,
    NoIdentity,
    NoInverse,
    NotAssociative,
    NotClosed,
    OutOfRange,
)

__all__ = [
    "FiniteGroup",
    "DihedralLabel",
    "dihedral_group",
    "dihedral_label",
    "validate_cayley_table",
    "center",
    "centralizer",
    "is_abelian",
    "parse_cayley_table",
    "format_cayley_table",
    "read_cayley_table",
    "write_cayley_table",
]


@dataclass(frozen=True)
class FiniteGroup:
    """A finite group given by its multiplication table.

    ``table[a][b]`` is the index of the product ``a*b``.  Instances are
    immutable; build them with :func:`dihedral_group` or
    :func:`validate_cayley_table`.
    """

    names: tuple[str, ...]
    table: tuple[tuple[int, ...], ...]
    identity: int
    _index: dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "_index", {name: i for i, name in enumerate(self.names)})

    @property
    def order(self) -> int:
        return len(self.names)

    def __len__(self) -> int:
        return len(self.names)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def element(self, name: str) -> int:
        """Index of the element called ``name``."""
        try:
            return self._index[name]
        except KeyError:
            raise OutOfRange(f"no element named {name!r}") from None

    def commute(self, a: int, b: int) -> bool:
        return self.table[a][b] == self.table[b][a]

    def _check(self, a: int) -> None:
        if not 0 <= a < len(self.names):
            raise OutOfRange(f"element index {a} outside 0..{len(self.names) - 1}")


# dihedral groups -------------------------------------------------------------


class DihedralLabel(NamedTuple):
    """``rotation`` with exponent i is r^i; ``reflection`` with exponent i is s*r^i."""

    kind: Literal["rotation", "reflection"]
    exponent: int

    def name(self) -> str:
        base = "" if self.kind == "rotation" else "s"
        if self.exponent == 0:
            return base or "1"
        if self.exponent == 1:
            return base + "r"
        return f"{base}r^{self.exponent}"


def dihedral_label(n: int, index: int) -> DihedralLabel:
    """Label of element ``index`` in :func:`dihedral_group` ``(n)``."""
    if not 0 <= index < 2 * n:
        raise OutOfRange(f"element index {index} outside 0..{2 * n - 1}")
    kind, exponent = divmod(index, n)
    return DihedralLabel("reflection" if kind else "rotation", exponent)


def dihedral_group(n: int) -> FiniteGroup:
    """The dihedral group of order 2n, ``<r, s | r^n = s^2 = 1, srs = r^-1>``.

    Elements are ordered ``1, r, ..., r^(n-1), s, sr, ..., sr^(n-1)``; element
    ``k*n + i`` stands for ``s^k r^i``.
    """
    if not isinstance(n, int) or n < 3:
        raise InvalidParameter(f"dihedral group needs n >= 3, got {n!r}")

    def product(a: int, b: int) -> int:
        k1, i1 = divmod(a, n)
        k2, i2 = divmod(b, n)
        # r^i s = s r^-i
        if k2:
            return ((k1 + 1) % 2) * n + (i2 - i1) % n
        return k1 * n + (i1 + i2) % n

    size = 2 * n
    table = tuple(tuple(product(a, b) for b in range(size)) for a in range(size))
    names = tuple(dihedral_label(n, i).name() for i in range(size))
    return FiniteGroup(names, table, 0)


# ingestion -------------------------------------------------------------------


def validate_cayley_table(
    order: int, table: Sequence[Sequence[int]], names: Sequence[str] | None = None
) -> FiniteGroup:
    """Check the group axioms on a raw table and wrap it as a :class:`FiniteGroup`.

    The identity is discovered, not declared.  Each failure names the first
    offending cell or triple.
    """
    if order < 1:
        raise InvalidParameter(f"group order must be positive, got {order}")
    if names is None:
        names = [str(i) for i in range(order)]
    names = [str(x) for x in names]
    if len(names) != order:
        raise InvalidParameter(f"expected {order} element names, got {len(names)}")
    if len(set(names)) != order:
        dup = next(x for x in names if names.count(x) > 1)
        raise InvalidParameter(f"duplicate element name {dup!r}")

    if len(table) != order:
        raise NotClosed(f"table has {len(table)} rows, expected {order}")
    rows: list[tuple[int, ...]] = []
    for a, row in enumerate(table):
        if len(row) != order:
            raise NotClosed(f"row {a} has {len(row)} entries, expected {order}")
        for b, x in enumerate(row):
            if isinstance(x, bool) or not isinstance(x, int) or not 0 <= x < order:
                raise NotClosed(f"entry ({a}, {b}) = {x!r} is not an element index")
        rows.append(tuple(row))

    # Latin square: every row and column a permutation
    full = set(range(order))
    for a, row in enumerate(rows):
        if set(row) != full:
            b, c = _first_repeat(row)
            raise NotClosed(f"row {a} repeats a value: table[{a}][{b}] = table[{a}][{c}] = {row[b]}")
    for b in range(order):
        col = [rows[a][b] for a in range(order)]
        if set(col) != full:
            a, c = _first_repeat(col)
            raise NotClosed(
                f"column {b} repeats a value: table[{a}][{b}] = table[{c}][{b}] = {col[a]}"
            )

    ident = range(order)
    e = next(
        (
            x
            for x in range(order)
            if tuple(rows[x]) == tuple(ident) and all(rows[a][x] == a for a in range(order))
        ),
        None,
    )
    if e is None:
        raise NoIdentity("no element acts as a two-sided identity")

    for a in range(order):
        if not any(rows[a][b] == e and rows[b][a] == e for b in range(order)):
            raise NoInverse(f"element {a} ({names[a]!r}) has no two-sided inverse")

    for a in range(order):
        ra = rows[a]
        for b in range(order):
            left = rows[ra[b]]
            rb = rows[b]
            for c in range(order):
                if left[c] != ra[rb[c]]:
                    raise NotAssociative(f"(a*b)*c != a*(b*c) for (a, b, c) = ({a}, {b}, {c})")

    return FiniteGroup(tuple(names), tuple(rows), e)


def _first_repeat(values: Sequence[int]) -> tuple[int, int]:
    seen: dict[int, int] = {}
    for i, x in enumerate(values):
        if x in seen:
            return seen[x], i
        seen[x] = i
    raise AssertionError("no repeat")


# queries ---------------------------------------------------------------------


def centralizer(g: FiniteGroup, a: int) -> frozenset[int]:
    """All ``x`` with ``x*a == a*x``."""
    g._check(a)
    t = g.table
    return frozenset(x for x in range(g.order) if t[x][a] == t[a][x])


def center(g: FiniteGroup) -> frozenset[int]:
    t = g.table
    n = g.order
    return frozenset(z for z in range(n) if all(t[z][x] == t[x][z] for x in range(n)))


def is_abelian(g: FiniteGroup) -> bool:
    t = g.table
    n = g.order
    return all(t[a][b] == t[b][a] for a in range(n) for b in range(a + 1, n))


# text format -----------------------------------------------------------------
#
#   # optional comment lines
#   m
#   name_0 name_1 ... name_{m-1}
#   m rows of m integers


def parse_cayley_table(text: str) -> FiniteGroup:
    """Parse the whitespace-tolerant Cayley-table text format and validate it."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise InvalidParameter("empty Cayley table")
    try:
        order = int(lines[0])
    except ValueError:
        raise InvalidParameter(f"first line must be the group order, got {lines[0]!r}") from None
    if order < 1:
        raise InvalidParameter(f"group order must be positive, got {order}")
    if len(lines) != order + 2:
        raise InvalidParameter(
            f"expected {order + 2} non-comment lines (order, names, {order} rows), got {len(lines)}"
        )
    names = lines[1].split()
    rows = []
    for k, ln in enumerate(lines[2:]):
        try:
            rows.append([int(tok) for tok in ln.split()])
        except ValueError:
            raise InvalidParameter(f"row {k} contains a non-integer: {ln!r}") from None
    return validate_cayley_table(order, rows, names)


def format_cayley_table(g: FiniteGroup, comment: str | None = None) -> str:
    width = len(str(g.order - 1))
    out = []
    if comment:
        out.extend(f"# {line}" for line in comment.splitlines())
    out.append(str(g.order))
    out.append(" ".join(g.names))
    for row in g.table:
        out.append(" ".join(str(x).rjust(width) for x in row))
    return "\n".join(out) + "\n"


def read_cayley_table(path: str | Path) -> FiniteGroup:
    return parse_cayley_table(Path(path).read_text())


def write_cayley_table(g: FiniteGroup, path: str | Path, comment: str | None = None) -> None:
    Path(path).write_text(format_cayley_table(g, comment))


def elements_named(g: FiniteGroup, names: Iterable[str]) -> list[int]:
    return [g.element(x) for x in names]
