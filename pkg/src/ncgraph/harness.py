"""Cross-check the closed forms against values computed from the actual graph."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from .builder import (
    classify_omega1,
    degree_via_centralizer,
    is_split_partition,
    noncommuting_graph,
    omega_partition,
    split_partition,
    star_check,
    vertex_elements,
)
from .closed_forms import ClosedFormReport, closed_forms_for
from .detour import detour_matrix
from .errors import InvalidParameter, ShapeMismatch
from .graph import (
    SimpleGraph,
    degree,
    eccentricity,
    edge_count,
    graph_transmission,
    induced_subgraph,
    mean_distance,
    vertex_transmission,
)
from .group import dihedral_group
from .invariants import (
    eccentric_connectivity_index,
    eccentric_connectivity_polynomial,
    total_eccentricity_polynomial,
)
from .polynomial import SparsePolynomial

__all__ = ["Check", "VerificationReport", "verify", "verify_range", "render_table"]


@dataclass(frozen=True)
class Check:
    name: str
    closed_form_value: str
    computed_value: str
    passed: bool

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "closed_form_value": self.closed_form_value,
            "computed_value": self.computed_value,
            "pass": self.passed,
        }


@dataclass(frozen=True)
class VerificationReport:
    n: int
    with_detour: bool
    checks: tuple[Check, ...] = field(default_factory=tuple)

    @property
    def overall(self) -> bool:
        return all(c.passed for c in self.checks)

    def failed(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "with_detour": self.with_detour,
            "checks": [c.to_json() for c in self.checks],
            "overall": self.overall,
        }


def _show(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _values(xs: Iterable) -> str:
    """A single value if all agree, else the sorted set of distinct values."""
    distinct = sorted(set(xs))
    if len(distinct) == 1:
        return _show(distinct[0])
    return "{" + ", ".join(_show(x) for x in distinct) + "}"


def _labels(g: SimpleGraph, vs: Iterable[int]) -> str:
    return "{" + ",".join(g.labels[v] for v in sorted(vs)) + "}"


def verify(
    n: int,
    with_detour: bool = False,
    *,
    limit: int | None = None,
    reference: ClosedFormReport | None = None,
) -> VerificationReport:
    """Run every check for D_2n and collect the verdicts.

    ``reference`` replaces the closed-form report, which lets tests feed in a
    deliberately corrupted one.
    """
    if not isinstance(n, int) or n < 3:
        raise InvalidParameter(f"verification needs n >= 3, got {n!r}")
    ref = closed_forms_for(n) if reference is None else reference
    group = dihedral_group(n)
    graph = noncommuting_graph(group)
    part = omega_partition(n)
    elements = vertex_elements(group)
    odd = n % 2 == 1

    checks: list[Check] = []

    def add(name: str, expected, computed) -> None:
        exp, got = _show(expected), _show(computed)
        checks.append(Check(name, exp, got, exp == got))

    # degrees: adjacency count and centralizer route must both match
    for name, vs, expected in (
        ("degree_rotation", part.omega1, ref.degree_rotation),
        ("degree_reflection", part.omega2, ref.degree_reflection),
    ):
        adj = _values(degree(graph, v) for v in vs)
        cen = _values(degree_via_centralizer(group, elements[v]) for v in vs)
        got = adj if adj == cen else f"adjacency={adj}; centralizer={cen}"
        add(name, expected, got)

    add("vertex_count", ref.vertex_count, graph.order)
    add("edge_count", ref.edge_count, edge_count(graph))

    # induced shapes on the two halves of the partition
    expected_l = n - 1 if odd else n - 2
    try:
        got1 = f"empty({classify_omega1(graph, part).size})"
    except ShapeMismatch as exc:
        got1 = f"mismatch: {exc}"
    add("omega1_shape", f"empty({expected_l})", got1)

    half = n // 2
    if odd:
        want2 = f"K{n}"
    else:
        pairs = [(part.omega2[i], part.omega2[i + half]) for i in range(half)]
        want2 = f"K{n}-[" + ",".join(f"{graph.labels[u]}/{graph.labels[v]}" for u, v in pairs) + "]"
    sub = induced_subgraph(graph, part.omega2)
    nonedges = [(u, v) for u, v in combinations(range(sub.order), 2) if not sub.has_edge(u, v)]
    if nonedges:
        got2 = f"K{sub.order}-[" + ",".join(f"{sub.labels[u]}/{sub.labels[v]}" for u, v in nonedges) + "]"
    else:
        got2 = f"K{sub.order}"
    add("omega2_shape", want2, got2)

    if odd:
        witness = split_partition(graph)
        want = f"S={_labels(graph, part.omega1)} K={_labels(graph, part.omega2)}"
        if witness is None:
            got = "not split"
        else:
            got = f"S={_labels(graph, witness.independent)} K={_labels(graph, witness.clique)}"
            if not is_split_partition(graph, witness.independent, witness.clique):
                got += " (invalid)"
        add("split_witness", want, got)

        rotations = [elements[v] for v in part.omega1]
        reflections = [elements[v] for v in part.omega2]
        add(
            "star_positive",
            True,
            all(star_check(group, [f] + rotations, n) for f in reflections),
        )
        add("star_negative", False, any(star_check(group, h, n) for h in _star_negatives(rotations, reflections)))

    ecc = {v: eccentricity(graph, v) for v in range(graph.order)}
    add("ecc_omega1", ref.ecc_omega1, _values(ecc[v] for v in part.omega1))
    add("ecc_omega2", ref.ecc_omega2, _values(ecc[v] for v in part.omega2))
    add("ecc_conn_polynomial", ref.ecc_conn_polynomial, eccentric_connectivity_polynomial(graph))
    add("total_ecc_polynomial", ref.total_ecc_polynomial, total_eccentricity_polynomial(graph))
    add("ecc_conn_index", ref.ecc_conn_index, eccentric_connectivity_index(graph))

    add("transmission_rotation", ref.transmission_rotation, _values(vertex_transmission(graph, v) for v in part.omega1))
    add(
        "transmission_reflection",
        ref.transmission_reflection,
        _values(vertex_transmission(graph, v) for v in part.omega2),
    )
    add("graph_transmission", ref.graph_transmission, graph_transmission(graph))
    add("mean_distance", ref.mean_distance, mean_distance(graph))

    if with_detour:
        dm = detour_matrix(graph, limit)
        add("detour_distance", ref.detour_distance, _values(dm.off_diagonal_values()))
        poly = SparsePolynomial((d, 1) for _, _, d in dm.pairs())
        add("detour_polynomial", ref.detour_polynomial, poly)
        add("detour_index", ref.detour_index, poly.derivative_at_one())

    return VerificationReport(n, with_detour, tuple(checks))


def _star_negatives(rotations: list[int], reflections: list[int]) -> list[list[int]]:
    """Perturbations of the star subset that must not induce K_{1,n-1}."""
    f0, f1 = reflections[0], reflections[1]
    return [
        rotations,  # reflection dropped
        [f0] + rotations[1:],  # one rotation dropped
        [f0, f1] + rotations[1:],  # rotation swapped for a second reflection
        list(reflections),  # reflections only
    ]


def render_table(reports: Iterable[VerificationReport]) -> str:
    rows = [("n", "check", "closed form", "computed", "result")]
    for rep in reports:
        for c in rep.checks:
            rows.append((str(rep.n), c.name, c.closed_form_value, c.computed_value, "pass" if c.passed else "FAIL"))
    widths = [max(len(r[i]) for r in rows) for i in range(5)]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def verify_range(
    n_min: int, n_max: int, with_detour: bool = False, *, limit: int | None = None
) -> list[VerificationReport]:
    if n_min < 3 or n_max < n_min:
        raise InvalidParameter(f"need 3 <= from <= to, got {n_min}..{n_max}")
    return [verify(n, with_detour, limit=limit) for n in range(n_min, n_max + 1)]
