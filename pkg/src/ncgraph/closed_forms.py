"""Closed-form invariants of the non-commuting graph of D_2n, as functions of n.

Nothing here looks at a graph: every value is arithmetic in ``n`` with a
parity switch, so it can serve as an independent target for the computed
values.
"""

from __future__ import annotations

from dataclasses import dataclass, fields
from fractions import Fraction

from .errors import InvalidParameter
from .polynomial import SparsePolynomial

__all__ = [
    "ClosedFormReport",
    "closed_forms_for",
    "mean_distance_unreduced",
    "consistency_errors",
]


@dataclass(frozen=True)
class ClosedFormReport:
    n: int
    parity: str
    degree_rotation: int
    degree_reflection: int
    vertex_count: int
    edge_count: int
    detour_distance: int
    detour_polynomial: SparsePolynomial
    detour_index: int
    ecc_omega1: int
    ecc_omega2: int
    ecc_conn_polynomial: SparsePolynomial
    total_ecc_polynomial: SparsePolynomial
    ecc_conn_index: int
    transmission_rotation: int
    transmission_reflection: int
    graph_transmission: int
    mean_distance: Fraction

    @property
    def omega1_size(self) -> int:
        return self.n - 1 if self.n % 2 else self.n - 2

    def to_json(self) -> dict:
        """Flat JSON object; polynomials and rationals as canonical strings."""
        out = {}
        for f in fields(self):
            value = getattr(self, f.name)
            if isinstance(value, (SparsePolynomial, Fraction)):
                value = str(value)
            out[f.name] = value
        return out


def closed_forms_for(n: int) -> ClosedFormReport:
    if not isinstance(n, int) or isinstance(n, bool) or n < 3:
        raise InvalidParameter(f"closed forms need n >= 3, got {n!r}")
    x = SparsePolynomial.monomial
    if n % 2:
        return ClosedFormReport(
            n=n,
            parity="odd",
            degree_rotation=n,
            degree_reflection=2 * n - 2,
            vertex_count=2 * n - 1,
            edge_count=3 * n * (n - 1) // 2,
            detour_distance=2 * n - 2,
            detour_polynomial=x((n - 1) * (2 * n - 1), 2 * n - 2),
            detour_index=2 * (n - 1) ** 2 * (2 * n - 1),
            ecc_omega1=2,
            ecc_omega2=1,
            ecc_conn_polynomial=x(n * (n - 1), 2) + x(2 * n * (n - 1), 1),
            total_ecc_polynomial=x(n - 1, 2) + x(n, 1),
            ecc_conn_index=4 * n * (n - 1),
            transmission_rotation=3 * n - 4,
            transmission_reflection=2 * n - 2,
            graph_transmission=5 * n * n - 9 * n + 4,
            mean_distance=Fraction(5 * n - 4, 4 * n - 2),
        )
    return ClosedFormReport(
        n=n,
        parity="even",
        degree_rotation=n,
        degree_reflection=2 * n - 4,
        vertex_count=2 * n - 2,
        edge_count=3 * n * (n - 2) // 2,
        detour_distance=2 * n - 3,
        detour_polynomial=x((n - 1) * (2 * n - 3), 2 * n - 3),
        detour_index=(n - 1) * (2 * n - 3) ** 2,
        ecc_omega1=2,
        ecc_omega2=2,
        ecc_conn_polynomial=x(3 * n * (n - 2), 2),
        total_ecc_polynomial=x(2 * (n - 1), 2),
        ecc_conn_index=6 * n * (n - 2),
        transmission_rotation=3 * n - 6,
        transmission_reflection=2 * n - 2,
        graph_transmission=5 * n * n - 14 * n + 12,
        mean_distance=Fraction(5 * n * n - 14 * n + 12, (2 * n - 2) * (2 * n - 3)),
    )


def mean_distance_unreduced(n: int) -> tuple[int, int]:
    """Mean distance as (graph transmission, p(p-1)) before cancelling."""
    if n < 3:
        raise InvalidParameter(f"closed forms need n >= 3, got {n!r}")
    if n % 2:
        return 5 * n * n - 9 * n + 4, (2 * n - 1) * (2 * n - 2)
    return 5 * n * n - 14 * n + 12, (2 * n - 2) * (2 * n - 3)


def consistency_errors(r: ClosedFormReport) -> list[str]:
    """Internal relations a report must satisfy; empty when consistent."""
    errs = []
    p = r.vertex_count
    if r.detour_polynomial.derivative_at_one() != r.detour_index:
        errs.append("detour_index != D'(1)")
    if r.detour_polynomial(1) != p * (p - 1) // 2:
        errs.append("detour polynomial does not count every unordered pair")
    if r.ecc_conn_polynomial.derivative_at_one() != r.ecc_conn_index:
        errs.append("ecc_conn_index != Xi'(1)")
    if r.ecc_conn_polynomial(1) != 2 * r.edge_count:
        errs.append("Xi(1) != 2|E|")
    if r.total_ecc_polynomial(1) != p:
        errs.append("Theta(1) != |V|")
    if r.omega1_size + r.n != p:
        errs.append("|Omega1| + |Omega2| != |V|")
    if r.omega1_size * r.degree_rotation + r.n * r.degree_reflection != 2 * r.edge_count:
        errs.append("degree sum != 2|E|")
    if r.omega1_size * r.transmission_rotation + r.n * r.transmission_reflection != r.graph_transmission:
        errs.append("graph_transmission != sum of vertex transmissions")
    if r.mean_distance != Fraction(r.graph_transmission, p * (p - 1)):
        errs.append("mean_distance != sigma / (p(p-1))")
    num, den = mean_distance_unreduced(r.n)
    if Fraction(num, den) != r.mean_distance:
        errs.append("reduced and unreduced mean distance disagree")
    return errs
