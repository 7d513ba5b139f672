"""Eccentricity-based graph polynomials and their indices.

The eccentric connectivity index is the derivative at 1 of the eccentric
connectivity polynomial; the derivative of the total eccentricity polynomial
is exposed separately as :func:`total_eccentricity`.
"""

from __future__ import annotations

from .graph import SimpleGraph, degree, eccentricity
from .polynomial import SparsePolynomial

__all__ = [
    "eccentric_connectivity_polynomial",
    "total_eccentricity_polynomial",
    "eccentric_connectivity_index",
    "total_eccentricity",
    "eccentricities",
]


def eccentricities(g: SimpleGraph) -> list[int]:
    return [eccentricity(g, v) for v in range(g.order)]


def eccentric_connectivity_polynomial(g: SimpleGraph) -> SparsePolynomial:
    """Sum over vertices of ``deg(u) * x^ecc(u)``."""
    return SparsePolynomial((eccentricity(g, v), degree(g, v)) for v in range(g.order))


def total_eccentricity_polynomial(g: SimpleGraph) -> SparsePolynomial:
    """Sum over vertices of ``x^ecc(u)``."""
    return SparsePolynomial((e, 1) for e in eccentricities(g))


def eccentric_connectivity_index(g: SimpleGraph) -> int:
    return eccentric_connectivity_polynomial(g).derivative_at_one()


def total_eccentricity(g: SimpleGraph) -> int:
    return total_eccentricity_polynomial(g).derivative_at_one()
