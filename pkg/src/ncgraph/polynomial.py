"""Sparse integer polynomials in one variable."""

from __future__ import annotations

from typing import Iterable, Mapping

from .errors import InvalidParameter

__all__ = ["SparsePolynomial", "poly_add", "poly_eval", "poly_derivative_at_one"]


class SparsePolynomial:
    """Polynomial with integer coefficients stored as ``{exponent: coefficient}``.

    Zero coefficients are never stored, so the zero polynomial has no terms.
    Instances are immutable and hashable.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for e, c in items:
            if isinstance(e, bool) or not isinstance(e, int) or e < 0:
                raise InvalidParameter(f"exponent must be a non-negative integer, got {e!r}")
            if isinstance(c, bool) or not isinstance(c, int):
                raise InvalidParameter(f"coefficient must be an integer, got {c!r}")
            acc[e] = acc.get(e, 0) + c
        object.__setattr__(self, "_terms", {e: c for e, c in sorted(acc.items(), reverse=True) if c})

    def __setattr__(self, name, value):
        raise AttributeError("SparsePolynomial is immutable")

    @classmethod
    def monomial(cls, coefficient: int, exponent: int) -> "SparsePolynomial":
        return cls({exponent: coefficient})

    @property
    def terms(self) -> dict[int, int]:
        """Copy of the term map, highest exponent first."""
        return dict(self._terms)

    @property
    def degree(self) -> int | None:
        return next(iter(self._terms), None)

    def coefficient(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        return SparsePolynomial(list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self) -> "SparsePolynomial":
        return SparsePolynomial({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        return self + (-other)

    def __call__(self, x: int) -> int:
        return sum(c * x**e for e, c in self._terms.items())

    def derivative_at_one(self) -> int:
        return sum(e * c for e, c in self._terms.items())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(tuple(self._terms.items()))

    def __repr__(self) -> str:
        return f"SparsePolynomial({self._terms!r})"

    def __str__(self) -> str:
        # canonical text: decreasing exponents, "6x^2+12x", "x", "-x^3+1"
        if not self._terms:
            return "0"
        parts = []
        for e, c in self._terms.items():
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "x" if e == 1 else f"x^{e}"
                body = var if mag == 1 else f"{mag}{var}"
            parts.append(sign + body)
        text = "".join(parts)
        return text[1:] if text.startswith("+") else text

    def to_json(self) -> dict:
        return {"terms": [[e, c] for e, c in self._terms.items()]}

    @classmethod
    def from_json(cls, doc: Mapping) -> "SparsePolynomial":
        return cls((int(e), int(c)) for e, c in doc["terms"])


def poly_add(a: SparsePolynomial, b: SparsePolynomial) -> SparsePolynomial:
    return a + b


def poly_eval(a: SparsePolynomial, x: int) -> int:
    return a(x)


def poly_derivative_at_one(a: SparsePolynomial) -> int:
    return a.derivative_at_one()
