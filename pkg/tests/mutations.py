from dataclasses import fields, replace
from fractions import Fraction

from ncgraph.closed_forms import ClosedFormReport
from ncgraph.polynomial import SparsePolynomial

FIXED = {"n", "parity"}


def corrupt(value):
    if isinstance(value, SparsePolynomial):
        return value + SparsePolynomial.monomial(1, value.degree or 0)
    if isinstance(value, Fraction):
        return value + 1
    return value + 1


def mutations(report: ClosedFormReport):
    """Yield ``(field name, report with only that field corrupted)``."""
    for f in fields(report):
        if f.name in FIXED:
            continue
        yield f.name, replace(report, **{f.name: corrupt(getattr(report, f.name))})
