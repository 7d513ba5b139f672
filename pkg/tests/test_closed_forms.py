from fractions import Fraction

import pytest

from ncgraph.closed_forms import closed_forms_for, consistency_errors, mean_distance_unreduced
from ncgraph.errors import InvalidParameter
from ncgraph.polynomial import SparsePolynomial


def test_n3():
    r = closed_forms_for(3)
    assert r.parity == "odd"
    assert r.edge_count == 9
    assert r.detour_polynomial == SparsePolynomial({4: 10})
    assert r.detour_index == 40
    assert r.mean_distance == Fraction(11, 10)
    assert r.graph_transmission == 22
    assert (r.transmission_rotation, r.transmission_reflection) == (5, 4)


def test_n4():
    r = closed_forms_for(4)
    assert r.parity == "even"
    assert r.edge_count == 12
    assert r.detour_polynomial == SparsePolynomial({5: 15})
    assert r.detour_index == 75
    assert r.mean_distance == Fraction(6, 5)
    assert r.graph_transmission == 36
    assert (r.transmission_rotation, r.transmission_reflection) == (6, 6)


def test_n5():
    r = closed_forms_for(5)
    assert (r.degree_rotation, r.degree_reflection) == (5, 8)
    assert r.ecc_conn_index == 80
    assert r.mean_distance == Fraction(7, 6)
    assert str(r.mean_distance) == "7/6"


@pytest.mark.parametrize("n", [2, 0, -1])
def test_rejects_small_n(n):
    with pytest.raises(InvalidParameter):
        closed_forms_for(n)


@pytest.mark.parametrize("n", range(3, 201))
def test_internal_consistency(n):
    assert consistency_errors(closed_forms_for(n)) == []


@pytest.mark.parametrize("n", range(3, 201, 2))
def test_odd_mean_distance_cancellation(n):
    num, den = mean_distance_unreduced(n)
    assert (num, den) == (5 * n * n - 9 * n + 4, (2 * n - 1) * (2 * n - 2))
    assert Fraction(num, den) == Fraction(5 * n - 4, 4 * n - 2)


def test_vertex_count_by_parity():
    assert closed_forms_for(7).vertex_count == 13
    assert closed_forms_for(8).vertex_count == 14


def test_json_is_flat_and_stable():
    doc = closed_forms_for(4).to_json()
    assert doc["mean_distance"] == "6/5"
    assert doc["detour_polynomial"] == "15x^5"
    assert all(isinstance(v, (int, str)) for v in doc.values())
    assert list(doc)[:3] == ["n", "parity", "degree_rotation"]


def test_consistency_catches_corruption():
    from dataclasses import replace

    r = replace(closed_forms_for(5), detour_index=1)
    assert consistency_errors(r) == ["detour_index != D'(1)"]
