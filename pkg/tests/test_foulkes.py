import json
from math import factorial

import pytest

from loopforest.foulkes import (
    DegreeCapExceeded,
    foulkes_compare,
    foulkes_sides,
    theorem1_expansion,
    two_row_coefficient,
)
from loopforest.partitions import Partition
from loopforest.plethysm import plethysm
from loopforest.schur import SchurPolynomial, dim_rep

h, s = SchurPolynomial.h, SchurPolynomial.s


@pytest.mark.parametrize("n", range(3, 9))
def test_closed_form_matches_engine(n):
    assert theorem1_expansion(n) == plethysm(h(2), h(1) * h(n - 1))


def test_closed_form_n4_square_term():
    assert theorem1_expansion(4).coeff(Partition((4, 4))) == 2
    assert theorem1_expansion(5).coeff(Partition((5, 5))) == 0


def test_closed_form_needs_n3():
    with pytest.raises(ValueError):
        theorem1_expansion(2)


@pytest.mark.parametrize("n", range(2, 9))
def test_two_row_coefficients(n):
    lhs = plethysm(h(n), h(1) * h(1))
    for a in range(1, n):
        assert lhs.coeff(Partition((2 * n - a, a))) == two_row_coefficient(a, n)
    with pytest.raises(ValueError):
        two_row_coefficient(n, n)


def test_two_row_examples():
    assert [two_row_coefficient(a, 6) for a in range(1, 6)] == [1, 2, 2, 3, 3]


@pytest.mark.parametrize("m,n", [(2, 3), (2, 4), (3, 3), (3, 4)])
def test_side_dimensions(m, n):
    lhs, rhs = foulkes_sides(m, n)
    assert dim_rep(lhs, m * n) == factorial(m * n) // (factorial(n) * factorial(m - 1) ** n)
    assert dim_rep(rhs, m * n) == factorial(m * n) // (factorial(m) * factorial(n - 1) ** m)


@pytest.mark.parametrize("n", range(3, 8))
def test_m2_exception_is_the_only_one(n):
    rep = foulkes_compare(2, n)
    assert rep.all_pass
    assert [tuple(r.lam) for r in rep.exceptions] == [(2 * n - 2, 2)]
    (row,) = rep.exceptions
    assert (row.lhs, row.rhs) == (2, 3)


def test_three_four_report():
    rep = foulkes_compare(3, 4)
    assert rep.all_pass
    assert rep.failures == []
    assert any(r.verdict == "PASS" for r in rep.rows)
    csv_text = rep.to_csv()
    assert csv_text.splitlines()[0] == "lambda,lhs,rhs,verdict"


def test_report_is_deterministic():
    a = json.dumps(foulkes_compare(3, 4).to_json())
    b = json.dumps(foulkes_compare(3, 4).to_json())
    assert a == b
    assert "seconds" not in foulkes_compare(2, 3).to_json()
    assert "seconds" in foulkes_compare(2, 3).to_json(timing=True)


def test_argument_checks(monkeypatch):
    with pytest.raises(ValueError):
        foulkes_compare(4, 3)
    with pytest.raises(ValueError):
        foulkes_compare(1, 3)
    monkeypatch.setenv("LOOPFOREST_DEGREE_CAP", "10")
    with pytest.raises(DegreeCapExceeded):
        foulkes_compare(3, 4)
