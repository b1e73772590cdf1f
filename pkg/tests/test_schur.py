import pytest
from hypothesis import given, settings, strategies as st

from loopforest.partitions import Partition, partitions_of
from loopforest.schur import (
    SchurPolynomial,
    addable_rim_hooks,
    dim_rep,
    inner_product,
    mn_multiply,
    multiply,
    pieri_h,
    product_terms,
    removable_rim_hooks,
    skew_expand,
    stacked_shape,
)

from oracles import schur_product_oracle, skew_oracle

S = SchurPolynomial.s


def as_dict(f):
    return {tuple(k): v for k, v in f.terms.items()}


def test_paper_product_example():
    # s_22 * s_21 via the stacked skew shape
    assert as_dict(S((2, 2)) * S((2, 1))) == {
        (4, 3): 1, (4, 2, 1): 1, (3, 3, 1): 1, (3, 2, 2): 1, (3, 2, 1, 1): 1, (2, 2, 2, 1): 1,
    }


def test_paper_skew_example():
    assert as_dict(skew_expand((4, 3, 2, 2), (2, 2, 1))) == {
        (4, 2): 1, (4, 1, 1): 1, (3, 3): 1, (3, 2, 1): 2, (3, 1, 1, 1): 1, (2, 2, 2): 1, (2, 2, 1, 1): 1,
    }


def test_small_products():
    assert S((1,)) * S((1,)) == S((2,)) + S((1, 1))
    assert skew_expand((2, 1), (1,)) == S((2,)) + S((1, 1))
    assert skew_expand((3, 1), (3, 1)) == SchurPolynomial.one()
    with pytest.raises(ValueError):
        skew_expand((2,), (1, 1))


def test_mn_rule_examples():
    assert mn_multiply(2, SchurPolynomial.one()) == S((2,)) - S((1, 1))
    assert mn_multiply(3, S((1,))) == S((4,)) - S((2, 2)) + S((1, 1, 1, 1))
    assert mn_multiply(1, S((1,))) == S((2,)) + S((1, 1))


def test_rim_hook_signs():
    hooks = {h.outer: h.sign for h in addable_rim_hooks((), 3)}
    assert hooks == {(3,): 1, (2, 1): -1, (1, 1, 1): 1}
    assert {h.inner for h in removable_rim_hooks((3, 2), 2)} == {(3,)}
    assert {h.inner: h.sign for h in removable_rim_hooks((3, 3), 2)} == {(3, 1): 1, (2, 2): -1}


@pytest.mark.parametrize("a", range(0, 5))
@pytest.mark.parametrize("b", range(0, 4))
def test_product_against_tableau_oracle(a, b):
    for lam in partitions_of(a):
        for mu in partitions_of(b):
            assert as_dict(product_terms(lam, mu)) == schur_product_oracle(lam, mu)


@pytest.mark.parametrize(
    "outer,inner",
    [((3, 2, 1), (1,)), ((3, 2, 1), (2, 1)), ((4, 2, 2), (2, 1)), ((3, 3, 3), (2, 1)), ((5, 3, 1), (3, 1))],
)
def test_skew_against_tableau_oracle(outer, inner):
    assert as_dict(skew_expand(outer, inner)) == skew_oracle(outer, inner)


def test_dimension_examples():
    assert dim_rep(S((2, 2)), 4) == 2
    assert dim_rep(S((5,)), 5) == 1
    with pytest.raises(ValueError):
        dim_rep(S((2,)) + S((1,)), 2)


def test_json_round_trip():
    f = S((4, 2)).scale(3) - S((2, 2))
    data = f.to_json()
    assert data["basis"] == "schur"
    assert data["terms"][0] == {"partition": [2, 2], "coeff": -1}
    assert SchurPolynomial.from_json(data) == f


def test_schur_rejects_fractions():
    from fractions import Fraction

    with pytest.raises((TypeError, ValueError)):
        SchurPolynomial({(1,): Fraction(1, 2)})


partition_st = st.integers(0, 5).flatmap(lambda n: st.sampled_from(partitions_of(n)))


@settings(max_examples=60, deadline=None)
@given(partition_st, partition_st)
def test_commutative_both_growth_orders(lam, mu):
    assert product_terms(lam, mu) == product_terms(mu, lam)


@settings(max_examples=40, deadline=None)
@given(partition_st, partition_st)
def test_product_is_skew_of_stacked_shape(lam, mu):
    assert product_terms(lam, mu) == skew_expand(*stacked_shape(lam, mu))


@settings(max_examples=40, deadline=None)
@given(partition_st, st.integers(0, 4))
def test_pieri_agrees_with_multiply(lam, k):
    assert pieri_h(k, S(lam)) == multiply(SchurPolynomial.h(k), S(lam))


@settings(max_examples=30, deadline=None)
@given(partition_st, partition_st, partition_st)
def test_associative(a, b, c):
    f, g, h = S(a), S(b), S(c)
    assert (f * g) * h == f * (g * h)


@settings(max_examples=40, deadline=None)
@given(partition_st, partition_st)
def test_omega_is_multiplicative(lam, mu):
    assert (S(lam) * S(mu)).omega() == S(lam).omega() * S(mu).omega()
    assert S(lam).omega() == S(Partition(lam).conjugate())


def test_inner_product_orthonormal():
    assert inner_product(S((2, 1)), S((2, 1)) + S((3,))) == 1
    assert inner_product(S((2, 1)), S((1, 1, 1))) == 0
