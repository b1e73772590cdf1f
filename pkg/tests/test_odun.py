from math import factorial

import pytest

from loopforest.forests import LoopAugmentedForest, RootedForest, enumerate_forests, is_blossoming
from loopforest.odun import (
    centralizer_induced_char,
    centralizer_power,
    dim_loop,
    dim_loop_orbit,
    dim_odun,
    discrepancy_report,
    forest_sign_multiplicity,
    frobenius_forest,
    frobenius_loop,
    sign_census,
    sign_multiplicity,
)
from loopforest.oracle import centralizer_bruteforce, cycle_index, orbit, perm_character_decompose
from loopforest.partitions import partitions_of
from loopforest.schur import SchurPolynomial, dim_rep
from loopforest.semigroup import block_form, nilpotent_from_forest

s, h = SchurPolynomial.s, SchurPolynomial.h
F = RootedForest.parse


@pytest.mark.parametrize("m", range(0, 6))
def test_isolated_vertices_give_trivial(m):
    assert frobenius_forest(RootedForest.isolated(m)) == h(m)
    assert dim_odun(RootedForest.isolated(m)) == 1


@pytest.mark.parametrize("n", range(2, 7))
def test_star(n):
    star = F("(" + "()" * (n - 1) + ")")
    assert frobenius_forest(star) == s((1,)) * h(n - 1)
    assert dim_odun(star) == n


def test_chain_is_regular():
    chain = RootedForest.chain(4)
    assert dim_odun(chain) == 24
    assert frobenius_forest(chain) == s((1,)) ** 4


def test_long_tree_with_two_leaves():
    tau = F("(((((()())))))")
    assert tau.size == 7
    assert frobenius_forest(tau) == s((1,)) ** 5 * h(2)
    assert dim_odun(tau) == factorial(7) // 2


@pytest.mark.parametrize("n", range(1, 6))
def test_forest_character_matches_oracle(n):
    for tau in enumerate_forests(n):
        ch = frobenius_forest(tau)
        assert ch == perm_character_decompose(nilpotent_from_forest(tau))
        assert dim_rep(ch, n) == dim_odun(tau) == len(orbit(nilpotent_from_forest(tau)))


@pytest.mark.parametrize("k", range(1, 7))
def test_centralizer_cycle_index(k):
    for nu in partitions_of(k):
        assert centralizer_power(nu) == cycle_index(centralizer_bruteforce(nu))


def test_centralizer_induced_examples():
    assert centralizer_induced_char((1, 1)) == h(2)
    assert centralizer_induced_char((2,)) == h(2)
    assert centralizer_induced_char((3,)) == s((3,)) + s((1, 1, 1))


def test_loop_modes_differ_on_transposition():
    f = LoopAugmentedForest(2, RootedForest.isolated(0), (2,))
    assert frobenius_loop(f, "paper").char == s((2,))
    assert frobenius_loop(f, "exact").char == s((2,))
    g = LoopAugmentedForest(2, RootedForest.isolated(0), (1, 1))
    assert frobenius_loop(g, "paper").char == s((1, 1))
    assert frobenius_loop(g, "exact").char == s((2,))
    assert perm_character_decompose(block_form((1, 1), RootedForest.isolated(0))) == s((2,))


@pytest.mark.parametrize("n", range(1, 6))
def test_exact_mode_matches_oracle(n):
    for k in range(1, n + 1):
        for nu in partitions_of(k):
            for tau in enumerate_forests(n - k):
                f = LoopAugmentedForest(k, tau, nu)
                rep = block_form(nu, tau)
                res = frobenius_loop(f, "exact")
                assert res.char == perm_character_decompose(rep)
                assert res.dim == dim_loop_orbit(f) == len(orbit(rep))


def test_displayed_dimension_formula_disagrees_with_orbit():
    f = LoopAugmentedForest(2, RootedForest.isolated(0), (2,))
    assert dim_loop_orbit(f) == 1
    assert dim_loop(f) == 2
    g = LoopAugmentedForest(1, RootedForest.isolated(1), (1,))
    assert dim_loop(g) == dim_loop_orbit(g) == 2


def test_sign_multiplicity_examples():
    assert forest_sign_multiplicity(RootedForest.chain(3)) == 1
    assert forest_sign_multiplicity(RootedForest.isolated(2)) == 0
    assert forest_sign_multiplicity(F("(()())")) == 0
    f = LoopAugmentedForest(1, RootedForest.chain(2))
    assert sign_multiplicity(f, "exact") == 1
    assert sign_multiplicity(f, "paper") == 1


@pytest.mark.parametrize("n", range(1, 8))
def test_blossoming_rule_matches_characters(n):
    for tau in enumerate_forests(n):
        assert is_blossoming(tau) == (forest_sign_multiplicity(tau) == 1)
        assert forest_sign_multiplicity(tau) in (0, 1)


def test_census_small():
    c = sign_census(2)
    assert c.per_k == [1] and c.total == 1
    c = sign_census(4)
    assert c.per_k == [4, 2, 1] and c.total == 7 == c.formula_total
    c = sign_census(5)
    assert c.total == 15 == c.formula_total


def test_census_total_diverges_from_closed_form():
    c = sign_census(7)
    assert c.total == 65
    assert c.formula_total == 63


def test_exact_census_shape():
    c = sign_census(5, "exact")
    assert c.per_k[0] == sign_census(5).per_k[0]
    assert c.per_k[2:] == [0, 0]
    assert c.discrepancies


def test_discrepancies_are_oracle_confirmed():
    report = discrepancy_report(5)
    assert report
    assert all(d.oracle_confirmed for d in report)
