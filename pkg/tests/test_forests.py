import random
from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from loopforest.forests import (
    LoopAugmentedForest,
    NotAForestError,
    RootedForest,
    RootedTree,
    automorphism_order,
    canonicalize,
    count_labeled,
    count_loop_augmented,
    count_loop_augmented_total,
    enumerate_forests,
    enumerate_trees,
    is_blossoming,
)
from loopforest.oracle import forest_counts_numpy

F = RootedForest.parse

# rooted trees on n vertices, n = 1..12 (A000081)
ROOTED_TREES = [1, 1, 2, 4, 9, 20, 48, 115, 286, 719, 1842, 4766]

# the picture's components: a 2-chain over four leaves, and a 5-chain over a cherry
TAU_1 = "((()()()()))"
TAU_2 = "(((((()())))))"


def relabel(parents, perm):
    """Apply the vertex relabeling v -> perm[v-1] to a parent list."""
    n = len(parents)
    out = [0] * n
    for v, p in enumerate(parents, start=1):
        out[perm[v - 1] - 1] = perm[p - 1] if p else 0
    return out


def test_parse_and_codes():
    assert F("(()())").size == 3
    assert F("()()").code == "()()"
    assert F("()(())").code == "(())()"
    assert F("").size == 0
    with pytest.raises(ValueError):
        F("(()")
    with pytest.raises(ValueError):
        F("(x)")


def test_canonicalize_examples():
    assert canonicalize([0, 1]) == RootedForest.chain(2)
    assert canonicalize([0, 1, 1]) == canonicalize([2, 0, 2]) == F("(()())")
    with pytest.raises(NotAForestError):
        canonicalize([2, 1])
    with pytest.raises(NotAForestError):
        canonicalize([1])


def test_picture_forest_components():
    tau_2 = RootedTree.parse(TAU_2)
    assert tau_2.size == 7
    tau = RootedForest([RootedTree.parse(TAU_1), tau_2, tau_2])
    parents = tau.parents()
    rng = random.Random(7)
    perm = list(range(1, len(parents) + 1))
    rng.shuffle(perm)
    again = canonicalize(relabel(parents, perm))
    assert again == tau
    comps = again.components()
    assert [m for _, m in comps] == [2, 1]
    assert comps[0][0] == tau_2


@pytest.mark.parametrize("n", range(1, 6))
def test_canonicalize_relabeling_invariant(n):
    for forest in enumerate_forests(n):
        parents = forest.parents()
        assert canonicalize(parents) == forest
        for perm in permutations(range(1, n + 1)):
            assert canonicalize(relabel(parents, perm)) == forest


def test_enumeration_counts():
    assert [len(enumerate_trees(n)) for n in range(1, 13)] == ROOTED_TREES
    assert [len(enumerate_forests(n)) for n in range(0, 12)] == ROOTED_TREES
    assert {t.code for t in enumerate_trees(3)} == {"((()))", "(()())"}
    with pytest.raises(ValueError):
        enumerate_forests(13)
    with pytest.raises(ValueError):
        enumerate_trees(0)


@pytest.mark.parametrize("n", range(1, 9))
def test_enumeration_has_no_duplicates(n):
    codes = [f.code for f in enumerate_forests(n)]
    assert len(codes) == len(set(codes))
    assert all(F(c).code == c for c in codes)


def test_counting_examples():
    assert count_labeled(4, 2) == 48
    assert all(count_labeled(n, n) == 1 for n in range(1, 8))
    assert count_loop_augmented_total(4) == 8
    with pytest.raises(ValueError):
        count_labeled(3, 0)


@pytest.mark.parametrize("n", range(1, 7))
def test_counts_against_enumeration(n):
    counts = forest_counts_numpy(n)
    for k in range(1, n + 1):
        assert counts["nilpotent"][k] == count_labeled(n, k)
        assert counts["loop_augmented"][k] == count_loop_augmented(n, k)


def test_total_count_closed_form_disagrees_with_enumeration():
    # the enumeration gives 2(n+2)^(n-1); the stated closed form is that value at n-2
    for n in range(2, 7):
        total = forest_counts_numpy(n)["loop_augmented_total"]
        assert total == 2 * (n + 2) ** (n - 1)
        if n >= 4:
            assert count_loop_augmented_total(n) == 2 * n ** (n - 3)
            assert count_loop_augmented_total(n) == forest_counts_numpy(n - 2)["loop_augmented_total"]


def test_automorphisms():
    assert automorphism_order(RootedForest.isolated(4)) == 24
    assert automorphism_order(RootedForest.chain(5)) == 1
    assert automorphism_order(F("(()()())")) == 6


def test_blossoming_examples():
    assert is_blossoming(F("()"))
    assert not is_blossoming(F("(()())"))
    assert is_blossoming(RootedForest.chain(3))
    assert is_blossoming(F("(())()"))


def test_blossoming_small_counts():
    assert [sum(map(is_blossoming, enumerate_forests(n))) for n in range(2, 7)] == [1, 2, 4, 8, 16]


def test_loop_augmented_validation():
    f = LoopAugmentedForest(2, F("()"))
    assert f.sigma_type == (1, 1) and f.n == 3 and not f.is_general
    assert LoopAugmentedForest(2, F(""), (2,)).is_general
    with pytest.raises(ValueError):
        LoopAugmentedForest(2, F(""), (3,))


forests = st.integers(0, 7).flatmap(lambda n: st.sampled_from(enumerate_forests(n)))


@settings(max_examples=60, deadline=None)
@given(forests)
def test_canonicalize_idempotent(forest):
    once = canonicalize(forest.parents())
    assert canonicalize(once.parents()) == once == forest


@settings(max_examples=60, deadline=None)
@given(forests)
def test_add_root_bijection(forest):
    tree = forest.add_root()
    assert tree.branches() == forest
    assert tree.size == forest.size + 1
