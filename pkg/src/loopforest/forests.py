"""Unlabeled rooted trees and forests, loop-augmented forests, counting
formulas and the blossoming/dry classification.

Text form: a tree is ``"(" + child codes + ")"`` and a forest is the
concatenation of its tree codes, so ``"(()())"`` is the cherry and
``"()()"`` is two isolated vertices.  Children and components are kept in
decreasing ``(size, code)`` order, which makes the code canonical.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod
from typing import Iterable, Sequence

from .partitions import Partition

MAX_ENUMERATION = 12


def _order(items):
    return tuple(sorted(items, key=lambda t: (t.size, t.code), reverse=True))


class RootedTree:
    """A rooted tree up to isomorphism."""

    __slots__ = ("children", "size", "code")

    def __init__(self, children: Iterable[RootedTree] = ()):
        self.children = _order(children)
        self.size = 1 + sum(c.size for c in self.children)
        self.code = "(" + "".join(c.code for c in self.children) + ")"

    def __eq__(self, other):
        return isinstance(other, RootedTree) and self.code == other.code

    def __hash__(self):
        return hash(("tree", self.code))

    def __repr__(self):
        return f"RootedTree({self.code!r})"

    def __str__(self):
        return self.code

    @classmethod
    def parse(cls, text: str) -> RootedTree:
        forest = RootedForest.parse(text)
        if len(forest.trees) != 1:
            raise ValueError(f"{text!r} is not a single tree")
        return forest.trees[0]

    def branches(self) -> RootedForest:
        """The forest left after deleting the root."""
        return RootedForest(self.children)

    def is_chain(self) -> bool:
        t = self
        while t.children:
            if len(t.children) > 1:
                return False
            t = t.children[0]
        return True


class RootedForest:
    """A rooted forest up to isomorphism (a multiset of rooted trees)."""

    __slots__ = ("trees", "size", "code")

    def __init__(self, trees: Iterable[RootedTree] = ()):
        self.trees = _order(trees)
        self.size = sum(t.size for t in self.trees)
        self.code = "".join(t.code for t in self.trees)

    def __eq__(self, other):
        return isinstance(other, RootedForest) and self.code == other.code

    def __hash__(self):
        return hash(("forest", self.code))

    def __repr__(self):
        return f"RootedForest({self.code!r})"

    def __str__(self):
        return self.code

    def __len__(self):
        return len(self.trees)

    @classmethod
    def parse(cls, text: str) -> RootedForest:
        text = "".join(text.split())
        if text in ("", "-", "empty"):
            return cls()
        stack: list[list[RootedTree]] = [[]]
        for ch in text:
            if ch == "(":
                stack.append([])
            elif ch == ")":
                if len(stack) < 2:
                    raise ValueError(f"unbalanced forest string {text!r}")
                kids = stack.pop()
                stack[-1].append(RootedTree(kids))
            else:
                raise ValueError(f"unexpected character {ch!r} in forest string")
        if len(stack) != 1:
            raise ValueError(f"unbalanced forest string {text!r}")
        return cls(stack[0])

    @classmethod
    def isolated(cls, n: int) -> RootedForest:
        return cls(RootedTree() for _ in range(n))

    @classmethod
    def chain(cls, n: int) -> RootedForest:
        t = None
        for _ in range(n):
            t = RootedTree([t] if t else [])
        return cls([t] if t else [])

    def components(self) -> list[tuple[RootedTree, int]]:
        """Distinct components with multiplicities, in canonical order."""
        counts = Counter(self.trees)
        seen, out = set(), []
        for t in self.trees:
            if t not in seen:
                seen.add(t)
                out.append((t, counts[t]))
        return out

    def add_root(self) -> RootedTree:
        return RootedTree(self.trees)

    def parents(self) -> list[int]:
        """A labeled representative as a parent list (1-based, 0 = root).

        Each tree gets a contiguous block of labels, every child is labeled
        before its parent, so parents always carry larger labels.
        """
        out: list[int] = []

        def place(t: RootedTree) -> int:
            kids = [place(c) for c in t.children]
            out.append(0)
            me = len(out)
            for k in kids:
                out[k - 1] = me
            return me

        for t in self.trees:
            place(t)
        return out


class LoopAugmentedForest:
    """``loops`` looped points plus a rooted forest on the remaining points.

    ``sigma_type`` is the cycle type of the permutation block; it is
    ``(1^loops)`` for a genuine loop-augmented forest and anything else
    flags a general N(n,k) block form.
    """

    __slots__ = ("loops", "forest", "sigma_type")

    def __init__(self, loops: int, forest: RootedForest, sigma_type: Iterable[int] | None = None):
        if loops < 0:
            raise ValueError("loops must be non-negative")
        sigma = Partition([1] * loops if sigma_type is None else sigma_type)
        if sigma.weight != loops:
            raise ValueError(f"sigma type {tuple(sigma)} is not a partition of {loops}")
        self.loops = loops
        self.forest = forest
        self.sigma_type = sigma

    @property
    def n(self) -> int:
        return self.loops + self.forest.size

    @property
    def is_general(self) -> bool:
        return any(p > 1 for p in self.sigma_type)

    def __eq__(self, other):
        return (
            isinstance(other, LoopAugmentedForest)
            and (self.loops, self.forest, self.sigma_type)
            == (other.loops, other.forest, other.sigma_type)
        )

    def __hash__(self):
        return hash((self.loops, self.forest, self.sigma_type))

    def __repr__(self):
        return (
            f"LoopAugmentedForest(loops={self.loops}, forest={self.forest.code!r}, "
            f"sigma_type={tuple(self.sigma_type)})"
        )

    def to_json(self) -> dict:
        return {
            "loops": self.loops,
            "forest": self.forest.code,
            "sigma_type": list(self.sigma_type),
        }


# --------------------------------------------------------- canonical form


class NotAForestError(ValueError):
    pass


def canonicalize(parents: Sequence[int]) -> RootedForest:
    """Canonical forest of a labeled parent list.

    ``parents[i]`` is the parent of vertex ``i + 1`` (vertices are 1-based),
    with 0 meaning that the vertex is a root.
    """
    n = len(parents)
    kids: list[list[int]] = [[] for _ in range(n + 1)]
    for v, p in enumerate(parents, start=1):
        if not 0 <= p <= n:
            raise ValueError(f"parent {p} of vertex {v} out of range")
        if p == v:
            raise NotAForestError("not a forest: vertex is its own parent")
        kids[p].append(v)
    # every vertex must reach a root
    state = [0] * (n + 1)
    for v in range(1, n + 1):
        path = []
        u = v
        while u and state[u] == 0:
            state[u] = 1
            path.append(u)
            u = parents[u - 1]
        if u and state[u] == 1:
            raise NotAForestError("not a forest: cycle detected")
        for w in path:
            state[w] = 2

    @lru_cache(maxsize=None)
    def build(v: int) -> RootedTree:
        return RootedTree(build(c) for c in kids[v])

    return RootedForest(build(r) for r in kids[0])


# ------------------------------------------------------------ enumeration


@lru_cache(maxsize=None)
def _trees(n: int) -> tuple[RootedTree, ...]:
    return _order(RootedTree(f.trees) for f in _forests(n - 1))


@lru_cache(maxsize=None)
def _forests(n: int) -> tuple[RootedForest, ...]:
    out: list[RootedForest] = []

    def rec(left: int, cap_size: int, cap_index: int, acc: list[RootedTree]):
        if left == 0:
            out.append(RootedForest(acc))
            return
        for s in range(min(left, cap_size), 0, -1):
            trees = _trees(s)
            start = cap_index if s == cap_size else 0
            for i in range(start, len(trees)):
                acc.append(trees[i])
                rec(left - s, s, i, acc)
                acc.pop()

    rec(n, n, 0, [])
    return tuple(out)


def _check_range(n: int, low: int):
    if not low <= n <= MAX_ENUMERATION:
        raise ValueError(f"n={n} outside supported range {low}..{MAX_ENUMERATION}")


def enumerate_trees(n: int) -> list[RootedTree]:
    """Every rooted tree on ``n`` vertices once, in canonical order."""
    _check_range(n, 1)
    return list(_trees(n))


def enumerate_forests(n: int) -> list[RootedForest]:
    """Every rooted forest on ``n`` vertices once (``n = 0`` gives the empty forest)."""
    _check_range(n, 0)
    return list(_forests(n))


# --------------------------------------------------------------- counting


def count_labeled(n: int, k: int) -> int:
    """Labeled rooted forests on [n] with k roots: C(n-1,k-1) n^(n-k)."""
    if not 1 <= k <= n:
        raise ValueError(f"k={k} out of range 1..{n}")
    return comb(n - 1, k - 1) * n ** (n - k)


def count_loop_augmented(n: int, k: int) -> int:
    """Loop-augmented forests on [n] with k roots, each root looped or not."""
    return 2 ** k * count_labeled(n, k)


def count_loop_augmented_total(n: int) -> int:
    """The closed form 2n^(n-3) stated for the total, n >= 2."""
    if n < 2:
        raise ValueError("the closed form is stated for n >= 2")
    value = 2 * Fraction(n) ** (n - 3)
    if value.denominator != 1:
        raise ArithmeticError(f"2n^(n-3) is not an integer at n={n}")
    return int(value)


def automorphism_order(forest: RootedForest) -> int:
    """prod over vertices a of prod_b m(a;b)!, where m(a;b) counts equal
    branches hanging from a.  The components of the forest are treated as
    branches of one extra root, so n isolated vertices give n!."""
    return _aut(forest.add_root())


@lru_cache(maxsize=None)
def _aut(t: RootedTree) -> int:
    counts = Counter(t.children)
    return prod(factorial(m) for m in counts.values()) * prod(_aut(c) for c in t.children)


# ------------------------------------------------------------- blossoming


def maximal_terminal_branches(t: RootedTree) -> list[tuple[int | None, int]]:
    """MTBs of a tree as ``(parent id, length)``.

    An MTB is a maximal chain subtree; its parent is the vertex with two or
    more children it hangs from, or None when the whole tree is a chain.
    Parent ids are preorder positions, unique within ``t``.
    """
    out: list[tuple[int | None, int]] = []
    branch_points = iter(range(t.size))

    def visit(u: RootedTree, parent: int | None):
        length, v = 1, u
        while len(v.children) == 1:
            v = v.children[0]
            length += 1
        if not v.children:
            out.append((parent, length))
            return
        here = next(branch_points)
        for c in v.children:
            visit(c, here)

    visit(t, None)
    return out


def is_blossoming(forest: RootedForest) -> bool:
    """Add a root, then the forest is blossoming iff no vertex carries two
    odd-length maximal terminal branches of the same length."""
    seen: set[tuple[int | None, int]] = set()
    for parent, length in maximal_terminal_branches(forest.add_root()):
        if length % 2 == 0:
            continue
        if (parent, length) in seen:
            return False
        seen.add((parent, length))
    return True


__all__ = [
    "LoopAugmentedForest",
    "NotAForestError",
    "RootedForest",
    "RootedTree",
    "automorphism_order",
    "canonicalize",
    "count_labeled",
    "count_loop_augmented",
    "count_loop_augmented_total",
    "enumerate_forests",
    "enumerate_trees",
    "is_blossoming",
    "maximal_terminal_branches",
]
