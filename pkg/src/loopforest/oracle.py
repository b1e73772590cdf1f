"""Brute-force ground truth for small n.

Nothing here reuses the closed formulas it is meant to check: orbits are
grown by breadth-first search, characters come from counting fixed points,
stabilizers from scanning all of S_n, and counts from enumerating maps.
"""

from __future__ import annotations

import os
from collections import Counter, deque
from fractions import Fraction
from itertools import product

import numpy as np

from .partitions import Partition, centralizer_order, partitions_of
from .plethysm import PowerSumPolynomial, power_to_schur
from .schur import SchurPolynomial
from .semigroup import (
    PartialTransformation,
    Permutation,
    compose,
    conjugate,
    permutations_of,
)

DEFAULT_CAP = int(os.environ.get("LOOPFOREST_ORACLE_CAP", "8"))


class OracleError(AssertionError):
    """The brute force produced something impossible."""


class CapExceeded(ValueError):
    pass


def _check_cap(n: int, cap: int | None):
    cap = DEFAULT_CAP if cap is None else cap
    if n > cap:
        raise CapExceeded(f"n={n} exceeds the oracle cap {cap}")


def _adjacent(n: int) -> list[Permutation]:
    return [Permutation.transposition(n, i, i + 1) for i in range(1, n)]


def orbit(f: PartialTransformation, cap: int | None = None) -> set[PartialTransformation]:
    """{p f p^-1 : p in S_n}, grown from f by adjacent transpositions."""
    _check_cap(len(f), cap)
    gens = _adjacent(len(f))
    seen = {f}
    queue = deque([f])
    while queue:
        g = queue.popleft()
        for t in gens:
            h = conjugate(t, g)
            if h not in seen:
                seen.add(h)
                queue.append(h)
    return seen


def class_representative(mu: Partition) -> Permutation:
    """A permutation of cycle type mu with consecutive cycles."""
    cycles, start = [], 1
    for part in mu:
        cycles.append(list(range(start, start + part)))
        start += part
    return Permutation.from_cycles(mu.weight, cycles)


def fixed_point_counts(f: PartialTransformation, cap: int | None = None) -> dict[Partition, int]:
    """For each class, the number of orbit points fixed by its representative."""
    points = orbit(f, cap)
    n = len(f)
    out = {}
    for mu in partitions_of(n):
        g = class_representative(mu)
        out[mu] = sum(1 for h in points if conjugate(g, h) == h)
    return out


def frobenius_from_fixed_points(counts: dict[Partition, int]) -> PowerSumPolynomial:
    return PowerSumPolynomial(
        {mu: Fraction(c, centralizer_order(mu)) for mu, c in counts.items() if c}
    )


def perm_character_decompose(f: PartialTransformation, cap: int | None = None) -> SchurPolynomial:
    """Schur expansion of the permutation module on the conjugation orbit of f."""
    ch = power_to_schur(frobenius_from_fixed_points(fixed_point_counts(f, cap)))
    for lam, c in ch.items():
        if c < 0:
            raise OracleError(f"negative multiplicity {c} of s{tuple(lam)}")
    return ch


def stabilizer_bruteforce(f: PartialTransformation, cap: int | None = None) -> list[Permutation]:
    """All p in S_n with p f p^-1 = f.  Closure under composition is checked."""
    _check_cap(len(f), cap)
    group = [p for p in permutations_of(len(f)) if conjugate(p, f) == f]
    members = set(group)
    probe = group if len(group) <= 2000 else group[:64]
    for a in probe:
        for b in group:
            if a * b not in members:
                raise OracleError("stabilizer is not closed under composition")
    return group


def centralizer_bruteforce(nu: Partition) -> list[Permutation]:
    """Z(sigma) for the consecutive-cycle representative of type nu."""
    sigma = class_representative(Partition(nu))
    return [p for p in permutations_of(len(sigma)) if p * sigma == sigma * p]


def cycle_index(group: list[Permutation]) -> PowerSumPolynomial:
    """(1/|G|) sum_g p_{type(g)}: the Frobenius image of Ind_G^{S_k} 1."""
    counts = Counter(g.cycle_type() for g in group)
    return PowerSumPolynomial({mu: Fraction(c, len(group)) for mu, c in counts.items()})


# ------------------------------------------------------------ enumeration


def all_maps(n: int) -> list[PartialTransformation]:
    return [PartialTransformation(t) for t in product(range(n + 1), repeat=n)]


def idempotent_counts_bruteforce(n: int) -> tuple[int, int]:
    """(# idempotent partial maps, # idempotent total maps) on [n]."""
    partial = full = 0
    for f in all_maps(n):
        if compose(f, f) == f:
            partial += 1
            if all(f):
                full += 1
    return partial, full


def _map_table(n: int) -> np.ndarray:
    """Every partial map on [n] as a row; column 0 is the sink for 'undefined'."""
    total = (n + 1) ** n
    codes = np.arange(total, dtype=np.int64)
    table = np.zeros((total, n + 1), dtype=np.int8)
    for i in range(n):
        table[:, i + 1] = (codes // (n + 1) ** i) % (n + 1)
    return table


def forest_counts_numpy(n: int) -> dict[str, dict[int, int]]:
    """Exhaustive counts over all (n+1)^n partial maps on [n].

    ``nilpotent[k]``: nilpotent maps with k undefined points (labeled forests
    with k roots).  ``loop_augmented[k]``: maps whose only cycles are fixed
    points, by number of roots (undefined points plus fixed points).
    ``loop_augmented_total``: all such maps.
    """
    if n > 7:
        raise CapExceeded("vectorized enumeration is limited to n <= 7")
    table = _map_table(n)
    rows = np.arange(table.shape[0])[:, None]
    cur = np.tile(np.arange(n + 1, dtype=np.int8), (table.shape[0], 1))
    for _ in range(n):
        cur = table[rows, cur]
    after = table[rows, cur]
    # after n steps each point is 0 or on a cycle; cycles of length 1 only
    no_long_cycles = np.all(after == cur, axis=1)
    undefined = np.sum(table[:, 1:] == 0, axis=1)
    fixed = np.sum(table[:, 1:] == np.arange(1, n + 1), axis=1)
    nilpotent = np.all(cur[:, 1:] == 0, axis=1)
    out = {"nilpotent": {}, "loop_augmented": {}}
    for k in range(1, n + 1):
        out["nilpotent"][k] = int(np.sum(nilpotent & (undefined == k)))
        out["loop_augmented"][k] = int(np.sum(no_long_cycles & (undefined + fixed == k)))
    out["loop_augmented_total"] = int(np.sum(no_long_cycles))
    return out


__all__ = [
    "CapExceeded",
    "OracleError",
    "all_maps",
    "centralizer_bruteforce",
    "class_representative",
    "cycle_index",
    "fixed_point_counts",
    "forest_counts_numpy",
    "frobenius_from_fixed_points",
    "idempotent_counts_bruteforce",
    "orbit",
    "perm_character_decompose",
    "stabilizer_bruteforce",
]
