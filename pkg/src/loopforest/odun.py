"""Frobenius characters and dimensions of oduns of forests and of
loop-augmented forests, sign multiplicities and the sign census.

Two modes are offered for the permutation block of a loop-augmented
forest of type nu:

* ``paper``: the factor s_nu, as the master formula is stated;
* ``exact``: the characteristic of the permutation module on S_k / Z(sigma),
  i.e. the cycle index of the centralizer.  This one matches brute force.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial, gcd

from .forests import (
    LoopAugmentedForest,
    RootedForest,
    automorphism_order,
    enumerate_forests,
    is_blossoming,
)
from .partitions import Partition, centralizer_order, partitions_of
from .plethysm import PowerSumPolynomial, h_power, plethysm_power, power_to_schur
from .schur import SchurPolynomial, dim_rep, inner_product

MODES = ("paper", "exact")


# ------------------------------------------------------------ forests


@lru_cache(maxsize=None)
def _forest_power(code: str) -> PowerSumPolynomial:
    forest = RootedForest.parse(code)
    out = PowerSumPolynomial.one()
    p1 = PowerSumPolynomial.p((1,))
    for tree, mult in forest.components():
        f_tree = p1 * _forest_power(tree.branches().code)
        out = out * plethysm_power(h_power(mult), f_tree)
    return out


def frobenius_forest_power(forest: RootedForest) -> PowerSumPolynomial:
    return _forest_power(forest.code)


@lru_cache(maxsize=None)
def _forest_schur(code: str) -> SchurPolynomial:
    return power_to_schur(_forest_power(code))


def frobenius_forest(forest: RootedForest) -> SchurPolynomial:
    """F of a forest: prod over distinct components of h_mult[F_component],
    with F of a tree equal to s_1 times F of its branches."""
    return _forest_schur(forest.code)


def dim_odun(forest: RootedForest) -> int:
    """n! / prod_a prod_b m(a;b)!."""
    return factorial(forest.size) // automorphism_order(forest)


# ------------------------------------------------- permutation block


def _totient(n: int) -> int:
    return sum(1 for d in range(1, n + 1) if gcd(d, n) == 1)


@lru_cache(maxsize=None)
def _centralizer_power(nu: Partition) -> PowerSumPolynomial:
    out = PowerSumPolynomial.one()
    for j, m in Counter(nu).items():
        cyclic = PowerSumPolynomial(
            {Partition([d] * (j // d)): Fraction(_totient(d), j) for d in range(1, j + 1) if j % d == 0}
        )
        out = out * plethysm_power(h_power(m), cyclic)
    return out


def centralizer_power(nu) -> PowerSumPolynomial:
    """Cycle index of Z(sigma), sigma of type nu, in product form
    prod_j h_{m_j}[(1/j) sum_{d|j} phi(d) p_d^{j/d}]."""
    return _centralizer_power(Partition(nu))


def centralizer_induced_char(nu) -> SchurPolynomial:
    """Frobenius characteristic of Ind_{Z(sigma)}^{S_k} 1."""
    return power_to_schur(centralizer_power(nu))


def _block_char(nu: Partition, mode: str) -> SchurPolynomial:
    if mode == "paper":
        return SchurPolynomial.s(nu)
    if mode == "exact":
        return centralizer_induced_char(nu)
    raise ValueError(f"unknown mode {mode!r}")


@dataclass
class OdunCharacter:
    source: LoopAugmentedForest
    char: SchurPolynomial
    mode: str
    dim: int

    def to_json(self) -> dict:
        return {
            "source": self.source.to_json(),
            "mode": self.mode,
            "n": self.source.n,
            "dim": self.dim,
            "char": self.char.to_json(),
        }


def frobenius_loop(f: LoopAugmentedForest, mode: str = "exact") -> OdunCharacter:
    char = _block_char(f.sigma_type, mode) * frobenius_forest(f.forest)
    return OdunCharacter(f, char, mode, dim_rep(char, f.n) if char else 0)


def dim_loop(f: LoopAugmentedForest) -> Fraction:
    """The displayed dimension formula for N(n,k) block forms:
    (n!/k!) * prod_j j^{m_j} m_j! / prod_a prod_b m(a;b)!.

    Returned as a Fraction because nothing forces it to be an integer;
    compare with :func:`dim_loop_orbit`.
    """
    n, k = f.n, f.loops
    return Fraction(factorial(n), factorial(k)) * Fraction(
        centralizer_order(f.sigma_type), automorphism_order(f.forest)
    )


def dim_loop_orbit(f: LoopAugmentedForest) -> int:
    """n! / (|Z(sigma)| |Stab(tau)|), the orbit size of the block form."""
    return factorial(f.n) // (centralizer_order(f.sigma_type) * automorphism_order(f.forest))


# ---------------------------------------------------------------- sign


def sign_multiplicity(f: LoopAugmentedForest, mode: str = "exact") -> int:
    """<char, s_(1^n)>."""
    if mode == "exact":
        # pairing in the power basis avoids a Schur conversion
        value = (centralizer_power(f.sigma_type) * frobenius_forest_power(f.forest)).sign_pairing()
        if value.denominator != 1:
            raise ArithmeticError("non-integral sign multiplicity")
        return int(value)
    char = frobenius_loop(f, mode).char
    return inner_product(char, SchurPolynomial.e(f.n))


def forest_sign_multiplicity(forest: RootedForest) -> int:
    value = frobenius_forest_power(forest).sign_pairing()
    return int(value)


@dataclass
class SignCensus:
    n: int
    mode: str
    per_k: list[int]
    total: int
    boundary: dict[int, int] = field(default_factory=dict)
    formula: list[int] = field(default_factory=list)
    formula_total: int = 0
    discrepancies: list[dict] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "mode": self.mode,
            "per_k": self.per_k,
            "total": self.total,
            "boundary": {str(k): v for k, v in sorted(self.boundary.items())},
            "formula_per_k": self.formula,
            "formula_total": self.formula_total,
            "discrepancies": self.discrepancies,
        }


def _census_counts(n: int, mode: str) -> dict[int, int]:
    counts = {}
    for k in range(n + 1):
        if mode == "paper":
            # the literal sign rule of paper mode: 1^k block with a
            # blossoming forest (s_(1^k) pairs with e_n exactly that way)
            counts[k] = sum(1 for tau in enumerate_forests(n - k) if is_blossoming(tau))
        else:
            counts[k] = sum(
                sign_multiplicity(LoopAugmentedForest(k, tau), "exact")
                for tau in enumerate_forests(n - k)
            )
    return counts


EXACT_CENSUS_LIMIT = 9


def sign_census(n: int, mode: str = "paper") -> SignCensus:
    """Loop-augmented forests on n points with k loops affording the sign.

    The main range is 0 <= k <= n-2 (forest on at least two vertices), next
    to the closed form 2^(n-k-2); k = n-1 and k = n are reported under
    ``boundary``.  Discrepancies list every k where the two modes disagree,
    when the exact mode is affordable.
    """
    if n < 2:
        raise ValueError("census needs n >= 2")
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    counts = _census_counts(n, mode)
    per_k = [counts[k] for k in range(n - 1)]
    formula = [2 ** (n - k - 2) for k in range(n - 1)]
    census = SignCensus(
        n=n,
        mode=mode,
        per_k=per_k,
        total=sum(per_k),
        boundary={n - 1: counts[n - 1], n: counts[n]},
        formula=formula,
        formula_total=2 ** (n - 1) - 1,
    )
    if n <= EXACT_CENSUS_LIMIT:
        other = _census_counts(n, "exact" if mode == "paper" else "paper")
        paper, exact = (counts, other) if mode == "paper" else (other, counts)
        for k in range(n + 1):
            if paper[k] != exact[k]:
                census.discrepancies.append({"k": k, "paper": paper[k], "exact": exact[k]})
    return census


# -------------------------------------------------------- discrepancies


@dataclass
class Discrepancy:
    nu: Partition
    forest: RootedForest
    paper: SchurPolynomial
    exact: SchurPolynomial
    oracle: SchurPolynomial | None
    paper_sign: int
    exact_sign: int

    @property
    def oracle_confirmed(self) -> bool:
        return self.oracle is not None and self.oracle == self.exact != self.paper

    def to_json(self) -> dict:
        return {
            "nu": list(self.nu),
            "forest": self.forest.code,
            "n": self.nu.weight + self.forest.size,
            "paper": str(self.paper),
            "exact": str(self.exact),
            "oracle": None if self.oracle is None else str(self.oracle),
            "paper_sign": self.paper_sign,
            "exact_sign": self.exact_sign,
            "oracle_confirmed": self.oracle_confirmed,
        }


def discrepancy_report(max_n: int = 6, with_oracle: bool = True) -> list[Discrepancy]:
    """Every block form (nu, tau) with |nu| + |tau| <= max_n whose paper-mode
    character differs from the exact one, with the brute-force verdict."""
    from .oracle import perm_character_decompose
    from .semigroup import block_form

    out = []
    for n in range(1, max_n + 1):
        for k in range(1, n + 1):
            for nu in partitions_of(k):
                for tau in enumerate_forests(n - k):
                    f = LoopAugmentedForest(k, tau, nu)
                    paper = frobenius_loop(f, "paper").char
                    exact = frobenius_loop(f, "exact").char
                    if paper == exact:
                        continue
                    oracle = perm_character_decompose(block_form(nu, tau)) if with_oracle else None
                    e_n = SchurPolynomial.e(n)
                    out.append(
                        Discrepancy(
                            nu, tau, paper, exact, oracle,
                            inner_product(paper, e_n), inner_product(exact, e_n),
                        )
                    )
    return out


__all__ = [
    "MODES",
    "Discrepancy",
    "OdunCharacter",
    "SignCensus",
    "centralizer_induced_char",
    "centralizer_power",
    "dim_loop",
    "dim_loop_orbit",
    "dim_odun",
    "discrepancy_report",
    "forest_sign_multiplicity",
    "frobenius_forest",
    "frobenius_forest_power",
    "frobenius_loop",
    "sign_census",
    "sign_multiplicity",
]
