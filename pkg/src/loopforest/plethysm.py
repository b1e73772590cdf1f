"""Plethysm through the power-sum basis, S_n character values, and the
closed-form plethysms of Littlewood, Chen and p_2[h_n].

Rational coefficients live only in :class:`PowerSumPolynomial`.  Every
conversion back to the Schur basis checks integrality and raises
:class:`IntegralityError` if it fails.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from .partitions import (
    Partition,
    centralizer_order,
    conjugate,
    is_even,
    partitions_of,
)
from .schur import (
    SchurPolynomial,
    SparseSymmetric,
    _addable,
    _removable,
    addable_rim_hooks,
    mn_multiply,
)


class IntegralityError(ArithmeticError):
    """A Schur coefficient came out non-integral (an internal bug)."""


class PowerSumPolynomial(SparseSymmetric):
    """Symmetric function in the power-sum basis with rational coefficients."""

    basis = "power"
    __slots__ = ()

    @staticmethod
    def _coerce(c):
        return Fraction(c)

    @classmethod
    def p(cls, lam: Iterable[int]) -> PowerSumPolynomial:
        return cls._from_clean({Partition(lam): Fraction(1)})

    @classmethod
    def one(cls) -> PowerSumPolynomial:
        return cls.p(())

    def _json_coeff(self, c):
        return {"num": c.numerator, "den": c.denominator}

    @classmethod
    def from_json(cls, data: dict) -> PowerSumPolynomial:
        if data.get("basis") != "power":
            raise ValueError("expected basis 'power'")
        terms = {}
        for t in data["terms"]:
            c = t["coeff"]
            terms[tuple(t["partition"])] = (
                Fraction(c["num"], c["den"]) if isinstance(c, dict) else Fraction(c)
            )
        return cls(terms)

    def __mul__(self, other):
        if isinstance(other, PowerSumPolynomial):
            acc: dict[Partition, Fraction] = {}
            for a, x in self._terms.items():
                for b, y in other._terms.items():
                    lam = Partition(a + b)
                    acc[lam] = acc.get(lam, 0) + x * y
            return PowerSumPolynomial._from_clean({k: v for k, v in acc.items() if v})
        if isinstance(other, (int, Fraction)):
            return self.scale(Fraction(other))
        return NotImplemented

    def __pow__(self, k: int) -> PowerSumPolynomial:
        out = PowerSumPolynomial.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def sign_pairing(self) -> Fraction:
        """<f, e_n>: p_mu pairs with e_n to the sign of a mu-cycle permutation."""
        return sum(
            (c if (lam.weight - len(lam)) % 2 == 0 else -c for lam, c in self._terms.items()),
            Fraction(0),
        )

    def dimension(self) -> Fraction:
        """<f, p_1^n>, the dimension of the module with this characteristic."""
        from math import factorial

        return sum(
            (c * factorial(lam.weight) for lam, c in self._terms.items() if set(lam) <= {1}),
            Fraction(0),
        )


# ----------------------------------------------------------- characters


@lru_cache(maxsize=None)
def _char(lam: Partition, mu: Partition) -> int:
    if not mu:
        return 1
    k = mu[-1]
    rest = Partition(mu[:-1])
    total = 0
    for smaller, height in _removable(lam, k):
        v = _char(smaller, rest)
        total += -v if height % 2 else v
    return total


def char_value(lam: Iterable[int], mu: Iterable[int]) -> int:
    """chi^lam evaluated on the class of cycle type mu (Murnaghan-Nakayama,
    stripping rim hooks of size equal to the smallest part of mu)."""
    lam, mu = Partition(lam), Partition(mu)
    if lam.weight != mu.weight:
        raise ValueError(f"|{tuple(lam)}| != |{tuple(mu)}|")
    return _char(lam, mu)


def character_table(n: int) -> dict[tuple[Partition, Partition], int]:
    parts = partitions_of(n)
    return {(lam, mu): _char(lam, mu) for lam in parts for mu in parts}


# ------------------------------------------------------- change of basis


@lru_cache(maxsize=None)
def _schur_in_power(lam: Partition) -> tuple[tuple[Partition, Fraction], ...]:
    out = []
    for mu in partitions_of(lam.weight):
        v = _char(lam, mu)
        if v:
            out.append((mu, Fraction(v, centralizer_order(mu))))
    return tuple(out)


def schur_to_power(f: SchurPolynomial) -> PowerSumPolynomial:
    acc: dict[Partition, Fraction] = {}
    for lam, c in f._terms.items():
        for mu, v in _schur_in_power(lam):
            acc[mu] = acc.get(mu, 0) + c * v
    return PowerSumPolynomial._from_clean({k: v for k, v in acc.items() if v})


@lru_cache(maxsize=None)
def _power_in_schur(mu: Partition) -> dict[Partition, int]:
    # p_mu = p_{mu_1} * p_{(mu_2, ...)}: grow by adding rim hooks, which is
    # independent of the rim-hook stripping used by char_value.
    if not mu:
        return {Partition(): 1}
    rest = _power_in_schur(Partition(mu[1:]))
    acc: dict[Partition, int] = {}
    for nu, c in rest.items():
        for lam, height in _addable(nu, mu[0]):
            acc[lam] = acc.get(lam, 0) + (-c if height % 2 else c)
    return {k: v for k, v in acc.items() if v}


def power_to_schur(g: PowerSumPolynomial) -> SchurPolynomial:
    """p_mu -> sum_lam chi^lam(mu) s_lam; the result must be integral."""
    acc: dict[Partition, Fraction] = {}
    for mu, c in g._terms.items():
        for lam, v in _power_in_schur(mu).items():
            acc[lam] = acc.get(lam, 0) + c * v
    out = {}
    for lam, v in acc.items():
        if v.denominator != 1:
            raise IntegralityError(f"coefficient {v} of s{tuple(lam)} is not an integer")
        if v:
            out[lam] = int(v)
    return SchurPolynomial._from_clean(out)


def to_power(f: SparseSymmetric) -> PowerSumPolynomial:
    if isinstance(f, PowerSumPolynomial):
        return f
    if isinstance(f, SchurPolynomial):
        return schur_to_power(f)
    raise TypeError(f"cannot convert {type(f).__name__}")


# -------------------------------------------------------------- plethysm


def h_power(n: int) -> PowerSumPolynomial:
    """h_n = sum_{mu |- n} p_mu / z_mu."""
    return PowerSumPolynomial._from_clean(
        {mu: Fraction(1, centralizer_order(mu)) for mu in partitions_of(n)}
    )


def e_power(n: int) -> PowerSumPolynomial:
    return PowerSumPolynomial._from_clean(
        {
            mu: Fraction(1 if (n - len(mu)) % 2 == 0 else -1, centralizer_order(mu))
            for mu in partitions_of(n)
        }
    )


def adams(k: int, g: PowerSumPolynomial) -> PowerSumPolynomial:
    """p_k[g]: scale every part of every index by k (rational scalars fixed)."""
    return PowerSumPolynomial._from_clean(
        {Partition(k * part for part in lam): c for lam, c in g._terms.items()}
    )


def plethysm_power(f: SparseSymmetric, g: SparseSymmetric) -> PowerSumPolynomial:
    """f[g] computed and returned in the power-sum basis."""
    f, g = to_power(f), to_power(g)
    if not g:
        raise ValueError("inner argument of a plethysm must be nonzero")
    adams_cache: dict[int, PowerSumPolynomial] = {}
    acc = PowerSumPolynomial._from_clean({})
    for mu, c in f._terms.items():
        term = PowerSumPolynomial.one()
        for part in mu:
            if part not in adams_cache:
                adams_cache[part] = adams(part, g)
            term = term * adams_cache[part]
        acc = acc + term.scale(c)
    return acc


def plethysm(f: SparseSymmetric, g: SparseSymmetric) -> SchurPolynomial:
    """f[g] in the Schur basis."""
    return power_to_schur(plethysm_power(f, g))


# ---------------------------------------------------------- closed forms


def littlewood_hn_h2(n: int) -> SchurPolynomial:
    """h_n[h_2]: every even partition of 2n, once."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return SchurPolynomial({lam: 1 for lam in partitions_of(2 * n) if is_even(lam)})


def littlewood_hn_e2(n: int) -> SchurPolynomial:
    """h_n[e_2]: every partition of 2n whose conjugate is even, once."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return SchurPolynomial(
        {lam: 1 for lam in partitions_of(2 * n) if is_even(conjugate(lam))}
    )


class TabloidUniquenessError(AssertionError):
    """Two transposed-special rim hook tabloids share a shape."""


def transposed_special_tabloids(k: int, n: int) -> dict[Partition, tuple[int, list]]:
    """All transposed-special rim hook tabloids of type k^n, keyed by shape.

    Each value is ``(sign, hooks)``.  Every hook must meet the first row of
    the shape it completes, which pins down the order of the hooks, so two
    different hook sequences reaching one shape are two different tabloids.
    """
    found: dict[Partition, tuple[int, list]] = {}

    def rec(shape: Partition, sign: int, hooks: list, left: int):
        if left == 0:
            if shape in found:
                raise TabloidUniquenessError(
                    f"second transposed-special tabloid of shape {tuple(shape)}"
                )
            found[shape] = (sign, list(hooks))
            return
        for hook in addable_rim_hooks(shape, k):
            if hook.transposed_special:
                hooks.append(hook)
                rec(hook.outer, sign * hook.sign, hooks, left - 1)
                hooks.pop()

    rec(Partition(), 1, [], n)
    return found


def chen_pk_hn(k: int, n: int) -> SchurPolynomial:
    """p_k[h_n] by Chen's rule: one signed term per transposed-special rim
    hook tabloid of type k^n."""
    if k < 1 or n < 1:
        raise ValueError("k and n must be positive")
    return SchurPolynomial(
        {shape: sign for shape, (sign, _) in transposed_special_tabloids(k, n).items()}
    )


def p2_hn(n: int) -> SchurPolynomial:
    """p_2[h_n] = sum_{0<=a<=n} (-1)^a s_(2n-a, a)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return SchurPolynomial({(2 * n - a, a): (-1) ** a for a in range(n + 1)})


__all__ = [
    "IntegralityError",
    "PowerSumPolynomial",
    "adams",
    "char_value",
    "character_table",
    "chen_pk_hn",
    "e_power",
    "h_power",
    "littlewood_hn_e2",
    "littlewood_hn_h2",
    "mn_multiply",
    "p2_hn",
    "plethysm",
    "plethysm_power",
    "power_to_schur",
    "schur_to_power",
    "to_power",
    "transposed_special_tabloids",
]
