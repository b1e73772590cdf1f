"""Symmetric functions in the Schur basis with exact integer coefficients.

Products are computed with the Remmel-Whitney rule: a product s_lam * s_mu
is the skew Schur function of the shape obtained by stacking the two
diagrams corner to corner, and a skew Schur function is expanded by growing
standard tableaux that respect the reverse lexicographic filling of the
skew shape.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Iterator, Mapping

from .partitions import (
    Partition,
    conjugate,
    num_standard_tableaux,
    parse_partition,
    sort_key,
)


class SparseSymmetric:
    """Sparse linear combination of basis elements indexed by partitions.

    Zero coefficients are never stored, so equality of two values is
    equality of their term dictionaries.
    """

    basis = "?"
    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Iterable[int], object] | None = None):
        acc: dict[Partition, object] = {}
        for lam, c in (terms or {}).items():
            c = self._coerce(c)
            if c:
                lam = Partition(lam)
                acc[lam] = acc.get(lam, 0) + c
        self._terms = {lam: c for lam, c in acc.items() if c}

    @staticmethod
    def _coerce(c):
        return c

    @classmethod
    def _from_clean(cls, terms: dict[Partition, object]):
        obj = cls.__new__(cls)
        obj._terms = terms
        return obj

    @property
    def terms(self) -> dict[Partition, object]:
        return dict(self._terms)

    def items(self) -> list[tuple[Partition, object]]:
        """Terms in serialization order."""
        return sorted(self._terms.items(), key=lambda kv: sort_key(kv[0]))

    def __iter__(self) -> Iterator[Partition]:
        return iter(lam for lam, _ in self.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __getitem__(self, lam: Iterable[int]):
        return self._terms.get(Partition(lam), 0)

    coeff = __getitem__

    def __eq__(self, other) -> bool:
        if isinstance(other, type(self)):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        return hash((self.basis, frozenset(self._terms.items())))

    @property
    def degree(self) -> int | None:
        """Homogeneous degree, or ``None`` when mixed or zero."""
        degrees = {lam.weight for lam in self._terms}
        return degrees.pop() if len(degrees) == 1 else None

    def is_homogeneous(self) -> bool:
        return self.degree is not None

    def __add__(self, other):
        if not isinstance(other, type(self)):
            return NotImplemented
        acc = dict(self._terms)
        for lam, c in other._terms.items():
            v = acc.get(lam, 0) + c
            if v:
                acc[lam] = v
            else:
                acc.pop(lam, None)
        return self._from_clean(acc)

    def __neg__(self):
        return self._from_clean({lam: -c for lam, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, type(self)):
            return NotImplemented
        return self + (-other)

    def scale(self, k):
        if not k:
            return self._from_clean({})
        return self._from_clean({lam: c * k for lam, c in self._terms.items()})

    def __rmul__(self, k):
        if isinstance(k, Rational):
            return self.scale(k)
        return NotImplemented

    def __repr__(self) -> str:
        return f"{type(self).__name__}({{{', '.join(f'{tuple(l)}: {c}' for l, c in self.items())}}})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        sym = "s" if self.basis == "schur" else "p"
        out = []
        for lam, c in self.items():
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = f"{sym}[{','.join(map(str, lam))}]"
            out.append((sign, body if mag == 1 else f"{mag}*{body}"))
        text = " ".join(f"{s} {b}" for s, b in out)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def _json_coeff(self, c):
        return c

    def to_json(self) -> dict:
        return {
            "basis": self.basis,
            "terms": [
                {"partition": list(lam), "coeff": self._json_coeff(c)}
                for lam, c in self.items()
            ],
        }


class SchurPolynomial(SparseSymmetric):
    """Element of the ring of symmetric functions in the Schur basis."""

    basis = "schur"
    __slots__ = ()

    @staticmethod
    def _coerce(c):
        if isinstance(c, Fraction):
            if c.denominator != 1:
                raise ValueError(f"non-integral Schur coefficient {c}")
            return int(c)
        if not isinstance(c, int):
            raise TypeError(f"Schur coefficients must be integers, got {c!r}")
        return c

    @classmethod
    def s(cls, lam: Iterable[int] | str) -> SchurPolynomial:
        if isinstance(lam, str):
            lam = parse_partition(lam)
        return cls._from_clean({Partition(lam): 1})

    @classmethod
    def one(cls) -> SchurPolynomial:
        return cls.s(())

    @classmethod
    def zero(cls) -> SchurPolynomial:
        return cls._from_clean({})

    @classmethod
    def h(cls, k: int) -> SchurPolynomial:
        return cls.s((k,))

    @classmethod
    def e(cls, k: int) -> SchurPolynomial:
        return cls.s((1,) * k)

    @classmethod
    def from_json(cls, data: dict) -> SchurPolynomial:
        if data.get("basis") != "schur":
            raise ValueError("expected basis 'schur'")
        return cls({tuple(t["partition"]): int(t["coeff"]) for t in data["terms"]})

    def __mul__(self, other):
        if isinstance(other, SchurPolynomial):
            return multiply(self, other)
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int) -> SchurPolynomial:
        out = SchurPolynomial.one()
        for _ in range(k):
            out = out * self
        return out

    def omega(self) -> SchurPolynomial:
        """The involution s_lam -> s_lam'."""
        return SchurPolynomial._from_clean(
            {conjugate(lam): c for lam, c in self._terms.items()}
        )


# ---------------------------------------------------------------- rim hooks


@dataclass(frozen=True)
class RimHook:
    """The border strip ``outer / inner``."""

    outer: Partition
    inner: Partition
    cells: tuple[tuple[int, int], ...]
    rows_spanned: int
    columns_spanned: int

    @property
    def size(self) -> int:
        return len(self.cells)

    @property
    def sign(self) -> int:
        return -1 if (self.rows_spanned - 1) % 2 else 1

    @property
    def special(self) -> bool:
        """Has a cell in the first column of the outer shape."""
        return any(j == 0 for _, j in self.cells)

    @property
    def transposed_special(self) -> bool:
        """Has a cell in the first row of the outer shape."""
        return any(i == 0 for i, _ in self.cells)


def _hook(outer: Partition, inner: Partition) -> RimHook:
    cells = tuple(
        (i, j)
        for i, row in enumerate(outer)
        for j in range(inner[i] if i < len(inner) else 0, row)
    )
    rows = len({i for i, _ in cells})
    cols = len({j for _, j in cells})
    return RimHook(outer, inner, cells, rows, cols)


def _beta_moves(lam: tuple[int, ...], k: int, length: int, step: int):
    # Beta-set (abacus) view: moving a bead by k positions adds (step=+1) or
    # removes (step=-1) a rim hook of size k; beads jumped over = height.
    padded = list(lam) + [0] * (length - len(lam))
    beta = [padded[i] + length - 1 - i for i in range(length)]
    beads = set(beta)
    for b in beta:
        target = b + step * k
        if target < 0 or target in beads:
            continue
        lo, hi = min(b, target), max(b, target)
        height = sum(1 for c in beta if lo < c < hi)
        new = sorted((beads - {b}) | {target}, reverse=True)
        yield Partition(new[i] - (length - 1 - i) for i in range(length)), height


@lru_cache(maxsize=None)
def _addable(mu: Partition, k: int) -> tuple[tuple[Partition, int], ...]:
    return tuple(_beta_moves(mu, k, len(mu) + k, +1))


@lru_cache(maxsize=None)
def _removable(lam: Partition, k: int) -> tuple[tuple[Partition, int], ...]:
    return tuple(_beta_moves(lam, k, len(lam), -1))


def addable_rim_hooks(mu: Iterable[int], k: int) -> list[RimHook]:
    """Rim hooks of size ``k`` that can be added to ``mu``."""
    mu = Partition(mu)
    return [_hook(lam, mu) for lam, _ in _addable(mu, k)]


def removable_rim_hooks(lam: Iterable[int], k: int) -> list[RimHook]:
    """Rim hooks of size ``k`` that can be removed from ``lam``."""
    lam = Partition(lam)
    return [_hook(lam, mu) for mu, _ in _removable(lam, k)]


def mn_multiply(k: int, f: SchurPolynomial) -> SchurPolynomial:
    """p_k * f via the Murnaghan-Nakayama rule."""
    if k < 1:
        raise ValueError("k must be positive")
    acc: dict[Partition, int] = {}
    for mu, c in f._terms.items():
        for lam, height in _addable(mu, k):
            acc[lam] = acc.get(lam, 0) + (-c if height % 2 else c)
    return SchurPolynomial({lam: c for lam, c in acc.items() if c})


# ------------------------------------------------------ Remmel-Whitney rule


def _reverse_lex_filling(outer: Partition, inner: Partition):
    """Number the cells of outer/inner right to left along each row, longest
    row first.  Returns the cells in numbering order and the constraints
    (R1: predecessor in the same row, R2: the cell directly below in the
    reading of the rule, i.e. the neighbour one row closer to row 0)."""
    order: list[tuple[int, int]] = []
    for i, row in enumerate(outer):
        start = inner[i] if i < len(inner) else 0
        order.extend((i, j) for j in range(row - 1, start - 1, -1))
    index = {cell: x for x, cell in enumerate(order)}
    same_row_prev = [None] * len(order)
    below = [None] * len(order)
    for x, (i, j) in enumerate(order):
        if x and order[x - 1][0] == i:
            same_row_prev[x] = x - 1
        if (i - 1, j) in index:
            below[x] = index[(i - 1, j)]
    return len(order), same_row_prev, below


def _grow(
    shape: list[int],
    total: int,
    same_row_prev,
    below,
    acc: dict[Partition, int],
):
    # Depth-first growth of a standard tableau; positions[x] is the cell
    # (row, column) holding entry x.  The row index increases away from the
    # longest row, so "weakly below" in the French picture is row <= row.
    positions: list[tuple[int, int]] = []

    def rec():
        x = len(positions)
        if x == total:
            lam = Partition(shape)
            acc[lam] = acc.get(lam, 0) + 1
            return
        prev = same_row_prev[x]
        under = below[x]
        for r in range(len(shape) + 1):
            c = shape[r] if r < len(shape) else 0
            if r and c >= shape[r - 1]:
                continue
            if prev is not None:
                pr, pc = positions[prev]
                if not (c > pc and r <= pr):
                    continue
            if under is not None:
                ur, uc = positions[under]
                if not (r > ur and c <= uc):
                    continue
            if r == len(shape):
                shape.append(1)
            else:
                shape[r] += 1
            positions.append((r, c))
            rec()
            positions.pop()
            shape[r] -= 1
            if shape[r] == 0:
                shape.pop()

    rec()


@lru_cache(maxsize=None)
def _skew_terms(outer: Partition, inner: Partition) -> tuple[tuple[Partition, int], ...]:
    total, same_row_prev, below = _reverse_lex_filling(outer, inner)
    acc: dict[Partition, int] = {}
    _grow([], total, same_row_prev, below, acc)
    return tuple(sorted(acc.items(), key=lambda kv: sort_key(kv[0])))


def skew_expand(lam: Iterable[int], mu: Iterable[int]) -> SchurPolynomial:
    """Schur expansion of the skew Schur function s_{lam/mu}."""
    lam, mu = Partition(lam), Partition(mu)
    if not lam.contains(mu):
        raise ValueError(f"{tuple(mu)} is not contained in {tuple(lam)}")
    return SchurPolynomial._from_clean(dict(_skew_terms(lam, mu)))


def stacked_shape(lam: Iterable[int], mu: Iterable[int]) -> tuple[Partition, Partition]:
    """The skew shape lam * mu: mu in the rows nearest row 0, shifted right
    by lam_1 columns, with lam in the rows after it."""
    lam, mu = Partition(lam), Partition(mu)
    width = lam[0] if lam else 0
    outer = Partition([m + width for m in mu] + list(lam))
    inner = Partition([width] * len(mu))
    return outer, inner


@lru_cache(maxsize=None)
def _product_terms(lam: Partition, mu: Partition) -> tuple[tuple[Partition, int], ...]:
    # The entries filling the mu-part of lam * mu are forced (row i of the
    # tableau holds exactly row i of the filling), so the search starts from
    # the diagram of mu and only places the entries belonging to lam.  No
    # cell of lam sits next to a cell of mu in the filling, so every R1/R2
    # constraint stays inside lam.
    outer, inner = stacked_shape(lam, mu)
    total, same_row_prev, below = _reverse_lex_filling(outer, inner)
    offset = mu.weight
    srp = [None if p is None else p - offset for p in same_row_prev[offset:]]
    bel = [None if b is None else b - offset for b in below[offset:]]
    acc: dict[Partition, int] = {}
    _grow(list(mu), total - offset, srp, bel, acc)
    return tuple(sorted(acc.items(), key=lambda kv: sort_key(kv[0])))


def product_terms(lam: Iterable[int], mu: Iterable[int]) -> SchurPolynomial:
    """s_lam * s_mu, growing lam's entries on top of the diagram of mu."""
    return SchurPolynomial._from_clean(dict(_product_terms(Partition(lam), Partition(mu))))


def multiply(f: SchurPolynomial, g: SchurPolynomial) -> SchurPolynomial:
    """Product of two Schur-basis symmetric functions."""
    acc: dict[Partition, int] = {}
    for lam, a in f._terms.items():
        for mu, b in g._terms.items():
            # the search is cheaper when the longer diagram is prefilled
            x, y = (lam, mu) if lam.weight <= mu.weight else (mu, lam)
            for nu, c in _product_terms(x, y):
                acc[nu] = acc.get(nu, 0) + a * b * c
    return SchurPolynomial({nu: c for nu, c in acc.items() if c})


def inner_product(f: SparseSymmetric, g: SparseSymmetric) -> int:
    """Hall inner product; the Schur basis is orthonormal."""
    if not isinstance(f, SchurPolynomial) or not isinstance(g, SchurPolynomial):
        raise TypeError("inner_product expects Schur-basis arguments")
    if len(f) > len(g):
        f, g = g, f
    return sum(c * g._terms.get(lam, 0) for lam, c in f._terms.items())


def dim_rep(f: SchurPolynomial, n: int) -> int:
    """Dimension of the S_n-module whose Frobenius characteristic is ``f``."""
    if not f:
        return 0
    if f.degree != n:
        raise ValueError(f"expected a homogeneous function of degree {n}")
    return sum(c * num_standard_tableaux(lam) for lam, c in f._terms.items())


def pieri_h(k: int, f: SchurPolynomial) -> SchurPolynomial:
    """h_k * f by horizontal strips; kept as an independent check of
    :func:`multiply`."""
    acc: dict[Partition, int] = {}
    for mu, c in f._terms.items():
        for lam in _horizontal_strips(mu, k):
            acc[lam] = acc.get(lam, 0) + c
    return SchurPolynomial(acc)


def _horizontal_strips(mu: Partition, k: int) -> Iterator[Partition]:
    rows = list(mu) + [0]

    def rec(i, left, cur):
        if i == len(rows):
            if left == 0:
                yield Partition(cur)
            return
        cap = left if i == 0 else min(left, rows[i - 1] - rows[i])
        for add in range(cap, -1, -1):
            yield from rec(i + 1, left - add, cur + [rows[i] + add])

    yield from rec(0, k, [])
