"""Integer partitions: construction, conjugation, enumeration and text I/O.

Parts are stored weakly decreasing.  Parsers accept parts in either order
and normalize; printers always emit decreasing order.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import factorial, prod
from typing import Iterable, Iterator


class Partition(tuple):
    """An integer partition, stored as a weakly decreasing tuple of parts.

    Zero parts are dropped, so ``Partition((2, 0, 1)) == (2, 1)``.  The empty
    partition is the unique partition of 0.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        self = super().__new__(cls, sorted((p for p in parts if p), reverse=True))
        self._weight = sum(self)
        return self

    @property
    def parts(self) -> tuple[int, ...]:
        return tuple(self)

    @property
    def weight(self) -> int:
        return self._weight

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    def __str__(self) -> str:
        return format_partition(self)

    def multiplicities(self) -> dict[int, int]:
        return dict(Counter(self))

    def conjugate(self) -> Partition:
        return conjugate(self)

    def contains(self, other: Iterable[int]) -> bool:
        """True if the diagram of ``other`` fits inside this diagram."""
        other = tuple(other)
        if len(other) > len(self):
            return False
        return all(a >= b for a, b in zip(self, other))

    def cells(self) -> list[tuple[int, int]]:
        """Cells ``(row, column)`` of the diagram, 0-based, row 0 longest."""
        return [(i, j) for i, row in enumerate(self) for j in range(row)]


def conjugate(lam: Iterable[int]) -> Partition:
    lam = Partition(lam)
    if not lam:
        return lam
    return Partition(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def is_even(lam: Iterable[int]) -> bool:
    return all(p % 2 == 0 for p in lam)


def partitions_of(n: int) -> list[Partition]:
    """All partitions of ``n`` in reverse-lexicographic order, ``(n)`` first."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return list(_partitions_cached(n))


@lru_cache(maxsize=None)
def _partitions_cached(n: int) -> tuple[Partition, ...]:
    return tuple(Partition(p) for p in _partitions_bounded(n, n))


def _partitions_bounded(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            yield (first,) + rest


def centralizer_order(nu: Iterable[int]) -> int:
    """z_nu = prod_j j^{m_j} m_j!, the order of the centralizer of a
    permutation of cycle type ``nu``."""
    return prod(j ** m * factorial(m) for j, m in Counter(Partition(nu)).items())


def hook_lengths(lam: Iterable[int]) -> list[int]:
    lam = Partition(lam)
    conj = conjugate(lam)
    return [lam[i] - j + conj[j] - i - 1 for i, j in lam.cells()]


def num_standard_tableaux(lam: Iterable[int]) -> int:
    """f^lambda by the hook length formula."""
    lam = Partition(lam)
    return factorial(lam.weight) // prod(hook_lengths(lam))


def sort_key(lam: Partition) -> tuple:
    """Serialization order: lower weight first, then reverse-lexicographic."""
    return (lam.weight, tuple(-p for p in lam))


def parse_partition(text: str) -> Partition:
    """Parse ``"4,2,2"`` (either part order).  ``""`` and ``"0"`` give the
    empty partition."""
    text = text.strip().strip("()[]")
    if text in ("", "0"):
        return Partition()
    try:
        return Partition(int(tok) for tok in text.replace(" ", "").split(",") if tok)
    except ValueError as exc:
        raise ValueError(f"bad partition {text!r}") from exc


def parse_skew(text: str) -> tuple[Partition, Partition]:
    """Parse ``"4,3,2,2/2,2,1"`` into ``(outer, inner)``."""
    outer, _, inner = text.partition("/")
    return parse_partition(outer), parse_partition(inner)


def format_partition(lam: Iterable[int]) -> str:
    return ",".join(str(p) for p in Partition(lam))
