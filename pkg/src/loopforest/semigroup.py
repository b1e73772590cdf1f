"""Partial transformations on [n], the forest bijection, N(n,k) block
forms, idempotent standardization and idempotent stabilizers.

Points are 1-based and an image of 0 means "undefined".  Conjugation by a
permutation p is ``p f p^-1``, so ``(p f p^-1)(p(i)) = p(f(i))``, and
``compose(f, g)`` applies ``g`` first.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations, product
from math import comb, factorial, prod
from typing import Iterable, Sequence

from .forests import RootedForest, canonicalize
from .partitions import Partition


class Permutation(tuple):
    """A permutation of [n] in one-line notation, ``p[i-1] = p(i)``."""

    def __new__(cls, images: Iterable[int]):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{images} is not a permutation")
        return super().__new__(cls, images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(range(1, n + 1))

    @classmethod
    def transposition(cls, n: int, a: int, b: int) -> Permutation:
        images = list(range(1, n + 1))
        images[a - 1], images[b - 1] = b, a
        return cls(images)

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> Permutation:
        images = list(range(1, n + 1))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                images[a - 1] = b
        return cls(images)

    @property
    def n(self) -> int:
        return len(self)

    def __call__(self, i: int) -> int:
        return self[i - 1] if i else 0

    def __mul__(self, other: Permutation) -> Permutation:
        """``(self * other)(i) = self(other(i))``."""
        return Permutation(self[j - 1] for j in other)

    def inverse(self) -> Permutation:
        inv = [0] * len(self)
        for i, j in enumerate(self, start=1):
            inv[j - 1] = i
        return Permutation(inv)

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        seen, out = set(), []
        for start in range(1, len(self) + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            j = self[start - 1]
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self[j - 1]
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def cycle_type(self) -> Partition:
        return Partition(len(c) for c in self.cycles(include_fixed=True))

    def sign(self) -> int:
        return -1 if (len(self) - len(self.cycles(include_fixed=True))) % 2 else 1

    def cycle_notation(self) -> str:
        cyc = self.cycles()
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cyc) or "()"

    def transpositions(self) -> list[tuple[int, int]]:
        """Transpositions in application order whose product is ``self``.

        A cycle (a1 ... ak) equals (a1 ak)...(a1 a2) with (a1 a2) applied
        first.
        """
        out = []
        for c in self.cycles():
            out.extend((c[0], c[i]) for i in range(1, len(c)))
        return out


def permutations_of(n: int) -> Iterable[Permutation]:
    for p in permutations(range(1, n + 1)):
        yield Permutation(p)


class PartialTransformation(tuple):
    """A partial map on [n]: ``images[i-1]`` is f(i), or 0 if undefined.

    Matrix semantics: entry (i, j) is 1 iff f(i) = j.
    """

    def __new__(cls, images: Iterable[int]):
        images = tuple(int(x) for x in images)
        n = len(images)
        if any(not 0 <= x <= n for x in images):
            raise ValueError(f"images {images} out of range 0..{n}")
        return super().__new__(cls, images)

    @classmethod
    def parse(cls, text: str) -> PartialTransformation:
        text = text.strip().strip("()[]")
        if not text:
            return cls(())
        return cls(int(t) for t in text.replace(" ", "").split(","))

    @classmethod
    def from_matrix_columns(cls, rows: Sequence[Sequence[int]]) -> PartialTransformation:
        """Read a 0/1 matrix drawn with a 1 in row i, column j when f(j) = i
        (the drawing convention of the standardization examples)."""
        n = len(rows)
        images = [0] * n
        for i, row in enumerate(rows, start=1):
            if len(row) != n:
                raise ValueError("matrix is not square")
            for j, x in enumerate(row, start=1):
                if x not in (0, 1):
                    raise ValueError("matrix entries must be 0 or 1")
                if x:
                    if images[j - 1]:
                        raise ValueError(f"column {j} has two nonzero entries")
                    images[j - 1] = i
        return cls(images)

    def matrix_columns(self) -> list[list[int]]:
        n = len(self)
        rows = [[0] * n for _ in range(n)]
        for j, i in enumerate(self, start=1):
            if i:
                rows[i - 1][j - 1] = 1
        return rows

    @classmethod
    def identity(cls, n: int) -> PartialTransformation:
        return cls(range(1, n + 1))

    @classmethod
    def empty(cls, n: int) -> PartialTransformation:
        return cls([0] * n)

    @property
    def n(self) -> int:
        return len(self)

    def __call__(self, i: int) -> int:
        return self[i - 1] if i else 0

    def __repr__(self) -> str:
        return f"PartialTransformation({list(self)})"

    def __str__(self) -> str:
        return ",".join(map(str, self))

    def is_idempotent(self) -> bool:
        return compose(self, self) == self

    def rank(self) -> int:
        return len({x for x in self if x})

    def fixed_points(self) -> list[int]:
        return [i for i in range(1, len(self) + 1) if self[i - 1] == i]


def compose(f: PartialTransformation, g: PartialTransformation) -> PartialTransformation:
    """(f o g)(i) = f(g(i)), defined iff both steps are defined."""
    if len(f) != len(g):
        raise ValueError("size mismatch")
    return PartialTransformation(f[x - 1] if x else 0 for x in g)


def power(f: PartialTransformation, m: int) -> PartialTransformation:
    if m < 0:
        raise ValueError("negative power")
    out = PartialTransformation.identity(len(f))
    for _ in range(m):
        out = compose(f, out)
    return out


def conjugate(p: Permutation, f: PartialTransformation) -> PartialTransformation:
    """p f p^-1."""
    if len(p) != len(f):
        raise ValueError("size mismatch")
    images = [0] * len(f)
    for i, x in enumerate(f, start=1):
        images[p[i - 1] - 1] = p[x - 1] if x else 0
    return PartialTransformation(images)


# ---------------------------------------------------------- classification


def cyclic_points(f: PartialTransformation) -> list[int]:
    """Points lying on a cycle of the functional graph."""
    n = len(f)
    g = power(f, n)  # lands every infinite trajectory on its cycle
    on_cycle = set()
    for x in g:
        if x:
            on_cycle.add(x)
    return sorted(on_cycle)


@dataclass(frozen=True)
class Classification:
    kind: str
    k: int | None

    def to_json(self) -> dict:
        return {"kind": self.kind, "k": self.k}


def idempotent_power(f: PartialTransformation) -> PartialTransformation:
    """The unique idempotent among the powers of f."""
    n = len(f)
    g = power(f, n)
    h = g
    for _ in range(factorial(n) + 1):
        if compose(h, h) == h:
            return h
        h = compose(g, h)
    raise AssertionError("no idempotent power found")


def in_block_form_class(f: PartialTransformation) -> int | None:
    """k if some power of f is a rank-k partial identity, else None.

    That happens exactly when every point with an infinite trajectory
    already lies on a cycle.
    """
    n = len(f)
    cyc = set(cyclic_points(f))
    g = power(f, n)
    for i in range(1, n + 1):
        if g[i - 1] and i not in cyc:
            return None
    return len(cyc)


def classify(f: PartialTransformation) -> Classification:
    k = in_block_form_class(f)
    if k == 0:
        return Classification("nilpotent", 0)
    if f.is_idempotent():
        if k is not None:
            return Classification("idempotent-diagonal", k)
        return Classification("idempotent-general", f.rank())
    if k is not None:
        return Classification("in-N(n,k)", k)
    return Classification("other", idempotent_power(f).rank())


# ------------------------------------------------------- forest bijection


class NotNilpotentError(ValueError):
    pass


def forest_from_nilpotent(f: PartialTransformation) -> RootedForest:
    """Child-to-parent edges i -> f(i) read as a rooted forest."""
    if in_block_form_class(f) != 0:
        raise NotNilpotentError("map is not nilpotent")
    return canonicalize(list(f))


def nilpotent_from_forest(forest: RootedForest) -> PartialTransformation:
    return PartialTransformation(forest.parents())


@dataclass(frozen=True)
class BlockSplit:
    nu: Partition
    forest: RootedForest
    cyclic: tuple[int, ...]

    @property
    def k(self) -> int:
        return self.nu.weight

    def to_json(self) -> dict:
        return {"nu": list(self.nu), "forest": self.forest.code, "k": self.k}


def split_block(f: PartialTransformation) -> BlockSplit:
    """Write f in N(n,k) as a permutation block and a nilpotent block."""
    k = in_block_form_class(f)
    if k is None:
        raise ValueError("map is not in any N(n,k)")
    cyc = cyclic_points(f)
    cycset = set(cyc)
    # cycle type of the restriction to cyclic points
    seen, lengths = set(), []
    for start in cyc:
        if start in seen:
            continue
        length, j = 0, start
        while j not in seen:
            seen.add(j)
            j = f[j - 1]
            length += 1
        lengths.append(length)
    rest = [i for i in range(1, len(f) + 1) if i not in cycset]
    index = {v: pos for pos, v in enumerate(rest, start=1)}
    parents = []
    for v in rest:
        w = f[v - 1]
        if w and w in cycset:
            raise AssertionError("nilpotent part maps into the cycles")
        parents.append(index[w] if w else 0)
    return BlockSplit(Partition(lengths), canonicalize(parents), tuple(cyc))


def block_form(nu: Iterable[int], forest: RootedForest) -> PartialTransformation:
    """diag(sigma, tau): a permutation of type nu on 1..k, then the forest."""
    nu = Partition(nu)
    images: list[int] = []
    start = 1
    for part in nu:
        images.extend(range(start + 1, start + part))
        images.append(start)
        start += part
    k = nu.weight
    images.extend(p + k if p else 0 for p in forest.parents())
    return PartialTransformation(images)


# ---------------------------------------------------------- idempotents


class NotIdempotentError(ValueError):
    pass


def constant_idempotent(r: int) -> PartialTransformation:
    return PartialTransformation([1] * r)


def direct_sum(*parts: PartialTransformation) -> PartialTransformation:
    images: list[int] = []
    offset = 0
    for p in parts:
        images.extend(x + offset if x else 0 for x in p)
        offset += len(p)
    return PartialTransformation(images)


def standard_idempotent(betas: Sequence[int], zero: int) -> PartialTransformation:
    return direct_sum(*(constant_idempotent(b) for b in betas), PartialTransformation.empty(zero))


def block_descriptor(betas: Sequence[int], zero: int) -> str:
    pieces = [f"c{b}" for b in betas]
    if zero:
        pieces.append(f"z{zero}")
    return "+".join(pieces) or "z0"


def word_string(word: Sequence[tuple[int, int]]) -> str:
    """Transpositions in application order, printed rightmost-first."""
    return "".join(f"({a},{b})" for a, b in reversed(word)) or "()"


@dataclass
class StandardForm:
    source: PartialTransformation
    sweep_word: list[tuple[int, int]]
    sweep_betas: list[int]
    betas: list[int]
    zero: int
    sort_word: list[tuple[int, int]]
    sigma: Permutation
    standard: PartialTransformation

    @property
    def word(self) -> list[tuple[int, int]]:
        return self.sweep_word + self.sort_word

    @property
    def descriptor(self) -> str:
        return block_descriptor(self.betas, self.zero)

    @property
    def sweep_descriptor(self) -> str:
        return block_descriptor(self.sweep_betas, self.zero)

    def to_json(self) -> dict:
        return {
            "map": list(self.source),
            "standard_form": self.descriptor,
            "standard_map": list(self.standard),
            "witness": word_string(self.word),
            "witness_cycles": self.sigma.cycle_notation(),
            "sweep_form": self.sweep_descriptor,
            "sweep_word": word_string(self.sweep_word),
            "blocks": self.betas,
            "zero": self.zero,
        }


def standardize_idempotent(e: PartialTransformation) -> StandardForm:
    """Conjugate an idempotent into c^(b1) + ... + c^(br) + 0_m, b1 >= ... >= br.

    Row sweep: for the next free position p, swap in the smallest fixed
    point r >= p, then pull the remaining preimages of p leftward into
    p+1, p+2, ... in increasing order.  Afterwards the blocks are sorted by
    size (stable), which adds one more permutation to the witness.
    """
    if not e.is_idempotent():
        raise NotIdempotentError("map is not idempotent")
    n = len(e)
    cur = e
    sigma = Permutation.identity(n)
    word: list[tuple[int, int]] = []

    def apply(a: int, b: int):
        nonlocal cur, sigma
        t = Permutation.transposition(n, a, b)
        cur = conjugate(t, cur)
        sigma = t * sigma
        word.append((min(a, b), max(a, b)))

    betas: list[int] = []
    p = 1
    while p <= n:
        fixed = [r for r in range(p, n + 1) if cur[r - 1] == r]
        if not fixed:
            break
        r = fixed[0]
        if r != p:
            apply(p, r)
        t = p + 1
        while True:
            pre = [j for j in range(t, n + 1) if cur[j - 1] == p]
            if not pre:
                break
            if pre[0] != t:
                apply(t, pre[0])
            t += 1
        betas.append(t - p)
        p = t
    zero = n - (p - 1)
    sweep_betas = list(betas)

    # stable sort of the blocks by size, largest first
    starts = [1 + sum(betas[:i]) for i in range(len(betas))]
    order = sorted(range(len(betas)), key=lambda i: -betas[i])
    target = [0] * n
    pos = 1
    for i in order:
        for off in range(betas[i]):
            target[starts[i] + off - 1] = pos
            pos += 1
    for q in range(pos, n + 1):
        target[q - 1] = q
    mover = Permutation(target)
    sort_word = mover.transpositions()
    cur = conjugate(mover, cur)
    sigma = mover * sigma
    betas = [betas[i] for i in order]

    st = standard_idempotent(betas, zero)
    if cur != st or conjugate(sigma, e) != st:
        raise AssertionError("standardization did not reach the standard form")
    return StandardForm(e, word, sweep_betas, betas, zero, sort_word, sigma, st)


@dataclass
class WreathDecomposition:
    """prod_i (S_{m_i} wr S_{beta_i - 1}) x S_m for a standard idempotent."""

    blocks: list[tuple[int, int]]
    zero_rank: int
    order: int
    corollary_order: int
    elements: list[Permutation] | None = field(default=None, repr=False)

    @property
    def description(self) -> str:
        parts = [f"S_{m} wr S_{b - 1}" for b, m in self.blocks]
        parts.append(f"S_{self.zero_rank}")
        return " x ".join(parts)

    def to_json(self) -> dict:
        out = {
            "blocks": [{"beta": b, "multiplicity": m} for b, m in self.blocks],
            "zero_rank": self.zero_rank,
            "group": self.description,
            "order": self.order,
            "corollary_order": self.corollary_order,
        }
        if self.corollary_order != self.order:
            out["note"] = (
                "the variant with S_{m_i} wr S_{beta_i} factors gives a different "
                "order; the S_{beta_i - 1} version is the one matching brute force"
            )
        return out


def _standard_stabilizer(betas: Sequence[int], zero: int) -> list[Permutation]:
    """Stabilizer of c^(b1)+...+c^(br)+0_m in S_n, element by element."""
    n = sum(betas) + zero
    starts = [1 + sum(betas[:i]) for i in range(len(betas))]
    groups: dict[int, list[int]] = {}
    for i, b in enumerate(betas):
        groups.setdefault(b, []).append(i)
    factors = []
    for b, idx in groups.items():
        choices = []
        for perm_blocks in permutations(idx):
            inner = [list(permutations(range(1, b))) for _ in idx]
            for inner_choice in product(*inner):
                mapping = {}
                for src, dst, shuffle in zip(idx, perm_blocks, inner_choice):
                    s, d = starts[src], starts[dst]
                    mapping[s] = d
                    for off, img in zip(range(1, b), shuffle):
                        mapping[s + off] = d + img
                choices.append(mapping)
        factors.append(choices)
    z0 = sum(betas) + 1
    factors.append(
        [{z0 + i: z0 + q for i, q in enumerate(p)} for p in permutations(range(zero))]
    )
    out = []
    for combo in product(*factors):
        images = list(range(1, n + 1))
        for mapping in combo:
            for a, b in mapping.items():
                images[a - 1] = b
        out.append(Permutation(images))
    return out


def stabilizer_of_idempotent(
    e: PartialTransformation, with_elements: bool = False
) -> WreathDecomposition:
    form = standardize_idempotent(e)
    counts: dict[int, int] = {}
    for b in form.betas:
        counts[b] = counts.get(b, 0) + 1
    blocks = sorted(counts.items(), reverse=True)
    m = form.zero
    order = prod(factorial(mi) * factorial(b - 1) ** mi for b, mi in blocks) * factorial(m)
    corollary = prod(factorial(mi) * factorial(b) ** mi for b, mi in blocks) * factorial(m)
    elements = None
    if with_elements:
        inv = form.sigma.inverse()
        elements = sorted(
            inv * g * form.sigma for g in _standard_stabilizer(form.betas, form.zero)
        )
        if len(elements) != order:
            raise AssertionError("explicit stabilizer has the wrong size")
    return WreathDecomposition(blocks, m, order, corollary, elements)


def idempotent_count(n: int, which: str = "P") -> int:
    """Idempotents in the partial (P) or full (Full) transformation monoid."""
    if n < 1:
        raise ValueError("n must be positive")
    which = which.lower()
    if which in ("p", "p_n", "partial"):
        return sum(comb(n, k) * (k + 1) ** (n - k) for k in range(n + 1))
    if which in ("full", "full_n", "t", "t_n"):
        return sum(comb(n, k) * k ** (n - k) for k in range(1, n + 1))
    raise ValueError(f"unknown monoid {which!r}")


__all__ = [
    "BlockSplit",
    "Classification",
    "NotIdempotentError",
    "NotNilpotentError",
    "PartialTransformation",
    "Permutation",
    "StandardForm",
    "WreathDecomposition",
    "block_descriptor",
    "block_form",
    "classify",
    "compose",
    "conjugate",
    "constant_idempotent",
    "cyclic_points",
    "direct_sum",
    "forest_from_nilpotent",
    "idempotent_count",
    "idempotent_power",
    "nilpotent_from_forest",
    "permutations_of",
    "power",
    "split_block",
    "stabilizer_of_idempotent",
    "standard_idempotent",
    "standardize_idempotent",
    "word_string",
]
