"""Both sides of the Foulkes-type inequality
<h_n[h_1 h_{m-1}], s_lam> >= <h_m[h_1 h_{n-1}], s_lam>,
the closed form of h_2[h_1 h_{n-1}], and comparison reports.
"""

from __future__ import annotations

import csv
import io
import os
import time
from dataclasses import dataclass, field

from .partitions import Partition, format_partition, sort_key
from .plethysm import littlewood_hn_e2, littlewood_hn_h2, plethysm
from .schur import SchurPolynomial, multiply

DEFAULT_DEGREE_CAP = 24


class DegreeCapExceeded(ValueError):
    pass


def degree_cap() -> int:
    return int(os.environ.get("LOOPFOREST_DEGREE_CAP", DEFAULT_DEGREE_CAP))


def _check(m: int, n: int):
    if not 2 <= m <= n:
        raise ValueError(f"need 2 <= m <= n, got m={m}, n={n}")
    if m * n > degree_cap():
        raise DegreeCapExceeded(f"degree {m * n} exceeds cap {degree_cap()}")


def foulkes_sides(m: int, n: int) -> tuple[SchurPolynomial, SchurPolynomial]:
    """(h_n[h_1 h_{m-1}], h_m[h_1 h_{n-1}]).

    For m = 2 the left side is also built as sum_k h_k[h_2] h_{n-k}[e_2] and
    the two constructions must agree.
    """
    _check(m, n)
    h = SchurPolynomial.h
    lhs = plethysm(h(n), h(1) * h(m - 1))
    rhs = plethysm(h(m), h(1) * h(n - 1))
    if m == 2:
        alt = SchurPolynomial.zero()
        for k in range(n + 1):
            alt = alt + multiply(littlewood_hn_h2(k), littlewood_hn_e2(n - k))
        if alt != lhs:
            raise AssertionError("h_n[h_2 + e_2] does not match h_n[h_1 h_1]")
    return lhs, rhs


def theorem1_expansion(n: int) -> SchurPolynomial:
    """h_2[h_1 h_{n-1}] assembled from its eight families of terms."""
    if n < 3:
        raise ValueError("the closed form needs n >= 3")
    terms: dict[Partition, int] = {}

    def add(parts, c=1):
        lam = Partition(parts)
        terms[lam] = terms.get(lam, 0) + c

    for a in range(1, n):
        if a % 2:
            add((1, 1, a, 2 * n - 2 - a))
    for a in range(2, n):
        if a % 2 == 0:
            add((2, a, 2 * n - 2 - a))
    add((1, 1, 2 * n - 2))
    for a in range(2, n):
        add((1, a, 2 * n - 1 - a), 2)
    add((1, 2 * n - 1))
    for a in range(2, n):
        add((a, 2 * n - a), 3 if a % 2 == 0 else 1)
    if n % 2 == 0:
        add((n, n), 2)
    add((2 * n,))
    return SchurPolynomial(terms)


def two_row_coefficient(a: int, n: int) -> int:
    """<h_n[h_1 h_1], s_(2n-a, a)>: a/2 + 1 for even a, (a+1)/2 for odd a."""
    if not 1 <= a <= n - 1:
        raise ValueError(f"a={a} out of range 1..{n - 1}")
    return a // 2 + 1 if a % 2 == 0 else (a + 1) // 2


@dataclass
class ComparisonRow:
    lam: Partition
    lhs: int
    rhs: int
    verdict: str

    def to_json(self) -> dict:
        return {"lambda": list(self.lam), "lhs": self.lhs, "rhs": self.rhs, "verdict": self.verdict}


@dataclass
class ComparisonReport:
    m: int
    n: int
    rows: list[ComparisonRow]
    exceptions: list[ComparisonRow]
    seconds: float | None = field(default=None)

    @property
    def all_pass(self) -> bool:
        return all(r.verdict != "FAIL" for r in self.rows)

    @property
    def failures(self) -> list[ComparisonRow]:
        return [r for r in self.rows if r.verdict == "FAIL"]

    def to_json(self, timing: bool = False) -> dict:
        out = {
            "m": self.m,
            "n": self.n,
            "all_pass": self.all_pass,
            "rows": [r.to_json() for r in self.rows],
            "exceptions": [r.to_json() for r in self.exceptions],
        }
        if timing and self.seconds is not None:
            out["seconds"] = round(self.seconds, 3)
        return out

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["lambda", "lhs", "rhs", "verdict"])
        for r in self.rows:
            w.writerow([format_partition(r.lam), r.lhs, r.rhs, r.verdict])
        return buf.getvalue()

    def to_text(self) -> str:
        lines = [f"m={self.m} n={self.n}: " + ("all >=3-part rows pass" if self.all_pass else "FAILURES")]
        width = max((len(format_partition(r.lam)) for r in self.rows), default=6)
        for r in self.rows:
            lines.append(f"  {format_partition(r.lam):<{width}}  {r.lhs:>6} {r.rhs:>6}  {r.verdict}")
        for r in self.exceptions:
            lines.append(f"  exception: ({format_partition(r.lam)}) lhs={r.lhs} rhs={r.rhs}")
        return "\n".join(lines)


def foulkes_compare(m: int, n: int) -> ComparisonReport:
    """Row per partition with a nonzero coefficient on either side.

    Partitions with three or more parts get PASS/FAIL; shorter ones are
    INFO only, and those with lhs < rhs are listed as exceptions.
    """
    start = time.perf_counter()
    lhs, rhs = foulkes_sides(m, n)
    shapes = sorted(set(lhs.terms) | set(rhs.terms), key=sort_key)
    rows, exceptions = [], []
    for lam in shapes:
        a, b = lhs.coeff(lam), rhs.coeff(lam)
        if len(lam) >= 3:
            verdict = "PASS" if a >= b else "FAIL"
        else:
            verdict = "INFO"
        row = ComparisonRow(lam, a, b, verdict)
        rows.append(row)
        if verdict == "INFO" and a < b:
            exceptions.append(row)
    return ComparisonReport(m, n, rows, exceptions, time.perf_counter() - start)


__all__ = [
    "ComparisonReport",
    "ComparisonRow",
    "DegreeCapExceeded",
    "degree_cap",
    "foulkes_compare",
    "foulkes_sides",
    "theorem1_expansion",
    "two_row_coefficient",
]
