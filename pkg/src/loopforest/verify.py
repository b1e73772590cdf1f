"""The acceptance suite: one function per criterion, each returning a
:class:`CriterionResult` with its sub-checks, wall time and time limit.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from math import factorial
from typing import Callable

from .forests import (
    LoopAugmentedForest,
    count_labeled,
    count_loop_augmented,
    count_loop_augmented_total,
    enumerate_forests,
    is_blossoming,
)
from .foulkes import foulkes_compare, theorem1_expansion
from .odun import (
    dim_loop,
    dim_loop_orbit,
    dim_odun,
    discrepancy_report,
    forest_sign_multiplicity,
    frobenius_forest,
    frobenius_loop,
    sign_census,
)
from .oracle import (
    forest_counts_numpy,
    idempotent_counts_bruteforce,
    orbit,
    perm_character_decompose,
    stabilizer_bruteforce,
)
from .partitions import Partition, centralizer_order, partitions_of
from .plethysm import (
    PowerSumPolynomial,
    char_value,
    chen_pk_hn,
    littlewood_hn_e2,
    littlewood_hn_h2,
    p2_hn,
    plethysm,
    power_to_schur,
    schur_to_power,
)
from .schur import SchurPolynomial, dim_rep, multiply, product_terms, skew_expand, stacked_shape
from .semigroup import (
    PartialTransformation,
    block_form,
    idempotent_count,
    nilpotent_from_forest,
    stabilizer_of_idempotent,
    standardize_idempotent,
)

# Blossoming forests drawn for n <= 5, transcribed as canonical codes.
BLOSSOMING_FIGURE = {
    1: {"()"},
    2: {"(())"},
    3: {"((()))", "(())()"},
    4: {"(((())))", "((()))()", "((())())", "(())(())"},
    5: {
        "((((()))))",
        "(((())))()",
        "(((())()))",
        "((())(()))",
        "((())())()",
        "(((()))())",
        "((()))(())",
        "(())(())()",
    },
}

# The standardization examples: the 3x3 and 7x7 idempotents as maps.
EXAMPLE_3 = PartialTransformation((3, 0, 3))
EXAMPLE_7 = PartialTransformation((7, 2, 0, 2, 5, 2, 7))
EXAMPLE_7_SWEEP = [(1, 2), (2, 4), (3, 6), (4, 5), (5, 7), (6, 7)]


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class CriterionResult:
    number: int
    title: str
    limit: float
    checks: list[Check] = field(default_factory=list)
    seconds: float = 0.0
    error: str | None = None

    @property
    def in_time(self) -> bool:
        return self.seconds <= self.limit

    @property
    def passed(self) -> bool:
        return self.error is None and self.in_time and all(c.passed for c in self.checks)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] criterion {self.number}: {self.title} ({self.seconds:.1f}s / {self.limit:.0f}s)"

    def report(self) -> str:
        lines = [self.line()]
        for c in self.checks:
            mark = "ok " if c.passed else "BAD"
            lines.append(f"    {mark} {c.name}" + (f": {c.detail}" if c.detail else ""))
        if self.error:
            lines.append(f"    error: {self.error}")
        if not self.in_time:
            lines.append("    over the time limit")
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "criterion": self.number,
            "title": self.title,
            "passed": self.passed,
            "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in self.checks],
            "error": self.error,
        }


def _first_failures(items: list, k: int = 3) -> str:
    return "; ".join(str(x) for x in items[:k]) + (" ..." if len(items) > k else "")


# ------------------------------------------------------------- criteria


def criterion_1(res: CriterionResult):
    h = SchurPolynomial.h
    bad = [n for n in range(3, 9) if theorem1_expansion(n) != plethysm(h(2), h(1) * h(n - 1))]
    res.checks.append(Check("closed form = engine for n=3..8", not bad, f"mismatch at n={bad}" if bad else ""))


def criterion_2(res: CriterionResult):
    for n in range(3, 8):
        rep = foulkes_compare(2, n)
        fails = [tuple(r.lam) for r in rep.failures]
        res.checks.append(Check(f"n={n}: every >=3-part row has lhs >= rhs", not fails, _first_failures(fails)))
        row = next((r for r in rep.rows if r.lam == Partition((2 * n - 2, 2))), None)
        got = (row.lhs, row.rhs) if row else None
        res.checks.append(Check(f"n={n}: ({2 * n - 2},2) gives (2,3)", got == (2, 3), f"got {got}"))


def criterion_3(res: CriterionResult):
    h, e = SchurPolynomial.h, SchurPolynomial.e
    bad_h = [n for n in range(0, 9) if plethysm(h(n), h(2)) != littlewood_hn_h2(n)]
    bad_e = [n for n in range(0, 9) if plethysm(h(n), e(2)) != littlewood_hn_e2(n)]
    res.checks.append(Check("h_n[h_2] Littlewood, n<=8", not bad_h, str(bad_h) if bad_h else ""))
    res.checks.append(Check("h_n[e_2] Littlewood, n<=8", not bad_e, str(bad_e) if bad_e else ""))
    bad_c = [
        (k, n)
        for k in range(1, 6)
        for n in range(1, 6)
        if chen_pk_hn(k, n) != plethysm(PowerSumPolynomial.p((k,)), h(n))
    ]
    res.checks.append(Check("Chen tabloids = p_k[h_n], k,n<=5", not bad_c, str(bad_c) if bad_c else ""))
    bad_p = [
        n
        for n in range(1, 9)
        if not (p2_hn(n) == plethysm(PowerSumPolynomial.p((2,)), h(n)) == chen_pk_hn(2, n))
    ]
    res.checks.append(Check("p_2[h_n] closed form, n<=8", not bad_p, str(bad_p) if bad_p else ""))


def criterion_4(res: CriterionResult):
    bad_stab = []
    for n in range(1, 7):
        for tau in enumerate_forests(n):
            f = nilpotent_from_forest(tau)
            if dim_odun(tau) != factorial(n) // len(stabilizer_bruteforce(f)):
                bad_stab.append(tau.code)
    res.checks.append(Check("dimension formula = n!/|Stab| for n<=6", not bad_stab, _first_failures(bad_stab)))
    bad_char = [
        tau.code
        for n in range(1, 8)
        for tau in enumerate_forests(n)
        if dim_odun(tau) != dim_rep(frobenius_forest(tau), n)
    ]
    res.checks.append(Check("dimension formula = dim F_tau for n<=7", not bad_char, _first_failures(bad_char)))


def _block_forms(max_n: int):
    for n in range(1, max_n + 1):
        for k in range(0, n + 1):
            for nu in partitions_of(k):
                for tau in enumerate_forests(n - k):
                    yield LoopAugmentedForest(k, tau, nu)


def criterion_5(res: CriterionResult):
    bad_char, bad_orbit, bad_display, count = [], [], [], 0
    for f in _block_forms(6):
        count += 1
        g = block_form(f.sigma_type, f.forest)
        exact = frobenius_loop(f, "exact")
        oracle = perm_character_decompose(g)
        size = len(orbit(g))
        label = f"(nu={tuple(f.sigma_type)}, tau={f.forest.code or '-'})"
        if exact.char != oracle:
            bad_char.append(label)
        if dim_loop_orbit(f) != size or exact.dim != size:
            bad_orbit.append(label)
        if dim_loop(f) != size:
            bad_display.append(f"{label}: formula {dim_loop(f)} vs orbit {size}")
    res.checks.append(
        Check(f"exact master formula = oracle ({count} block forms, n<=6)", not bad_char, _first_failures(bad_char))
    )
    res.checks.append(Check("n!/(|Z(sigma)||Stab(tau)|) = orbit size", not bad_orbit, _first_failures(bad_orbit)))
    res.checks.append(
        Check(
            "displayed dimension formula = orbit size",
            not bad_display,
            f"{len(bad_display)} of {count} differ, e.g. " + _first_failures(bad_display, 2) if bad_display else "",
        )
    )


def criterion_6(res: CriterionResult):
    counts = {n: sum(1 for t in enumerate_forests(n) if is_blossoming(t)) for n in range(2, 11)}
    bad = {n: c for n, c in counts.items() if c != 2 ** (n - 2)}
    res.checks.append(
        Check(
            "blossoming count = 2^(n-2), n=2..10",
            not bad,
            ", ".join(f"n={n}: {c} vs {2 ** (n - 2)}" for n, c in bad.items()),
        )
    )
    bad_fig = [
        n for n, codes in BLOSSOMING_FIGURE.items()
        if {t.code for t in enumerate_forests(n) if is_blossoming(t)} != codes
    ]
    res.checks.append(Check("matches the drawn inventory, n<=5", not bad_fig, str(bad_fig) if bad_fig else ""))
    bad_sign = [
        t.code
        for n in range(1, 8)
        for t in enumerate_forests(n)
        if is_blossoming(t) != (forest_sign_multiplicity(t) == 1)
    ]
    res.checks.append(Check("blossoming <=> sign multiplicity 1, n<=7", not bad_sign, _first_failures(bad_sign)))
    totals = {n: sign_census(n, "paper").total for n in range(2, 13)}
    bad_tot = {n: t for n, t in totals.items() if t != 2 ** (n - 1) - 1}
    res.checks.append(
        Check(
            "paper-mode census total = 2^(n-1)-1, n=2..12",
            not bad_tot,
            ", ".join(f"n={n}: {t} vs {2 ** (n - 1) - 1}" for n, t in bad_tot.items()),
        )
    )


def criterion_7(res: CriterionResult):
    report = discrepancy_report(6)
    res.checks.append(Check("report is nonempty", bool(report), f"{len(report)} entries"))
    unconfirmed = [f"{tuple(d.nu)}|{d.forest.code}" for d in report if not d.oracle_confirmed]
    res.checks.append(Check("every entry oracle-confirmed", not unconfirmed, _first_failures(unconfirmed)))
    structured = all(set(d.to_json()) >= {"nu", "forest", "paper", "exact", "oracle"} for d in report)
    res.checks.append(Check("entries are structured", structured))


def criterion_8(res: CriterionResult):
    bad_counts = []
    for n in range(1, 7):
        brute = idempotent_counts_bruteforce(n)
        formula = (idempotent_count(n, "P"), idempotent_count(n, "Full"))
        if brute != formula:
            bad_counts.append(f"n={n}: {brute} vs {formula}")
    res.checks.append(Check("idempotent counts, n<=6", not bad_counts, "; ".join(bad_counts)))

    s3 = standardize_idempotent(EXAMPLE_3)
    ok3 = s3.word == [(1, 3), (2, 3)] and list(s3.standard) == [1, 1, 0] and s3.descriptor == "c2+z1"
    res.checks.append(Check("3x3 example: c2+z1 with (2,3)(1,3)", ok3, s3.descriptor))
    s7 = standardize_idempotent(EXAMPLE_7)
    ok7 = (
        s7.sweep_word == EXAMPLE_7_SWEEP
        and s7.sweep_descriptor == "c3+c1+c2+z1"
        and s7.descriptor == "c3+c2+c1+z1"
    )
    res.checks.append(Check("7x7 example: sweep word and block order", ok7, f"{s7.sweep_descriptor} -> {s7.descriptor}"))

    bad_stab = []
    for n in range(1, 6):
        for images in _idempotents(n):
            e = PartialTransformation(images)
            brute = stabilizer_bruteforce(e)
            theory = stabilizer_of_idempotent(e, with_elements=True)
            if theory.order != len(brute) or theory.elements != sorted(brute):
                bad_stab.append(str(e))
    res.checks.append(Check("stabilizer orders and subgroups, n<=5", not bad_stab, _first_failures(bad_stab)))


def _idempotents(n: int):
    from itertools import product

    for images in product(range(n + 1), repeat=n):
        if all(x == 0 or images[x - 1] == x for x in images):
            yield images


def criterion_9(res: CriterionResult):
    bad_lab, bad_loop, bad_total = [], [], []
    for n in range(1, 8):
        counts = forest_counts_numpy(n)
        for k in range(1, n + 1):
            if counts["nilpotent"][k] != count_labeled(n, k):
                bad_lab.append((n, k))
            if counts["loop_augmented"][k] != count_loop_augmented(n, k):
                bad_loop.append((n, k))
        if n >= 2 and counts["loop_augmented_total"] != count_loop_augmented_total(n):
            bad_total.append(f"n={n}: {counts['loop_augmented_total']} vs {count_loop_augmented_total(n)}")
    res.checks.append(Check("labeled forests with k roots", not bad_lab, str(bad_lab) if bad_lab else ""))
    res.checks.append(Check("loop-augmented with k roots", not bad_loop, str(bad_loop) if bad_loop else ""))
    res.checks.append(Check("total loop-augmented = 2n^(n-3)", not bad_total, _first_failures(bad_total, 6)))


def _random_homogeneous(rng: random.Random, degree: int, terms: int = 3) -> SchurPolynomial:
    shapes = partitions_of(degree)
    return SchurPolynomial({rng.choice(shapes): rng.randint(-3, 3) or 1 for _ in range(terms)})


def criterion_10(res: CriterionResult):
    rng = random.Random(20240601)
    bad_comm = []
    for _ in range(40):
        a, b = rng.randint(0, 4), rng.randint(0, 4)
        lam, mu = rng.choice(partitions_of(a)), rng.choice(partitions_of(b))
        if product_terms(lam, mu) != product_terms(mu, lam):
            bad_comm.append((lam, mu))
    res.checks.append(Check("commutative (both growth orders)", not bad_comm, _first_failures(bad_comm)))
    bad_assoc = []
    for _ in range(12):
        degs = [rng.randint(1, 3) for _ in range(3)]
        while sum(degs) > 8:
            degs = [rng.randint(1, 3) for _ in range(3)]
        f, g, h = (_random_homogeneous(rng, d) for d in degs)
        if multiply(multiply(f, g), h) != multiply(f, multiply(g, h)):
            bad_assoc.append(degs)
    res.checks.append(Check("associative, degree <= 8", not bad_assoc, str(bad_assoc) if bad_assoc else ""))
    bad_skew = []
    for a in range(0, 7):
        for b in range(0, 7 - a):
            for lam in partitions_of(a):
                for mu in partitions_of(b):
                    if product_terms(lam, mu) != skew_expand(*stacked_shape(lam, mu)):
                        bad_skew.append((lam, mu))
    res.checks.append(Check("product = skew expansion of lam*mu, |lam|+|mu| <= 6", not bad_skew, _first_failures(bad_skew)))
    bad_rt = [
        lam
        for n in range(0, 9)
        for lam in partitions_of(n)
        if power_to_schur(schur_to_power(SchurPolynomial.s(lam))) != SchurPolynomial.s(lam)
    ]
    res.checks.append(Check("s <-> p round trip, degree <= 8", not bad_rt, _first_failures(bad_rt)))
    bad_orth = []
    for n in range(1, 8):
        parts = partitions_of(n)
        for i, mu in enumerate(parts):
            for nu in parts[i:]:
                s = sum(char_value(lam, mu) * char_value(lam, nu) for lam in parts)
                if s != (centralizer_order(mu) if mu == nu else 0):
                    bad_orth.append((mu, nu))
    res.checks.append(Check("column orthogonality, weight <= 7", not bad_orth, _first_failures(bad_orth)))


CRITERIA: list[tuple[int, str, float, Callable[[CriterionResult], None]]] = [
    (1, "h_2[h_1 h_(n-1)] closed form, n=3..8", 60, criterion_1),
    (2, "Foulkes variant for m=2, n=3..7", 300, criterion_2),
    (3, "Littlewood / Chen / p_2[h_n] against the engine", 60, criterion_3),
    (4, "generalized hook length formula", 120, criterion_4),
    (5, "master formula (exact mode) and dimensions", 300, criterion_5),
    (6, "sign machinery and census", 120, criterion_6),
    (7, "paper/exact discrepancy report", 120, criterion_7),
    (8, "idempotents: counts, standardization, stabilizers", 180, criterion_8),
    (9, "counting formulas against enumeration", 120, criterion_9),
    (10, "algebra property suite", 120, criterion_10),
]


def run_criterion(number: int) -> CriterionResult:
    for num, title, limit, fn in CRITERIA:
        if num == number:
            res = CriterionResult(num, title, limit)
            start = time.perf_counter()
            try:
                fn(res)
            except Exception as exc:  # surfaced as a failed criterion
                res.error = f"{type(exc).__name__}: {exc}"
            res.seconds = time.perf_counter() - start
            return res
    raise ValueError(f"no criterion {number}")


def run_all(numbers: list[int] | None = None) -> list[CriterionResult]:
    numbers = numbers or [c[0] for c in CRITERIA]
    return [run_criterion(n) for n in numbers]


__all__ = ["CRITERIA", "Check", "CriterionResult", "run_all", "run_criterion"]
