"""Command-line interface.

Exit codes: 0 success, 1 a failed check or internal assertion, 2 bad usage
or input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys

from .expr import ExpressionError, parse_expression
from .forests import LoopAugmentedForest, RootedForest
from .foulkes import DegreeCapExceeded, foulkes_compare
from .odun import dim_loop, dim_loop_orbit, frobenius_loop, sign_census
from .oracle import CapExceeded, orbit, perm_character_decompose, stabilizer_bruteforce
from .partitions import format_partition, parse_partition, parse_skew
from .plethysm import plethysm
from .schur import SchurPolynomial, skew_expand
from .semigroup import (
    NotIdempotentError,
    PartialTransformation,
    classify,
    stabilizer_of_idempotent,
    standardize_idempotent,
)


class UsageError(ValueError):
    pass


def _dump(obj) -> str:
    return json.dumps(obj)


def _csv(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _emit_symmetric(f: SchurPolynomial, fmt: str) -> str:
    if fmt == "json":
        return _dump(f.to_json())
    if fmt == "csv":
        return _csv(["partition", "coeff"], [[format_partition(lam), c] for lam, c in f.items()])
    return str(f)


def _operand(text: str) -> SchurPolynomial:
    # a bare partition such as "2,2" means s[2,2]
    if re.fullmatch(r"\s*[\d,\s]*\s*", text):
        return SchurPolynomial.s(parse_partition(text))
    return parse_expression(text)


def _loop_forest(args) -> LoopAugmentedForest:
    forest = RootedForest.parse(args.forest)
    sigma = parse_partition(args.sigma) if args.sigma else None
    loops = args.loops
    if sigma is not None and loops is None:
        loops = sigma.weight
    return LoopAugmentedForest(loops or 0, forest, sigma)


def _parse_matrix(text: str) -> PartialTransformation:
    rows = [[int(x) for x in row.split(",")] for row in text.split(";") if row.strip()]
    return PartialTransformation.from_matrix_columns(rows)


def _map_arg(args) -> PartialTransformation:
    if getattr(args, "matrix", None):
        return _parse_matrix(args.matrix)
    if args.map is None:
        raise UsageError("give --map or --matrix")
    return PartialTransformation.parse(args.map)


# ------------------------------------------------------------- commands


def cmd_mult(args) -> str:
    return _emit_symmetric(_operand(args.lhs) * _operand(args.rhs), args.format)


def cmd_expand_skew(args) -> str:
    outer, inner = parse_skew(args.shape)
    return _emit_symmetric(skew_expand(outer, inner), args.format)


def cmd_plethysm(args) -> str:
    return _emit_symmetric(plethysm(parse_expression(args.outer), parse_expression(args.inner)), args.format)


def cmd_forest_char(args) -> str:
    res = frobenius_loop(_loop_forest(args), args.mode)
    if args.format == "json":
        return _dump(res.to_json())
    if args.format == "csv":
        return _emit_symmetric(res.char, "csv")
    return f"{res.char}\ndim {res.dim}"


def cmd_dim(args) -> str:
    f = _loop_forest(args)
    formula = dim_loop(f)
    out = {
        "n": f.n,
        "loops": f.loops,
        "sigma_type": list(f.sigma_type),
        "forest": f.forest.code,
        "dim": dim_loop_orbit(f),
        "formula": str(formula),
    }
    if args.format == "json":
        return _dump(out)
    if args.format == "csv":
        return _csv(list(out), [[out[k] if not isinstance(out[k], list) else format_partition(out[k]) for k in out]])
    note = "" if formula == out["dim"] else f" (displayed formula gives {formula})"
    return f"{out['dim']}{note}"


def cmd_sign_census(args) -> str:
    census = sign_census(args.n, args.mode)
    if args.format == "json":
        return _dump(census.to_json())
    if args.format == "csv":
        rows = [[k, c, census.formula[k]] for k, c in enumerate(census.per_k)]
        rows += [[k, c, ""] for k, c in sorted(census.boundary.items())]
        return _csv(["k", "count", "formula"], rows)
    lines = [f"n={census.n} mode={census.mode} total={census.total} (formula {census.formula_total})"]
    for k, c in enumerate(census.per_k):
        lines.append(f"  k={k}: {c} (formula {census.formula[k]})")
    for k, c in sorted(census.boundary.items()):
        lines.append(f"  k={k}: {c} (boundary)")
    for d in census.discrepancies:
        lines.append(f"  discrepancy k={d['k']}: paper {d['paper']} exact {d['exact']}")
    return "\n".join(lines)


def cmd_idem_std(args) -> str:
    e = _map_arg(args)
    try:
        form = standardize_idempotent(e)
    except NotIdempotentError as exc:
        raise UsageError(
            f"{exc}: {e} (matrices drawn with a 1 at row i, column j for e(j) = i "
            "can be passed with --matrix)"
        ) from exc
    stab = stabilizer_of_idempotent(e)
    out = form.to_json()
    out["stabilizer"] = stab.to_json()
    if args.format == "json":
        return _dump(out)
    if args.format == "csv":
        return _csv(["standard_form", "witness", "witness_cycles", "stabilizer_order"],
                    [[out["standard_form"], out["witness"], out["witness_cycles"], stab.order]])
    return (
        f"{out['standard_form']}\nwitness {out['witness']} = {out['witness_cycles']}\n"
        f"stabilizer {stab.description}, order {stab.order}"
    )


def cmd_oracle(args) -> str:
    f = _map_arg(args)
    if args.what == "orbit":
        points = sorted(orbit(f, args.cap))
        out = {"map": list(f), "orbit_size": len(points), "orbit": [list(p) for p in points]}
        text = f"orbit size {len(points)}"
    elif args.what == "char":
        ch = perm_character_decompose(f, args.cap)
        out = {"map": list(f), "char": ch.to_json(), "classification": classify(f).to_json()}
        text = str(ch)
    else:
        group = stabilizer_bruteforce(f, args.cap)
        out = {"map": list(f), "order": len(group), "elements": [list(g) for g in group]}
        text = f"stabilizer order {len(group)}"
    if args.format == "json":
        return _dump(out)
    if args.format == "csv":
        return _csv(list(k for k in out if k != "map"), [[json.dumps(out[k]) for k in out if k != "map"]])
    return text


def cmd_foulkes(args) -> str:
    rep = foulkes_compare(args.m, args.n)
    if args.format == "json":
        return _dump(rep.to_json(timing=args.timing))
    if args.format == "csv":
        return rep.to_csv().rstrip("\n")
    return rep.to_text()


def cmd_verify(args) -> tuple[str, int]:
    from .verify import run_all

    numbers = [int(x) for x in args.criteria.split(",")] if args.criteria else None
    results = run_all(numbers)
    if args.format == "json":
        text = _dump([r.to_json() for r in results])
    else:
        text = "\n".join(r.report() if args.verbose else r.line() for r in results)
    return text, 0 if all(r.passed for r in results) else 1


# --------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="loopforest", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, formats=("text", "json", "csv")):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--format", choices=formats, default="text")
        p.set_defaults(func=func)
        return p

    p = add("mult", cmd_mult, "product of two Schur expressions")
    p.add_argument("--lhs", required=True, help='partition "2,2" or expression "s[2,2]+h[1]"')
    p.add_argument("--rhs", required=True)

    p = add("expand-skew", cmd_expand_skew, "Schur expansion of a skew shape")
    p.add_argument("--shape", required=True, help='"4,3,2,2/2,2,1"')

    p = add("plethysm", cmd_plethysm, "outer[inner]")
    p.add_argument("--outer", required=True)
    p.add_argument("--inner", required=True)

    for name, func, text in (
        ("forest-char", cmd_forest_char, "Frobenius character of an odun"),
        ("dim", cmd_dim, "dimension of an odun"),
    ):
        p = add(name, func, text)
        p.add_argument("--forest", required=True, help='e.g. "(()())()"; "" for empty')
        p.add_argument("--loops", type=int, default=None)
        p.add_argument("--sigma", default=None, help="cycle type of the permutation block")
        if name == "forest-char":
            p.add_argument("--mode", choices=("paper", "exact"), default="exact")

    p = add("sign-census", cmd_sign_census, "sign-affording loop-augmented forests")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", choices=("paper", "exact"), default="paper")

    p = add("idem-std", cmd_idem_std, "standard form of an idempotent")
    p.add_argument("--map", help="images with 0 for undefined, e.g. 3,0,3")
    p.add_argument("--matrix", help='rows separated by ";", 1 at (i,j) when e(j)=i')

    p = add("oracle", cmd_oracle, "brute-force orbit, character or stabilizer")
    p.add_argument("--map", help="images with 0 for undefined")
    p.add_argument("--what", choices=("orbit", "char", "stab"), default="char")
    p.add_argument("--cap", type=int, default=None)

    p = add("foulkes", cmd_foulkes, "compare both sides of the inequality")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--timing", action="store_true", help="include wall time in JSON")

    p = add("verify", cmd_verify, "run the acceptance suite", formats=("text", "json"))
    p.add_argument("--criteria", default=None, help="comma-separated numbers, default all")
    p.add_argument("-v", "--verbose", action="store_true")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        result = args.func(args)
    except (UsageError, ExpressionError, CapExceeded, DegreeCapExceeded, NotIdempotentError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AssertionError as exc:
        print(f"assertion failed: {exc}", file=sys.stderr)
        return 1
    except ArithmeticError as exc:
        print(f"internal arithmetic failure: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    code = 0
    if isinstance(result, tuple):
        result, code = result
    print(result)
    return code


if __name__ == "__main__":
    sys.exit(main())
