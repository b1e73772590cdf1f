"""A small expression language for symmetric functions.

    expr   := term (("+" | "-") term)*
    term   := factor ("*" factor)*
    factor := INT | "-" factor | gen | "(" expr ")"
    gen    := ("h" | "e" | "p") "[" INT "]" | "s" "[" parts "]"

Everything evaluates to an integral Schur expansion.
"""

from __future__ import annotations

import re

from .partitions import parse_partition
from .plethysm import PowerSumPolynomial, power_to_schur
from .schur import SchurPolynomial

_TOKEN = re.compile(r"\s*(?:(?P<gen>[hesp])\s*\[(?P<arg>[^\]]*)\]|(?P<int>\d+)|(?P<op>[-+*()]))")


class ExpressionError(ValueError):
    pass


def _tokens(text: str) -> list[tuple[str, str]]:
    out, pos = [], 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ExpressionError(f"cannot parse {text[pos:]!r}")
        if m.group("gen"):
            out.append(("gen", m.group("gen") + ":" + m.group("arg")))
        elif m.group("int"):
            out.append(("int", m.group("int")))
        else:
            out.append(("op", m.group("op")))
        pos = m.end()
    return out


def _generator(kind: str, arg: str) -> SchurPolynomial:
    if kind == "s":
        return SchurPolynomial.s(parse_partition(arg))
    try:
        k = int(arg)
    except ValueError as exc:
        raise ExpressionError(f"{kind}[{arg}] needs an integer index") from exc
    if k < 0:
        raise ExpressionError("negative index")
    if kind == "h":
        return SchurPolynomial.h(k)
    if kind == "e":
        return SchurPolynomial.e(k)
    if k == 0:
        return SchurPolynomial.one()
    return power_to_schur(PowerSumPolynomial.p((k,)))


def parse_expression(text: str) -> SchurPolynomial:
    toks = _tokens(text)
    pos = 0

    def peek():
        return toks[pos] if pos < len(toks) else (None, None)

    def take():
        nonlocal pos
        tok = peek()
        pos += 1
        return tok

    def expr():
        val = term()
        while peek() in (("op", "+"), ("op", "-")):
            op = take()[1]
            rhs = term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term():
        val = factor()
        while peek() == ("op", "*"):
            take()
            val = val * factor()
        return val

    def factor():
        kind, value = take()
        if kind == "int":
            return SchurPolynomial.one().scale(int(value))
        if kind == "gen":
            g, arg = value.split(":", 1)
            return _generator(g, arg)
        if (kind, value) == ("op", "-"):
            return -factor()
        if (kind, value) == ("op", "("):
            val = expr()
            if take() != ("op", ")"):
                raise ExpressionError("missing ')'")
            return val
        raise ExpressionError(f"unexpected token {value!r}" if value else "unexpected end of input")

    if not toks:
        raise ExpressionError("empty expression")
    result = expr()
    if pos != len(toks):
        raise ExpressionError(f"trailing input at token {toks[pos][1]!r}")
    return result


__all__ = ["ExpressionError", "parse_expression"]
