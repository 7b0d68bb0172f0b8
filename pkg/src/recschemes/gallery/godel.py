"""
Gödel numbering of a small expression grammar.

Encoding is a pair of mutually recursive functions over ordinary trees;
decoding unfolds a number into mutually recursive codata with ``comutu``
and is only defined on numbers in the image of the encoder.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass

from ..extra import AddF, FromTF, LitF, MinusF, NegF, Nu1, Nu2, ParenF, comutu


class DecodeError(ValueError):
    pass


class EncodingTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class Add:
    expr: "Expr"
    term: "Term"


@dataclass(frozen=True)
class Minus:
    expr: "Expr"
    term: "Term"


@dataclass(frozen=True)
class FromT:
    term: "Term"


@dataclass(frozen=True)
class Lit:
    value: int


@dataclass(frozen=True)
class Neg:
    term: "Term"


@dataclass(frozen=True)
class Paren:
    expr: "Expr"


Expr = Add | Minus | FromT
Term = Lit | Neg | Paren


def enc_lit(n: int) -> int:
    return 2 * n + 1 if n >= 0 else 2 * -n


def dec_lit(k: int) -> int:
    if k < 1:
        raise DecodeError(f"{k} is not a literal code")
    return (k - 1) // 2 if k % 2 else -(k // 2)


# encoding

DIGIT_LIMIT = 4000


def _power(p: int, k: int, limit: int | None) -> int:
    # compare exponents rather than multiply: k itself may be too big for a float
    if limit is not None and k >= limit / math.log10(p):
        raise EncodingTooLarge(f"{p}^{k} has at least {limit} digits")
    return p ** k


def _product(a: int, b: int, limit: int | None) -> int:
    out = a * b
    if limit is not None and out.bit_length() * math.log10(2) >= limit + 1:
        raise EncodingTooLarge(f"encoding has at least {limit} digits")
    return out


def encode_expr(e: Expr, limit: int | None = None) -> int:
    """The number of an expression; with ``limit``, refuse results of ``limit`` or more digits."""
    match e:
        case Add(x, t):
            return _product(_power(2, encode_expr(x, limit), limit),
                            _power(3, encode_term(t, limit), limit), limit)
        case Minus(x, t):
            return _product(_power(5, encode_expr(x, limit), limit),
                            _power(7, encode_term(t, limit), limit), limit)
        case FromT(t):
            return _power(11, encode_term(t, limit), limit)
    raise TypeError(f"not an expression: {e!r}")


def encode_term(t: Term, limit: int | None = None) -> int:
    match t:
        case Lit(n):
            return _power(2, enc_lit(n), limit)
        case Neg(x):
            return _power(3, encode_term(x, limit), limit)
        case Paren(x):
            return _power(5, encode_expr(x, limit), limit)
    raise TypeError(f"not a term: {t!r}")


# decoding

def _multiplicity(n: int, p: int) -> tuple[int, int]:
    if p == 2:
        k = (n & -n).bit_length() - 1
        return k, n >> k
    k = 0
    # strip large powers first so huge exponents take few divisions
    step, power = 1, p
    while n % p == 0:
        if n % power == 0:
            n //= power
            k += step
            step, power = step * 2, power * power
        else:
            step, power = 1, p
    return k, n


def factorise11(n: int) -> tuple[int, int, int, int, int, int]:
    """Exponents of 2, 3, 5, 7 and 11 in ``n``, plus the cofactor left over."""
    if n < 1:
        raise DecodeError(f"{n} is not a positive integer")
    exps = []
    for p in (2, 3, 5, 7, 11):
        k, n = _multiplicity(n, p)
        exps.append(k)
    return (*exps, n)


def gen_expr(n: int):
    e2, e3, e5, e7, e11, rest = factorise11(n)
    if rest == 1 and e2 > 0 and e3 > 0 and e5 == e7 == e11 == 0:
        return AddF(e2, e3)
    if rest == 1 and e5 > 0 and e7 > 0 and e2 == e3 == e11 == 0:
        return MinusF(e5, e7)
    if rest == 1 and e11 > 0 and e2 == e3 == e5 == e7 == 0:
        return FromTF(e11)
    raise DecodeError(f"{_show(n)} does not encode an expression")


def gen_term(n: int):
    e2, e3, e5, e7, e11, rest = factorise11(n)
    if rest != 1 or e7 or e11 or sum(1 for e in (e2, e3, e5) if e) != 1:
        raise DecodeError(f"{_show(n)} does not encode a term")
    if e2:
        return LitF(dec_lit(e2))
    if e3:
        return NegF(e3)
    return ParenF(e5)


def _show(n: int) -> str:
    digits = len(str(n)) if n.bit_length() < 20000 else None
    return str(n) if digits is not None and digits <= 30 else "the given number"


def dec_expr_term(n: int) -> tuple[Nu1, Nu2]:
    return comutu(gen_expr, gen_term, n)


def _materialise(node):
    layer = node.observe()
    match layer:
        case AddF(x, t):
            return Add(_materialise(x), _materialise(t))
        case MinusF(x, t):
            return Minus(_materialise(x), _materialise(t))
        case FromTF(t):
            return FromT(_materialise(t))
        case LitF(v):
            return Lit(v)
        case NegF(t):
            return Neg(_materialise(t))
        case ParenF(x):
            return Paren(_materialise(x))


def decode_expr(n: int) -> Expr:
    return _materialise(dec_expr_term(n)[0])


def decode_term(n: int) -> Term:
    return _materialise(dec_expr_term(n)[1])


# text syntax: e + t, e - t, integer literals, ~t for negation, (e)

_TOKEN = re.compile(r"\s*(?:(\d+)|(.))")


def _tokens(text: str) -> list[str]:
    out = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        num, sym = m.groups()
        if sym is not None and sym not in "+-~()":
            raise DecodeError(f"unexpected character {sym!r}")
        out.append(num if num is not None else sym)
        pos = m.end()
    return out


def parse_expr(text: str) -> Expr:
    """Parse ``1 + ~2 - (3 + -4)``; a ``-`` directly where a term starts signs a literal."""
    toks = _tokens(text)
    pos = 0

    def peek():
        return toks[pos] if pos < len(toks) else None

    def take():
        nonlocal pos
        if pos >= len(toks):
            raise DecodeError("unexpected end of expression")
        pos += 1
        return toks[pos - 1]

    def term():
        tok = take()
        if tok == "~":
            return Neg(term())
        if tok == "(":
            e = expr()
            if take() != ")":
                raise DecodeError("expected ')'")
            return Paren(e)
        if tok == "-" and peek() is not None and peek().isdigit():
            return Lit(-int(take()))
        if tok.isdigit():
            return Lit(int(tok))
        raise DecodeError(f"unexpected token {tok!r}")

    def expr():
        e = FromT(term())
        while peek() in ("+", "-"):
            op = take()
            t = term()
            e = Add(e, t) if op == "+" else Minus(e, t)
        return e

    result = expr()
    if pos != len(toks):
        raise DecodeError(f"unexpected token {toks[pos]!r}")
    return result


def show_expr(e) -> str:
    match e:
        case Add(x, t):
            return f"{show_expr(x)} + {show_expr(t)}"
        case Minus(x, t):
            return f"{show_expr(x)} - {show_expr(t)}"
        case FromT(t):
            return show_expr(t)
        case Lit(v):
            return str(v)
        case Neg(t):
            return f"~{show_expr(t)}"
        case Paren(x):
            return f"({show_expr(x)})"
    raise TypeError(f"not an expression or term: {e!r}")


def random_expr(rng, depth: int, lit_range: int = 3) -> Expr:
    """A random expression at most ``depth`` constructors deep."""
    if depth <= 1:
        return FromT(Lit(rng.randint(-lit_range, lit_range)))
    choice = rng.randrange(3)
    if choice == 0:
        return Add(random_expr(rng, depth - 1, lit_range), random_term(rng, depth - 1, lit_range))
    if choice == 1:
        return Minus(random_expr(rng, depth - 1, lit_range), random_term(rng, depth - 1, lit_range))
    return FromT(random_term(rng, depth - 1, lit_range))


def random_term(rng, depth: int, lit_range: int = 3) -> Term:
    if depth <= 1:
        return Lit(rng.randint(-lit_range, lit_range))
    choice = rng.randrange(3)
    if choice == 0:
        return Lit(rng.randint(-lit_range, lit_range))
    if choice == 1:
        return Neg(random_term(rng, depth - 1, lit_range))
    return Paren(random_expr(rng, depth - 1, lit_range))
