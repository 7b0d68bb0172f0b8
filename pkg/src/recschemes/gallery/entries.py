"""Registry bindings: argument formats, runners, oracles and samplers for each example."""
from __future__ import annotations

import heapq
import math
import string
from functools import lru_cache

from ..core import Nu
from ..functors import (
    conv_mu, conv_mu_inv, conv_nu, nat, nat_to_int, nu_take, tree_to_tuple,
)
from ..indexed import (
    INTEGER, NOTHING, VOID, Abs, App, IMu, Just, Maybe, NullF, OneF, Pair, Var, ZeroF, iin,
    lambda_size, rlist_flatten, sum_rlist, vec, vec_to_list, vmap,
)
from ..laws import draw_tree
from . import GalleryEntry, register
from .dynamic import fib_histo, lcs, lcs_dp, lis, lis_brute
from .folds import (
    PROGRAMS, ack, chars, concat_, factorial, fib, is_even, length_, map_, perfect,
    reverse_, sum_path, wc,
)
from .godel import (
    DIGIT_LIMIT, EncodingTooLarge, decode_expr, encode_expr, parse_expr, random_expr, show_expr,
)
from .hylos import qsort, zeno
from .monadic import print_tree, ran_tree
from .text import parse_tree, show_tree
from .unfolds import from_, insert, linspace, maphd, merge, rld


# argument types; a ValueError here is a usage error

def integer(tok: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ValueError(f"not an integer: {tok!r}") from None


def run_pair(tok: str) -> tuple[int, str]:
    count, sep, item = tok.partition(":")
    if not sep or len(item) != 1:
        raise ValueError(f"expected n:char, got {tok!r}")
    return integer(count), item


def int_list(tok: str) -> list[int]:
    return [integer(t) for t in tok.split(",") if t.strip()]


def binding(tok: str) -> tuple[int, int]:
    addr, sep, val = tok.partition("=")
    if not sep:
        raise ValueError(f"expected addr=val, got {tok!r}")
    return integer(addr), integer(val)


INTS = ("xs", dict(nargs="*", type=integer, help="integers"))


def _words(xs) -> str:
    return " ".join(str(x) for x in xs)


def _truncate(xs, depth: int, sep: str = " ") -> str:
    shown = sep.join(str(x) for x in xs[:depth])
    if len(xs) > depth:
        shown = shown + sep + "..." if shown else "..."
    return shown


def show_codata(n: Nu, depth: int, sep: str = " ") -> str:
    """At most ``depth`` elements of a codata list, with ``...`` if it goes on."""
    return _truncate(nu_take(n, depth + 1), depth, sep)


def _ints(rng, n, lo=-50, hi=50):
    return [rng.randint(lo, hi) for _ in range(n)]


# lists

register(GalleryEntry(
    "qsort", "hylo", "sort integers by partition and concatenation",
    run=lambda ns: _words(conv_mu_inv(qsort(conv_mu(ns.xs), ns.fuel))),
    oracle=lambda ns: _words(sorted(ns.xs)), arguments=(INTS,),
    bounds="integer lists of length at most 200",
    sample=lambda rng: dict(xs=_ints(rng, rng.randint(0, 200)))))

register(GalleryEntry(
    "lis", "histo", "length of a longest strictly increasing subsequence",
    run=lambda ns: str(lis(conv_mu(ns.xs))), oracle=lambda ns: str(lis_brute(ns.xs)),
    arguments=(INTS,), bounds="integer lists of length at most 12",
    sample=lambda rng: dict(xs=_ints(rng, rng.randint(0, 12), -10, 10))))

register(GalleryEntry(
    "lcs", "dyna", "length of a longest common subsequence of two strings",
    run=lambda ns: str(lcs(ns.s1, ns.s2, ns.fuel)), oracle=lambda ns: str(lcs_dp(ns.s1, ns.s2)),
    arguments=(("s1", dict(help="first string")), ("s2", dict(help="second string"))),
    bounds="strings of length at most 8",
    sample=lambda rng: dict(s1="".join(rng.choices("abc", k=rng.randint(0, 8))),
                            s2="".join(rng.choices("abc", k=rng.randint(0, 8))))))

register(GalleryEntry(
    "rld", "futu", "expand run-length pairs such as 3:a",
    run=lambda ns: show_codata(rld(ns.runs), ns.depth, sep=""),
    oracle=lambda ns: _truncate("".join(c * n for n, c in ns.runs), ns.depth, sep=""),
    arguments=(("runs", dict(nargs="*", type=run_pair, help="n:char pairs")),),
    bounds="positive counts",
    sample=lambda rng: dict(runs=[(rng.randint(1, 5), rng.choice(string.ascii_lowercase))
                                  for _ in range(rng.randint(0, 6))])))


def _sorted_ints(rng, n):
    return sorted(_ints(rng, n))


register(GalleryEntry(
    "merge", "ana", "merge two ascending comma-separated integer lists",
    run=lambda ns: show_codata(merge(conv_nu(ns.left), conv_nu(ns.right)), ns.depth),
    oracle=lambda ns: _truncate(list(heapq.merge(ns.left, ns.right)), ns.depth),
    arguments=(("left", dict(type=int_list, help="e.g. 1,3,5")),
               ("right", dict(type=int_list, help="e.g. 2,4"))),
    bounds="ascending inputs",
    sample=lambda rng: dict(left=_sorted_ints(rng, rng.randint(0, 15)),
                            right=_sorted_ints(rng, rng.randint(0, 15)))))


def _insert_oracle(ns):
    xs = list(ns.xs)
    i = next((k for k, x in enumerate(xs) if ns.y <= x), len(xs))
    return _truncate(xs[:i] + [ns.y] + xs[i:], ns.depth)


register(GalleryEntry(
    "insert", "apo", "insert an integer into an ascending list",
    run=lambda ns: show_codata(insert(ns.y, conv_nu(ns.xs)), ns.depth),
    oracle=_insert_oracle,
    arguments=(("y", dict(type=integer, help="value to insert")), INTS),
    bounds="ascending inputs",
    sample=lambda rng: dict(y=rng.randint(-60, 60), xs=_sorted_ints(rng, rng.randint(0, 25)))))

register(GalleryEntry(
    "wc", "para", "count words in the arguments joined by spaces",
    run=lambda ns: str(wc(chars(" ".join(ns.words)))),
    oracle=lambda ns: str(len(" ".join(ns.words).split())),
    arguments=(("words", dict(nargs="*", help="text")),),
    bounds="ASCII text",
    sample=lambda rng: dict(words=["".join(rng.choices("ab \t\n", k=rng.randint(0, 8)))
                                   for _ in range(rng.randint(0, 4))])))

register(GalleryEntry(
    "length", "cata", "number of elements", cli=False,
    run=lambda ns: str(length_(conv_mu(ns.xs))), oracle=lambda ns: str(len(ns.xs)),
    bounds="any list", sample=lambda rng: dict(xs=_ints(rng, rng.randint(0, 40)))))

register(GalleryEntry(
    "map", "cata", "add one to every element", cli=False,
    run=lambda ns: _words(conv_mu_inv(map_(lambda x: x + 1, conv_mu(ns.xs)))),
    oracle=lambda ns: _words(x + 1 for x in ns.xs),
    bounds="any integer list", sample=lambda rng: dict(xs=_ints(rng, rng.randint(0, 40)))))

register(GalleryEntry(
    "concat", "cata", "flatten a list of lists", cli=False,
    run=lambda ns: _words(conv_mu_inv(concat_(conv_mu([conv_mu(xs) for xs in ns.xss])))),
    oracle=lambda ns: _words(x for xs in ns.xss for x in xs),
    bounds="any lists",
    sample=lambda rng: dict(xss=[_ints(rng, rng.randint(0, 5)) for _ in range(rng.randint(0, 6))])))

register(GalleryEntry(
    "reverse", "accu", "reverse a list with a left fold", cli=False,
    run=lambda ns: _words(conv_mu_inv(reverse_(conv_mu(ns.xs)))),
    oracle=lambda ns: _words(reversed(ns.xs)),
    bounds="any list", sample=lambda rng: dict(xs=_ints(rng, rng.randint(0, 40)))))


def _linspace_oracle(ns):
    step = (ns.e - ns.s) / (ns.n + 1)
    out, x = [], ns.s
    while x < ns.e:
        out.append(x)
        x += step
    return _truncate(out, ns.depth)


register(GalleryEntry(
    "linspace", "ana", "evenly spaced points from s below e", cli=False,
    run=lambda ns: show_codata(linspace(ns.s, ns.e, ns.n), ns.depth),
    oracle=_linspace_oracle, bounds="s < e, n >= 0",
    sample=lambda rng: dict(s=rng.randint(-5, 5), e=rng.randint(6, 10), n=rng.randint(0, 10))))

register(GalleryEntry(
    "from", "ana", "the integers counting up from n", cli=False,
    run=lambda ns: show_codata(from_(ns.n), ns.depth),
    oracle=lambda ns: _words(range(ns.n, ns.n + ns.depth)) + " ...",
    bounds="depth >= 1", sample=lambda rng: dict(n=rng.randint(-100, 100))))

register(GalleryEntry(
    "maphd", "apo", "add one to the head only", cli=False,
    run=lambda ns: show_codata(maphd(lambda x: x + 1, conv_nu(ns.xs)), ns.depth),
    oracle=lambda ns: _truncate([x + 1 if i == 0 else x for i, x in enumerate(ns.xs)], ns.depth),
    bounds="any list", sample=lambda rng: dict(xs=_ints(rng, rng.randint(0, 25)))))


# naturals

def _fib_oracle(ns):
    a, b = 0, 1
    for _ in range(ns.n):
        a, b = b, a + b
    return str(a)


def _nat_sample(hi):
    return lambda rng: dict(n=rng.randint(0, hi))


register(GalleryEntry(
    "fib", "mutu", "Fibonacci number",
    run=lambda ns: str(fib(nat(ns.n))), oracle=_fib_oracle,
    arguments=(("n", dict(type=integer)),), bounds="n >= 0", sample=_nat_sample(60)))

register(GalleryEntry(
    "fib-histo", "histo", "Fibonacci number from the memo-table", cli=False,
    run=lambda ns: str(fib_histo(nat(ns.n))), oracle=_fib_oracle,
    bounds="n >= 0", sample=_nat_sample(60)))

register(GalleryEntry(
    "is-even", "mutu", "parity of a natural number", cli=False,
    run=lambda ns: str(is_even(nat(ns.n))).lower(), oracle=lambda ns: str(ns.n % 2 == 0).lower(),
    bounds="n >= 0", sample=_nat_sample(60)))

register(GalleryEntry(
    "factorial", "para", "factorial",
    run=lambda ns: str(factorial(nat(ns.n))), oracle=lambda ns: str(math.factorial(ns.n)),
    arguments=(("n", dict(type=integer)),), bounds="n >= 0", sample=_nat_sample(30)))


@lru_cache(maxsize=None)
def ack_direct(m: int, n: int) -> int:
    if m == 0:
        return n + 1
    if n == 0:
        return ack_direct(m - 1, 1)
    return ack_direct(m - 1, ack_direct(m, n - 1))


register(GalleryEntry(
    "ack", "cata", "Ackermann's function",
    run=lambda ns: str(nat_to_int(ack(nat(ns.m), nat(ns.n)))),
    oracle=lambda ns: str(ack_direct(ns.m, ns.n)),
    arguments=(("m", dict(type=integer)), ("n", dict(type=integer))),
    bounds="m, n <= 3", sample=lambda rng: dict(m=rng.randint(0, 3), n=rng.randint(0, 3))))

register(GalleryEntry(
    "zeno", "hylo", "sum 1/n + 1/2n + 1/4n + ... term by term (never finishes)",
    run=lambda ns: str(zeno(ns.n, ns.fuel)),
    arguments=(("n", dict(type=integer)),)))


# programs

register(GalleryEntry(
    "interp", "cata", "run a demo memory program (p1, putget, swap) on a store",
    run=lambda ns: str(PROGRAMS[ns.program].run(dict(ns.store))),
    oracle=lambda ns: str(PROGRAMS[ns.program].reference(dict(ns.store))),
    arguments=(("program", dict(choices=sorted(PROGRAMS))),
               ("store", dict(nargs="*", type=binding, help="addr=val"))),
    bounds="stores binding addresses 0 and 1",
    sample=lambda rng: dict(program=rng.choice(sorted(PROGRAMS)),
                            store=[(0, rng.randint(-99, 99)), (1, rng.randint(-99, 99))])))


# trees

def _perfect_direct(t) -> bool:
    def go(t):
        if t is None:
            return True, 0
        (pl, dl), (pr, dr) = go(t[0]), go(t[2])
        return pl and pr and dl == dr, 1 + max(dl, dr)
    return go(t)[0]


def _sum_path_direct(t, s=0):
    if t is None:
        return None
    l, e, r = t
    return _sum_path_direct(l, s + e), s + e, _sum_path_direct(r, s + e)


def _tuple_text(t) -> str:
    if t is None:
        return "."
    return f"({_tuple_text(t[0])} {t[1]} {_tuple_text(t[2])})"


def _postorder(t) -> list:
    if t is None:
        return []
    return _postorder(t[0]) + _postorder(t[2]) + [t[1]]


def _tree_arg(ns):
    return parse_tree(" ".join(ns.tree))


def _as_tuple(ns):
    return tree_to_tuple(_tree_arg(ns))


def _tree_sample(rng):
    if rng.random() < 0.3:   # perfect trees are rare among random ones
        text = "."
        for _ in range(rng.randint(0, 3)):
            text = f"({text} {rng.randint(-9, 9)} {text})"
        return dict(tree=[text])
    return dict(tree=[show_tree(draw_tree(rng, 12))])


TREE = ("tree", dict(nargs="+", help="'.' or '(left label right)'"))

register(GalleryEntry(
    "perfect", "zygo", "is the tree perfect (all leaves at one depth)?",
    run=lambda ns: str(perfect(_tree_arg(ns))).lower(),
    oracle=lambda ns: str(_perfect_direct(_as_tuple(ns))).lower(),
    arguments=(TREE,), bounds="any tree", sample=_tree_sample))

register(GalleryEntry(
    "sumpath", "accu", "relabel nodes with root-to-node sums",
    run=lambda ns: show_tree(sum_path(_tree_arg(ns))),
    oracle=lambda ns: _tuple_text(_sum_path_direct(_as_tuple(ns))),
    arguments=(TREE,), bounds="any tree", sample=_tree_sample))

register(GalleryEntry(
    "printtree", "cataM", "labels logged in post-order", cli=False,
    run=lambda ns: _words(print_tree(_tree_arg(ns))),
    oracle=lambda ns: _words(_postorder(_as_tuple(ns))),
    bounds="any tree", sample=_tree_sample))

register(GalleryEntry(
    "rantree", "mana", "complete tree of random labels, reproducible from --seed",
    run=lambda ns: show_tree(ran_tree(ns.n, ns.seed, ns.fuel)),
    arguments=(("n", dict(type=integer, help="depth")),)))


# expressions

def _godel(ns):
    e = parse_expr(" ".join(ns.expr))
    return show_expr(decode_expr(encode_expr(e, DIGIT_LIMIT)))


def _expr_sample(rng):
    while True:
        e = random_expr(rng, rng.randint(1, 4))
        try:
            encode_expr(e, DIGIT_LIMIT)
        except EncodingTooLarge:
            continue
        return dict(expr=[show_expr(e)])


register(GalleryEntry(
    "godel-roundtrip", "comutu", "encode an expression as a number and decode it back",
    run=_godel, oracle=lambda ns: show_expr(parse_expr(" ".join(ns.expr))),
    arguments=(("expr", dict(nargs="+", help="e.g. '0 + ~0' or '(-3)'")),),
    bounds=f"expressions whose number has fewer than {DIGIT_LIMIT} digits",
    sample=_expr_sample))


# indexed families

register(GalleryEntry(
    "vmap", "icata", "add one to every element of a length-indexed vector", cli=False,
    run=lambda ns: _words(vec_to_list(vmap(lambda x: x + 1, vec(ns.xs)))),
    oracle=lambda ns: _words(x + 1 for x in ns.xs),
    bounds="any list", sample=lambda rng: dict(xs=_ints(rng, rng.randint(0, 30)))))


def random_lambda(rng, depth: int) -> IMu:
    """A random closed lambda term at most ``depth`` constructors deep."""
    def go(scope, idx, d):
        choice = rng.randrange(3) if d > 1 else 0
        if choice == 0 and scope:
            return iin(Var(rng.choice(scope)), idx)
        if choice == 1 and scope:
            return iin(App(go(scope, idx, d - 1), go(scope, idx, d - 1)))
        inner = [Just(v) for v in scope] + [NOTHING]
        return iin(Abs(go(inner, Maybe(idx), d - 1)))
    return go([], VOID, depth)


def _lambda_nodes(t: IMu) -> int:
    node = t.node
    if isinstance(node, Var):
        return 1
    if isinstance(node, App):
        return 1 + _lambda_nodes(node.fun) + _lambda_nodes(node.arg)
    return 1 + _lambda_nodes(node.body)


register(GalleryEntry(
    "lambda-size", "icata", "constructor count of a closed lambda term", cli=False,
    run=lambda ns: str(lambda_size(ns.term)), oracle=lambda ns: str(_lambda_nodes(ns.term)),
    bounds="closed terms", sample=lambda rng: dict(term=random_lambda(rng, rng.randint(1, 6)))))


def random_rlist(rng, depth: int, index=INTEGER) -> IMu:
    """A random-access list whose elements are ``index``-shaped nested pairs."""
    def element(idx):
        if isinstance(idx, Pair):
            return element(idx.inner), element(idx.inner)
        return rng.randint(-20, 20)

    def go(idx, d):
        if d == 0:
            return IMu(NullF(), idx)
        rest = go(Pair(idx), d - 1)
        if rng.random() < 0.5:
            return IMu(ZeroF(rest), idx)
        return IMu(OneF(element(idx), rest), idx)

    return go(index, depth)


register(GalleryEntry(
    "sum-rlist", "icata", "sum of a random-access list via a continuation carrier", cli=False,
    run=lambda ns: str(sum_rlist(ns.xs)), oracle=lambda ns: str(sum(rlist_flatten(ns.xs))),
    bounds="Integer-indexed lists",
    sample=lambda rng: dict(xs=random_rlist(rng, rng.randint(0, 5)))))
