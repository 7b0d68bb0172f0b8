"""Folds over lists, naturals, trees and programs."""
from __future__ import annotations

from dataclasses import dataclass

from ..basic import cata
from ..core import Mu, construct
from ..extra import accu, foldl_prime, mutu, para, zygo
from ..functors import (
    EMPTY, NIL, ZERO, Cons, Empty, Get, Nil, Node, Put, Ret, Succ, Zero,
    conv_mu, nat_to_int,
)


# lists

def _length_alg(layer):
    return 0 if isinstance(layer, Nil) else 1 + layer.tail


def length_(xs: Mu) -> int:
    return cata(_length_alg, xs)


def length_direct(xs: Mu) -> int:
    """Plain recursion, kept as a candidate for the universal-property check."""
    match xs.node:
        case Nil():
            return 0
        case Cons(_, tail):
            return 1 + length_direct(tail)


def map_(f, xs: Mu) -> Mu:
    return cata(lambda layer: construct(NIL) if isinstance(layer, Nil)
                else construct(Cons(f(layer.head), layer.tail)), xs)


def foldr_(f, e, xs: Mu):
    return cata(lambda layer: e if isinstance(layer, Nil) else f(layer.head, layer.tail), xs)


def append_(xs: Mu, ys: Mu) -> Mu:
    return cata(lambda layer: ys if isinstance(layer, Nil)
                else construct(Cons(layer.head, layer.tail)), xs)


def concat_(xss: Mu) -> Mu:
    """Flatten a list of lists; inner lists are ``Mu`` lists too."""
    return cata(lambda layer: construct(NIL) if isinstance(layer, Nil)
                else append_(layer.head, layer.tail), xss)


def sum_alg(layer):
    return 0 if isinstance(layer, Nil) else layer.head + layer.tail


def filter_(pred, xs: Mu) -> Mu:
    def alg(layer):
        if isinstance(layer, Cons) and not pred(layer.head):
            return layer.tail
        return construct(layer)
    return cata(alg, xs)


def reverse_(xs: Mu) -> Mu:
    return foldl_prime(lambda acc, x: construct(Cons(x, acc)), xs, construct(NIL))


# trees

def size(t: Mu) -> int:
    return cata(lambda layer: 0 if isinstance(layer, Empty) else layer.left + 1 + layer.right, t)


def depth_alg(layer) -> int:
    return 0 if isinstance(layer, Empty) else 1 + max(layer.left, layer.right)


def tree_depth(t: Mu) -> int:
    return cata(depth_alg, t)


def _perfect_alg(layer) -> bool:
    if isinstance(layer, Empty):
        return True
    (pl, dl), (pr, dr) = layer.left, layer.right
    return pl and pr and dl == dr


def perfect(t: Mu) -> bool:
    return zygo(_perfect_alg, depth_alg, t)


def perfect_para(t: Mu) -> bool:
    """The quadratic version that recomputes depths of subtrees."""
    def alg(layer):
        if isinstance(layer, Empty):
            return True
        (l, pl), (r, pr) = layer.left, layer.right
        return pl and pr and tree_depth(l) == tree_depth(r)
    return para(alg, t)


def sum_path(t: Mu) -> Mu:
    """Relabel every node with the sum of labels on its root path."""
    def alg(layer, s):
        if isinstance(layer, Empty):
            return construct(EMPTY)
        s2 = s + layer.label
        return construct(Node(layer.left(s2), s2, layer.right(s2)))
    return accu(alg, t, 0)


# naturals

def _fib_f(layer):
    return 0 if isinstance(layer, Zero) else layer.pred[0] + layer.pred[1]


def _fib_g(layer):
    return 1 if isinstance(layer, Zero) else layer.pred[0]


fib, fib_aux = mutu(_fib_f, _fib_g)
fib.__doc__ = "Fibonacci numbers as one half of a mutumorphism."


def _even_alg(layer):
    return True if isinstance(layer, Zero) else layer.pred[1]


def _odd_alg(layer):
    return False if isinstance(layer, Zero) else layer.pred[0]


is_even, is_odd = mutu(_even_alg, _odd_alg)


def factorial(n: Mu) -> int:
    def alg(layer):
        if isinstance(layer, Zero):
            return 1
        sub, fn = layer.pred
        return (nat_to_int(sub) + 1) * fn
    return para(alg, n)


def factorial_mutu(n: Mu) -> int:
    """Factorial by tupling with the identity fold."""
    def alg(layer):
        if isinstance(layer, Zero):
            return 1
        fn, sub = layer.pred
        return (nat_to_int(sub) + 1) * fn

    def alg_id(layer):
        return construct(layer.fmap(lambda p: p[1]))

    return mutu(alg, alg_id)[0](n)


def ack(m: Mu, n: Mu) -> Mu:
    """Ackermann's function on unary naturals, by nested catamorphisms."""
    def alg(layer):
        if isinstance(layer, Zero):
            return lambda k: construct(Succ(k))
        a_n = layer.pred

        def inner(lay):
            if isinstance(lay, Zero):
                return a_n(construct(Succ(construct(ZERO))))
            return a_n(lay.pred)

        return lambda k: cata(inner, k)

    return cata(alg, m)(n)


# text

def wc(cs: Mu) -> int:
    """Count maximal runs of non-space characters."""
    def alg(layer):
        if isinstance(layer, Nil):
            return 0
        c, (rest, n) = layer.head, layer.tail
        new_word = not c.isspace() and (isinstance(rest.node, Nil) or rest.node.head.isspace())
        return n + 1 if new_word else n
    return para(alg, cs)


def chars(s: str) -> Mu:
    return conv_mu(s)


# a tiny language of mutable memory

def _handle(layer):
    match layer:
        case Ret(value):
            return lambda store: value
        case Put(addr, val, k):
            return lambda store: k({**store, addr: val})
        case Get(addr, k):
            def run(store):
                if addr not in store:
                    raise KeyError(f"address {addr} is unbound")
                return k(store[addr])(store)
            return run


def interp(prog: Mu, store: dict):
    return cata(_handle, prog)(dict(store))


def ret(value) -> Mu:
    return construct(Ret(value))


def put(addr, val, k: Mu) -> Mu:
    return construct(Put(addr, val, k))


def get(addr, k) -> Mu:
    return construct(Get(addr, k))


# read cell 0, bump it, return the old value
P1 = get(0, lambda s: put(0, s + 1, ret(s)))

# write then read back
PUT_GET = put(0, 42, get(0, ret))

# swap cells 0 and 1, then read both back
SWAP = get(0, lambda a: get(1, lambda b: put(0, b, put(1, a, get(0, lambda x: get(1, lambda y: ret((x, y))))))))


@dataclass(frozen=True)
class DemoProgram:
    name: str
    program: Mu
    reference: object  # plain Python rendering of the same program

    def run(self, store):
        return interp(self.program, store)


def _p1_ref(store):
    return store[0]


def _putget_ref(store):
    return 42


def _swap_ref(store):
    return store[1], store[0]


PROGRAMS = {
    "p1": DemoProgram("p1", P1, _p1_ref),
    "putget": DemoProgram("putget", PUT_GET, _putget_ref),
    "swap": DemoProgram("swap", SWAP, _swap_ref),
}


__all__ = [
    "length_", "length_direct", "map_", "foldr_", "append_", "concat_", "sum_alg",
    "filter_", "reverse_", "size", "depth_alg", "tree_depth", "perfect", "perfect_para",
    "sum_path", "fib", "fib_aux", "is_even", "is_odd", "factorial", "factorial_mutu", "ack",
    "wc", "chars", "interp", "ret", "put", "get", "P1", "PUT_GET", "SWAP", "PROGRAMS",
]
