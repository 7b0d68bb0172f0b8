"""Divide and conquer: quicksort, and a hylomorphism that never finishes."""
from __future__ import annotations

import math

from ..basic import hylo
from ..core import DEFAULT_FUEL, Mu, construct
from ..functors import EMPTY, NIL, Cons, Empty, Nil, Node
from .folds import append_, filter_


def partition(xs: Mu):
    match xs.node:
        case Nil():
            return EMPTY
        case Cons(a, rest):
            return Node(filter_(lambda b: b < a, rest), a, filter_(lambda b: b >= a, rest))


def combine(layer) -> Mu:
    if isinstance(layer, Empty):
        return construct(NIL)
    return append_(layer.left, construct(Cons(layer.label, layer.right)))


def qsort(xs: Mu, fuel=DEFAULT_FUEL) -> Mu:
    return hylo(combine, partition, xs, fuel)


def geo(n: tuple[int, int]):
    # the seed (base, shift) stands for base * 2**shift, so doubling is O(1)
    base, shift = n
    return Cons(math.ldexp(1 / base, -shift), (base, shift + 1))


def sum_layer(layer) -> float:
    return 0.0 if isinstance(layer, Nil) else layer.head + layer.tail


def zeno(n: int, fuel=DEFAULT_FUEL) -> float:
    """Sum ``1/n + 1/2n + 1/4n + ...`` term by term; exhausts any finite fuel."""
    if n == 0:
        raise ValueError("zeno needs a non-zero seed")
    return hylo(sum_layer, geo, (n, 0), fuel)
