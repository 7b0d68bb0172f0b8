"""
Course-of-value schemes.

``Cofree`` is the memo-table handed to histo/dyna/chrono algebras: each node
carries the result for one subproblem and the layer of tables below it.
``Free`` batches several layers of output for futu/chrono coalgebras.  Both
are finite here.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .basic import ana, cata, hylo
from .core import DEFAULT_FUEL, Functor, Fuel, Mu, Nu, as_fuel
from .functors import Cons


@dataclass(frozen=True)
class Cofree:
    head: Any
    tail: Functor


def extract(c: Cofree):
    return c.head


def annotate(alg):
    """Turn a table algebra into one that builds the table as it goes."""
    return lambda layer: Cofree(alg(layer), layer)


def histo(alg, m: Mu):
    return extract(cata(annotate(alg), m))


def dyna(alg, coalg, seed, fuel=DEFAULT_FUEL):
    return extract(hylo(annotate(alg), coalg, seed, fuel))


class IndexOutOfTable(IndexError):
    pass


def index(t: Cofree, n: int):
    """The ``n``-th entry of a list-shaped memo-table; entry 0 is the head."""
    if n < 0:
        raise IndexOutOfTable(n)
    k = n
    while k > 0:
        if not isinstance(t.tail, Cons):
            raise IndexOutOfTable(n)
        t = t.tail.tail
        k -= 1
    return t.head


def offset(n: int, m: int, len2: int) -> int:
    """Table position of subproblem ``(drop n xs, drop m ys)`` seen from ``(xs, ys)``.

    Valid for the LCS enumeration order that exhausts the second sequence
    first; ``len2`` is the length of the full second sequence.
    """
    return n * (len2 + 1) + m - 1


# Free f a = Ret a | Op (f (Free f a))

class Free:
    pass


@dataclass(frozen=True)
class Ret(Free):
    value: Any


@dataclass(frozen=True)
class Op(Free):
    layer: Functor


def eval_free(alg, g, t: Free):
    """Fold a ``Free`` tree: ``g`` on leaves, ``alg`` on layers."""
    if isinstance(t, Ret):
        return g(t.value)
    return alg(t.layer.fmap(lambda k: eval_free(alg, g, k)))


def _unbatch(coalg):
    def step(t):
        if isinstance(t, Ret):
            return coalg(t.value)
        return t.layer
    return step


def futu(coalg, seed) -> Nu:
    """Unfold where each step may emit several layers at once.

    ``coalg`` returns one layer whose positions are ``Free`` batches: ``Op``
    nodes are further output, ``Ret(seed)`` resumes the unfold.
    """
    return ana(_unbatch(coalg), Ret(seed))


def chrono(alg, coalg, seed, fuel=DEFAULT_FUEL):
    """futu-style production followed by histo-style consumption.

    Fuel is charged per coalgebra call; layers replayed from a batch are free.
    """
    budget = as_fuel(fuel)

    def step(t):
        if isinstance(t, Ret):
            budget.spend()
            return coalg(t.value)
        return t.layer

    return extract(hylo(annotate(alg), step, Ret(seed), fuel=Fuel(None)))
