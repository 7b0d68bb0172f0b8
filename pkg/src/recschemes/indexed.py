"""
Indexed fixed points of higher-order functors.

Python has no type-level indices, so every ``IMu`` carries its index as a
runtime witness and constructors check the index discipline of their
layer.  Indices are plain values: naturals for vectors, and small type
descriptors (``VOID``, ``INTEGER``, ``Maybe(t)``, ``Pair(t)``) for lambda
terms and random-access lists.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable


class IndexWitnessError(TypeError):
    pass


# index descriptors

@dataclass(frozen=True)
class _Void:
    def __repr__(self):
        return "Void"


@dataclass(frozen=True)
class _Integer:
    def __repr__(self):
        return "Integer"


@dataclass(frozen=True)
class Maybe:
    inner: Any


@dataclass(frozen=True)
class Pair:
    inner: Any


VOID = _Void()
INTEGER = _Integer()


@dataclass(frozen=True)
class Just:
    value: Any


class _Nothing:
    __slots__ = ()

    def __repr__(self):
        return "Nothing"


NOTHING = _Nothing()


def inhabits(value, ty) -> bool:
    if ty == VOID:
        return False
    if ty == INTEGER:
        return isinstance(value, int) and not isinstance(value, bool)
    if isinstance(ty, Maybe):
        return value is NOTHING or (isinstance(value, Just) and inhabits(value.value, ty.inner))
    if isinstance(ty, Pair):
        return (isinstance(value, tuple) and len(value) == 2
                and inhabits(value[0], ty.inner) and inhabits(value[1], ty.inner))
    raise IndexWitnessError(f"unknown index {ty!r}")


class HFunctor:
    """A layer of an indexed shape.

    ``hfmap(phi)`` applies ``phi`` to every recursive position; ``phi`` stands
    for a family of functions, one per index, and must not change the index a
    position lives at.  ``check(index)`` validates the layer at ``index``;
    ``infer_index()`` returns the index when the layer determines it.
    """

    def hfmap(self, phi: Callable) -> HFunctor:
        raise NotImplementedError

    def check(self, index) -> None:
        pass

    def infer_index(self):
        raise IndexWitnessError(f"{type(self).__name__} does not determine its index")


def _index_of(x):
    if not isinstance(x, IMu):
        raise IndexWitnessError(f"expected an indexed value, got {x!r}")
    return x.index


def _require(cond, msg):
    if not cond:
        raise IndexWitnessError(msg)


@dataclass(frozen=True)
class IMu:
    node: HFunctor
    index: Any

    def __post_init__(self):
        self.node.check(self.index)


def iin(layer: HFunctor, index=None) -> IMu:
    """Build an indexed value; the index is inferred from the layer if omitted."""
    if index is None:
        index = layer.infer_index()
    return IMu(layer, index)


def icata(alg, m: IMu):
    """Index-polymorphic fold: ``alg(layer.hfmap(icata alg))``."""
    return alg(m.node.hfmap(lambda c: icata(alg, c)))


# VecF e f n = NilF (at Z) | ConsF e (f n) (at S n)

class VecF(HFunctor):
    pass


@dataclass(frozen=True)
class NilF(VecF):
    def hfmap(self, phi):
        return self

    def check(self, index):
        _require(index == 0, f"NilF lives at index 0, not {index!r}")

    def infer_index(self):
        return 0


@dataclass(frozen=True)
class ConsF(VecF):
    head: Any
    tail: Any

    def hfmap(self, phi):
        return ConsF(self.head, phi(self.tail))

    def check(self, index):
        _require(isinstance(index, int) and index >= 1,
                 f"ConsF lives at a successor index, not {index!r}")
        _require(_index_of(self.tail) == index - 1, "ConsF tail must sit one index lower")

    def infer_index(self):
        return _index_of(self.tail) + 1


def vec(xs) -> IMu:
    out = iin(NilF())
    for x in reversed(list(xs)):
        out = iin(ConsF(x, out))
    return out


def vec_to_list(v: IMu) -> list:
    out = []
    while isinstance(v.node, ConsF):
        out.append(v.node.head)
        v = v.node.tail
    return out


def vmap(f, v: IMu) -> IMu:
    def alg(layer):
        if isinstance(layer, NilF):
            return iin(NilF())
        return iin(ConsF(f(layer.head), layer.tail))
    return icata(alg, v)


def safe_head(v: IMu):
    if not (isinstance(v.index, int) and v.index >= 1):
        raise IndexWitnessError(f"safe_head needs a successor index, got {v.index!r}")
    return v.node.head


# LambdaF f a = Var a | App (f a) (f a) | Abs (f (Maybe a))

class LambdaF(HFunctor):
    pass


@dataclass(frozen=True)
class Var(LambdaF):
    name: Any

    def hfmap(self, phi):
        return self

    def check(self, index):
        _require(inhabits(self.name, index), f"{self.name!r} is not a variable of {index!r}")


@dataclass(frozen=True)
class App(LambdaF):
    fun: Any
    arg: Any

    def hfmap(self, phi):
        return App(phi(self.fun), phi(self.arg))

    def check(self, index):
        _require(_index_of(self.fun) == index and _index_of(self.arg) == index,
                 "App operands must share the application's index")

    def infer_index(self):
        return _index_of(self.fun)


@dataclass(frozen=True)
class Abs(LambdaF):
    body: Any

    def hfmap(self, phi):
        return Abs(phi(self.body))

    def check(self, index):
        _require(_index_of(self.body) == Maybe(index), "Abs body must live one binder deeper")

    def infer_index(self):
        idx = _index_of(self.body)
        _require(isinstance(idx, Maybe), "Abs body must live at a Maybe index")
        return idx.inner


@dataclass(frozen=True)
class K:
    """Constant family: the same value at every index."""
    value: Any


def lambda_size(term: IMu) -> int:
    def alg(layer):
        if isinstance(layer, Var):
            return K(1)
        if isinstance(layer, App):
            return K(layer.fun.value + layer.arg.value + 1)
        return K(layer.body.value + 1)
    return icata(alg, term).value


# RListF f a = NullF | ZeroF (f (a, a)) | OneF a (f (a, a))

class RListF(HFunctor):
    pass


@dataclass(frozen=True)
class NullF(RListF):
    def hfmap(self, phi):
        return self


@dataclass(frozen=True)
class ZeroF(RListF):
    rest: Any

    def hfmap(self, phi):
        return ZeroF(phi(self.rest))

    def check(self, index):
        _require(_index_of(self.rest) == Pair(index), "ZeroF tail must hold pairs")

    def infer_index(self):
        idx = _index_of(self.rest)
        _require(isinstance(idx, Pair), "ZeroF tail must live at a Pair index")
        return idx.inner


@dataclass(frozen=True)
class OneF(RListF):
    item: Any
    rest: Any

    def hfmap(self, phi):
        return OneF(self.item, phi(self.rest))

    def check(self, index):
        _require(inhabits(self.item, index), f"{self.item!r} is not a {index!r}")
        _require(_index_of(self.rest) == Pair(index), "OneF tail must hold pairs")

    def infer_index(self):
        idx = _index_of(self.rest)
        _require(isinstance(idx, Pair), "OneF tail must live at a Pair index")
        return idx.inner


@dataclass(frozen=True)
class Cont:
    """Continuation family: ``run(k)`` feeds every element to ``k`` and combines."""
    run: Callable

    def run_cont(self, k):
        return self.run(k)


def _fork(k):
    return lambda pair: k(pair[0]) + k(pair[1])


def _sum_alg(layer):
    if isinstance(layer, NullF):
        return Cont(lambda k: 0)
    if isinstance(layer, ZeroF):
        s = layer.rest
        return Cont(lambda k: s.run_cont(_fork(k)))
    a, s = layer.item, layer.rest
    return Cont(lambda k: k(a) + s.run_cont(_fork(k)))


def sum_rlist(xs: IMu) -> int:
    """Sum of a random-access list of integers by an indexed fold."""
    _require(xs.index == INTEGER, "sum_rlist needs an Integer-indexed list")
    return icata(_sum_alg, xs).run_cont(lambda x: x)


def rlist_map(f, xs: IMu, index) -> IMu:
    """Map ``f`` over the elements; ``index`` is the element type of the result."""
    node = xs.node
    if isinstance(node, NullF):
        return IMu(node, index)

    def pairwise(p):
        return f(p[0]), f(p[1])

    rest = rlist_map(pairwise, node.rest, Pair(index))
    if isinstance(node, ZeroF):
        return IMu(ZeroF(rest), index)
    return IMu(OneF(f(node.item), rest), index)


def _add_pair(p):
    return p[0] + p[1]


def sum_rlist_direct(xs: IMu) -> int:
    """The plain recursive sum, summing pairs before descending."""
    node = xs.node
    if isinstance(node, NullF):
        return 0
    rest = sum_rlist_direct(rlist_map(_add_pair, node.rest, xs.index))
    if isinstance(node, ZeroF):
        return rest
    return node.item + rest


def rlist_flatten(xs: IMu) -> list:
    """All leaf integers, in order, for an Integer-indexed list."""
    def leaves(v):
        if isinstance(v, tuple):
            return leaves(v[0]) + leaves(v[1])
        return [v]

    out = []
    node = xs
    while not isinstance(node.node, NullF):
        if isinstance(node.node, OneF):
            out.extend(leaves(node.node.item))
        node = node.node.rest
    return out
