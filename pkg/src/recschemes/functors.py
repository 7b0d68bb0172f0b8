"""Shipped base functors and conversions to and from built-in data."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable

from .core import DEFAULT_FUEL, Functor, Mu, Nu, as_fuel, construct, fold_layers


# ListF a x = Nil | Cons a x

class ListF(Functor):
    __slots__ = ()


@dataclass(frozen=True, slots=True)
class Nil(ListF):
    def fmap(self, f):
        return self


@dataclass(frozen=True, slots=True)
class Cons(ListF):
    head: Any
    tail: Any

    def fmap(self, f):
        return Cons(self.head, f(self.tail))


# TreeF e x = Empty | Node x e x

class TreeF(Functor):
    __slots__ = ()


@dataclass(frozen=True, slots=True)
class Empty(TreeF):
    def fmap(self, f):
        return self


@dataclass(frozen=True, slots=True)
class Node(TreeF):
    left: Any
    label: Any
    right: Any

    def fmap(self, f):
        return Node(f(self.left), self.label, f(self.right))


# NatF x = Zero | Succ x

class NatF(Functor):
    __slots__ = ()


@dataclass(frozen=True, slots=True)
class Zero(NatF):
    def fmap(self, f):
        return self


@dataclass(frozen=True, slots=True)
class Succ(NatF):
    pred: Any

    def fmap(self, f):
        return Succ(f(self.pred))


# ProgF s a x = Ret a | Put (Int, s) x | Get Int (s -> x)

class ProgF(Functor):
    __slots__ = ()
    finitary = False


@dataclass(frozen=True, slots=True)
class Ret(ProgF):
    value: Any

    def fmap(self, f):
        return self


@dataclass(frozen=True, slots=True)
class Put(ProgF):
    addr: int
    val: Any
    k: Any

    def fmap(self, f):
        return Put(self.addr, self.val, f(self.k))


@dataclass(frozen=True, slots=True)
class Get(ProgF):
    addr: int
    k: Callable[[Any], Any]

    def fmap(self, f):
        k = self.k
        return Get(self.addr, lambda s: f(k(s)))


NIL = Nil()
EMPTY = Empty()
ZERO = Zero()


# conversions

def conv_mu(xs) -> Mu:
    out = construct(NIL)
    for x in reversed(list(xs)):
        out = construct(Cons(x, out))
    return out


def conv_mu_inv(m: Mu) -> list:
    out = []
    node = m.node
    while isinstance(node, Cons):
        out.append(node.head)
        node = node.tail.node
    return out


def _list_step(xs):
    return Cons(xs[0], xs[1:]) if xs else NIL


def conv_nu(xs) -> Nu:
    return Nu(tuple(xs), _list_step)


def nu_take(n: Nu, count: int) -> list:
    """The first ``count`` elements of a codata list (fewer if it ends)."""
    out = []
    while len(out) < count:
        layer = n.observe()
        if isinstance(layer, Nil):
            break
        out.append(layer.head)
        n = layer.tail
    return out


def conv_nu_inv(n: Nu, fuel=DEFAULT_FUEL) -> list:
    """All elements of a codata list; raises FuelExhausted if it does not end."""
    budget = as_fuel(fuel)
    out = []
    while True:
        budget.spend()
        layer = n.observe()
        if isinstance(layer, Nil):
            return out
        out.append(layer.head)
        n = layer.tail


def null_nu(n: Nu) -> bool:
    return isinstance(n.observe(), Nil)


def head_nu(n: Nu):
    return n.observe().head


def tail_nu(n: Nu) -> Nu:
    return n.observe().tail


def nat(k: int) -> Mu:
    if k < 0:
        raise ValueError("natural numbers are non-negative")
    out = construct(ZERO)
    for _ in range(k):
        out = construct(Succ(out))
    return out


def nat_to_int(m: Mu) -> int:
    k = 0
    node = m.node
    while isinstance(node, Succ):
        k += 1
        node = node.pred.node
    return k


def leaf(label) -> Mu:
    return construct(Node(construct(EMPTY), label, construct(EMPTY)))


def tree(left: Mu | None, label, right: Mu | None) -> Mu:
    left = construct(EMPTY) if left is None else left
    right = construct(EMPTY) if right is None else right
    return construct(Node(left, label, right))


def empty_tree() -> Mu:
    return construct(EMPTY)


def tree_to_tuple(m: Mu):
    """Nested ``(left, label, right)`` tuples with ``None`` for empty trees."""
    return fold_layers(
        lambda layer: None if isinstance(layer, Empty) else (layer.left, layer.label, layer.right),
        m)


def tuple_to_tree(t) -> Mu:
    # post-order with an explicit stack, so deep tuples do not hit the recursion limit
    done: list[Mu] = []
    stack: list = [(False, t)]
    while stack:
        built, item = stack.pop()
        if built:
            right, left = done.pop(), done.pop()
            done.append(construct(Node(left, item, right)))
        elif item is None:
            done.append(empty_tree())
        else:
            left, label, right = item
            stack.extend([(True, label), (False, right), (False, left)])
    return done[0]
