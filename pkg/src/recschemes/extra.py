"""
Paramorphisms, apomorphisms, zygomorphisms, mutumorphisms, their duals,
and accumulations.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable

from .basic import ana, cata
from .core import Mu, Nu, construct, fold_layers
from .functors import Cons


@dataclass(frozen=True)
class Left:
    value: Any


@dataclass(frozen=True)
class Right:
    value: Any


def either(on_left, on_right, e):
    if isinstance(e, Left):
        return on_left(e.value)
    return on_right(e.value)


def fst(pair):
    return pair[0]


def snd(pair):
    return pair[1]


# paramorphism

def para(alg, m: Mu):
    """Fold where ``alg`` sees ``(subterm, result)`` at every recursive position."""
    return fold_layers(alg, m, with_subterms=True)


def cata_via_para(alg, m: Mu):
    return para(lambda layer: alg(layer.fmap(snd)), m)


def para_via_cata(alg, m: Mu):
    return cata(lambda layer: (construct(layer.fmap(fst)), alg(layer)), m)[1]


# apomorphism

def apo(coalg, seed) -> Nu:
    """Unfold where ``coalg`` may finish a position with ``Left(codata)``.

    ``Right(seed)`` positions keep unfolding.  Spliced codata is observed
    as is, layer for layer.
    """
    def step(e):
        if isinstance(e, Left):
            return e.value.observe().fmap(Left)
        return coalg(e.value)

    return Nu(Right(seed), step)


# mutumorphism and zygomorphism

def mutu(alg1, alg2):
    """Two folds defined in terms of each other, sharing one pass.

    Both algebras receive the layer with ``(a, b)`` pairs in the recursive
    positions; the result is the pair of functions ``Mu -> a`` and ``Mu -> b``.
    """
    def both(layer):
        return alg1(layer), alg2(layer)

    return (lambda m: cata(both, m)[0]), (lambda m: cata(both, m)[1])


def mutu_pair(alg1, alg2, m: Mu):
    """Both results of :func:`mutu` from a single pass over ``m``."""
    return cata(lambda layer: (alg1(layer), alg2(layer)), m)


def zygo(alg1, alg2, m: Mu):
    main, _ = mutu(alg1, lambda layer: alg2(layer.fmap(snd)))
    return main(m)


# accumulations

def accu(alg, m: Mu, acc):
    """Fold into a function of an accumulating parameter, then apply it.

    ``alg(layer, acc)`` gets a layer whose recursive positions are functions
    from the accumulator to results.
    """
    return cata(lambda layer: lambda b: alg(layer, b), m)(acc)


def foldl_prime(step, xs: Mu, e):
    """Left fold expressed as a right fold into functions."""
    def alg(layer):
        if not isinstance(layer, Cons):
            return lambda b: b
        a, g = layer.head, layer.tail
        return lambda b: g(step(b, a))

    return cata(alg, xs)(e)


def coaccu(coalg, seed, param) -> Nu:
    return ana(coalg, (seed, param))


# bifunctors and mutually recursive codata

class Bifunctor:
    """One layer of one of a pair of mutually recursive shapes."""

    def bimap(self, f: Callable, g: Callable) -> Bifunctor:
        raise NotImplementedError


@dataclass(frozen=True)
class Nu1:
    seed: Any
    step1: Callable = field(repr=False)
    step2: Callable = field(repr=False)

    def observe(self) -> Bifunctor:
        s1, s2 = self.step1, self.step2
        return s1(self.seed).bimap(lambda s: Nu1(s, s1, s2), lambda s: Nu2(s, s1, s2))


@dataclass(frozen=True)
class Nu2:
    seed: Any
    step1: Callable = field(repr=False)
    step2: Callable = field(repr=False)

    def observe(self) -> Bifunctor:
        s1, s2 = self.step1, self.step2
        return s2(self.seed).bimap(lambda s: Nu1(s, s1, s2), lambda s: Nu2(s, s1, s2))


def comutu(c1, c2, seed) -> tuple[Nu1, Nu2]:
    """Unfold one seed into a pair of mutually referring codata values."""
    return Nu1(seed, c1, c2), Nu2(seed, c1, c2)


# ExprF e t = Add' e t | Minus' e t | FromT' t

class ExprF(Bifunctor):
    pass


@dataclass(frozen=True)
class AddF(ExprF):
    expr: Any
    term: Any

    def bimap(self, f, g):
        return AddF(f(self.expr), g(self.term))


@dataclass(frozen=True)
class MinusF(ExprF):
    expr: Any
    term: Any

    def bimap(self, f, g):
        return MinusF(f(self.expr), g(self.term))


@dataclass(frozen=True)
class FromTF(ExprF):
    term: Any

    def bimap(self, f, g):
        return FromTF(g(self.term))


# TermF e t = Lit' Int | Neg' t | Paren' e

class TermF(Bifunctor):
    pass


@dataclass(frozen=True)
class LitF(TermF):
    value: int

    def bimap(self, f, g):
        return self


@dataclass(frozen=True)
class NegF(TermF):
    term: Any

    def bimap(self, f, g):
        return NegF(g(self.term))


@dataclass(frozen=True)
class ParenF(TermF):
    expr: Any

    def bimap(self, f, g):
        return ParenF(f(self.expr))
