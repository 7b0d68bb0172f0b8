"""
Fixed points of functor signatures.

A shape is a class deriving from :class:`Functor`; every instance is one layer
whose recursive positions are mapped by :meth:`Functor.fmap`.  ``Mu`` wraps a
layer whose positions hold further ``Mu`` values (finite, strict data).  ``Nu``
packages a seed with a coalgebra and is observed one layer at a time, so it may
describe infinite data.  The only way from ``Nu`` to ``Mu`` is
:func:`nu_to_mu`, which needs fuel.
"""
from __future__ import annotations

import gc
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Any, Callable, ClassVar


DEFAULT_FUEL = 1_000_000


class Functor:
    """One layer of a recursive shape.

    Subclasses implement ``fmap``, which must touch recursive positions only
    and call ``f`` on them in a fixed left-to-right order.  Shapes with a
    function-typed recursive position (a continuation) set ``finitary`` to
    False; for those, ``fmap`` composes under the function and the children
    cannot be enumerated.
    """

    __slots__ = ()
    finitary: ClassVar[bool] = True

    def fmap(self, f: Callable[[Any], Any]) -> Functor:
        raise NotImplementedError


def fmap(f, layer: Functor) -> Functor:
    return layer.fmap(f)


def children(layer: Functor) -> tuple[Functor, list]:
    """Split a finitary layer into a shape with integer holes and its children."""
    kids: list = []
    push = kids.append

    def hole(child):
        push(child)
        return len(kids) - 1

    return layer.fmap(hole), kids


class FuelExhausted(Exception):
    """Raised when an expansion budget runs out before a result is reached."""

    def __init__(self, fuel: int):
        super().__init__(f"fuel exhausted after {fuel} steps")
        self.fuel = fuel


class Fuel:
    """A countdown of permitted coalgebra expansions.

    ``None`` as the budget means unlimited.
    """

    __slots__ = ("initial", "remaining")

    def __init__(self, remaining: int | None = DEFAULT_FUEL):
        if remaining is not None and remaining < 0:
            raise ValueError("fuel must be non-negative")
        self.initial = remaining
        self.remaining = remaining

    def spend(self) -> None:
        if self.remaining is None:
            return
        if self.remaining == 0:
            raise FuelExhausted(self.initial)
        self.remaining -= 1


def as_fuel(fuel) -> Fuel:
    return fuel if isinstance(fuel, Fuel) else Fuel(fuel)


class Mu:
    """A finite tree of functor layers.

    Equality and hashing walk the tree with an explicit stack, so very deep
    values (long lists) compare without hitting the recursion limit.
    """

    __slots__ = ("node", "_hash")

    def __init__(self, node: Functor):
        object.__setattr__(self, "node", node)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Mu is immutable")

    def __repr__(self):
        return f"Mu({self.node!r})"

    def __eq__(self, other):
        if not isinstance(other, Mu):
            return NotImplemented
        stack = [(self, other)]
        while stack:
            a, b = stack.pop()
            if a is b:
                continue
            if not isinstance(a, Mu) or not isinstance(b, Mu):
                if a != b:
                    return False
                continue
            if type(a.node) is not type(b.node):
                return False
            if not a.node.finitary:
                if a.node != b.node:
                    return False
                continue
            shape_a, kids_a = children(a.node)
            shape_b, kids_b = children(b.node)
            if shape_a != shape_b or len(kids_a) != len(kids_b):
                return False
            stack.extend(zip(kids_a, kids_b))
        return True

    def __hash__(self):
        if self._hash is None:
            value = fold_layers(hash, self, opaque=lambda m: hash(m.node))
            object.__setattr__(self, "_hash", value)
        return self._hash


def construct(layer: Functor) -> Mu:
    return Mu(layer)


def destructure(m: Mu) -> Functor:
    return m.node


@dataclass(frozen=True, eq=False)
class Nu:
    """Codata: a seed together with the coalgebra that unfolds it."""

    seed: Any
    step: Callable[[Any], Functor] = field(repr=False)

    def observe(self) -> Functor:
        step = self.step
        return step(self.seed).fmap(lambda s: Nu(s, step))


def pack(seed, step) -> Nu:
    return Nu(seed, step)


def observe(n: Nu) -> Functor:
    return n.observe()


def fold_layers(alg, m: Mu, *, with_subterms: bool = False, opaque=None):
    """Bottom-up fold of a ``Mu`` with an explicit stack.

    With ``with_subterms`` each recursive position is handed to ``alg`` as a
    ``(subterm, result)`` pair instead of the bare result.  ``opaque``, when
    given, replaces the fold at non-finitary nodes.
    """
    if opaque is not None and not m.node.finitary:
        return opaque(m)
    if not m.node.finitary:
        rec = (lambda c: (c, fold_layers(alg, c, with_subterms=True))) if with_subterms \
            else (lambda c: fold_layers(alg, c))
        return alg(m.node.fmap(rec))
    shape, kids = children(m.node)
    stack = [(shape, kids, [])]
    while True:
        shape, kids, results = stack[-1]
        if len(results) < len(kids):
            child = kids[len(results)]
            if child.node.finitary:
                stack.append((*children(child.node), []))
            else:
                results.append(fold_layers(alg, child, with_subterms=with_subterms,
                                           opaque=opaque))
            continue
        if with_subterms:
            value = alg(shape.fmap(lambda i: (kids[i], results[i])))
        else:
            value = alg(shape.fmap(results.__getitem__))
        stack.pop()
        if not stack:
            return value
        stack[-1][2].append(value)


@contextmanager
def _gc_paused():
    # Deep unfolds allocate millions of short-lived frames; the cyclic
    # collector would rescan them over and over.
    was_enabled = gc.isenabled()
    gc.disable()
    try:
        yield
    finally:
        if was_enabled:
            gc.enable()


def refold(alg, coalg, seed, fuel) -> Any:
    """Unfold ``seed`` with ``coalg`` and fold the call tree with ``alg``.

    Uses an explicit worklist; every coalgebra application spends one unit of
    ``fuel`` (a :class:`Fuel` or an int).
    """
    budget = as_fuel(fuel)
    spend = budget.spend

    def lazily(s):
        return refold(alg, coalg, s, budget)

    spend()
    layer = coalg(seed)
    if not layer.finitary:
        return alg(layer.fmap(lazily))
    with _gc_paused():
        shape, seeds = children(layer)
        n, done = len(seeds), 0
        stack = []
        push, pop = stack.append, stack.pop
        results = []
        try:
            while True:
                if done < n:
                    spend()
                    layer = coalg(seeds[done])
                    if layer.finitary:
                        push((shape, seeds, results, n, done))
                        shape, seeds = children(layer)
                        n, done, results = len(seeds), 0, []
                    else:
                        results.append(alg(layer.fmap(lazily)))
                        done += 1
                    continue
                value = alg(shape.fmap(results.__getitem__)) if n else alg(shape)
                if not stack:
                    return value
                shape, seeds, results, n, done = pop()
                results.append(value)
                done += 1
        except BaseException:
            # free the worklist now; the traceback would otherwise keep it
            # alive after the collector is switched back on
            stack.clear()
            raise


def nu_to_mu(n: Nu, fuel=DEFAULT_FUEL) -> Mu:
    """Materialise codata that turns out to be finite within ``fuel`` layers."""
    return refold(construct, observe, n, fuel)


def mu_to_nu(m: Mu) -> Nu:
    return Nu(m, destructure)


class _Cut:
    __slots__ = ()

    def __repr__(self):
        return "..."


CUT = _Cut()


def unroll(n: Nu, depth: int):
    """Observe ``n`` down to ``depth`` layers; deeper positions become ``CUT``.

    The result is a plain tree of layers and is comparable with ``==``, which
    is how codata is compared throughout the library.
    """
    if depth <= 0:
        return CUT
    return n.observe().fmap(lambda c: unroll(c, depth - 1))


def unroll_layer(layer: Functor, depth: int):
    """Like :func:`unroll` for a layer whose positions already hold ``Nu``."""
    return layer.fmap(lambda c: unroll(c, depth))


def node_count(m: Mu) -> int:
    return fold_layers(lambda layer: 1 + sum(children(layer)[1]), m)


def depth(m: Mu) -> int:
    return fold_layers(lambda layer: 1 + max(children(layer)[1], default=0), m)
