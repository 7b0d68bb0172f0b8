"""
Monadic and comonadic schemes.

Effects are passed in as a :class:`Monad` object (``unit``/``bind``) and a
sequencing function ``seq(M, layer)`` that turns a layer of computations into
a computation of a layer.  Everything is deterministic: logging replaces
printing, and randomness is a pure splitmix64 state threaded through a state
monad.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable

from .basic import ana, cata
from .core import DEFAULT_FUEL, Functor, as_fuel, children, construct
from .functors import Empty, Node


class Monad:
    def unit(self, x):
        raise NotImplementedError

    def bind(self, m, k):
        raise NotImplementedError

    def join(self, mm):
        return self.bind(mm, lambda m: m)

    def fmap(self, f, m):
        return self.bind(m, lambda x: self.unit(f(x)))

    def then(self, m, n):
        return self.bind(m, lambda _: n)

    def observe(self, m):
        """A plain value that determines ``m``, for equality tests."""
        return m


class IdentityMonad(Monad):
    def unit(self, x):
        return x

    def bind(self, m, k):
        return k(m)


@dataclass(frozen=True)
class Some:
    value: Any


class _Nothing:
    __slots__ = ()

    def __repr__(self):
        return "NOTHING"


NOTHING = _Nothing()


class OptionMonad(Monad):
    def unit(self, x):
        return Some(x)

    def bind(self, m, k):
        if m is NOTHING:
            return NOTHING
        return k(m.value)


@dataclass(frozen=True)
class Logged:
    value: Any
    log: tuple = ()


class LogMonad(Monad):
    """Writer over tuples; entries keep emission order."""

    def unit(self, x):
        return Logged(x)

    def bind(self, m, k):
        r = k(m.value)
        return Logged(r.value, m.log + r.log)

    def observe(self, m):
        return m.value, m.log


def tell(entry) -> Logged:
    return Logged((), (entry,))


@dataclass(frozen=True)
class State:
    run: Callable[[Any], tuple]

    def __call__(self, s):
        return self.run(s)


class StateMonad(Monad):
    """State threaded as ``s -> (value, s')``.

    ``observe`` runs a computation from each of ``probes``.
    """

    def __init__(self, probes=(0, 1, 7)):
        self.probes = tuple(probes)

    def unit(self, x):
        return State(lambda s: (x, s))

    def bind(self, m, k):
        def run(s):
            a, s2 = m.run(s)
            return k(a).run(s2)
        return State(run)

    def observe(self, m):
        return tuple(m.run(s) for s in self.probes)


def get_state() -> State:
    return State(lambda s: (s, s))


def put_state(s_new) -> State:
    return State(lambda s: ((), s_new))


def modify_state(f) -> State:
    return State(lambda s: ((), f(s)))


_MASK = (1 << 64) - 1


def splitmix64(state: int) -> tuple[int, int]:
    """One step of splitmix64: ``(output, next_state)``."""
    state = (state + 0x9E3779B97F4A7C15) & _MASK
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31), state


class SeededRandomMonad(StateMonad):
    """State monad over a splitmix64 generator state."""

    def random_int(self, lo: int = -(2 ** 31), hi: int = 2 ** 31 - 1) -> State:
        span = hi - lo + 1

        def run(s):
            out, s2 = splitmix64(s)
            return lo + out % span, s2
        return State(run)

    def run(self, m: State, seed: int):
        return m.run(seed & _MASK)[0]


IDENTITY = IdentityMonad()
OPTION = OptionMonad()
LOG = LogMonad()
STATE = StateMonad()
RANDOM = SeededRandomMonad()


# sequencings

def l_to_r(M: Monad, layer):
    if isinstance(layer, Empty):
        return M.unit(layer)
    label = layer.label
    return M.bind(layer.left, lambda l: M.bind(layer.right, lambda r: M.unit(Node(l, label, r))))


def r_to_l(M: Monad, layer):
    if isinstance(layer, Empty):
        return M.unit(layer)
    label = layer.label
    return M.bind(layer.right, lambda r: M.bind(layer.left, lambda l: M.unit(Node(l, label, r))))


def seq_in_order(M: Monad, layer: Functor):
    """Run the recursive positions of any finitary layer left to right."""
    shape, kids = children(layer)

    def go(i, acc):
        if i == len(kids):
            return M.unit(shape.fmap(lambda j: acc[j]))
        return M.bind(kids[i], lambda x: go(i + 1, acc + (x,)))

    return go(0, ())


def purity_holds(M: Monad, seq, layer) -> bool:
    """``seq . fmap unit == unit`` at one layer."""
    return M.observe(seq(M, layer.fmap(M.unit))) == M.observe(M.unit(layer))


def join_commutation_sides(M: Monad, seq, layer):
    """Both sides of ``seq . fmap join == join . fmap seq . seq`` at one layer.

    ``layer`` holds doubly wrapped computations.  Returns the two monadic
    values; they need not agree, since sequencings are not required to be
    distributive laws.
    """
    lhs = seq(M, layer.fmap(M.join))
    rhs = M.join(M.fmap(lambda inner: seq(M, inner), seq(M, layer)))
    return lhs, rhs


def effects_once(seq, layer) -> bool:
    """Heuristic: every child's effect runs exactly once.

    Each recursive position logs its own index; the combined log must be a
    permutation of those indices.
    """
    shape, kids = children(layer)
    tagged = shape.fmap(lambda i: LOG.then(tell(i), LOG.unit(i)))
    log = seq(LOG, tagged).log
    return sorted(log) == list(range(len(kids)))


# schemes

def cataM(alg_m, m):
    return cata(alg_m, m)


def mcata(M: Monad, seq, alg, m):
    """Fold where children are sequenced by ``seq`` before ``alg`` runs."""
    return cata(lambda layer: M.bind(seq(M, layer), alg), m)


def mhylo(M: Monad, seq, alg, coalg, seed, fuel=DEFAULT_FUEL):
    """Monadic hylomorphism; each coalgebra call costs one unit of fuel.

    Recursion follows the monad's own evaluation order, so for state-like
    monads the work (and fuel spending) happens when the computation runs.
    """
    budget = as_fuel(fuel)

    def go(c):
        budget.spend()
        return M.bind(coalg(c), lambda layer: M.bind(seq(M, layer.fmap(go)), alg))

    return go(seed)


def mana(M: Monad, seq, coalg, seed, fuel=DEFAULT_FUEL):
    """Monadic unfold into a fully built ``Mu`` (effects must finish first)."""
    return mhylo(M, seq, lambda layer: M.unit(construct(layer)), coalg, seed, fuel)


# comonads

class Comonad:
    def extract(self, w):
        raise NotImplementedError

    def extend(self, f, w):
        raise NotImplementedError


class IdentityComonad(Comonad):
    def extract(self, w):
        return w

    def extend(self, f, w):
        return f(w)


class EnvComonad(Comonad):
    """Values are ``(env, a)`` pairs; the environment is read-only."""

    def extract(self, w):
        return w[1]

    def extend(self, f, w):
        return w[0], f(w)


ID_COMONAD = IdentityComonad()
ENV = EnvComonad()


def dist_identity(layer):
    return layer


def dist_env(w):
    env, layer = w
    return layer.fmap(lambda x: (env, x))


def wana(W: Comonad, dist, coalg, start):
    """Comonadic unfold: ``coalg`` sees the whole context ``w c`` at each step."""
    return ana(lambda w: dist(W.extend(coalg, w)), start)
