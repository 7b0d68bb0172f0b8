"""
Executable checkers for the calculational laws of folds, unfolds and refolds.

Laws are certified on sampled cases, never proved: every report carries the
number of cases it evaluated.  Cases whose evaluation runs out of fuel are
counted separately instead of being dropped.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Any, Callable

from .basic import ana, cata, hylo
from .core import (
    DEFAULT_FUEL, FuelExhausted, Mu, Nu, construct, destructure, observe, unroll,
    unroll_layer,
)
from .extra import AddF, FromTF, LitF, MinusF, NegF, ParenF
from .functors import (
    EMPTY, NIL, ZERO, Cons, Empty, Get, Nil, Node, Put, Ret, Succ, conv_mu, conv_nu,
)
from .indexed import ConsF, NilF


@dataclass(frozen=True)
class Counterexample:
    input: Any
    lhs: Any
    rhs: Any

    def __str__(self):
        return f"input={self.input!r} lhs={self.lhs!r} rhs={self.rhs!r}"


@dataclass(frozen=True)
class LawReport:
    name: str
    cases: int
    counterexample: Counterexample | None = None
    exhausted: int = 0
    stage: str | None = None   # which part of a two-stage law failed
    recheck: Callable[[Any], bool] | None = field(default=None, repr=False, compare=False)

    @property
    def passed(self) -> bool:
        return self.counterexample is None

    def refails(self) -> bool:
        """Evaluate the law again at the counterexample; True if it still fails."""
        if self.counterexample is None or self.recheck is None:
            return False
        return not self.recheck(self.counterexample.input)

    def line(self) -> str:
        if self.passed:
            extra = f", {self.exhausted} fuel-exhausted" if self.exhausted else ""
            return f"{self.name}: PASS ({self.cases} cases{extra})"
        where = f"[{self.stage}] " if self.stage else ""
        return f"{self.name}: FAIL {where}{self.counterexample}"


# case generation

@dataclass(frozen=True)
class CaseGenerator:
    """Deterministic source of values: ``draw(rng, size)`` with a seeded rng."""

    draw: Callable[[random.Random, int], Any]
    seed: int = 0
    size: int = 10

    def take(self, n: int) -> list:
        rng = random.Random(self.seed)
        return [self.draw(rng, self.size) for _ in range(n)]

    def map(self, f) -> CaseGenerator:
        draw = self.draw
        return CaseGenerator(lambda rng, size: f(draw(rng, size)), self.seed, self.size)


def draw_int(rng: random.Random, size: int) -> int:
    return rng.randint(-size * 3, size * 3)


def draw_int_list(rng: random.Random, size: int) -> list[int]:
    return [draw_int(rng, size) for _ in range(rng.randint(0, size))]


def draw_tree(rng: random.Random, size: int) -> Mu:
    """A random binary tree of at most ``size`` nodes."""
    def go(budget):
        if budget <= 0 or rng.random() < 0.2:
            return construct(EMPTY)
        left = rng.randint(0, budget - 1)
        return construct(Node(go(left), draw_int(rng, size), go(budget - 1 - left)))
    return go(rng.randint(0, size))


def draw_nat(rng: random.Random, size: int) -> Mu:
    m = construct(ZERO)
    for _ in range(rng.randint(0, size)):
        m = construct(Succ(m))
    return m


def int_lists(seed=0, size=30) -> CaseGenerator:
    return CaseGenerator(draw_int_list, seed, size)


def mu_lists(seed=0, size=30) -> CaseGenerator:
    return int_lists(seed, size).map(conv_mu)


def trees(seed=0, size=15) -> CaseGenerator:
    return CaseGenerator(draw_tree, seed, size)


def nats(seed=0, size=20) -> CaseGenerator:
    return CaseGenerator(draw_nat, seed, size)


def list_layers(child: Callable[[random.Random, int], Any] = draw_int, seed=0, size=10) -> CaseGenerator:
    """ListF layers with an int payload; about one in five is ``Nil``."""
    def draw(rng, size):
        if rng.random() < 0.2:
            return NIL
        return Cons(draw_int(rng, size), child(rng, size))
    return CaseGenerator(draw, seed, size)


def tree_layers(child=draw_int, seed=0, size=10) -> CaseGenerator:
    def draw(rng, size):
        if rng.random() < 0.2:
            return EMPTY
        return Node(child(rng, size), draw_int(rng, size), child(rng, size))
    return CaseGenerator(draw, seed, size)


def nat_layers(child=draw_int, seed=0, size=10) -> CaseGenerator:
    def draw(rng, size):
        return ZERO if rng.random() < 0.2 else Succ(child(rng, size))
    return CaseGenerator(draw, seed, size)


def prog_layers(seed=0, size=10) -> CaseGenerator:
    def draw(rng, size):
        match rng.randrange(3):
            case 0:
                return Ret(draw_int(rng, size))
            case 1:
                return Put(rng.randrange(4), draw_int(rng, size), draw_int(rng, size))
        return Get(rng.randrange(4), Affine(*draw_affine(rng, size)))
    return CaseGenerator(draw, seed, size)


def expr_layers(seed=0, size=10) -> CaseGenerator:
    def draw(rng, size):
        i = lambda: draw_int(rng, size)   # noqa: E731
        return rng.choice([
            lambda: AddF(i(), i()), lambda: MinusF(i(), i()), lambda: FromTF(i()),
            lambda: LitF(i()), lambda: NegF(i()), lambda: ParenF(i()),
        ])()
    return CaseGenerator(draw, seed, size)


def vec_layers(seed=0, size=10) -> CaseGenerator:
    def draw(rng, size):
        return NilF() if rng.random() < 0.2 else ConsF(draw_int(rng, size), draw_int(rng, size))
    return CaseGenerator(draw, seed, size)


def draw_affine(rng: random.Random, size: int) -> tuple[int, int]:
    return rng.randint(-3, 3), rng.randint(-size, size)


@dataclass(frozen=True)
class Affine:
    """``x -> a*x + b``; printable, unlike a lambda."""
    a: int
    b: int

    def __call__(self, x):
        return self.a * x + self.b


# the checking loop

def _check(name, inputs, sides, eq=None, stage=None, cases_before=0) -> LawReport:
    eq = eq or (lambda a, b: a == b)

    def holds(x):
        lhs, rhs = sides(x)
        return eq(lhs, rhs)

    cases = exhausted = 0
    for x in inputs:
        try:
            lhs, rhs = sides(x)
        except FuelExhausted:
            exhausted += 1
            continue
        cases += 1
        if not eq(lhs, rhs):
            return LawReport(name, cases_before + cases, Counterexample(x, lhs, rhs),
                             exhausted, stage, holds)
    return LawReport(name, cases_before + cases, None, exhausted, None, holds)


def _compose(*fs):
    def h(x):
        for f in reversed(fs):
            x = f(x)
        return x
    return h


# HyloComp: hylo a c = a . fmap (hylo a c) . c

def check_computation(alg, coalg, gen, fuel=DEFAULT_FUEL, *, n=500, eq=None,
                      name="HyloComp") -> LawReport:
    def sides(seed):
        lhs = hylo(alg, coalg, seed, fuel)
        rhs = alg(coalg(seed).fmap(lambda s: hylo(alg, coalg, s, fuel)))
        return lhs, rhs
    return _check(name, gen.take(n), sides, eq)


# HyloRefl: id = a . c  iff  id = hylo a c

def check_reflection(alg, coalg, gen, fuel=DEFAULT_FUEL, *, n=500, eq=None,
                     name="HyloRefl") -> LawReport:
    """Check that ``(alg, coalg)`` is a reflection on the samples.

    Stage ``a.c=id`` checks the pointwise premise; stage ``hylo=id`` checks
    the refold.  A pair failing only the second stage would break the law.
    """
    inputs = gen.take(n)
    first = _check(name, inputs, lambda x: (alg(coalg(x)), x), eq, stage="a.c=id")
    if not first.passed:
        return first
    second = _check(name, inputs, lambda x: (hylo(alg, coalg, x, fuel), x), eq,
                    stage="hylo=id", cases_before=first.cases)
    return LawReport(name, second.cases, second.counterexample,
                     first.exhausted + second.exhausted, second.stage, second.recheck)


def check_ana_reflection(gen_nu, depth=10, *, n=500, name="AnaRefl") -> LawReport:
    """``ana out = id`` up to ``depth`` observations."""
    return _check(name, gen_nu.take(n),
                  lambda x: (unroll(ana(observe, x), depth), unroll(x, depth)))


# HyloFusion: h . hylo a c = hylo b c  <=  h . a = b . fmap h

def check_fusion(h, alg_a, alg_b, gen_layers, gen_mu, *, n=500, eq=None,
                 name="HyloFusion") -> LawReport:
    """Premise on generated layers, then the conclusion with ``c = in°``."""
    premise = _check(name, gen_layers.take(n),
                     lambda layer: (h(alg_a(layer)), alg_b(layer.fmap(h))), eq, stage="premise")
    if not premise.passed:
        return premise
    return _check(name, gen_mu.take(n),
                  lambda m: (h(cata(alg_a, m)), cata(alg_b, m)), eq,
                  stage="conclusion", cases_before=premise.cases)


def check_hylo_fusion(h, alg_a, alg_b, coalg, gen_layers, gen_seeds, fuel=DEFAULT_FUEL, *,
                      n=500, eq=None, name="HyloFusion") -> LawReport:
    """The same law over an arbitrary coalgebra.

    The premise is only sampled on generated layers, so a pass says nothing
    about layers the coalgebra produces but the generator never draws.
    """
    premise = _check(name, gen_layers.take(n),
                     lambda layer: (h(alg_a(layer)), alg_b(layer.fmap(h))), eq, stage="premise")
    if not premise.passed:
        return premise
    report = _check(name, gen_seeds.take(n),
                    lambda s: (h(hylo(alg_a, coalg, s, fuel)), hylo(alg_b, coalg, s, fuel)), eq,
                    stage="conclusion", cases_before=premise.cases)
    return report


# universal properties

def check_cata_universal(alg, candidate, gen_layers, *, n=500, eq=None,
                         name="CataUniversal") -> LawReport:
    """``candidate . In = alg . fmap candidate`` on layers whose positions hold ``Mu``."""
    return _check(name, gen_layers.take(n),
                  lambda layer: (candidate(construct(layer)), alg(layer.fmap(candidate))), eq)


def check_ana_universal(coalg, candidate, gen_seeds, depth=8, *, n=500,
                        name="AnaUniversal") -> LawReport:
    """``out . candidate = fmap candidate . coalg`` up to ``depth`` observations."""
    return _check(name, gen_seeds.take(n),
                  lambda s: (unroll_layer(candidate(s).observe(), depth),
                             unroll_layer(coalg(s).fmap(candidate), depth)))


# functor laws

def check_functor_laws(gen_layers, *, n=500, eq=None, name="Functor") -> LawReport:
    """``fmap id = id`` and ``fmap (f . g) = fmap f . fmap g`` for random affine f, g."""
    def draw(rng, size):
        return (gen_layers.draw(rng, size), Affine(*draw_affine(rng, size)),
                Affine(*draw_affine(rng, size)))

    def sides(case):
        layer, f, g = case
        return (layer.fmap(lambda x: x), layer.fmap(_compose(f, g))), (layer, layer.fmap(g).fmap(f))

    eq = eq or (lambda a, b: a == b)
    return _check(name, CaseGenerator(draw, gen_layers.seed, gen_layers.size).take(n), sides,
                  lambda a, b: eq(a[0], b[0]) and eq(a[1], b[1]))


def check_bifunctor_laws(gen_layers, *, n=500, name="Bifunctor") -> LawReport:
    def draw(rng, size):
        fs = [Affine(*draw_affine(rng, size)) for _ in range(4)]
        return gen_layers.draw(rng, size), fs

    def sides(case):
        layer, (f1, f2, g1, g2) = case
        ident = layer.bimap(lambda x: x, lambda x: x) == layer
        lhs = layer.bimap(_compose(f1, f2), _compose(g1, g2))
        rhs = layer.bimap(f2, g2).bimap(f1, g1)
        return (ident, lhs), (True, rhs)

    return _check(name, CaseGenerator(draw, gen_layers.seed, gen_layers.size).take(n), sides)


def check_hfunctor_laws(gen_layers, *, n=500, name="HFunctor") -> LawReport:
    def draw(rng, size):
        return (gen_layers.draw(rng, size), Affine(*draw_affine(rng, size)),
                Affine(*draw_affine(rng, size)))

    def sides(case):
        layer, f, g = case
        ident = layer.hfmap(lambda x: x) == layer
        return (ident, layer.hfmap(_compose(f, g))), (True, layer.hfmap(g).hfmap(f))

    return _check(name, CaseGenerator(draw, gen_layers.seed, gen_layers.size).take(n), sides)


def prog_layer_eq(a, b, probes=range(-3, 4)) -> bool:
    """Program layers are equal when their continuations agree on ``probes``."""
    match a, b:
        case Get(addr_a, k_a), Get(addr_b, k_b):
            return addr_a == addr_b and all(k_a(v) == k_b(v) for v in probes)
    return a == b


# HyloUniq on a finite domain

def _small_lists(payload, length):
    out = []
    for k in range(length + 1):
        out.extend(conv_mu(p) for p in itertools.product(payload, repeat=k))
    return out


def uniqueness_sweep(payload=(0, 1), max_len=2, max_carrier=3) -> LawReport:
    """Exhaustive check that the refold square has exactly one solution.

    The domain is every list over ``payload`` of at most ``max_len`` elements,
    closed under tails.  For each carrier ``{0..k-1}`` with ``k <= max_carrier``
    and each algebra on it, every function from the domain to the carrier is
    tried against ``x(In l) = alg(fmap x l)``.  Exactly one must satisfy it,
    and it must agree with ``cata``.
    """
    domain = _small_lists(payload, max_len)
    where = {m: i for i, m in enumerate(domain)}
    # each equation as (position, None) for Nil or (position, (payload index, tail position))
    equations = []
    for i, m in enumerate(domain):
        match destructure(m):
            case Nil():
                equations.append((i, None))
            case Cons(a, tail):
                equations.append((i, (payload.index(a), where[tail])))
    equations.sort(key=lambda e: e[1] is not None)   # cheap Nil test first

    cases = 0
    for k in range(1, max_carrier + 1):
        carrier = range(k)
        for table in itertools.product(carrier, repeat=1 + len(payload) * k):
            nil_value, cons = table[0], table[1:]
            cases += 1

            def square(x):
                for i, rhs in equations:
                    if rhs is None:
                        if x[i] != nil_value:
                            return False
                    elif x[i] != cons[rhs[0] * k + x[rhs[1]]]:
                        return False
                return True

            solutions = [x for x in itertools.product(carrier, repeat=len(domain)) if square(x)]

            def alg(layer, nil_value=nil_value, cons=cons, k=k):
                if isinstance(layer, Nil):
                    return nil_value
                return cons[payload.index(layer.head) * k + layer.tail]

            folded = tuple(cata(alg, m) for m in domain)
            if solutions != [folded]:
                return LawReport("HyloUniq[sweep]", cases,
                                 Counterexample((k, table), solutions, [folded]))
    return LawReport("HyloUniq[sweep]", cases)


# the shipped suite

def _sum_alg(layer):
    return 0 if isinstance(layer, Nil) else layer.head + layer.tail


def _length_alg(layer):
    return 0 if isinstance(layer, Nil) else 1 + layer.tail


def _length_direct(m: Mu) -> int:
    n = 0
    while isinstance(m.node, Cons):
        n, m = n + 1, m.node.tail
    return n


def _double(x):
    return 2 * x


def _sum_of_doubled(layer):
    # g in sum . map f = cata g, for f = double
    return 0 if isinstance(layer, Nil) else _double(layer.head) + layer.tail


def draw_mu_list(rng, size):
    return conv_mu(draw_int_list(rng, size))


def linspace_coalg(end=1.0, step=0.25):
    return lambda i: Cons(i, i + step) if i < end else NIL


def linspace_candidate(end=1.0, step=0.25):
    """An independent unfold that follows ``unfoldr``'s shape."""
    def unfold(i):
        def step_fn(j):
            return NIL if not j < end else Cons(j, j + step)
        return Nu(i, step_fn)
    return unfold


def countdown(k):
    return NIL if k <= 0 else Cons(k, k - 1)


def run_suite(seed: int = 42, cases: int = 500, *, sweep: bool = True) -> list[LawReport]:
    """Every law checker on its shipped instances, deterministically from ``seed``."""
    from .gallery.hylos import combine, geo, partition, sum_layer

    s = seed
    reports = [
        check_functor_laws(list_layers(seed=s), n=cases, name="Functor[ListF]"),
        check_functor_laws(tree_layers(seed=s + 1), n=cases, name="Functor[TreeF]"),
        check_functor_laws(nat_layers(seed=s + 2), n=cases, name="Functor[NatF]"),
        check_functor_laws(prog_layers(seed=s + 3), n=cases, eq=prog_layer_eq,
                           name="Functor[ProgF]"),
        check_bifunctor_laws(expr_layers(seed=s + 4), n=cases, name="Bifunctor[ExprF/TermF]"),
        check_hfunctor_laws(vec_layers(seed=s + 5), n=cases, name="HFunctor[VecF]"),
        check_cata_universal(_length_alg, _length_direct,
                             list_layers(draw_mu_list, seed=s + 6), n=cases,
                             name="CataUniversal[length]"),
        check_cata_universal(_sum_alg, lambda m: cata(_sum_alg, m),
                             list_layers(draw_mu_list, seed=s + 7), n=cases,
                             name="CataUniversal[sum]"),
        check_cata_universal(lambda l: 0 if isinstance(l, Empty) else 1 + l.left + l.right,
                             lambda t: cata(lambda l: 0 if isinstance(l, Empty)
                                            else 1 + l.left + l.right, t),
                             tree_layers(draw_tree, seed=s + 8), n=cases,
                             name="CataUniversal[size]"),
        check_ana_universal(linspace_coalg(), linspace_candidate(),
                            CaseGenerator(lambda rng, size: rng.uniform(-1.0, 1.0), s + 9),
                            n=cases, name="AnaUniversal[linspace]"),
        check_ana_universal(countdown, lambda k: ana(countdown, k),
                            CaseGenerator(lambda rng, size: rng.randint(-2, size), s + 10),
                            n=cases, name="AnaUniversal[countdown]"),
        check_computation(combine, partition, mu_lists(s + 11), n=cases, name="HyloComp[qsort]"),
        check_computation(construct, destructure, trees(s + 12), n=cases,
                          name="HyloComp[identity]"),
        check_computation(sum_layer, geo,
                          CaseGenerator(lambda rng, size: (rng.choice([-1, 1]) * rng.randint(1, 10**6), 0),
                                        s + 13),
                          fuel=100, n=max(1, cases // 10), name="HyloComp[zeno]"),
        check_reflection(construct, destructure, trees(s + 14), n=cases, name="HyloRefl[in]"),
        check_ana_reflection(int_lists(s + 15).map(conv_nu), n=cases, name="AnaRefl[out]"),
        check_fusion(_double, _sum_alg, _sum_of_doubled, list_layers(seed=s + 16),
                     mu_lists(s + 17), n=cases, name="HyloFusion[sum.map double]"),
    ]
    if sweep:
        reports.append(uniqueness_sweep())
    return reports


__all__ = [
    "Counterexample", "LawReport", "CaseGenerator", "Affine",
    "draw_int", "draw_int_list", "draw_tree", "draw_nat", "draw_mu_list",
    "int_lists", "mu_lists", "trees", "nats",
    "list_layers", "tree_layers", "nat_layers", "prog_layers", "expr_layers", "vec_layers",
    "check_computation", "check_reflection", "check_ana_reflection",
    "check_fusion", "check_hylo_fusion", "check_cata_universal", "check_ana_universal",
    "check_functor_laws", "check_bifunctor_laws", "check_hfunctor_laws", "prog_layer_eq",
    "uniqueness_sweep", "run_suite", "linspace_coalg", "linspace_candidate", "countdown",
]
