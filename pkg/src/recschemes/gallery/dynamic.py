"""Dynamic programming with memo-tables: LIS, LCS, Fibonacci."""
from __future__ import annotations

from itertools import combinations

from ..core import DEFAULT_FUEL, Mu
from ..course import Cofree, Ret, chrono, dyna, extract, histo, index, offset
from ..functors import NIL, Cons, Nil, Zero


class CountLimitReached(RuntimeError):
    pass


class Counter:
    """Counts algebra applications and table steps.

    With ``limit`` set, counting past it raises :class:`CountLimitReached`,
    which stops exponential computations once the point is made.
    """

    def __init__(self, limit: int | None = None):
        self.count = 0
        self.limit = limit

    def tick(self, n: int = 1):
        self.count += n
        if self.limit is not None and self.count > self.limit:
            raise CountLimitReached(f"more than {self.limit} steps")


# longest increasing subsequence

def _find_next(x, table: Cofree, counter):
    # best first component among later entries that start above x;
    # the empty suffix at the end of the table always qualifies
    best = 0
    while True:
        if counter is not None:
            counter.tick()
        layer = table.tail
        if isinstance(layer, Nil):
            return max(best, table.head[0])
        if x < layer.head:
            best = max(best, table.head[0])
        table = layer.tail


def lis_table(xs: Mu, counter: Counter | None = None):
    """``(a, b)``: LIS starting with the first element, and overall LIS."""
    def alg(layer):
        if counter is not None:
            counter.tick()
        if isinstance(layer, Nil):
            return 0, 0
        x, table = layer.head, layer.tail
        a = 1 + _find_next(x, table, counter)
        return a, max(a, extract(table)[1])
    return histo(alg, xs)


def lis(xs: Mu, counter: Counter | None = None) -> int:
    return lis_table(xs, counter)[1]


def lis_naive(xs, counter: Counter | None = None) -> tuple[int, int]:
    """The exponential definition on a Python sequence, recomputing shared suffixes."""
    xs = tuple(xs)
    if counter is not None:
        counter.tick()
    if not xs:
        return 0, 0
    x, rest = xs[0], xs[1:]
    a = 1 + max(lis_naive(rest[i:], counter)[0]
                for i in range(len(rest) + 1)
                if i == len(rest) or x < rest[i])
    b = max(a, lis_naive(rest, counter)[1])
    return a, b


def lis_brute(xs) -> int:
    """Largest strictly increasing subsequence, trying every subset."""
    xs = list(xs)
    for k in range(len(xs), 0, -1):
        for idx in combinations(range(len(xs)), k):
            picked = [xs[i] for i in idx]
            if all(a < b for a, b in zip(picked, picked[1:])):
                return k
    return 0


# longest common subsequence

def lcs_coalg(s2):
    """Enumerate the suffix pairs, shortening the second sequence first."""
    def g(seed):
        x, y = seed
        if not x and not y:
            return NIL
        if not y:
            return Cons(seed, (x[1:], s2))
        return Cons(seed, (x, y[1:]))
    return g


def lcs_alg(len2: int):
    def alg(layer):
        if isinstance(layer, Nil):
            return 0
        (x, y), table = layer.head, layer.tail
        if not x or not y:
            return 0
        if x[0] == y[0]:
            return index(table, offset(1, 1, len2)) + 1
        return max(index(table, offset(1, 0, len2)), index(table, offset(0, 1, len2)))
    return alg


def lcs(s1, s2, fuel=DEFAULT_FUEL) -> int:
    s1, s2 = tuple(s1), tuple(s2)
    return dyna(lcs_alg(len(s2)), lcs_coalg(s2), (s1, s2), fuel)


def lcs_chrono(s1, s2, fuel=DEFAULT_FUEL) -> int:
    """The same table, produced through single-layer batches."""
    s1, s2 = tuple(s1), tuple(s2)
    g = lcs_coalg(s2)
    return chrono(lcs_alg(len(s2)), lambda seed: g(seed).fmap(Ret), (s1, s2), fuel)


def lcs_dp(s1, s2) -> int:
    """Classic quadratic table."""
    s1, s2 = list(s1), list(s2)
    prev = [0] * (len(s2) + 1)
    for i in range(len(s1) - 1, -1, -1):
        cur = [0] * (len(s2) + 1)
        for j in range(len(s2) - 1, -1, -1):
            cur[j] = prev[j + 1] + 1 if s1[i] == s2[j] else max(prev[j], cur[j + 1])
        prev = cur
    return prev[0]


def subproblem_order(s1, s2) -> list:
    """Seeds in the order the LCS coalgebra visits them."""
    s1, s2 = tuple(s1), tuple(s2)
    g = lcs_coalg(s2)
    out, seed = [], (s1, s2)
    while True:
        layer = g(seed)
        if isinstance(layer, Nil):
            return out
        out.append(layer.head)
        seed = layer.tail


# Fibonacci reading two rows back in the table

def fib_histo(n: Mu) -> int:
    def alg(layer):
        if isinstance(layer, Zero):
            return 0
        table = layer.pred
        if isinstance(table.tail, Zero):
            return 1
        return extract(table) + extract(table.tail.pred)
    return histo(alg, n)
