"""Unfolds: generators, merging, apomorphic edits and run-length decoding."""
from __future__ import annotations

from ..basic import ana
from ..core import Nu
from ..course import Op, Ret, futu
from ..extra import Left, Right, apo, coaccu
from ..functors import NIL, Cons, Nil, head_nu, null_nu, tail_nu


def unfoldr(g, seed) -> Nu:
    """``g`` returns ``None`` to stop or ``(element, next_seed)``."""
    def coalg(s):
        out = g(s)
        return NIL if out is None else Cons(out[0], out[1])
    return ana(coalg, seed)


def linspace(s, e, n) -> Nu:
    step = (e - s) / (n + 1)
    return ana(lambda i: Cons(i, i + step) if i < e else NIL, s)


def linspace_unfoldr(s, e, n) -> Nu:
    step = (e - s) / (n + 1)
    return unfoldr(lambda i: (i, i + step) if i < e else None, s)


def from_(n: int) -> Nu:
    return unfoldr(lambda k: (k, k + 1), n)


def _merge_step(pair):
    x, y = pair
    if null_nu(x) and null_nu(y):
        return NIL
    if null_nu(y) or (not null_nu(x) and head_nu(x) < head_nu(y)):
        return Cons(head_nu(x), (tail_nu(x), y))
    return Cons(head_nu(y), (x, tail_nu(y)))


def merge(x: Nu, y: Nu) -> Nu:
    return ana(_merge_step, (x, y))


def merge_coaccu(x: Nu, y: Nu) -> Nu:
    """The same merge with the second list as the carried parameter."""
    return coaccu(_merge_step, x, y)


def maphd(f, xs: Nu) -> Nu:
    """Apply ``f`` to the head only; the tail is spliced in unchanged."""
    def coalg(n):
        layer = n.observe()
        if isinstance(layer, Nil):
            return NIL
        return Cons(f(layer.head), Left(layer.tail))
    return apo(coalg, xs)


def maphd_ana(f, xs: Nu) -> Nu:
    """``maphd`` as a plain unfold that rebuilds the tail layer by layer."""
    def coalg(e):
        layer = e.value.observe()
        if isinstance(layer, Nil):
            return NIL
        head = f(layer.head) if isinstance(e, Left) else layer.head
        return Cons(head, Right(layer.tail))
    return ana(coalg, Left(xs))


def insert(y, xs: Nu) -> Nu:
    """Insert ``y`` into an ascending codata list."""
    def coalg(n):
        layer = n.observe()
        if isinstance(layer, Nil):
            return Cons(y, Left(n))
        if y <= layer.head:
            return Cons(y, Left(n))
        return Cons(layer.head, Right(layer.tail))
    return apo(coalg, xs)


def _rld_dec(runs):
    if not runs:
        return NIL
    (n, c), rest = runs[0], runs[1:]
    if n <= 0:
        raise ValueError(f"run lengths must be positive, got {n}")
    batch = Ret(rest)
    for _ in range(n):
        batch = Op(Cons(c, batch))
    return batch.layer


def rld(runs) -> Nu:
    """Decode ``(count, item)`` runs, emitting each run as one batch."""
    return futu(_rld_dec, tuple(runs))


def rld_ana(runs) -> Nu:
    def coalg(rs):
        if not rs:
            return NIL
        (n, c), rest = rs[0], rs[1:]
        if n <= 0:
            raise ValueError(f"run lengths must be positive, got {n}")
        return Cons(c, rest if n == 1 else ((n - 1, c),) + rest)
    return ana(coalg, tuple(runs))


def rld_oracle(runs) -> list:
    return [c for n, c in runs for _ in range(n)]
