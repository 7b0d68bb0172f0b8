"""Catamorphism, anamorphism, hylomorphism and metamorphism."""
from __future__ import annotations

from .core import (
    DEFAULT_FUEL, Mu, Nu, construct, destructure, fold_layers, node_count,
    observe, refold, unroll,
)


def cata(alg, m: Mu):
    """Fold ``m`` bottom-up, replacing every constructor with ``alg``."""
    return fold_layers(alg, m)


def ana(coalg, seed) -> Nu:
    """Unfold ``seed`` into codata; nothing is computed until observed."""
    return Nu(seed, coalg)


def hylo(alg, coalg, seed, fuel=DEFAULT_FUEL):
    """``alg . fmap (hylo alg coalg) . coalg``, run on an explicit stack.

    Termination depends on ``coalg`` being recursive at ``seed``; each
    coalgebra application costs one unit of fuel and
    :class:`~recschemes.core.FuelExhausted` is raised when it runs out.
    """
    return refold(alg, coalg, seed, fuel)


def cata_via_hylo(alg, m: Mu):
    return hylo(alg, destructure, m, fuel=node_count(m))


def ana_via_hylo(coalg, seed) -> Nu:
    # Out° is corecursive: the unfold is one lazy layer per observation,
    # so this is hylo Out° coalg evaluated by need.
    return Nu(seed, coalg)


def meta(coalg, alg, m: Mu) -> Nu:
    """Fold with ``alg``, then unfold the result with ``coalg``."""
    return ana(coalg, cata(alg, m))


def identity_refold(m: Mu) -> Mu:
    return hylo(construct, destructure, m, fuel=node_count(m))


def bounded_equal(a: Nu, b: Nu, depth: int) -> bool:
    return unroll(a, depth) == unroll(b, depth)


__all__ = [
    "cata", "ana", "hylo", "cata_via_hylo", "ana_via_hylo", "meta",
    "identity_refold", "bounded_equal", "observe",
]
