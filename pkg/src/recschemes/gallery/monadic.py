"""Effectful folds and unfolds over trees, with logging and seeded randomness."""
from __future__ import annotations

from ..core import DEFAULT_FUEL, Mu
from ..effects import LOG, RANDOM, cataM, l_to_r, mana, mcata, tell
from ..functors import EMPTY, Empty, Node


def _print_alg(layer):
    if isinstance(layer, Empty):
        return LOG.unit(())
    return LOG.then(layer.left, LOG.then(layer.right, tell(layer.label)))


def print_tree(t: Mu) -> tuple:
    """Labels in post-order, by a fold whose carrier is a logged computation."""
    return cataM(_print_alg, t).log


def _print_elem(layer):
    if isinstance(layer, Empty):
        return LOG.unit(())
    return tell(layer.label)


def print_tree_seq(t: Mu, seq=l_to_r) -> tuple:
    """Labels logged by a monadic fold; ``seq`` fixes the order of subtrees."""
    return mcata(LOG, seq, _print_elem, t).log


def _gen(n):
    if n == 0:
        return RANDOM.unit(EMPTY)
    return RANDOM.fmap(lambda a: Node(n - 1, a, n - 1), RANDOM.random_int())


def ran_tree(depth: int, seed: int, fuel=DEFAULT_FUEL) -> Mu:
    """A complete tree of the given depth with pseudo-random labels."""
    if depth < 0:
        raise ValueError("depth must be non-negative")
    return RANDOM.run(mana(RANDOM, l_to_r, _gen, depth, fuel), seed)
