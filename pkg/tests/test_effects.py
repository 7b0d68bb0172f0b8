import random

import pytest
from hypothesis import given, settings, strategies as st

from recschemes.basic import ana, cata, hylo
from recschemes.core import construct, destructure, node_count
from recschemes.effects import (
    ENV, ID_COMONAD, IDENTITY, LOG, NOTHING, OPTION, RANDOM, STATE, Logged, Some, State,
    cataM, dist_env, dist_identity, effects_once, get_state, join_commutation_sides, l_to_r,
    mana, mcata, mhylo, modify_state, purity_holds, r_to_l, seq_in_order, splitmix64, tell,
    wana,
)
from recschemes.functors import (
    EMPTY, NIL, Cons, Empty, Nil, Node, leaf, nu_take, tree, tree_to_tuple,
)
from recschemes.gallery.folds import tree_depth
from recschemes.gallery.monadic import print_tree, print_tree_seq, ran_tree
from recschemes.laws import list_layers, tree_layers

from strategies import int_lists, mu_lists, trees

CASES = 500


def effectful(M, rng):
    """A random computation in ``M`` together with a random Kleisli arrow."""
    a, b, k = rng.randint(-3, 3), rng.randint(-5, 5), rng.randint(2, 4)
    x = rng.randint(-20, 20)
    if M is IDENTITY:
        return x, lambda v: a * v + b
    if M is OPTION:
        m = NOTHING if rng.random() < 0.2 else Some(x)
        return m, lambda v: NOTHING if v % k == 0 else Some(a * v + b)
    if M is LOG:
        return Logged(x, (rng.randint(0, 9),)), lambda v: Logged(a * v + b, (v,))
    if M is STATE:
        return State(lambda s: (x + s, s * k)), lambda v: State(lambda s: (v * a, s + b))
    if M is RANDOM:
        m = RANDOM.fmap(lambda r: r + x, RANDOM.random_int(0, 9))
        return m, lambda v: RANDOM.fmap(lambda r: r * a + v, RANDOM.random_int(-5, 5))
    raise AssertionError(M)


MONADS = [("identity", IDENTITY), ("option", OPTION), ("log", LOG), ("state", STATE), ("random", RANDOM)]


@pytest.mark.parametrize("name,M", MONADS)
def test_monad_laws(name, M):
    rng = random.Random(name)
    for _ in range(CASES):
        m, f = effectful(M, rng)
        _, g = effectful(M, rng)
        x = rng.randint(-20, 20)
        obs = M.observe
        assert obs(M.bind(M.unit(x), f)) == obs(f(x))
        assert obs(M.bind(m, M.unit)) == obs(m)
        assert obs(M.bind(M.bind(m, f), g)) == obs(M.bind(m, lambda v: M.bind(f(v), g)))


def test_splitmix_is_deterministic():
    assert splitmix64(0) == splitmix64(0)
    assert splitmix64(0)[0] != splitmix64(1)[0]
    assert RANDOM.run(RANDOM.random_int(0, 9), 5) == RANDOM.run(RANDOM.random_int(0, 9), 5)


@pytest.mark.parametrize("seq", [l_to_r, r_to_l, seq_in_order])
@pytest.mark.parametrize("name,M", MONADS)
def test_purity(seq, name, M):
    for layer in tree_layers(seed=11).take(CASES):
        assert purity_holds(M, seq, layer)


@pytest.mark.parametrize("name,M", MONADS)
def test_generic_purity_on_lists(name, M):
    for layer in list_layers(seed=12).take(CASES):
        assert purity_holds(M, seq_in_order, layer)


def test_join_commutation_fails_for_log():
    inner = lambda first, second: LOG.then(tell(first), LOG.unit(tell(second)))   # noqa: E731
    c = Node(inner("A", "C"), 0, inner("B", "D"))
    lhs, rhs = join_commutation_sides(LOG, l_to_r, c)
    assert lhs.log == ("A", "C", "B", "D")
    assert rhs.log == ("A", "B", "C", "D")
    assert LOG.observe(lhs) != LOG.observe(rhs)


def test_join_commutation_holds_for_identity():
    for layer in tree_layers(seed=13).take(CASES):
        lhs, rhs = join_commutation_sides(IDENTITY, l_to_r, layer)
        assert lhs == rhs


def test_print_tree_orders():
    t = tree(leaf(1), 2, leaf(3))
    assert print_tree(t) == (1, 3, 2)
    assert print_tree_seq(t, l_to_r) == (1, 3, 2)
    assert print_tree_seq(t, r_to_l) == (3, 1, 2)


def test_print_tree_empty():
    assert print_tree(tree(None, 0, None)) == (0,)
    assert print_tree(construct(EMPTY)) == ()
    assert print_tree_seq(construct(EMPTY)) == ()


def post_order(t):
    tup = tree_to_tuple(t)
    out = []

    def go(node):
        if node is None:
            return
        l, a, r = node
        go(l)
        go(r)
        out.append(a)
    go(tup)
    return tuple(out)


@given(trees)
def test_print_tree_is_post_order(t):
    assert print_tree(t) == print_tree_seq(t) == post_order(t)


def sum_alg(layer):
    return 0 if isinstance(layer, Empty) else layer.left + layer.label + layer.right


@given(trees)
def test_mcata_with_pure_algebra_is_cata(t):
    for M in (IDENTITY, OPTION, LOG, STATE):
        got = mcata(M, l_to_r, lambda layer: M.unit(sum_alg(layer)), t)
        assert M.observe(got) == M.observe(M.unit(cata(sum_alg, t)))


@given(trees)
def test_mhylo_with_pure_coalgebra_is_mcata(t):
    def alg(layer):
        return LOG.then(tell(sum_alg(layer)), LOG.unit(sum_alg(layer)))
    got = mhylo(LOG, l_to_r, alg, lambda s: LOG.unit(destructure(s)), t, fuel=node_count(t))
    assert LOG.observe(got) == LOG.observe(mcata(LOG, l_to_r, alg, t))


def test_identity_mhylo_is_hylo():
    def coalg(n):
        return NIL if n == 0 else Cons(n, n - 1)

    def alg(layer):
        return 1 if isinstance(layer, Nil) else layer.head * layer.tail
    assert mhylo(IDENTITY, seq_in_order, alg, coalg, 10) == hylo(alg, coalg, 10) == 3628800


@given(trees)
def test_state_counts_nodes(t):
    def alg(layer):
        if isinstance(layer, Empty):
            return STATE.unit(())
        return modify_state(lambda s: s + 1)
    counted = mcata(STATE, l_to_r, alg, t)
    _, final = counted.run(0)
    assert final == node_count(t) // 2   # k labelled nodes come with k + 1 empties


@given(trees)
def test_cataM_state_counts_nodes(t):
    def alg(layer):
        if isinstance(layer, Empty):
            return STATE.unit(())
        return STATE.then(layer.left, STATE.then(layer.right, modify_state(lambda s: s + 1)))
    _, final = cataM(alg, t).run(0)
    assert final == cata(lambda l: 0 if isinstance(l, Empty) else 1 + l.left + l.right, t)


def test_get_state_reads():
    assert STATE.bind(get_state(), lambda s: STATE.unit(s * 2)).run(4) == (8, 4)


def test_ran_tree_reproducible():
    assert ran_tree(4, seed=9) == ran_tree(4, seed=9)
    assert ran_tree(4, seed=9) != ran_tree(4, seed=10)


def test_ran_tree_zero_is_empty():
    assert tree_to_tuple(ran_tree(0, seed=1)) is None


@pytest.mark.parametrize("d", range(7))
def test_ran_tree_depth(d):
    t = ran_tree(d, seed=3)
    assert tree_depth(t) == d
    assert node_count(t) == 2 ** (d + 1) - 1   # complete: 2^d - 1 labels plus 2^d empties


def test_ran_tree_rejects_negative():
    with pytest.raises(ValueError):
        ran_tree(-1, seed=0)


def test_mana_logs_in_sequence_order():
    def coalg(n):
        if n == 0:
            return LOG.unit(EMPTY)
        return LOG.then(tell(n), LOG.unit(Node(n - 1, n, n - 1)))
    got = mana(LOG, l_to_r, coalg, 2)
    assert got.log == (2, 1, 1)
    assert tree_depth(got.value) == 2


def test_right_comb_log_order():
    # a right-leaning comb logs its spine top-down under pre-order effects
    def coalg(n):
        if n == 0:
            return LOG.unit(EMPTY)
        return LOG.then(tell(n), LOG.unit(Node(0, n, n - 1)))
    assert mana(LOG, l_to_r, coalg, 4).log == (4, 3, 2, 1)
    assert mana(LOG, r_to_l, coalg, 4).log == (4, 3, 2, 1)


@pytest.mark.parametrize("seq", [l_to_r, r_to_l, seq_in_order])
def test_effects_run_once(seq):
    for layer in tree_layers(seed=14).take(100):
        assert effects_once(seq, layer)


def test_effects_once_catches_duplication():
    def twice(M, layer):
        if isinstance(layer, Empty):
            return M.unit(layer)
        return M.then(layer.left, l_to_r(M, layer))
    assert not effects_once(twice, Node(0, 1, 2))


def step(t):
    return Cons(t[0], t[1:]) if t else NIL


@given(int_lists)
def test_wana_identity_is_ana(xs):
    got = wana(ID_COMONAD, dist_identity, step, tuple(xs))
    assert nu_take(got, 100) == nu_take(ana(step, tuple(xs)), 100)


@given(st.integers(-5, 5), int_lists)
def test_wana_env_reads_environment(k, xs):
    def coalg(w):
        env, t = w
        return Cons(t[0] + env, t[1:]) if t else NIL
    got = wana(ENV, dist_env, coalg, (k, tuple(xs)))
    assert nu_take(got, 100) == [x + k for x in xs]


def test_wana_nil():
    assert nu_take(wana(ENV, dist_env, lambda w: NIL, (0, ())), 5) == []


@settings(max_examples=50)
@given(mu_lists)
def test_log_mcata_over_lists_logs_heads_in_reverse(xs):
    def alg(layer):
        if isinstance(layer, Nil):
            return LOG.unit(0)
        return LOG.then(tell(layer.head), LOG.unit(layer.head + layer.tail))
    got = mcata(LOG, seq_in_order, alg, xs)
    heads = list(cata(lambda l: () if isinstance(l, Nil) else (l.head,) + l.tail, xs))
    assert got.log == tuple(reversed(heads))
    assert got.value == sum(heads)
