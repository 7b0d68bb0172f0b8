import math

import pytest
from hypothesis import given, strategies as st

from recschemes.basic import ana, bounded_equal, cata
from recschemes.core import construct, unroll
from recschemes.extra import (
    AddF, FromTF, Left, LitF, MinusF, NegF, ParenF, Right, accu, apo, cata_via_para, coaccu,
    either, foldl_prime, mutu, mutu_pair, para, para_via_cata, zygo,
)
from recschemes.functors import (
    EMPTY, NIL, Cons, Empty, Nil, Zero, conv_mu, conv_mu_inv, conv_nu, leaf, nat, nu_take,
    tree, tree_to_tuple,
)
from recschemes.gallery.entries import ack_direct
from recschemes.gallery.folds import (
    ack, chars, factorial, factorial_mutu, fib, fib_aux, is_even, is_odd, perfect, perfect_para,
    reverse_, sum_path, wc,
)
from recschemes.gallery.unfolds import insert, maphd, maphd_ana, merge, merge_coaccu
from recschemes.functors import nat_to_int
from recschemes.laws import check_bifunctor_laws, expr_layers

from strategies import int_lists, mu_lists, nats, trees


def length_alg(layer):
    return 0 if isinstance(layer, Nil) else 1 + layer.tail


def swap_pairs(layer):
    return layer.fmap(lambda p: (p[1], p[0]))


# para

def test_factorial():
    assert factorial(nat(0)) == 1
    assert factorial(nat(5)) == 120


@pytest.mark.parametrize("n", range(11))
def test_factorial_both_ways(n):
    assert factorial(nat(n)) == factorial_mutu(nat(n)) == math.factorial(n)


def test_wc():
    assert wc(chars("ab c")) == 2
    assert wc(chars("")) == 0
    assert wc(chars("  a\tb\nc  ")) == 3


@given(st.text(alphabet="ab \t\n", max_size=30))
def test_wc_matches_split(s):
    assert wc(chars(s)) == len(s.split())


@given(mu_lists)
def test_cata_para_interdefinable(xs):
    assert cata_via_para(length_alg, xs) == cata(length_alg, xs)

    def alg(layer):
        if isinstance(layer, Nil):
            return 0
        sub, r = layer.tail
        return r + len(conv_mu_inv(sub)) * layer.head
    assert para_via_cata(alg, xs) == para(alg, xs)


def test_para_on_empty():
    assert cata_via_para(length_alg, conv_mu([])) == 0


# apo

def test_insert():
    assert nu_take(insert(2, conv_nu([1, 3])), 10) == [1, 2, 3]
    assert nu_take(insert(5, conv_nu([])), 10) == [5]


@given(st.integers(-50, 50), int_lists)
def test_insert_sorted(y, xs):
    xs = sorted(xs)
    assert nu_take(insert(y, conv_nu(xs)), 100) == sorted(xs + [y])


@given(int_lists)
def test_maphd(xs):
    got = maphd(lambda x: x * 10, conv_nu(xs))
    assert nu_take(got, 100) == [x * 10 if i == 0 else x for i, x in enumerate(xs)]
    assert nu_take(maphd_ana(lambda x: x * 10, conv_nu(xs)), 100) == nu_take(got, 100)


def test_maphd_tail_is_spliced():
    xs = conv_nu([1, 2, 3])
    layer = maphd(lambda x: -x, xs).observe()
    assert layer.head == -1
    assert unroll(layer.tail, 10) == unroll(xs.observe().tail, 10)
    assert nu_take(layer.tail, 10) == [2, 3]


@given(int_lists)
def test_apo_without_left_is_ana(xs):
    def coalg(t):
        return Cons(t[0], t[1:]) if t else NIL
    via_apo = apo(lambda t: coalg(t).fmap(Right), tuple(xs))
    assert nu_take(via_apo, 100) == nu_take(ana(coalg, tuple(xs)), 100)


def test_either():
    assert either(len, abs, Left("ab")) == 2
    assert either(len, abs, Right(-3)) == 3


# zygo and mutu

def complete(d, label=0):
    t = construct(EMPTY)
    for _ in range(d):
        t = tree(t, label, t)
    return t


def test_perfect():
    assert perfect(complete(3))
    assert perfect(construct(EMPTY))
    assert not perfect(tree(leaf(1), 2, None))


@given(trees)
def test_perfect_both_ways(t):
    assert perfect(t) == perfect_para(t)


@given(trees)
def test_para_is_zygo_with_construct(t):
    def alg(layer):
        if isinstance(layer, Empty):
            return 0
        (l, rl), (r, rr) = layer.left, layer.right
        return rl + rr + (layer.label if tree_to_tuple(l) is None else 1)

    # zygo hands the algebra (result, auxiliary); para hands (subterm, result)
    assert para(alg, t) == zygo(lambda layer: alg(swap_pairs(layer)), construct, t)


def test_fib():
    assert fib(nat(0)) == 0
    assert fib(nat(1)) == 1
    assert fib(nat(10)) == 55
    assert fib_aux(nat(0)) == 1


@pytest.mark.parametrize("n", range(41))
def test_even_odd(n):
    assert is_even(nat(n)) == (not is_odd(nat(n))) == (n % 2 == 0)


@given(nats)
def test_mutu_shares_one_pass(n):
    def f(layer):
        return 0 if isinstance(layer, Zero) else layer.pred[0] + layer.pred[1]

    def g(layer):
        return 1 if isinstance(layer, Zero) else layer.pred[0]

    both = lambda layer: (f(layer), g(layer))   # noqa: E731
    assert mutu_pair(f, g, n) == cata(both, n)
    first, second = mutu(f, g)
    assert (first(n), second(n)) == cata(both, n)


# accumulations

def test_reverse():
    assert conv_mu_inv(reverse_(conv_mu([1, 2, 3]))) == [3, 2, 1]


def test_sum_path():
    t = tree(None, 5, leaf(2))
    assert sum_path(t) == tree(None, 5, leaf(7))


def test_accu_on_empty():
    def alg(layer, b):
        return b * 10 if isinstance(layer, Nil) else layer.tail(b)
    assert accu(alg, conv_mu([]), 4) == 40


@given(mu_lists, st.integers(-5, 5))
def test_accu_is_uncurried_cata(xs, b):
    def alg(layer, acc):
        return acc if isinstance(layer, Nil) else layer.tail(acc + layer.head)
    curried = cata(lambda layer: lambda acc: alg(layer, acc), xs)
    assert accu(alg, xs, b) == curried(b)


def test_foldl_prime():
    assert foldl_prime(lambda b, a: b - a, conv_mu([]), 10) == 10
    assert foldl_prime(lambda b, a: b - a, conv_mu([1, 2, 3]), 10) == 4


@given(int_lists)
def test_foldl_prime_is_left_fold(xs):
    acc = 7
    for x in xs:
        acc = acc * 2 - x
    assert foldl_prime(lambda b, a: b * 2 - a, conv_mu(xs), 7) == acc


@given(int_lists, int_lists)
def test_coaccu_merge(xs, ys):
    xs, ys = sorted(xs), sorted(ys)
    a = merge(conv_nu(xs), conv_nu(ys))
    b = merge_coaccu(conv_nu(xs), conv_nu(ys))
    assert nu_take(a, 100) == nu_take(b, 100) == sorted(xs + ys)


def test_coaccu_is_ana_on_pairs():
    def coalg(sp):
        s, p = sp
        return NIL if s >= p else Cons(s, (s + 1, p))
    assert bounded_equal(coaccu(coalg, 0, 5), ana(coalg, (0, 5)), 10)
    assert nu_take(coaccu(lambda sp: NIL, 0, 5), 3) == []


# Ackermann

@pytest.mark.parametrize("m", range(4))
@pytest.mark.parametrize("n", range(4))
def test_ack(m, n):
    assert nat_to_int(ack(nat(m), nat(n))) == ack_direct(m, n)


def test_ack_values():
    assert nat_to_int(ack(nat(2), nat(3))) == 9
    assert nat_to_int(ack(nat(3), nat(3))) == 61


# bifunctors

def test_bifunctor_laws():
    assert check_bifunctor_laws(expr_layers(seed=3), n=1000).passed


def test_bimap_touches_positions_only():
    assert AddF(1, 2).bimap(str, float) == AddF("1", 2.0)
    assert MinusF(1, 2).bimap(str, float) == MinusF("1", 2.0)
    assert FromTF(1).bimap(str, float) == FromTF(1.0)
    assert LitF(4).bimap(str, float) == LitF(4)
    assert NegF(1).bimap(str, float) == NegF(1.0)
    assert ParenF(1).bimap(str, float) == ParenF("1")
