"""
Recursion schemes over explicit fixed points of functor signatures.

Data is built from one-layer shapes (:class:`Functor` subclasses) tied into
finite values with :class:`Mu` or lazily observed codata with :class:`Nu`.
Folds, unfolds and refolds come in the usual families; refolds that may not
terminate take a fuel budget and raise :class:`FuelExhausted`.
"""
from .core import (
    DEFAULT_FUEL, CUT, Fuel, FuelExhausted, Functor, Mu, Nu, construct, depth,
    destructure, fmap, mu_to_nu, node_count, nu_to_mu, observe, pack, unroll,
)
from .basic import ana, ana_via_hylo, bounded_equal, cata, cata_via_hylo, hylo, meta
from .extra import (
    Left, Right, accu, apo, coaccu, comutu, either, foldl_prime, mutu, para, zygo,
)
from .course import Cofree, Free, Op, chrono, dyna, eval_free, extract, futu, histo, index, offset
from .course import Ret as Pure
from .effects import (
    IDENTITY, LOG, OPTION, RANDOM, STATE, Monad, cataM, l_to_r, mana, mcata, mhylo, r_to_l, wana,
)
from .indexed import HFunctor, IMu, IndexWitnessError, icata, iin
from .functors import (
    EMPTY, NIL, ZERO, Cons, Empty, Get, Nil, Node, Put, Ret, Succ, Zero,
    conv_mu, conv_mu_inv, conv_nu, conv_nu_inv, nat, nat_to_int, nu_take,
)

__all__ = [
    "DEFAULT_FUEL", "CUT", "Fuel", "FuelExhausted", "Functor", "Mu", "Nu", "construct", "depth",
    "destructure", "fmap", "mu_to_nu", "node_count", "nu_to_mu", "observe", "pack", "unroll",
    "ana", "ana_via_hylo", "bounded_equal", "cata", "cata_via_hylo", "hylo", "meta",
    "Left", "Right", "accu", "apo", "coaccu", "comutu", "either", "foldl_prime", "mutu", "para",
    "zygo", "Cofree", "Free", "Op", "Pure", "chrono", "dyna", "eval_free", "extract", "futu",
    "histo", "index", "offset", "IDENTITY", "LOG", "OPTION", "RANDOM", "STATE", "Monad", "cataM",
    "l_to_r", "mana", "mcata", "mhylo", "r_to_l", "wana", "HFunctor", "IMu", "IndexWitnessError",
    "icata", "iin", "EMPTY", "NIL", "ZERO", "Cons", "Empty", "Get", "Nil", "Node", "Put", "Ret",
    "Succ", "Zero", "conv_mu", "conv_mu_inv", "conv_nu", "conv_nu_inv", "nat", "nat_to_int",
    "nu_take",
]
