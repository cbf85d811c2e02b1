"""Exact computations in the Jonquières subgroup of the planar Cremona group over Q."""

from .arith import Poly, RatFunc, Rat, X, delta, delta_iter, poly_shift, rf_add, rf_inv, rf_mul, rf_shift
from .jonquieres import JonqElement, alpha, apply, classify, compose, generator, inverse, mu, order, s
from .words import Word, commutator, evaluate, iterated_commutator, reduce

__version__ = "0.1.0"
