"""Seeded pseudo-random elements for property checks.

Degrees are at most 4 and coefficient numerators/denominators at most 20 in
absolute value.  Every generator takes an explicit ``random.Random`` so the
checks that use them are reproducible from a single integer seed.
"""

from __future__ import annotations

import random

from .arith import ONE, Poly, Rat, RatFunc, X
from .jonquieres import JonqElement

MAX_DEGREE = 4
MAX_COEFF = 20
DEFAULT_SEED = 42


def rand_rat(rng: random.Random, nonzero: bool = False) -> Rat:
    while True:
        q = Rat(rng.randint(-MAX_COEFF, MAX_COEFF), rng.randint(1, MAX_COEFF))
        if q or not nonzero:
            return q


def rand_small_rat(rng: random.Random) -> Rat:
    return Rat(rng.randint(-5, 5), rng.randint(1, 3))


def rand_poly(rng: random.Random, max_degree: int = MAX_DEGREE, nonzero=False) -> Poly:
    while True:
        d = rng.randint(0, max_degree)
        p = Poly(rand_rat(rng) for _ in range(d + 1))
        if p or not nonzero:
            return p


def rand_ratfunc(rng: random.Random, max_degree: int = MAX_DEGREE, nonzero=False) -> RatFunc:
    num = rand_poly(rng, max_degree, nonzero=nonzero)
    # denominators of degree <= 2 keep the products in composition tests small
    den = rand_poly(rng, min(2, max_degree), nonzero=True)
    return RatFunc(num, den)


def rand_jonq(rng: random.Random) -> JonqElement:
    return JonqElement(
        rand_small_rat(rng), rand_ratfunc(rng, nonzero=True), rand_ratfunc(rng)
    )


def rand_integer_root_product(rng: random.Random, span: int = 4) -> RatFunc:
    """A nonconstant ``prod (X - i)^k_i`` with finitely many nonzero ``k_i``."""
    while True:
        g = RatFunc(ONE)
        for i in range(-span, span + 1):
            k = rng.randint(-2, 2) if rng.random() < 0.4 else 0
            if k:
                g = g * RatFunc(X - i) ** k
        if not g.is_one():
            return g


def rand_elementary(rng: random.Random, max_degree: int = MAX_DEGREE):
    from .elementary import ElementaryAut

    return ElementaryAut(
        rand_rat(rng, nonzero=True),
        rand_rat(rng, nonzero=True),
        rand_rat(rng),
        rand_poly(rng, max_degree),
    )
