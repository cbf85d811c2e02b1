import json
import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cremona.arith import ONE, ZERO, Poly, RatFunc, X
from cremona.jonquieres import (
    IndeterminacyError,
    JonqElement,
    alpha,
    apply,
    classify,
    compose,
    generator,
    inverse,
    mu,
    order,
    s,
)
from cremona.randgen import rand_integer_root_product, rand_jonq, rand_ratfunc

from conftest import ratfuncs, small_rats

I = JonqElement.identity()


def test_generators():
    assert s(1) == JonqElement(1, 1, 0)
    assert alpha(X**2) == JonqElement(0, 1, X**2)
    assert mu(X) == JonqElement(0, X, 0)
    assert generator("mu", X) == mu(X)
    with pytest.raises(ValueError, match="multiplier must be nonzero"):
        mu(0)


def test_mu_alpha_conjugation():
    assert mu(X) * alpha(1) * mu(X).inverse() == alpha(X)


def test_s_alpha_conjugation():
    assert s(1) * alpha(X) * s(1).inverse() == alpha(X - 1)


def test_identity_is_neutral():
    e = JonqElement("1/2", RatFunc(X + 1, X - 3), RatFunc(X**2))
    assert e * I == e and I * e == e


def test_compose_closed_form():
    e1 = JonqElement(2, X, 1)
    e2 = JonqElement(-1, X + 1, X)
    # e2 first: x -> x - 1, then g1 is evaluated at x - 1
    g1 = RatFunc(X).shift(1)
    assert compose(e1, e2) == JonqElement(1, g1 * RatFunc(X + 1), g1 * RatFunc(X) + 1)


def test_inverse_examples():
    f = RatFunc(X**2 - 3, X + 1)
    assert inverse(alpha(f)) == alpha(-f)
    assert inverse(s("3/4")) == s("-3/4")
    e = JonqElement(1, X, 1)
    expected = JonqElement(-1, RatFunc(ONE, X - 1), RatFunc(Poly([-1]), X - 1))
    assert inverse(e) == expected
    assert e * expected == I and expected * e == I


def test_apply_examples():
    assert apply(alpha(X**2), (2, 3)) == (2, 7)
    assert apply(s(1), (0, 0)) == (1, 0)
    with pytest.raises(IndeterminacyError, match="indeterminacy"):
        apply(mu(RatFunc(ONE, X)), (0, 1))


def test_order_examples():
    assert order(mu(-1)) == 2
    assert (mu(-1) * mu(-1)).is_identity()
    assert order(s(1)) == math.inf
    assert order(alpha(X)) == math.inf
    assert order(I) == 1
    assert order(JonqElement(0, -1, X**3)) == 2


def test_classify_examples():
    tag = classify(alpha(X**3))
    assert tag.is_alpha and tag.alpha_degree == 3
    assert tag.in_A(3) and not tag.in_A(2)
    assert classify(JonqElement(0, 1, RatFunc(ONE, X))).general
    tag = classify(I)
    assert tag.is_identity and all(tag.in_A(n) for n in range(6))
    assert classify(mu(X)).is_mu
    assert classify(s(2)).is_translation
    assert classify(JonqElement(1, X, 0)).general


def test_json_round_trip_schema():
    data = alpha(X).to_json()
    assert data == {"t": "0", "g": {"num": ["1"], "den": ["1"]}, "f": {"num": ["0", "1"], "den": ["1"]}}
    e = JonqElement("-2/3", RatFunc(X, X + 5), RatFunc(Poly(["1/2"]), X**2 + 1))
    assert JonqElement.from_json(json.loads(json.dumps(e.to_json()))) == e


def test_group_axioms_1000_seeded_triples():
    rng = random.Random(7)
    for _ in range(1000):
        a, b, c = rand_jonq(rng), rand_jonq(rng), rand_jonq(rng)
        assert (a * b) * c == a * (b * c)
        assert a * I == a == I * a
        assert a * a.inverse() == I == a.inverse() * a


@given(ratfuncs(), ratfuncs(), ratfuncs(nonzero=True), ratfuncs(nonzero=True), small_rats)
def test_five_relations(f, f2, g, g2, t):
    assert alpha(f + f2) == alpha(f) * alpha(f2)
    assert mu(g * g2) == mu(g) * mu(g2)
    assert mu(g) * alpha(f) * mu(g).inverse() == alpha(f * g)
    assert s(t) * alpha(f) * s(t).inverse() == alpha(f.shift(t))
    assert s(t) * mu(g) * s(t).inverse() == mu(g.shift(t))


@given(st.integers(0, 10**6), st.integers(-4, 4), st.integers(-4, 4))
def test_apply_is_an_action(seed, x, y):
    rng = random.Random(seed)
    e1, e2 = rand_jonq(rng), rand_jonq(rng)
    try:
        rhs = apply(e1, apply(e2, (x, y)))
        lhs = apply(e1 * e2, (x, y))
    except IndeterminacyError:
        return
    assert lhs == rhs


@given(st.integers(0, 10**6))
def test_finite_order_is_exact(seed):
    rng = random.Random(seed)
    f = rand_ratfunc(rng)
    for e in (JonqElement(0, -1, f), JonqElement(0, 1, f), JonqElement(0, 1, 0)):
        k = order(e)
        if k != math.inf:
            assert (e**k).is_identity()
            assert all(not (e**j).is_identity() for j in range(1, k))
        else:
            assert all(not (e**j).is_identity() for j in range(1, 5))


def test_integer_root_products_are_torsion_free():
    rng = random.Random(3)
    for _ in range(200):
        g = rand_integer_root_product(rng)
        e = JonqElement(0, g, rand_ratfunc(rng))
        assert order(e) == math.inf
        assert not (e**2).is_identity()
