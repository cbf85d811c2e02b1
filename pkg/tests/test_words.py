import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cremona import oracles
from cremona.arith import ONE, Poly, RatFunc, X, delta, delta_iter
from cremona.jonquieres import JonqElement, alpha, mu, s
from cremona.words import (
    UnboundGeneratorError,
    Word,
    commutator,
    evaluate,
    iterated_commutator,
    reduce,
)

S, A, B, M = (Word.gen(g) for g in "sabm")


def test_reduce_examples():
    assert reduce(S * S.inverse()) == Word()
    assert reduce(A**2 * A**3) == A**5
    assert reduce(A * B * B.inverse() * A) == A**2
    assert reduce(Word((("a", 2), ("a", -2), ("b", 1)))) == B


def test_zero_exponent_rejected():
    with pytest.raises(ValueError):
        Word((("a", 0),))


def test_evaluate_examples():
    env = {"m": mu(X), "a": alpha(1)}
    assert evaluate(M * A * M.inverse(), env) == alpha(X)
    for n in range(6):
        assert evaluate(M**n * A * M ** (-n), env) == alpha(Poly.monomial(n))
    assert evaluate(Word(), {}) == JonqElement.identity()


def test_unbound_generator():
    with pytest.raises(UnboundGeneratorError, match="unbound generator 'z'"):
        evaluate(Word.gen("z"), {})


def test_commutator_examples():
    assert commutator(A, A) == Word()
    for n in range(5):
        env = {"s": s(1), "a": alpha(Poly.monomial(n))}
        assert evaluate(commutator(S, A), env) == alpha(delta(Poly.monomial(n)))
    env = {"m": mu(X), "a": alpha(1)}
    assert evaluate(commutator(M, A), env) == alpha(X - 1)


def test_iterated_commutator_examples():
    env = {"s": s(1), "a": alpha(X**2)}
    # oracle: delta^2 X^2 = 2
    assert oracles.delta_power_of_monomial(2, 2) == [2]
    assert evaluate(iterated_commutator(S, A, 2), env) == alpha(2)
    for n in range(6):
        env = {"s": s(1), "a": alpha(Poly.monomial(n))}
        assert evaluate(iterated_commutator(S, A, n + 1), env).is_identity()
    assert iterated_commutator(S, A, 1) == commutator(S, A)


@pytest.mark.parametrize("n", range(1, 11))
def test_word_and_operator_routes_agree(n):
    env = {"s": s(1), "a": alpha(Poly.monomial(n))}
    for k in range(1, n + 1):
        value = evaluate(iterated_commutator(S, A, k), env)
        assert value == alpha(delta_iter(Poly.monomial(n), k))


letters = st.lists(st.tuples(st.sampled_from("abc"), st.integers(-2, 2).filter(bool)), max_size=6)


@given(letters)
def test_reduce_idempotent(ls):
    w = Word(tuple(ls))
    r = reduce(w)
    assert reduce(r) == r
    assert all(x[0] != y[0] for x, y in zip(r.letters, r.letters[1:]))


POOL = (s(1), s(-2), alpha(X**2), alpha(RatFunc(ONE, X + 1)), mu(X), mu(RatFunc(X - 1, X + 2)))


def _env(seed):
    rng = random.Random(seed)
    return {g: rng.choice(POOL) for g in "abc"}


@given(letters, st.integers(0, 10**6))
def test_evaluation_invariant_under_reduction(ls, seed):
    w = Word(tuple(ls))
    env = _env(seed)
    assert evaluate(reduce(w), env) == evaluate(w, env)


@given(letters, letters, st.integers(0, 10**6))
def test_evaluation_is_a_homomorphism(u, v, seed):
    u, v = Word(tuple(u)), Word(tuple(v))
    env = _env(seed)
    assert evaluate(u * v, env) == evaluate(u, env) * evaluate(v, env)
    assert evaluate(u.inverse(), env) == evaluate(u, env).inverse()


def test_reduction_invariance_1000_seeded():
    rng = random.Random(11)
    env = {g: e for g, e in zip("abc", (s(1), alpha(RatFunc(X, X + 2)), mu(X - 1)))}
    for _ in range(1000):
        w = Word(tuple((rng.choice("abc"), rng.choice((-2, -1, 1, 2))) for _ in range(rng.randint(0, 6))))
        assert evaluate(reduce(w), env) == evaluate(w, env)
