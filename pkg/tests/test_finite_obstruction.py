import itertools
import random

import pytest

from cremona.finite_obstruction import (
    MonomialElement,
    alpha_p,
    beta_p,
    birkhoff_min_dim,
    heisenberg_image,
    heisenberg_profile,
    is_prime,
    monomial_commutator,
    monomial_compose,
    monomial_relations,
    sigma,
)

PRIMES_97 = [p for p in range(2, 98) if is_prime(p)]


def test_is_prime():
    assert PRIMES_97[:6] == [2, 3, 5, 7, 11, 13] and len(PRIMES_97) == 25


@pytest.mark.parametrize("p", PRIMES_97)
def test_monomial_relations(p):
    rel = monomial_relations(p)
    assert len(rel) == 5 and all(rel.values())


def test_commutator_of_generators():
    assert monomial_commutator(sigma(5), alpha_p(5)) == beta_p(5)
    assert not alpha_p(5).is_identity() and (alpha_p(5) ** 4) != MonomialElement.identity(5)


def _elements(p):
    return [MonomialElement(a, b, n, p) for a in range(p) for b in range(p) for n in range(-3, 4)]


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_group_axioms_exhaustive(p):
    elems = _elements(p)
    e = MonomialElement.identity(p)
    for u in elems:
        assert u * u.inverse() == e and u.inverse() * u == e
        assert u * e == u and e * u == u
    rng = random.Random(p)
    for u, v, w in (rng.sample(elems, 3) for _ in range(2000)):
        assert (u * v) * w == u * (v * w)


def test_associativity_all_triples_p2():
    elems = _elements(2)
    for u, v, w in itertools.product(elems, repeat=3):
        assert (u * v) * w == u * (v * w)


@pytest.mark.parametrize("p", PRIMES_97)
def test_group_axioms_random(p):
    rng = random.Random(1000 + p)

    def rnd():
        return MonomialElement(rng.randrange(p), rng.randrange(p), rng.randint(-50, 50), p)

    for _ in range(100):
        u, v, w = rnd(), rnd(), rnd()
        assert (u * v) * w == u * (v * w)
        assert (u * u.inverse()).is_identity()


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11])
def test_heisenberg_projection_is_homomorphism(p):
    rng = random.Random(p)
    for _ in range(300):
        u = MonomialElement(rng.randrange(p), rng.randrange(p), rng.randint(-20, 20), p)
        v = MonomialElement(rng.randrange(p), rng.randrange(p), rng.randint(-20, 20), p)
        assert heisenberg_image(u * v) == heisenberg_image(u) * heisenberg_image(v)
        assert heisenberg_image(u.inverse()) == heisenberg_image(u).inverse()


def test_mismatched_primes():
    with pytest.raises(ValueError):
        monomial_compose(sigma(2), sigma(3))
    with pytest.raises(ValueError):
        MonomialElement(0, 0, 0, 4)


@pytest.mark.parametrize("p,classes", [(2, 5), (3, 11), (5, 29), (7, 55)])
def test_heisenberg_profile(p, classes):
    prof = heisenberg_profile(p)
    assert prof.order == p**3
    assert prof.num_classes == classes == p * p + p - 1
    assert prof.center_size == p and prof.derived_size == p
    assert prof.derived_equals_center
    assert prof.num_linear == p * p
    assert prof.irrep_dims == tuple([1] * (p * p) + [p] * (p - 1))
    assert prof.search_solutions == 1
    assert prof.consistent()


def test_profile_text_and_json():
    prof = heisenberg_profile(2)
    assert "1x4, 2x1" in prof.to_text()
    assert prof.to_json()["irrep_dims"] == [1, 1, 1, 1, 2]


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_birkhoff_min_dim(p):
    assert birkhoff_min_dim(p) == p


@pytest.mark.parametrize("p", [4, 11, 1])
def test_unsupported_p(p):
    with pytest.raises(ValueError):
        heisenberg_profile(p)
