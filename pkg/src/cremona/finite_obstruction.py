"""Monomial maps and the mod-p Heisenberg group.

A monomial element ``(j1, j2, n)`` stands for the map
``(x1, x2) -> (w^j1 x1, x1^n w^j2 x2)`` with ``w`` a fixed primitive p-th
root of unity.  Roots of unity are never materialized: every identity is
exponent arithmetic mod p.

Reducing ``n`` mod p sends ``(j1, j2, n)`` to the unitriangular matrix
``(a, b, c) = (n, j1, j2)``, a homomorphism onto the Heisenberg group of
order p^3.  That finite group is small enough to enumerate, which is how its
conjugacy classes, center, derived subgroup and irreducible degrees are
obtained below.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, List, Tuple

SUPPORTED_PRIMES = (2, 3, 5, 7)


def is_prime(p: int) -> bool:
    return p >= 2 and all(p % q for q in range(2, int(p**0.5) + 1))


@dataclass(frozen=True)
class MonomialElement:
    j1: int
    j2: int
    n: int
    p: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        object.__setattr__(self, "j1", self.j1 % self.p)
        object.__setattr__(self, "j2", self.j2 % self.p)

    @classmethod
    def identity(cls, p: int) -> "MonomialElement":
        return cls(0, 0, 0, p)

    def is_identity(self) -> bool:
        return self.j1 == 0 and self.j2 == 0 and self.n == 0

    def __mul__(self, other: "MonomialElement") -> "MonomialElement":
        return monomial_compose(self, other)

    def inverse(self) -> "MonomialElement":
        return MonomialElement(-self.j1, self.n * self.j1 - self.j2, -self.n, self.p)

    def __pow__(self, k: int) -> "MonomialElement":
        base = self if k >= 0 else self.inverse()
        result = MonomialElement.identity(self.p)
        for _ in range(abs(k)):
            result = result * base
        return result

    def to_json(self) -> dict:
        return {"j1": self.j1, "j2": self.j2, "n": self.n, "p": self.p}


def monomial_compose(u: MonomialElement, v: MonomialElement) -> MonomialElement:
    """``u * v`` applies ``v`` first; ``x1^n`` picks up ``w^(n j1')``."""
    if u.p != v.p:
        raise ValueError(f"mismatched primes {u.p} and {v.p}")
    return MonomialElement(u.j1 + v.j1, u.n * v.j1 + u.j2 + v.j2, u.n + v.n, u.p)


def sigma(p: int) -> MonomialElement:
    """``(x, y) -> (x, x y)``."""
    return MonomialElement(0, 0, 1, p)


def alpha_p(p: int) -> MonomialElement:
    """``(x1, x2) -> (w x1, w x2)``."""
    return MonomialElement(1, 1, 0, p)


def beta_p(p: int) -> MonomialElement:
    """``(x1, x2) -> (x1, w x2)``."""
    return MonomialElement(0, 1, 0, p)


def monomial_commutator(u: MonomialElement, v: MonomialElement) -> MonomialElement:
    return u * v * u.inverse() * v.inverse()


def monomial_relations(p: int) -> Dict[str, bool]:
    sg, al, be = sigma(p), alpha_p(p), beta_p(p)
    return {
        "[sigma, alpha_p] = beta_p": monomial_commutator(sg, al) == be,
        "beta_p commutes with sigma": monomial_commutator(be, sg).is_identity(),
        "beta_p commutes with alpha_p": monomial_commutator(be, al).is_identity(),
        "alpha_p^p = 1": (al**p).is_identity(),
        "beta_p^p = 1": (be**p).is_identity(),
    }


# -- Heisenberg group mod p -----------------------------------------------------


@dataclass(frozen=True)
class HeisenbergElement:
    """Unitriangular matrix with superdiagonal ``a, b`` and corner ``c``."""

    a: int
    b: int
    c: int
    p: int

    def __post_init__(self):
        object.__setattr__(self, "a", self.a % self.p)
        object.__setattr__(self, "b", self.b % self.p)
        object.__setattr__(self, "c", self.c % self.p)

    def __mul__(self, other: "HeisenbergElement") -> "HeisenbergElement":
        return HeisenbergElement(
            self.a + other.a, self.b + other.b, self.c + other.c + self.a * other.b, self.p
        )

    def inverse(self) -> "HeisenbergElement":
        return HeisenbergElement(-self.a, -self.b, self.a * self.b - self.c, self.p)

    def is_identity(self) -> bool:
        return self.a == 0 and self.b == 0 and self.c == 0


def heisenberg_image(m: MonomialElement) -> HeisenbergElement:
    """Homomorphism from the monomial group (``n`` read mod p) onto the Heisenberg group."""
    return HeisenbergElement(m.n, m.j1, m.j2, m.p)


@dataclass
class GroupProfile:
    p: int
    order: int
    num_classes: int
    center_size: int
    derived_size: int
    num_linear: int
    irrep_dims: Tuple[int, ...]
    derived_equals_center: bool
    search_transcript_length: int
    search_solutions: int

    def consistent(self) -> bool:
        return (
            sum(d * d for d in self.irrep_dims) == self.order
            and len(self.irrep_dims) == self.num_classes
            and self.irrep_dims.count(1) == self.num_linear
            and self.search_solutions == 1
        )

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "order": self.order,
            "num_classes": self.num_classes,
            "center_size": self.center_size,
            "derived_size": self.derived_size,
            "num_linear": self.num_linear,
            "irrep_dims": list(self.irrep_dims),
            "derived_equals_center": self.derived_equals_center,
            "search_transcript_length": self.search_transcript_length,
            "search_solutions": self.search_solutions,
        }

    def to_text(self) -> str:
        dims = ", ".join(f"{d}x{self.irrep_dims.count(d)}" for d in sorted(set(self.irrep_dims)))
        return "\n".join(
            [
                f"Heisenberg group mod {self.p}: order {self.order}",
                f"  conjugacy classes: {self.num_classes}",
                f"  center: {self.center_size}, derived subgroup: {self.derived_size}"
                f" ({'equal' if self.derived_equals_center else 'different'})",
                f"  linear characters: {self.num_linear}",
                f"  irreducible degrees: {dims}",
                f"  uniqueness search: {self.search_transcript_length} multisets examined,"
                f" {self.search_solutions} solution(s)",
            ]
        )


def _mul(x, y, p):
    return ((x[0] + y[0]) % p, (x[1] + y[1]) % p, (x[2] + y[2] + x[0] * y[1]) % p)


def _inv(x, p):
    return ((-x[0]) % p, (-x[1]) % p, (x[0] * x[1] - x[2]) % p)


def _solve_degrees(order: int, num_classes: int, num_linear: int, p: int):
    """All multisets of p-powers with the right size, square sum and count of 1's."""
    powers = [1]
    while (powers[-1] * p) ** 2 <= order:
        powers.append(powers[-1] * p)
    examined = 0
    solutions: List[Tuple[int, ...]] = []
    for combo in itertools.combinations_with_replacement(powers, num_classes):
        examined += 1
        if sum(d * d for d in combo) == order and combo.count(1) == num_linear:
            solutions.append(combo)
    return solutions, examined


def heisenberg_profile(p: int) -> GroupProfile:
    if p not in SUPPORTED_PRIMES:
        raise ValueError(f"p must be one of {SUPPORTED_PRIMES}, got {p}")
    elems = list(itertools.product(range(p), repeat=3))
    order = len(elems)

    seen = set()
    num_classes = 0
    for h in elems:
        if h in seen:
            continue
        num_classes += 1
        for g in elems:
            seen.add(_mul(_mul(g, h, p), _inv(g, p), p))

    center = {z for z in elems if all(_mul(z, g, p) == _mul(g, z, p) for g in elems)}

    derived = {
        _mul(_mul(x, y, p), _mul(_inv(x, p), _inv(y, p), p), p) for x in elems for y in elems
    }
    frontier = set(derived)
    while frontier:
        new = {_mul(x, y, p) for x in frontier for y in derived} - derived
        derived |= new
        frontier = new

    num_linear = order // len(derived)
    solutions, examined = _solve_degrees(order, num_classes, num_linear, p)
    dims = solutions[0] if len(solutions) == 1 else ()
    return GroupProfile(
        p=p,
        order=order,
        num_classes=num_classes,
        center_size=len(center),
        derived_size=len(derived),
        num_linear=num_linear,
        irrep_dims=tuple(dims),
        derived_equals_center=derived == center,
        search_transcript_length=examined,
        search_solutions=len(solutions),
    )


def birkhoff_min_dim(p: int) -> int:
    """Smallest degree of an irreducible representation nontrivial on the center.

    Linear characters factor through the abelianization, so they kill the
    derived subgroup, which here is the center.  Any representation that is
    faithful on the center therefore contains a nonlinear constituent, and
    every nonlinear degree in the profile is p.
    """
    prof = heisenberg_profile(p)
    if not prof.consistent():
        raise RuntimeError(f"degree multiset for p={p} is not uniquely determined")
    if not prof.derived_equals_center:
        raise RuntimeError(f"derived subgroup differs from the center for p={p}")
    nonlinear = [d for d in prof.irrep_dims if d > 1]
    if not nonlinear or any(d != p for d in nonlinear):
        raise RuntimeError(f"unexpected nonlinear degrees {nonlinear} for p={p}")
    return min(nonlinear)
