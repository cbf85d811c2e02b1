"""Jonquières transformations ``(x, y) -> (x + t, g(x) y + f(x))`` over Q.

Products follow function composition: ``e1 * e2`` applies ``e2`` first.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Tuple, Union

from .arith import NEG_INF, ONE, ZERO, Poly, Rat, RatFunc, as_rat, as_ratfunc

INFINITY = math.inf


class IndeterminacyError(ValueError):
    """Raised when a transformation is evaluated where it is undefined."""


@dataclass(frozen=True)
class JonqElement:
    t: Rat
    g: RatFunc
    f: RatFunc

    def __post_init__(self):
        object.__setattr__(self, "t", as_rat(self.t))
        object.__setattr__(self, "g", as_ratfunc(self.g))
        object.__setattr__(self, "f", as_ratfunc(self.f))
        if self.g.is_zero():
            raise ValueError("multiplier must be nonzero")

    @classmethod
    def _raw(cls, t, g: RatFunc, f: RatFunc) -> "JonqElement":
        # trusted parts: t a Rat, g nonzero and f normalized
        e = object.__new__(cls)
        object.__setattr__(e, "t", t)
        object.__setattr__(e, "g", g)
        object.__setattr__(e, "f", f)
        return e

    @classmethod
    def identity(cls) -> "JonqElement":
        return _IDENTITY

    def is_identity(self) -> bool:
        return self.t == 0 and self.g.is_one() and self.f.is_zero()

    def __mul__(self, other: "JonqElement") -> "JonqElement":
        if not isinstance(other, JonqElement):
            return NotImplemented
        return compose(self, other)

    def inverse(self) -> "JonqElement":
        return inverse(self)

    def __pow__(self, k: int) -> "JonqElement":
        base = self if k >= 0 else inverse(self)
        k = abs(k)
        result = _IDENTITY
        while k:
            if k & 1:
                result = compose(result, base)
            base = compose(base, base)
            k >>= 1
        return result

    def __call__(self, point):
        return apply(self, point)

    def __str__(self):
        return format_element(self)

    def to_json(self) -> dict:
        return {"t": str(self.t), "g": self.g.to_json(), "f": self.f.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> "JonqElement":
        return cls(
            as_rat(data["t"]),
            RatFunc.from_json(data["g"]),
            RatFunc.from_json(data["f"]),
        )


_IDENTITY = JonqElement(Rat(0), RatFunc(ONE), RatFunc(ZERO))


def s(t) -> JonqElement:
    """Horizontal translation ``(x, y) -> (x + t, y)``."""
    return JonqElement(as_rat(t), RatFunc(ONE), RatFunc(ZERO))


def alpha(f) -> JonqElement:
    """Shear ``(x, y) -> (x, y + f(x))``."""
    return JonqElement(Rat(0), RatFunc(ONE), as_ratfunc(f))


def mu(g) -> JonqElement:
    """Fibrewise scaling ``(x, y) -> (x, g(x) y)``; ``g`` must be nonzero."""
    g = as_ratfunc(g)
    if g.is_zero():
        raise ValueError("multiplier must be nonzero")
    return JonqElement(Rat(0), g, RatFunc(ZERO))


def generator(kind: str, param) -> JonqElement:
    try:
        make = {"s": s, "alpha": alpha, "a": alpha, "mu": mu, "m": mu}[kind]
    except KeyError:
        raise ValueError(f"unknown generator kind {kind!r}") from None
    return make(param)


def compose(e1: JonqElement, e2: JonqElement) -> JonqElement:
    # e2 first: x -> x + t2, then e1 sees x + t2, hence g1(X + t2), f1(X + t2)
    if e2.t:
        g1, f1 = e1.g.shift(-e2.t), e1.f.shift(-e2.t)
    else:
        g1, f1 = e1.g, e1.f
    return JonqElement._raw(e1.t + e2.t, g1 * e2.g, g1 * e2.f + f1)


def inverse(e: JonqElement) -> JonqElement:
    ginv = e.g.shift(e.t).inverse()
    return JonqElement._raw(-e.t, ginv, -(e.f.shift(e.t) * ginv))


def apply(e: JonqElement, point) -> Tuple[Rat, Rat]:
    x, y = (as_rat(c) for c in point)
    try:
        gx, fx = e.g(x), e.f(x)
    except ZeroDivisionError:
        raise IndeterminacyError(f"point in indeterminacy locus: x = {x}") from None
    return x + e.t, gx * y + fx


def order(e: JonqElement) -> Union[int, float]:
    """Exact order of ``e``; ``math.inf`` when ``e`` has infinite order.

    The translation coordinate of ``e**k`` is ``k*t``, so ``t != 0`` forces
    infinite order.  With ``t = 0`` the multiplier of ``e**k`` is ``g**k``;
    the only roots of unity in Q(X)^x are +1 and -1 (a nonconstant rational
    function has nonconstant powers, and Q has no other roots of unity),
    so ``g`` must be +-1 for finite order.  ``g = 1`` gives ``e**k = alpha(k f)``;
    ``g = -1`` gives an involution, since ``-(-y + f) + f = y``.
    """
    if e.t != 0:
        return INFINITY
    if e.g.is_one():
        return 1 if e.f.is_zero() else INFINITY
    if e.g == RatFunc(Poly((-1,))):
        return 2
    return INFINITY


@dataclass(frozen=True)
class FormTag:
    is_identity: bool = False
    is_alpha: bool = False
    alpha_degree: Optional[float] = None
    is_mu: bool = False
    is_translation: bool = False
    general: bool = False

    def in_A(self, n: int) -> bool:
        """Membership in the abelian group of shears by polynomials of degree <= n."""
        return self.is_alpha and self.alpha_degree <= n


def classify(e: JonqElement) -> FormTag:
    if e.is_identity():
        return FormTag(is_identity=True, is_alpha=True, alpha_degree=NEG_INF)
    if e.t == 0 and e.g.is_one():
        if e.f.is_polynomial():
            return FormTag(is_alpha=True, alpha_degree=e.f.num.degree)
        return FormTag(general=True)
    if e.t == 0 and e.f.is_zero():
        return FormTag(is_mu=True)
    if e.g.is_one() and e.f.is_zero():
        return FormTag(is_translation=True)
    return FormTag(general=True)


def format_element(e: JonqElement) -> str:
    """Recognized generator form when there is one, else ``(t, g, f)``."""
    if e.is_identity():
        return "identity"
    if e.t == 0 and e.g.is_one():
        return f"alpha({e.f})"
    if e.t == 0 and e.f.is_zero():
        return f"mu({e.g})"
    if e.g.is_one() and e.f.is_zero():
        return f"s({e.t})"
    return normal_form(e)


def normal_form(e: JonqElement) -> str:
    return f"({e.t}, {e.g}, {e.f})"
