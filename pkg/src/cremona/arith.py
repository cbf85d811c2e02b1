"""Exact univariate arithmetic over the rationals.

Scalars are ``gmpy2.mpq`` rationals (``Rat``); ints, Fractions and
``"p/q"`` strings are accepted wherever a scalar is expected.  :class:`Poly` is an
immutable dense polynomial (ascending coefficients, no trailing zeros) and
:class:`RatFunc` is a normalized quotient of two polynomials: numerator and
denominator coprime, denominator monic.  Normalized representations are
canonical, so ``==`` is mathematical equality.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable

from gmpy2 import mpq

Rat = mpq
RAT_TYPES = (int, Fraction, mpq)

# Degree of the zero polynomial; compares below every integer.
NEG_INF = float("-inf")



def as_rat(value) -> mpq:
    """Coerce an int, Fraction, mpq or ``"p/q"`` string to a Rat."""
    if type(value) is Rat:
        return value
    if isinstance(value, bool):
        raise TypeError(f"cannot interpret {value!r} as a rational")
    if isinstance(value, (int, str)):
        return mpq(value)
    if isinstance(value, Rational):
        return mpq(value.numerator, value.denominator)
    raise TypeError(f"cannot interpret {value!r} as a rational")


class Poly:
    """Immutable polynomial with rational coefficients in ascending order."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [as_rat(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def _raw(cls, coeffs: tuple) -> "Poly":
        # caller guarantees Rat entries with nonzero leading coefficient
        p = object.__new__(cls)
        object.__setattr__(p, "coeffs", coeffs)
        return p

    @classmethod
    def _trim(cls, cs: list) -> "Poly":
        while cs and cs[-1] == 0:
            cs.pop()
        return cls._raw(tuple(cs))

    @classmethod
    def const(cls, c) -> "Poly":
        return cls((c,))

    @classmethod
    def monomial(cls, n: int, c=1) -> "Poly":
        if n < 0:
            raise ValueError("monomial degree must be nonnegative")
        return cls([0] * n + [c])

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    def __reduce__(self):
        return (Poly, (self.coeffs,))

    # -- basic queries -------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def leading(self) -> mpq:
        return self.coeffs[-1] if self.coeffs else mpq(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def coeff(self, k: int) -> mpq:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else mpq(0)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, RAT_TYPES):
            return self.coeffs == Poly.const(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(("Poly", self.coeffs))

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        return self.to_str()

    def to_str(self, var: str = "X") -> str:
        """Render in the input syntax, highest degree first: ``3/2*X^2 - X + 1``."""
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if k == 0:
                body = str(a)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                body = mono if a == 1 else f"{a}*{mono}"
            parts.append((sign, body))
        head_sign, head = parts[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    # -- ring operations -----------------------------------------------

    def __neg__(self):
        return Poly._raw(tuple(-c for c in self.coeffs))

    def __add__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        cs = list(a)
        for i, c in enumerate(b):
            cs[i] += c
        return Poly._trim(cs)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, RAT_TYPES):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly._raw(())
        cs = [mpq(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                cs[i + j] += x * y
        return Poly._raw(tuple(cs))

    __rmul__ = __mul__

    def scale(self, c) -> "Poly":
        c = as_rat(c)
        if c == 0:
            return Poly._raw(())
        return Poly._raw(tuple(c * x for x in self.coeffs))

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly._raw((mpq(1),))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other: "Poly"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = len(other.coeffs) - 1
        lc = other.coeffs[-1]
        if len(rem) - 1 < db:
            return Poly._raw(()), self
        quo = [mpq(0)] * (len(rem) - db)
        for k in range(len(rem) - 1 - db, -1, -1):
            q = rem[k + db] / lc
            quo[k] = q
            if q:
                for j, c in enumerate(other.coeffs):
                    rem[k + j] -= q * c
        return Poly._trim(quo), Poly._trim(rem[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> "Poly":
        if not self.coeffs or self.coeffs[-1] == 1:
            return self
        return self.scale(1 / self.coeffs[-1])

    # -- evaluation and substitution -----------------------------------

    def __call__(self, x):
        acc = mpq(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose_linear(self, a, b) -> "Poly":
        """Return ``P(a*X + b)`` by Horner's rule."""
        a, b = as_rat(a), as_rat(b)
        acc: list = []
        for c in reversed(self.coeffs):
            # acc <- acc*(aX + b) + c
            nxt = [mpq(0)] * (len(acc) + 1)
            for i, x in enumerate(acc):
                nxt[i] += b * x
                nxt[i + 1] += a * x
            nxt[0] += c
            acc = nxt
        return Poly._trim(acc)

    def shift(self, t) -> "Poly":
        """Return ``P(X - t)``."""
        if len(self.coeffs) <= 1:
            return self
        t = as_rat(t)
        if t == 0:
            return self
        return self.compose_linear(1, -t)


def _as_poly(value):
    if isinstance(value, Poly):
        return value
    if isinstance(value, RAT_TYPES) and not isinstance(value, bool):
        return Poly.const(value)
    return None


X = Poly((0, 1))
ZERO = Poly(())
ONE = Poly((1,))


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd; ``gcd(0, 0) = 0``."""
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    if a.degree == 0 or b.degree == 0:
        return ONE
    a, b = a.monic(), b.monic()
    while not b.is_zero():
        a, b = b, (a % b).monic()
    return a


def poly_shift(p: Poly, t) -> Poly:
    return p.shift(t)


def delta(p: Poly) -> Poly:
    """Backward difference ``P(X - 1) - P(X)``."""
    return p.shift(1) - p


def delta_iter(p: Poly, k: int) -> Poly:
    if k < 0:
        raise ValueError("iteration count must be nonnegative")
    for _ in range(k):
        if p.is_zero():
            break
        p = delta(p)
    return p


class RatFunc:
    """Normalized rational function ``num/den`` in Q(X).

    The denominator is monic and coprime to the numerator; zero is ``0/1``.
    Arithmetic accepts ints, Fractions and Polys as operands.
    """

    __slots__ = ("num", "den")

    def __init__(self, num=ZERO, den=ONE):
        num = _as_poly(num) if not isinstance(num, Poly) else num
        den = _as_poly(den) if not isinstance(den, Poly) else den
        if num is None or den is None:
            raise TypeError("RatFunc parts must be polynomials or rationals")
        if den.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        if num.is_zero():
            num, den = ZERO, ONE
        elif den.degree > 0:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num // g, den // g
        lc = den.leading
        if lc != 1:
            num, den = num.scale(1 / lc), den.scale(1 / lc)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @classmethod
    def _raw(cls, num: Poly, den: Poly) -> "RatFunc":
        r = object.__new__(cls)
        object.__setattr__(r, "num", num)
        object.__setattr__(r, "den", den)
        return r

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc is immutable")

    def __reduce__(self):
        return (RatFunc, (self.num, self.den))

    # -- queries --------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.den.degree == 0 and self.num.coeffs == (1,)

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def is_constant(self) -> bool:
        return self.den.degree == 0 and self.num.degree <= 0

    def constant_value(self) -> mpq:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.num.coeff(0)

    def __eq__(self, other):
        if not isinstance(other, RatFunc):
            other = _as_ratfunc(other)
            if other is None:
                return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash(("RatFunc", self.num.coeffs, self.den.coeffs))

    def __repr__(self):
        return f"RatFunc({self})"

    def __str__(self):
        return self.to_str()

    def to_str(self, var: str = "X") -> str:
        if self.is_polynomial():
            return self.num.to_str(var)
        return f"({self.num.to_str(var)})/({self.den.to_str(var)})"

    # -- field operations -----------------------------------------------

    def __neg__(self):
        return RatFunc._raw(-self.num, self.den)

    def __add__(self, other):
        other = _as_ratfunc(other)
        if other is None:
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        if self.den.degree == 0:
            return RatFunc._raw(self.num * other.den + other.num, other.den)
        if other.den.degree == 0:
            return RatFunc._raw(self.num + other.num * self.den, self.den)
        g = poly_gcd(self.den, other.den)
        if g.degree == 0:
            # coprime denominators keep the sum reduced
            return RatFunc._raw(
                self.num * other.den + other.num * self.den, self.den * other.den
            )
        b, d = self.den // g, other.den // g
        return RatFunc(self.num * d + other.num * b, b * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_ratfunc(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_ratfunc(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _as_ratfunc(other)
        if other is None:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return RatFunc._raw(ZERO, ONE)
        if self.is_one():
            return other
        if other.is_one():
            return self
        # cross-cancel so both gcds stay small
        a, b, c, d = self.num, self.den, other.num, other.den
        g1 = poly_gcd(a, d) if d.degree > 0 else ONE
        g2 = poly_gcd(c, b) if b.degree > 0 else ONE
        if g1.degree > 0:
            a, d = a // g1, d // g1
        if g2.degree > 0:
            c, b = c // g2, b // g2
        return RatFunc._raw(a * c, b * d)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        lc = self.num.leading
        return RatFunc._raw(self.den.scale(1 / lc), self.num.scale(1 / lc))

    def __truediv__(self, other):
        other = _as_ratfunc(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _as_ratfunc(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return RatFunc._raw(self.num**n, self.den**n)

    # -- evaluation and substitution ------------------------------------

    def __call__(self, x):
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError(f"denominator of {self} vanishes at {x}")
        return self.num(x) / d

    def shift(self, t) -> "RatFunc":
        """Return ``g(X - t)``; shifting preserves coprimality and monicity."""
        if self.den.degree == 0 and self.num.degree <= 0:
            return self
        return RatFunc._raw(self.num.shift(t), self.den.shift(t))

    def to_json(self) -> dict:
        return {
            "num": [str(c) for c in self.num.coeffs],
            "den": [str(c) for c in self.den.coeffs],
        }

    @classmethod
    def from_json(cls, data: dict) -> "RatFunc":
        return cls(Poly(data["num"]), Poly(data["den"]))


def _as_ratfunc(value):
    if isinstance(value, RatFunc):
        return value
    p = _as_poly(value)
    if p is None:
        return None
    return RatFunc._raw(p, ONE)


def as_ratfunc(value) -> RatFunc:
    r = _as_ratfunc(value)
    if r is None:
        raise TypeError(f"cannot interpret {value!r} as a rational function")
    return r


def rf_mul(a: RatFunc, b: RatFunc) -> RatFunc:
    return as_ratfunc(a) * b


def rf_add(a: RatFunc, b: RatFunc) -> RatFunc:
    return as_ratfunc(a) + b


def rf_inv(a: RatFunc) -> RatFunc:
    return as_ratfunc(a).inverse()


def rf_shift(g: RatFunc, t) -> RatFunc:
    return as_ratfunc(g).shift(t)

