"""Elementary automorphisms ``(x, y) -> (alpha x + P(y), beta y + c)`` and their linearization.

A finitely generated subgroup only ever sees polynomials ``P`` of degree at
most the largest degree ``n`` among its generators, and such an
automorphism acts by precomposition on the span of ``x, 1, y, ..., y^(n+1)``.
:func:`linearize` writes that action down as exact matrices (columns are the
images of basis vectors) and :func:`recover` reads the automorphism back,
which is what makes the representation faithful.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import comb
from typing import List, Sequence, Tuple

from .arith import ZERO, Poly, Rat, as_rat

Matrix = Tuple[Tuple[Rat, ...], ...]


@dataclass(frozen=True)
class ElementaryAut:
    alpha: Rat
    beta: Rat
    c: Rat
    P: Poly

    def __post_init__(self):
        for name in ("alpha", "beta", "c"):
            object.__setattr__(self, name, as_rat(getattr(self, name)))
        if not isinstance(self.P, Poly):
            object.__setattr__(self, "P", Poly(self.P) if self.P else ZERO)
        if self.alpha == 0 or self.beta == 0:
            raise ValueError("alpha and beta must be nonzero")

    @classmethod
    def identity(cls) -> "ElementaryAut":
        return cls(1, 1, 0, ZERO)

    def is_identity(self) -> bool:
        return self.alpha == 1 and self.beta == 1 and self.c == 0 and self.P.is_zero()

    @property
    def degree(self):
        return self.P.degree

    def __mul__(self, other: "ElementaryAut") -> "ElementaryAut":
        return elem_compose(self, other)

    def inverse(self) -> "ElementaryAut":
        return elem_inverse(self)

    def __pow__(self, k: int) -> "ElementaryAut":
        base = self if k >= 0 else elem_inverse(self)
        result = ElementaryAut.identity()
        for _ in range(abs(k)):
            result = elem_compose(result, base)
        return result

    def __call__(self, point):
        x, y = (as_rat(v) for v in point)
        return self.alpha * x + self.P(y), self.beta * y + self.c

    def __str__(self):
        return f"({self.alpha}, {self.beta}, {self.c}, {self.P.to_str('y')})"

    def to_line(self) -> str:
        return f"{self.alpha};{self.beta};{self.c};{self.P.to_str('y')}"

    def to_json(self) -> dict:
        return {
            "alpha": str(self.alpha),
            "beta": str(self.beta),
            "c": str(self.c),
            "P": [str(q) for q in self.P.coeffs],
        }

    @classmethod
    def from_json(cls, data: dict) -> "ElementaryAut":
        return cls(as_rat(data["alpha"]), as_rat(data["beta"]), as_rat(data["c"]), Poly(data["P"]))


def elem_compose(e1: ElementaryAut, e2: ElementaryAut) -> ElementaryAut:
    """``e1 * e2`` applies ``e2`` first."""
    return ElementaryAut(
        e1.alpha * e2.alpha,
        e1.beta * e2.beta,
        e1.beta * e2.c + e1.c,
        e2.P.scale(e1.alpha) + e1.P.compose_linear(e2.beta, e2.c),
    )


def elem_inverse(e: ElementaryAut) -> ElementaryAut:
    ainv, binv = 1 / e.alpha, 1 / e.beta
    return ElementaryAut(
        ainv, binv, -e.c * binv, -e.P.compose_linear(binv, -e.c * binv).scale(ainv)
    )


def affine_part(e: ElementaryAut) -> ElementaryAut:
    """Projection onto the (alpha, beta, c) factor; its kernel is the P-parts."""
    return ElementaryAut(e.alpha, e.beta, e.c, ZERO)


# -- linearization --------------------------------------------------------------


def basis_size(n: int) -> int:
    # x, then 1, y, ..., y^(n+1)
    return n + 3


def matrix_of(e: ElementaryAut, n: int) -> Matrix:
    """Matrix of ``phi -> phi o e^-1`` on ``(x, 1, y, ..., y^(n+1))``."""
    if e.degree > n:
        raise ValueError(f"degree {e.degree} exceeds linearization degree {n}")
    h = elem_inverse(e)
    size = basis_size(n)
    zero = Rat(0)
    cols = []
    # x o h = alpha' x + P'(y)
    col = [zero] * size
    col[0] = h.alpha
    for k, q in enumerate(h.P.coeffs):
        col[1 + k] = q
    cols.append(col)
    # y^k o h = (beta' y + c')^k
    for k in range(n + 2):
        col = [zero] * size
        for j in range(k + 1):
            col[1 + j] = comb(k, j) * h.beta**j * h.c ** (k - j)
        cols.append(col)
    return tuple(tuple(cols[j][i] for j in range(size)) for i in range(size))


def recover(m: Matrix, n: int) -> ElementaryAut:
    """Read the automorphism back from its matrix; raises if ``m`` is not an image."""
    h = ElementaryAut(m[0][0], m[2][2], m[1][2], Poly(m[i][0] for i in range(1, n + 2)))
    e = elem_inverse(h)
    if matrix_of(e, n) != tuple(tuple(row) for row in m):
        raise ValueError("matrix is not the image of an elementary automorphism")
    return e


def linearize(gens: Sequence[ElementaryAut]) -> Tuple[int, List[Matrix]]:
    if not gens:
        raise ValueError("linearize needs at least one generator")
    n = max([1] + [int(g.degree) for g in gens if not g.P.is_zero()])
    return n, [matrix_of(g, n) for g in gens]


def identity_matrix(size: int) -> Matrix:
    return tuple(tuple(Rat(int(i == j)) for j in range(size)) for i in range(size))


def matmul(a: Matrix, b: Matrix) -> Matrix:
    cols = list(zip(*b))
    return tuple(tuple(sum((x * y for x, y in zip(row, col)), Rat(0)) for col in cols) for row in a)


def matinv(a: Matrix) -> Matrix:
    """Exact Gauss-Jordan inverse."""
    size = len(a)
    aug = [list(row) + [Rat(int(i == j)) for j in range(size)] for i, row in enumerate(a)]
    for col in range(size):
        pivot = next((r for r in range(col, size) if aug[r][col] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("singular matrix")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(size):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [v - factor * w for v, w in zip(aug[r], aug[col])]
    return tuple(tuple(row[size:]) for row in aug)


def linearize_check(
    gens: Sequence[ElementaryAut],
    trials: int,
    seed: int = 42,
    matrices: Sequence[Matrix] = None,
) -> bool:
    """Check that generator matrices multiply like the automorphisms they encode.

    ``matrices`` overrides the generator images (used for negative controls).
    Every generator is checked on its own, then ``trials`` random words of
    length up to 6 in the generators and their inverses.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    n, mats = linearize(gens)
    if matrices is not None:
        mats = [tuple(tuple(as_rat(v) for v in row) for row in m) for m in matrices]
    size = basis_size(n)
    images = {}
    for i, (g, m) in enumerate(zip(gens, mats)):
        images[(i, 1)] = (g, m)
        try:
            images[(i, -1)] = (elem_inverse(g), matinv(m))
        except ZeroDivisionError:
            return False
    rng = random.Random(seed)
    words = [[(i, 1)] for i in range(len(gens))]
    for _ in range(trials):
        length = rng.randint(1, 6)
        words.append([(rng.randrange(len(gens)), rng.choice((1, -1))) for _ in range(length)])
    ident = identity_matrix(size)
    for word in words:
        e, m = ElementaryAut.identity(), ident
        for letter in word:
            g, gm = images[letter]
            e, m = e * g, matmul(m, gm)
        if matrix_of(e, n) != m:
            return False
        try:
            if recover(m, n) != e:
                return False
        except ValueError:
            return False
        if m == ident and not e.is_identity():
            return False
    return True


# -- generator files ------------------------------------------------------------


def parse_generator_line(line: str) -> ElementaryAut:
    from .parsing import parse_poly, parse_rat

    parts = line.split(";")
    if len(parts) != 4:
        raise ValueError(f"expected 'alpha;beta;c;P(y)', got {line!r}")
    a, b, c, p = parts
    return ElementaryAut(parse_rat(a), parse_rat(b), parse_rat(c), parse_poly(p, var="y"))


def load_generators(text: str) -> List[ElementaryAut]:
    """One generator per line; blank lines and ``#`` comments are skipped."""
    gens = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            gens.append(parse_generator_line(line))
    return gens


def matrix_to_json(m: Matrix) -> list:
    return [[str(v) for v in row] for row in m]

