"""Independent reference computations on plain coefficient lists.

Nothing here touches :mod:`cremona.arith`; these routines exist so the
kernel can be checked against a second, structurally different route.
Coefficient lists are ascending and may carry trailing zeros.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial


def _trim(cs: list) -> list:
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def shift_by_binomials(coeffs, t) -> list:
    """Coefficients of ``P(X - t)`` by expanding each ``(X - t)^k`` term."""
    t = Fraction(t)
    out = [Fraction(0)] * max(len(coeffs), 1)
    for k, c in enumerate(coeffs):
        c = Fraction(c)
        for j in range(k + 1):
            out[j] += c * comb(k, j) * (-t) ** (k - j)
    return _trim(out)


def delta_power_of_monomial(n: int, k: int) -> list:
    """Coefficients of ``Δ^k X^n`` with ``Δ = E - 1`` and ``E P = P(X - 1)``.

    Uses ``Δ^k = Σ_i C(k, i) (-1)^(k-i) E^i`` and expands ``(X - i)^n``
    binomially, so no iteration of a difference operator is involved.
    """
    out = [Fraction(0)] * (n + 1)
    for i in range(k + 1):
        w = comb(k, i) * (-1) ** (k - i)
        for j in range(n + 1):
            out[j] += w * comb(n, j) * (-i) ** (n - j)
    return _trim(out)


def signed_factorial(n: int) -> int:
    return (-1) ** n * factorial(n)


def smallest_square_at_least(c: int) -> int:
    """Brute-force smallest ``d >= 1`` with ``d*d >= c``."""
    for d in range(1, c + 1):
        if d * d >= c:
            return d
    return 1

