"""Formal words over named generators and their evaluation.

A word is a tuple of ``(generator_id, exponent)`` letters.  Generator ids
are plain strings; they are bound to concrete group elements only at
evaluation time, so one word can be evaluated in several groups (anything
with ``*``, ``inverse()`` and an identity).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping, Optional, Tuple

from .jonquieres import JonqElement

Letter = Tuple[str, int]


class UnboundGeneratorError(KeyError):
    def __init__(self, gen_id: str):
        super().__init__(gen_id)
        self.gen_id = gen_id

    def __str__(self):
        return f"unbound generator {self.gen_id!r}"


@dataclass(frozen=True)
class Word:
    letters: Tuple[Letter, ...] = ()

    def __post_init__(self):
        letters = tuple((str(g), int(k)) for g, k in self.letters)
        for g, k in letters:
            if k == 0:
                raise ValueError(f"zero exponent on generator {g!r}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def gen(cls, gen_id: str, exponent: int = 1) -> "Word":
        return cls(((gen_id, exponent),)) if exponent else cls()

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def __pow__(self, k: int) -> "Word":
        if k == 0:
            return Word()
        if len(self.letters) == 1:
            g, e = self.letters[0]
            return Word(((g, e * k),))
        base = self if k >= 0 else self.inverse()
        return Word(base.letters * abs(k))

    def inverse(self) -> "Word":
        return Word(tuple((g, -k) for g, k in reversed(self.letters)))

    def __len__(self):
        return sum(abs(k) for _, k in self.letters)

    def generators(self) -> set:
        return {g for g, _ in self.letters}

    def __str__(self):
        if not self.letters:
            return "1"
        return "*".join(g if k == 1 else f"{g}^{k}" for g, k in self.letters)


def reduce(w: Word) -> Word:
    """Free reduction: merge adjacent equal generators, drop zero exponents."""
    stack: list = []
    for g, k in w.letters:
        if stack and stack[-1][0] == g:
            total = stack[-1][1] + k
            if total:
                stack[-1] = (g, total)
            else:
                stack.pop()
        else:
            stack.append((g, k))
    return Word(tuple(stack))


def evaluate(
    w: Word,
    env: Mapping[str, object],
    identity: Optional[object] = None,
    power: Optional[Callable] = None,
):
    """Compose the bound elements left to right.

    Defaults target :class:`JonqElement`; pass ``identity`` (and optionally
    ``power``) to evaluate in another group.
    """
    acc = JonqElement.identity() if identity is None else identity
    for g, k in w.letters:
        try:
            x = env[g]
        except KeyError:
            raise UnboundGeneratorError(g) from None
        acc = acc * (power(x, k) if power else x**k)
    return acc


def commutator(u: Word, v: Word) -> Word:
    """``[u, v] = u v u^-1 v^-1``, reduced."""
    return reduce(u * v * u.inverse() * v.inverse())


def iterated_commutator(u: Word, v: Word, k: int) -> Word:
    """``[u, [u, ..., [u, v]...]]`` with ``k`` copies of ``u``."""
    if k < 1:
        raise ValueError("iteration count must be positive")
    w = v
    for _ in range(k):
        w = commutator(u, w)
    return w

