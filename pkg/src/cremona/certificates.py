"""Certificates for nilpotency class, derived length and nonlinearity.

Lower bounds are explicit witnesses: a word together with its exact value,
which anyone can re-evaluate.  Upper bounds quantify over infinite sets, so
they are backed by the identities that drive them (degree drop of the
difference operator, commuting shears, vanishing translation parts of
commutators) checked deterministically or on seeded random samples.

Serialized certificates carry every witness word in the parseable word
syntax, so :func:`check_certificate` can re-verify a JSON payload with no
other input.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import factorial, isqrt
from typing import List, Tuple

from .arith import Poly, X, delta
from .jonquieres import JonqElement, alpha, mu, order, s
from .randgen import DEFAULT_SEED, rand_poly
from .words import Word, commutator, evaluate, iterated_commutator, reduce

Witness = Tuple[Word, JonqElement]


@dataclass
class RandomizedCheck:
    name: str
    trials: int
    seed: int
    all_passed: bool
    failures: int = 0

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "trials": self.trials,
            "seed": self.seed,
            "all_passed": self.all_passed,
            "failures": self.failures,
        }


def _witness_json(w: Witness) -> dict:
    return {"word": str(w[0]), "value": w[1].to_json()}


# -- nilpotency class of the groups generated by s(1) and alpha(X^n) ---------


def gamma_generators(n: int) -> Tuple[Word, Word, dict]:
    a_id = f"a({Poly.monomial(n)})"
    env = {"s(1)": s(1), a_id: alpha(Poly.monomial(n))}
    return Word.gen("s(1)"), Word.gen(a_id), env


@dataclass
class ClassCertificate:
    n: int
    claimed_class: int
    lower_witness: Witness
    vanishing_witness: Witness
    filtration_checks: List[Tuple[int, bool]]
    upper_checks: List[RandomizedCheck] = field(default_factory=list)

    @property
    def verified(self) -> bool:
        return not check_certificate(self.to_json())

    def to_json(self) -> dict:
        return {
            "kind": "gamma_class",
            "n": self.n,
            "claimed_class": self.claimed_class,
            "lower_witness": _witness_json(self.lower_witness),
            "vanishing_witness": _witness_json(self.vanishing_witness),
            "filtration_checks": [[j, ok] for j, ok in self.filtration_checks],
            "upper_checks": [c.to_json() for c in self.upper_checks],
        }

    def to_text(self) -> str:
        lw, vw = self.lower_witness, self.vanishing_witness
        mono = Poly.monomial(self.n)
        lines = [
            f"Gamma_{self.n} = <s(1), alpha({mono})>: nilpotency class {self.claimed_class}",
            f"  witness: {lw[1]}  ({self.n}-fold commutator [s(1), ... [s(1), a({mono})]])",
            f"  vanishing: {vw[1]}  ({self.n + 1}-fold commutator)",
            "  degree drop deg(delta X^j) = j-1: "
            + ", ".join(f"j={j}:{'ok' if ok else 'FAIL'}" for j, ok in self.filtration_checks),
        ]
        for c in self.upper_checks:
            status = "ok" if c.all_passed else f"FAIL ({c.failures})"
            lines.append(f"  {c.name}: {c.trials} trials, seed {c.seed}: {status}")
        return "\n".join(lines)


def _gamma_upper_checks(n: int, trials: int, seed: int) -> List[RandomizedCheck]:
    rng = random.Random(seed)
    comm_fail = deg_fail = 0
    for _ in range(trials):
        p, q = rand_poly(rng, n), rand_poly(rng, n)
        ap, aq = alpha(p), alpha(q)
        if ap * aq != aq * ap:
            comm_fail += 1
        conj = s(1) * ap * s(-1)
        # conjugation by s(1) shifts P and keeps its degree; [s(1), alpha_P] = alpha_{delta P}
        if (
            conj.t != 0
            or not conj.g.is_one()
            or not conj.f.is_polynomial()
            or conj.f.num.degree != p.degree
            or conj * ap.inverse() != alpha(delta(p))
        ):
            deg_fail += 1
    return [
        RandomizedCheck("shears of degree <= n commute", trials, seed, comm_fail == 0, comm_fail),
        RandomizedCheck("s(1)-conjugation preserves degree", trials, seed, deg_fail == 0, deg_fail),
    ]


def gamma_class(n: int, trials: int = 50, seed: int = DEFAULT_SEED) -> ClassCertificate:
    if n < 1:
        raise ValueError("gamma_class requires n >= 1")
    u, v, env = gamma_generators(n)
    lower = iterated_commutator(u, v, n)
    vanish = iterated_commutator(u, v, n + 1)
    filtration = [(j, delta(Poly.monomial(j)).degree == j - 1) for j in range(1, n + 1)]
    return ClassCertificate(
        n=n,
        claimed_class=n + 1,
        lower_witness=(lower, evaluate(lower, env)),
        vanishing_witness=(vanish, evaluate(vanish, env)),
        filtration_checks=filtration,
        upper_checks=_gamma_upper_checks(n, trials, seed),
    )


def gamma_chain_check(n: int) -> bool:
    """``mu(X) alpha(X^n) mu(X)^-1 == alpha(X^(n+1))``, so the chain of groups is nested."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    m = mu(X)
    return m * alpha(Poly.monomial(n)) * m.inverse() == alpha(Poly.monomial(n + 1))


# -- derived length of G = <s(1), alpha(1), mu(X)> ----------------------------

G_ENV = {"s(1)": s(1), "a(1)": alpha(1), "m(X)": mu(X)}
G_WITNESS_TEXT = "[[s(1), m(X)], [m(X), a(1)]]"


def _g_witness_word() -> Word:
    sw, aw, mw = (Word.gen(k) for k in ("s(1)", "a(1)", "m(X)"))
    return commutator(commutator(sw, mw), commutator(mw, aw))


@dataclass
class SolvabilityCertificate:
    claimed_length: int
    upper_checks: List[RandomizedCheck]
    lower_witness: Witness
    sub_witnesses: List[Witness]

    @property
    def verified(self) -> bool:
        return not check_certificate(self.to_json(), rerun_random=False)

    def to_json(self) -> dict:
        return {
            "kind": "derived_length",
            "claimed_length": self.claimed_length,
            "upper_checks": [c.to_json() for c in self.upper_checks],
            "lower_witness": _witness_json(self.lower_witness),
            "sub_witnesses": [_witness_json(w) for w in self.sub_witnesses],
        }

    def to_text(self) -> str:
        lines = [f"G = <s(1), alpha(1), mu(X)>: derived length {self.claimed_length}"]
        for w, v in self.sub_witnesses:
            lines.append(f"  {w} = {v}")
        lines.append(f"  witness: {G_WITNESS_TEXT} = {self.lower_witness[1]}")
        for c in self.upper_checks:
            status = "ok" if c.all_passed else f"FAIL ({c.failures})"
            lines.append(f"  {c.name}: {c.trials} trials, seed {c.seed}: {status}")
        return "\n".join(lines)


def _random_g_element(rng: random.Random, max_len: int = 3) -> JonqElement:
    gens = list(G_ENV.values())
    e = JonqElement.identity()
    for _ in range(rng.randint(1, max_len)):
        e = e * (rng.choice(gens) ** rng.choice((1, -1)))
    return e


def _comm(a: JonqElement, b: JonqElement) -> JonqElement:
    return a * b * a.inverse() * b.inverse()


def _derived_layer_checks(trials: int, seed: int) -> List[RandomizedCheck]:
    rng = random.Random(seed)
    fail = [0, 0, 0]
    prev = None
    for _ in range(trials):
        x1, y1, x2, y2 = (_random_g_element(rng) for _ in range(4))
        c1, c2 = _comm(x1, y1), _comm(x2, y2)
        if c1.t != 0 or c2.t != 0:
            fail[0] += 1
        d = _comm(c1, c2)
        if not d.g.is_one():
            fail[1] += 1
        # d and the previous trial's d both lie in the second derived subgroup
        if prev is not None and d * prev != prev * d:
            fail[2] += 1
        prev = d
    names = (
        "commutators have t = 0",
        "commutators of t = 0 elements have g = 1",
        "elements (0, 1, f) commute",
    )
    return [RandomizedCheck(nm, trials, seed, k == 0, k) for nm, k in zip(names, fail)]


def derived_length_G(trials: int = 1000, seed: int = DEFAULT_SEED) -> SolvabilityCertificate:
    sw, aw, mw = (Word.gen(k) for k in ("s(1)", "a(1)", "m(X)"))
    subs = [commutator(sw, mw), commutator(mw, aw)]
    w = _g_witness_word()
    return SolvabilityCertificate(
        claimed_length=3,
        upper_checks=_derived_layer_checks(trials, seed),
        lower_witness=(w, evaluate(w, G_ENV)),
        sub_witnesses=[(u, evaluate(u, G_ENV)) for u in subs],
    )


# -- nonlinearity ---------------------------------------------------------------


def min_dim_lower_bound(c: int) -> int:
    """Smallest ``d`` with ``d*d >= c``.

    A torsion-free nilpotent group of class ``c`` inside ``GL_d`` in
    characteristic zero forces a nilpotent Lie subalgebra of gl_d of the
    same class, whose class is at most ``d*d``.
    """
    if c < 1:
        raise ValueError("class must be positive")
    r = isqrt(c)
    return r if r * r == c else r + 1


@dataclass
class NonlinearityReport:
    max_n: int
    rows: List[Tuple[int, int, int]]
    chain_checks: List[Tuple[int, bool]]
    char_p_hypotheses: dict
    verdict: str

    def to_json(self) -> dict:
        return {
            "kind": "nonlinearity",
            "max_n": self.max_n,
            "rows": [list(r) for r in self.rows],
            "chain_checks": [[n, ok] for n, ok in self.chain_checks],
            "char_p_hypotheses": self.char_p_hypotheses,
            "verdict": self.verdict,
        }

    def to_text(self) -> str:
        lines = [" n  class  dim >=", "-- ------ ------"]
        lines += [f"{n:2d} {c:6d} {d:6d}" for n, c, d in self.rows]
        lines.append(
            "chain Gamma_n < Gamma_(n+1): "
            + ", ".join(f"n={n}:{'ok' if ok else 'FAIL'}" for n, ok in self.chain_checks)
        )
        h = self.char_p_hypotheses
        lines.append(f"Gamma_2 nonabelian: {h['witness_word']} = {h['witness_value']}")
        lines.append(f"generator orders: {h['orders']}")
        lines.append(self.verdict)
        return "\n".join(lines)

    @property
    def consistent(self) -> bool:
        classes = [c for _, c, _ in self.rows]
        dims = [d for _, _, d in self.rows]
        return (
            all(b > a for a, b in zip(classes, classes[1:]))
            and all(b >= a for a, b in zip(dims, dims[1:]))
            and all(ok for _, ok in self.chain_checks)
            and self.char_p_hypotheses["nonabelian"]
            and self.char_p_hypotheses["torsion_free_generators"]
        )


def nonlinearity_report(max_n: int) -> NonlinearityReport:
    if max_n < 2:
        raise ValueError("nonlinearity_report requires max_n >= 2")
    rows = []
    for n in range(1, max_n + 1):
        cert = gamma_class(n, trials=10)
        rows.append((n, cert.claimed_class, min_dim_lower_bound(n + 1)))
    chain = [(n, gamma_chain_check(n)) for n in range(0, max_n)]

    u, v, env = gamma_generators(2)
    w = commutator(u, v)
    value = evaluate(w, env)
    orders = {k: order(e) for k, e in env.items()}
    orders[str(w)] = order(value)
    hyp = {
        "witness_word": str(w),
        "witness_value": str(value),
        "nonabelian": not value.is_identity(),
        "orders": {k: ("inf" if o == float("inf") else o) for k, o in orders.items()},
        "torsion_free_generators": all(o == float("inf") for o in orders.values()),
    }
    verdict = (
        f"Gamma_n has class n+1 for n = 1..{max_n} and Gamma_n < Gamma_(n+1) < G, so a "
        f"faithful representation in characteristic zero needs dimension >= "
        f"ceil(sqrt(n+1)) for every n: no finite-dimensional faithful representation "
        f"exists for G, Gamma_infinity or Aut(C^2). Characteristic p is excluded by the "
        f"cited fact that torsion-free nilpotent linear groups in characteristic p are "
        f"abelian; hypotheses checked here: Gamma_2 is nonabelian and its generators "
        f"have infinite order."
    )
    return NonlinearityReport(max_n, rows, chain, hyp, verdict)


# -- re-verification of serialized certificates ----------------------------------


def _check_witness(data: dict, expected_word: Word, env: dict, label: str) -> List[str]:
    from .parsing import parse_word

    errors = []
    try:
        word, parsed_env = parse_word(data["word"])
        stored = JonqElement.from_json(data["value"])
    except (KeyError, ValueError, TypeError, ZeroDivisionError) as exc:
        return [f"{label}: malformed witness ({exc})"]
    if reduce(word).letters != reduce(expected_word).letters:
        errors.append(f"{label}: word differs from the expected commutator")
    for k, e in parsed_env.items():
        if k in env and env[k] != e:
            errors.append(f"{label}: generator {k} bound to an unexpected element")
    if evaluate(word, parsed_env) != stored:
        errors.append(f"{label}: stored value does not match evaluation of its word")
    return errors


def check_certificate(data, rerun_random: bool = True) -> List[str]:
    """Re-verify a serialized certificate; returns a list of failures (empty = valid)."""
    if isinstance(data, list):
        return [e for item in data for e in check_certificate(item, rerun_random)]
    try:
        kind = data["kind"]
    except (KeyError, TypeError):
        return ["certificate has no kind"]
    try:
        if kind == "gamma_class":
            return _check_gamma(data, rerun_random)
        if kind == "derived_length":
            return _check_derived(data, rerun_random)
    except (KeyError, ValueError, TypeError, ZeroDivisionError) as exc:
        return [f"{kind}: malformed certificate ({exc})"]
    return [f"unknown certificate kind {kind!r}"]


def _check_gamma(data: dict, rerun_random: bool) -> List[str]:
    n = int(data["n"])
    errors = []
    if n < 1:
        return [f"gamma_class: n = {n} out of range"]
    if data["claimed_class"] != n + 1:
        errors.append(f"gamma_class n={n}: claimed class {data['claimed_class']} != {n + 1}")
    u, v, env = gamma_generators(n)
    lower_word = iterated_commutator(u, v, n)
    vanish_word = iterated_commutator(u, v, n + 1)
    errors += _check_witness(data["lower_witness"], lower_word, env, f"n={n} lower witness")
    errors += _check_witness(data["vanishing_witness"], vanish_word, env, f"n={n} vanishing witness")
    # the stored values must also be the claimed ones, computed independently
    expected = alpha((-1) ** n * factorial(n))
    if JonqElement.from_json(data["lower_witness"]["value"]) != expected:
        errors.append(f"n={n}: lower witness value is not alpha({(-1) ** n * factorial(n)})")
    if not JonqElement.from_json(data["vanishing_witness"]["value"]).is_identity():
        errors.append(f"n={n}: vanishing witness is not the identity")
    checks = [tuple(c) for c in data["filtration_checks"]]
    if [j for j, _ in checks] != list(range(1, n + 1)):
        errors.append(f"n={n}: filtration checks do not cover j = 1..{n}")
    for j, ok in checks:
        actual = delta(Poly.monomial(j)).degree == j - 1
        if ok is not True or not actual:
            errors.append(f"n={n}: filtration check j={j} fails")
    for c in data.get("upper_checks", []):
        if not c["all_passed"]:
            errors.append(f"n={n}: randomized check {c['name']!r} recorded failures")
    if rerun_random and data.get("upper_checks"):
        c0 = data["upper_checks"][0]
        redo = _gamma_upper_checks(n, int(c0["trials"]), int(c0["seed"]))
        if [c.to_json() for c in redo] != data["upper_checks"]:
            errors.append(f"n={n}: randomized checks do not reproduce from their seed")
    return errors


def _check_derived(data: dict, rerun_random: bool) -> List[str]:
    errors = []
    if data["claimed_length"] != 3:
        errors.append(f"derived length: claimed {data['claimed_length']} != 3")
    errors += _check_witness(data["lower_witness"], _g_witness_word(), G_ENV, "derived witness")
    value = JonqElement.from_json(data["lower_witness"]["value"])
    if value.is_identity() or value.t != 0 or not value.g.is_one():
        errors.append("derived witness is not a nonidentity element (0, 1, f)")
    sw, aw, mw = (Word.gen(k) for k in ("s(1)", "a(1)", "m(X)"))
    for item, word in zip(data["sub_witnesses"], (commutator(sw, mw), commutator(mw, aw))):
        errors += _check_witness(item, word, G_ENV, "derived sub-witness")
    for c in data["upper_checks"]:
        if not c["all_passed"]:
            errors.append(f"derived length: randomized check {c['name']!r} recorded failures")
    if rerun_random and data["upper_checks"]:
        c0 = data["upper_checks"][0]
        redo = _derived_layer_checks(int(c0["trials"]), int(c0["seed"]))
        if [c.to_json() for c in redo] != data["upper_checks"]:
            errors.append("derived length: randomized checks do not reproduce from their seed")
    return errors
