"""The acceptance suite behind ``cremona verify-all``.

Each criterion is a function ``(seed) -> CriterionResult``.  Randomized
criteria draw from ``random.Random(seed)``; the deterministic ones ignore the
seed.  Exact equality throughout, so there are no tolerances beyond the
stated wall-clock limits.
"""

from __future__ import annotations

import copy
import random
import time
from dataclasses import dataclass
from typing import Callable, List

from . import oracles
from .arith import Poly, RatFunc, X, delta_iter, poly_shift
from .certificates import (
    check_certificate,
    derived_length_G,
    gamma_class,
    min_dim_lower_bound,
)
from .elementary import ElementaryAut, linearize, linearize_check, matmul, matrix_of, recover
from .finite_obstruction import (
    birkhoff_min_dim,
    heisenberg_profile,
    is_prime,
    monomial_relations,
)
from .jonquieres import INFINITY, JonqElement, alpha, mu, order, s
from .parsing import ParseError, parse_word
from .randgen import (
    rand_elementary,
    rand_integer_root_product,
    rand_jonq,
    rand_poly,
    rand_ratfunc,
    rand_small_rat,
)


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.number:2d}. {self.name}: {self.detail} ({self.seconds:.2f}s)"


def _timed(number: int, name: str):
    def wrap(fn: Callable[[int], tuple]):
        def run(seed: int = 42) -> CriterionResult:
            start = time.perf_counter()
            passed, detail = fn(seed)
            return CriterionResult(number, name, passed, detail, time.perf_counter() - start)

        run.number = number
        run.criterion = name
        return run

    return wrap


@_timed(1, "nilpotency certificates n=1..8")
def nilpotency(seed: int):
    start = time.perf_counter()
    bad = []
    for n in range(1, 9):
        cert = gamma_class(n, seed=seed)
        ok = (
            cert.claimed_class == n + 1
            and cert.lower_witness[1] == alpha(oracles.signed_factorial(n))
            and cert.vanishing_witness[1].is_identity()
            and all(v for _, v in cert.filtration_checks)
            and all(c.all_passed for c in cert.upper_checks)
        )
        if not ok:
            bad.append(n)
    elapsed = time.perf_counter() - start
    return not bad and elapsed < 5.0, f"failures {bad}, {elapsed:.2f}s (limit 5s)"


@_timed(2, "difference operator vs binomial oracle")
def delta_oracle(seed: int):
    bad = []
    for n in range(0, 21):
        mono = Poly.monomial(n)
        value = delta_iter(mono, n)
        expected = oracles.delta_power_of_monomial(n, n)
        if value != Poly(expected) or value != oracles.signed_factorial(n):
            bad.append(n)
        if not delta_iter(mono, n + 1).is_zero():
            bad.append(-n)
    rng = random.Random(seed)
    for _ in range(200):
        p, t = rand_poly(rng), rand_small_rat(rng)
        if poly_shift(p, t) != Poly(oracles.shift_by_binomials(p.coeffs, t)):
            bad.append("shift")
            break
    return not bad, f"n<=20 exact, mismatches {bad}"


@_timed(3, "five conjugation relations x1000")
def relations(seed: int):
    rng = random.Random(seed)
    fails = [0] * 5
    for _ in range(1000):
        f, f2 = rand_ratfunc(rng), rand_ratfunc(rng)
        g, g2 = rand_ratfunc(rng, nonzero=True), rand_ratfunc(rng, nonzero=True)
        t = rand_small_rat(rng)
        if alpha(f + f2) != alpha(f) * alpha(f2):
            fails[0] += 1
        if mu(g * g2) != mu(g) * mu(g2):
            fails[1] += 1
        if mu(g) * alpha(f) * mu(g).inverse() != alpha(f * g):
            fails[2] += 1
        if s(t) * alpha(f) * s(t).inverse() != alpha(f.shift(t)):
            fails[3] += 1
        if s(t) * mu(g) * s(t).inverse() != mu(g.shift(t)):
            fails[4] += 1
    return not any(fails), f"failures per relation {fails}"


@_timed(4, "group axioms x1000 (Jonquieres, elementary)")
def group_axioms(seed: int):
    rng = random.Random(seed)
    fails = [0, 0]
    e = JonqElement.identity()
    for _ in range(1000):
        a, b, c = rand_jonq(rng), rand_jonq(rng), rand_jonq(rng)
        ai = a.inverse()
        if (a * b) * c != a * (b * c) or a * e != a or e * a != a or a * ai != e or ai * a != e:
            fails[0] += 1
    ee = ElementaryAut.identity()
    for _ in range(1000):
        a, b, c = rand_elementary(rng), rand_elementary(rng), rand_elementary(rng)
        ai = a.inverse()
        if (a * b) * c != a * (b * c) or a * ee != a or ee * a != a or a * ai != ee or ai * a != ee:
            fails[1] += 1
    return not any(fails), f"failures (jonq, elementary) {fails}"


@_timed(5, "derived length of G is 3")
def derived_length(seed: int):
    start = time.perf_counter()
    cert = derived_length_G(trials=1000, seed=seed)
    elapsed = time.perf_counter() - start
    w = cert.lower_witness[1]
    expected = alpha(RatFunc(1 - X, X))
    ok = (
        w == expected
        and not w.is_identity()
        and all(c.all_passed and c.trials == 1000 for c in cert.upper_checks)
        and elapsed < 2.0
    )
    return ok, f"witness {w}, layers {[c.all_passed for c in cert.upper_checks]}, {elapsed:.2f}s (limit 2s)"


@_timed(6, "torsion decision procedure")
def torsion(seed: int):
    rng = random.Random(seed)
    ok = order(mu(-1)) == 2 and order(s(1)) == INFINITY and (mu(-1) ** 2).is_identity()
    for _ in range(50):
        f = rand_ratfunc(rng, nonzero=True)
        ok = ok and order(alpha(f)) == INFINITY
    bad = 0
    for _ in range(200):
        g = rand_integer_root_product(rng)
        f = rand_ratfunc(rng)
        if order(JonqElement(0, g, f)) != INFINITY:
            bad += 1
    return ok and not bad, f"fixed cases {'ok' if ok else 'FAIL'}, random infinite-order failures {bad}/200"


@_timed(7, "finite obstruction (Heisenberg, monomial)")
def finite_obstruction(seed: int):
    notes = []
    ok = True
    for p in (2, 3, 5):
        start = time.perf_counter()
        prof = heisenberg_profile(p)
        dim = birkhoff_min_dim(p)
        elapsed = time.perf_counter() - start
        expected_dims = tuple([1] * (p * p) + [p] * (p - 1))
        good = (
            prof.num_classes == p * p + p - 1
            and prof.irrep_dims == expected_dims
            and prof.search_solutions == 1
            and dim == p
            and (p != 5 or elapsed < 10.0)
        )
        ok = ok and good
        notes.append(f"p={p}:{'ok' if good else 'FAIL'}")
    for p in range(2, 98):
        if is_prime(p):
            rel = monomial_relations(p)
            if not all(rel.values()):
                ok = False
                notes.append(f"monomial p={p} FAIL")
    return ok, ", ".join(notes) + ", monomial relations p<=97"


@_timed(8, "linearization of elementary automorphisms")
def linearization(seed: int):
    rng = random.Random(seed)
    hom_fail = dist_fail = 0
    for _ in range(500):
        e1, e2 = rand_elementary(rng, 5), rand_elementary(rng, 5)
        n, _ = linearize([e1, e2])
        if matrix_of(e1 * e2, n) != matmul(matrix_of(e1, n), matrix_of(e2, n)):
            hom_fail += 1
        if recover(matrix_of(e1, n), n) != e1:
            dist_fail += 1
    for _ in range(500):
        e1, e2 = rand_elementary(rng, 5), rand_elementary(rng, 5)
        if e1 == e2:
            continue
        n = max(1, int(max(e1.degree, e2.degree, 1)))
        if matrix_of(e1, n) == matrix_of(e2, n):
            dist_fail += 1
    gens = [rand_elementary(rng, 3) for _ in range(3)]
    passes = linearize_check(gens, trials=50, seed=seed)
    n, mats = linearize(gens)
    corrupted = [[list(row) for row in m] for m in mats]
    corrupted[0][0][0] += 1
    control_fails = not linearize_check(gens, trials=50, seed=seed, matrices=corrupted)
    ok = hom_fail == 0 and dist_fail == 0 and passes and control_fails
    return ok, (
        f"homomorphism failures {hom_fail}/500, recovery failures {dist_fail}, "
        f"check {'passes' if passes else 'FAILS'}, negative control "
        f"{'rejected' if control_fails else 'ACCEPTED'}"
    )


@_timed(9, "dimension bound vs brute force c<=100")
def dimension_bound(seed: int):
    bad = [c for c in range(1, 101) if min_dim_lower_bound(c) != oracles.smallest_square_at_least(c)]
    return not bad, f"mismatches {bad}"


@_timed(10, "certificate tamper and malformed-input rejection")
def cli_contract(seed: int):
    cert = gamma_class(3, trials=10, seed=seed).to_json()
    clean = not check_certificate(cert)
    tampered = copy.deepcopy(cert)
    tampered["lower_witness"]["value"]["f"]["num"] = ["7"]
    caught = bool(check_certificate(tampered))
    try:
        parse_word("m((X)/(0))")
        malformed = False
    except ParseError:
        malformed = True
    ok = clean and caught and malformed
    return ok, f"clean {clean}, tamper caught {caught}, malformed rejected {malformed}"


CRITERIA = [
    nilpotency,
    delta_oracle,
    relations,
    group_axioms,
    derived_length,
    torsion,
    finite_obstruction,
    linearization,
    dimension_bound,
    cli_contract,
]


def verify_all(seed: int = 42) -> List[CriterionResult]:
    return [criterion(seed) for criterion in CRITERIA]

