"""Command-line front end.

Exit codes: 0 success, 1 a certificate or check failed, 2 malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from .certificates import (
    check_certificate,
    derived_length_G,
    gamma_class,
    nonlinearity_report,
)
from .elementary import linearize, linearize_check, load_generators, matrix_to_json
from .finite_obstruction import (
    SUPPORTED_PRIMES,
    birkhoff_min_dim,
    heisenberg_profile,
    is_prime,
    monomial_relations,
)
from .jonquieres import JonqElement, format_element, normal_form, order
from .parsing import ParseError, parse_word
from .randgen import DEFAULT_SEED
from .words import commutator, evaluate

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def format_report(value, fmt: str = "text") -> str:
    """Render a kernel value; JSON is key-sorted with rationals as ``"p/q"`` strings."""
    if fmt == "json":
        return dump_json(value.to_json() if hasattr(value, "to_json") else value)
    if isinstance(value, JonqElement):
        return f"{normal_form(value)}  {format_element(value)}"
    if hasattr(value, "to_text"):
        return value.to_text()
    return str(value)


def _order_str(o) -> object:
    return "inf" if o == float("inf") else o


def _parse(text: str):
    try:
        return parse_word(text)
    except ParseError as exc:
        raise UsageError(exc.annotated()) from None


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(str(exc)) from None


# -- commands ---------------------------------------------------------------------


def cmd_eval(args) -> int:
    word, env = _parse(args.word)
    value = evaluate(word, env)
    print(format_report(value, args.format))
    return EXIT_OK


def cmd_order(args) -> int:
    word, env = _parse(args.word)
    value = evaluate(word, env)
    o = _order_str(order(value))
    if args.format == "json":
        print(dump_json({"element": value.to_json(), "order": o}))
    else:
        print(f"{format_element(value)}: order {o}")
    return EXIT_OK


def cmd_commutator(args) -> int:
    u, env = _parse(args.u)
    v, env_v = _parse(args.v)
    env.update(env_v)
    w = commutator(u, v)
    value = evaluate(w, env)
    if args.format == "json":
        print(dump_json({"word": str(w), "value": value.to_json()}))
    else:
        print(f"[{args.u}, {args.v}] = {w}")
        print(format_report(value))
    return EXIT_OK


def cmd_gamma_certify(args) -> int:
    if args.n < 1:
        raise UsageError("gamma-certify needs N >= 1")
    certs = [gamma_class(n, trials=args.trials or 50, seed=args.seed) for n in range(1, args.n + 1)]
    failures = check_certificate([c.to_json() for c in certs], rerun_random=False)
    if args.format == "json":
        print(json.dumps([c.to_json() for c in certs], sort_keys=True, indent=1))
    else:
        print("\n".join(c.to_text() for c in certs))
        for f in failures:
            print(f"FAILED: {f}")
    return EXIT_FAIL if failures else EXIT_OK


def cmd_check_cert(args) -> int:
    try:
        data = json.loads(_read(args.file))
    except json.JSONDecodeError as exc:
        raise UsageError(f"invalid JSON: {exc}") from None
    failures = check_certificate(data)
    if args.format == "json":
        print(dump_json({"valid": not failures, "failures": failures}))
    else:
        for f in failures:
            print(f"FAILED: {f}")
        print("certificate valid" if not failures else f"{len(failures)} check(s) failed")
    return EXIT_FAIL if failures else EXIT_OK


def cmd_derived_length(args) -> int:
    cert = derived_length_G(trials=args.trials or 1000, seed=args.seed)
    print(format_report(cert, args.format))
    return EXIT_OK if cert.verified else EXIT_FAIL


def cmd_nonlinearity(args) -> int:
    if args.max_n < 2:
        raise UsageError("nonlinearity needs MAX_N >= 2")
    report = nonlinearity_report(args.max_n)
    print(format_report(report, args.format))
    return EXIT_OK if report.consistent else EXIT_FAIL


def cmd_heisenberg(args) -> int:
    if args.p not in SUPPORTED_PRIMES:
        raise UsageError(f"P must be one of {SUPPORTED_PRIMES}")
    prof = heisenberg_profile(args.p)
    try:
        dim = birkhoff_min_dim(args.p)
    except RuntimeError as exc:
        print(f"FAILED: {exc}")
        return EXIT_FAIL
    if args.format == "json":
        print(dump_json({**prof.to_json(), "min_faithful_center_dim": dim}))
    else:
        print(prof.to_text())
        print(f"  smallest irreducible degree nontrivial on the center: {dim}")
    return EXIT_OK if prof.consistent() else EXIT_FAIL


def cmd_monomial(args) -> int:
    if not is_prime(args.p):
        raise UsageError(f"{args.p} is not prime")
    rel = monomial_relations(args.p)
    if args.format == "json":
        print(dump_json({"p": args.p, "relations": rel}))
    else:
        for name, ok in rel.items():
            print(f"{'ok  ' if ok else 'FAIL'} {name}  (p={args.p})")
    return EXIT_OK if all(rel.values()) else EXIT_FAIL


def cmd_elem_linearize(args) -> int:
    try:
        gens = load_generators(_read(args.file))
    except ParseError as exc:
        raise UsageError(exc.annotated()) from None
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if not gens:
        raise UsageError("generator file is empty")
    n, mats = linearize(gens)
    ok = linearize_check(gens, trials=args.trials or 200, seed=args.seed)
    if args.format == "json":
        print(
            dump_json(
                {
                    "n": n,
                    "generators": [g.to_json() for g in gens],
                    "matrices": [matrix_to_json(m) for m in mats],
                    "check_passed": ok,
                }
            )
        )
    else:
        print(f"pullback representation on span(x, 1, y, ..., y^{n + 1}), dimension {n + 3}")
        print("(explicit coordinate representation, used instead of the adjoint representation)")
        for g, m in zip(gens, mats):
            print(f"{g.to_line()}:")
            for row in matrix_to_json(m):
                print("  [" + ", ".join(f"{v:>6}" for v in row) + "]")
        print(f"homomorphism and recovery check ({args.trials or 200} words, seed {args.seed}): "
              f"{'passed' if ok else 'FAILED'}")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_verify_all(args) -> int:
    from .verify import verify_all

    print(f"seed: {args.seed}")
    results = verify_all(args.seed)
    for r in results:
        print(r.line())
    failed = [r.number for r in results if not r.passed]
    print("all criteria passed" if not failed else f"failed criteria: {failed}")
    return EXIT_FAIL if failed else EXIT_OK


# -- argument parsing -------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)
    common.add_argument("--trials", type=int, default=None)

    parser = argparse.ArgumentParser(
        prog="cremona", description="Exact Jonquieres-group computations and certificates."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        return p

    add("eval", cmd_eval, "evaluate a word").add_argument("word")
    add("order", cmd_order, "order of the element a word evaluates to").add_argument("word")
    p = add("commutator", cmd_commutator, "evaluate [u, v]")
    p.add_argument("u")
    p.add_argument("v")
    add("gamma-certify", cmd_gamma_certify, "nilpotency certificates for n = 1..N").add_argument(
        "n", type=int
    )
    add("check-cert", cmd_check_cert, "re-verify a serialized certificate").add_argument("file")
    add("derived-length", cmd_derived_length, "derived length certificate for G")
    add("nonlinearity", cmd_nonlinearity, "class and dimension-bound table").add_argument(
        "max_n", type=int
    )
    add("heisenberg", cmd_heisenberg, "profile of the Heisenberg group mod P").add_argument(
        "p", type=int
    )
    add("monomial", cmd_monomial, "monomial commutator relations mod P").add_argument(
        "p", type=int
    )
    add("elem-linearize", cmd_elem_linearize, "linearize elementary automorphisms").add_argument(
        "file"
    )
    add("verify-all", cmd_verify_all, "run every acceptance criterion")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    if args.trials is not None and args.trials < 1:
        print("error: --trials must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
