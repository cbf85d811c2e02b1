"""Acceptance criteria 1-10, one test each, seed 42.

Every test prints a single ``[PASS]``/``[FAIL]`` line (visible even without
``-s``) and then asserts.  Tolerances are the stated ones: exact equality
everywhere, plus wall-clock limits on criteria 1, 5 and 7.
"""

import copy
import json
import subprocess
import sys
import time

import pytest

from cremona import verify
from cremona.certificates import derived_length_G, gamma_class

SEED = 42


def _report(capsys, result):
    with capsys.disabled():
        print("\n" + result.line())
    return result


@pytest.mark.parametrize("criterion", verify.CRITERIA, ids=lambda c: f"{c.number:02d}")
def test_criterion(capsys, criterion):
    result = _report(capsys, criterion(SEED))
    assert result.passed, result.detail


def _cli(*args, stdin=None):
    return subprocess.run(
        [sys.executable, "-m", "cremona", *args],
        capture_output=True,
        text=True,
        input=stdin,
        timeout=300,
    )


def test_criterion_01_cli_runtime(capsys):
    start = time.perf_counter()
    proc = _cli("gamma-certify", "8", "--seed", str(SEED), "--format", "json")
    elapsed = time.perf_counter() - start
    certs = json.loads(proc.stdout)
    ok = (
        proc.returncode == 0
        and [c["claimed_class"] for c in certs] == list(range(2, 10))
        and elapsed < 5.0
    )
    _report(capsys, verify.CriterionResult(1, "gamma-certify 8 via CLI", ok, f"exit {proc.returncode}", elapsed))
    assert ok


def _witness_mutations(cert):
    """Every way of corrupting one stored witness value."""
    keys = [k for k in cert if k.endswith("witness")]
    for k in keys:
        for part, new in (("f", {"num": ["7"], "den": ["1"]}), ("g", {"num": ["2"], "den": ["1"]}), ("t", "1")):
            bad = copy.deepcopy(cert)
            bad[k]["value"][part] = new
            yield f"{k}.{part}", bad
    for i in range(len(cert.get("sub_witnesses", []))):
        bad = copy.deepcopy(cert)
        bad["sub_witnesses"][i]["value"]["t"] = "3"
        yield f"sub_witnesses[{i}]", bad


def test_criterion_10_cli_contract(capsys, tmp_path):
    checks = {}
    proc = _cli("verify-all", "--seed", str(SEED))
    checks["verify-all exit 0"] = proc.returncode == 0

    certs = [gamma_class(3, trials=10, seed=SEED).to_json(), derived_length_G(trials=50, seed=SEED).to_json()]
    clean = tmp_path / "clean.json"
    clean.write_text(json.dumps(certs))
    checks["clean certificate exit 0"] = _cli("check-cert", str(clean)).returncode == 0
    tamper_codes = []
    for cert in certs:
        for label, bad in _witness_mutations(cert):
            path = tmp_path / "bad.json"
            path.write_text(json.dumps(bad))
            tamper_codes.append((label, _cli("check-cert", str(path)).returncode))
    checks[f"{len(tamper_codes)} tampered witnesses exit 1"] = all(c == 1 for _, c in tamper_codes)

    for argv in (["eval", "m((X)/(0))"], ["eval", "s(1"], ["nonlinearity", "1"]):
        checks[f"{' '.join(argv)} exit 2"] = _cli(*argv).returncode == 2

    ok = all(checks.values())
    detail = ", ".join(f"{k}: {'ok' if v else 'FAIL'}" for k, v in checks.items())
    _report(capsys, verify.CriterionResult(10, "CLI exit codes", ok, detail))
    assert ok, tamper_codes
