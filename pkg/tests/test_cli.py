import json
import subprocess
import sys

import pytest

from cremona.arith import X
from cremona.cli import format_report, main
from cremona.jonquieres import JonqElement, alpha


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_eval_text(capsys):
    code, out, _ = run(capsys, "eval", "m(X)*a(1)*m(X)^-1")
    assert code == 0
    assert out.strip() == "(0, 1, X)  alpha(X)"


def test_eval_json_round_trip(capsys):
    code, out, _ = run(capsys, "eval", "m(X)*a(1)*m(X)^-1", "--format", "json")
    assert code == 0
    assert out.strip() == '{"f":{"den":["1"],"num":["0","1"]},"g":{"den":["1"],"num":["1"]},"t":"0"}'
    assert JonqElement.from_json(json.loads(out)) == alpha(X)


def test_format_report_schema():
    assert json.loads(format_report(alpha(X), "json")) == {
        "t": "0",
        "g": {"num": ["1"], "den": ["1"]},
        "f": {"num": ["0", "1"], "den": ["1"]},
    }


@pytest.mark.parametrize(
    "word,expected", [("m(-1)", "order 2"), ("s(1)", "order inf"), ("m(X)^0", "order 1")]
)
def test_order(capsys, word, expected):
    code, out, _ = run(capsys, "order", word)
    assert code == 0 and expected in out


def test_commutator(capsys):
    code, out, _ = run(capsys, "commutator", "s(1)", "a(X^2)")
    assert code == 0 and "alpha(-2*X + 1)" in out


def test_gamma_certify(capsys):
    code, out, _ = run(capsys, "gamma-certify", "3", "--trials", "5")
    assert code == 0
    assert [l for l in out.splitlines() if "nilpotency class" in l] == [
        f"Gamma_{n} = <s(1), alpha({m})>: nilpotency class {n + 1}"
        for n, m in ((1, "X"), (2, "X^2"), (3, "X^3"))
    ]


def test_check_cert_clean_and_tampered(capsys, tmp_path):
    code, out, _ = run(capsys, "gamma-certify", "2", "--trials", "5", "--format", "json")
    assert code == 0
    certs = json.loads(out)
    good = tmp_path / "good.json"
    good.write_text(json.dumps(certs))
    assert run(capsys, "check-cert", str(good))[0] == 0
    certs[1]["lower_witness"]["value"]["f"]["num"] = ["3"]
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(certs))
    code, out, _ = run(capsys, "check-cert", str(bad))
    assert code == 1 and "FAILED" in out


def test_derived_length(capsys):
    code, out, _ = run(capsys, "derived-length", "--trials", "20")
    assert code == 0 and "derived length 3" in out


def test_nonlinearity(capsys):
    code, out, _ = run(capsys, "nonlinearity", "8", "--format", "json")
    assert code == 0
    assert json.loads(out)["rows"][-1] == [8, 9, 3]


def test_heisenberg_and_monomial(capsys):
    code, out, _ = run(capsys, "heisenberg", "3", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["num_classes"] == 11 and data["min_faithful_center_dim"] == 3
    code, out, _ = run(capsys, "monomial", "97")
    assert code == 0 and "FAIL" not in out


def test_elem_linearize(capsys, tmp_path):
    f = tmp_path / "gens.txt"
    f.write_text("2;1;0;0\n1;3;1;y^2\n")
    code, out, _ = run(capsys, "elem-linearize", str(f), "--format", "json", "--trials", "20")
    data = json.loads(out)
    assert code == 0 and data["n"] == 2 and data["check_passed"]
    assert len(data["matrices"][0]) == 5


@pytest.mark.parametrize(
    "argv",
    [
        ["eval", "m((X)/(0))"],
        ["eval", "m(0)"],
        ["eval", "s(1"],
        ["nonlinearity", "1"],
        ["gamma-certify", "0"],
        ["heisenberg", "11"],
        ["monomial", "4"],
        ["derived-length", "--trials", "0"],
        ["no-such-command"],
        ["elem-linearize", "/nonexistent/file"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err


def test_malformed_message_has_caret(capsys):
    code, _, err = run(capsys, "eval", "m((X)/(0))")
    assert code == 2
    assert "division by zero rational function" in err and "^" in err


def test_malformed_certificate_file(capsys, tmp_path):
    f = tmp_path / "c.json"
    f.write_text("{not json")
    assert run(capsys, "check-cert", str(f))[0] == 2


def test_verify_all_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "cremona", "verify-all", "--seed", "42"],
        capture_output=True,
        text=True,
        timeout=300,
    )
    assert proc.returncode == 0, proc.stdout + proc.stderr
    assert proc.stdout.count("[PASS]") == 10
