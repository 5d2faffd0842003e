"""Expression grammar and command-line surface: parse/print round
trips, position-annotated syntax errors, exit codes, file round trips,
and byte-level reproducibility of seeded commands.
"""

import json
import os
import random
import subprocess
import sys
from fractions import Fraction

import pytest

from twistcert import certs
from twistcert.algnum import AlgebraicNumber, real_roots
from twistcert.cli import run_command
from twistcert.errors import ExprSyntaxError, UnknownGenerator
from twistcert.exprparse import parse_element
from twistcert.funcfield import FieldTower
from twistcert.intpoly import IntPoly
from twistcert.serialize import alg_to_text, element_to_text


def tower_with(*names):
    tower = FieldTower()
    tower.add_block(list(names))
    return tower


# --- grammar -----------------------------------------------------------

def test_grammar_examples():
    tower = tower_with("t1", "t2")
    e = parse_element("(2*t1+1)/(t2-1)", tower)
    t1, t2 = tower.gen("t1"), tower.gen("t2")
    assert e == (2 * t1 + 1) / (t2 - 1)
    two = parse_element("alg(x^2-2,1,2) * alg(x^2-2,1,2)", tower)
    assert two == tower.const(2)


def test_precedence_and_associativity():
    tower = tower_with("t1")
    t1 = tower.gen("t1")
    assert parse_element("2*t1^2", tower) == 2 * t1 * t1
    assert parse_element("-t1^2", tower) == -(t1 * t1)
    assert parse_element("2-3-4", tower) == tower.const(-5)
    assert parse_element("24/4/2", tower) == tower.const(3)
    assert parse_element("2+3*4", tower) == tower.const(14)
    assert parse_element("t1^-1", tower) == t1.inverse()


def test_syntax_error_positions():
    tower = tower_with("t1")
    with pytest.raises(ExprSyntaxError) as err:
        parse_element("t1 + * 2", tower)
    assert err.value.position == 5
    with pytest.raises(ExprSyntaxError):
        parse_element("(t1", tower)
    with pytest.raises(ExprSyntaxError):
        parse_element("t1 $ 2", tower)
    with pytest.raises(UnknownGenerator):
        parse_element("t1 + zz", tower)


def test_alg_literal_round_trip():
    tower = tower_with("t1")
    for root in real_roots(IntPoly([1, 0, -10, 0, 1])):
        text = alg_to_text(root)
        back = parse_element(text, tower).constant_value()
        assert back == root


def random_element(tower, rng):
    t1, t2 = tower.gen("t1"), tower.gen("t2")
    e = tower.const(Fraction(rng.randint(-9, 9), rng.randint(1, 9)))
    for _ in range(rng.randint(1, 4)):
        g = rng.choice([t1, t2])
        e = e * g + tower.const(rng.randint(-4, 4))
    if rng.random() < 0.4:
        e = e / rng.choice([t1 + 1, t2 - 2, t1 * t2 + 3])
    return e


def test_print_parse_round_trip_500_elements():
    tower = tower_with("t1", "t2")
    rng = random.Random(606)
    for _ in range(500):
        e = random_element(tower, rng)
        assert parse_element(element_to_text(e), tower) == e


# --- CLI ---------------------------------------------------------------

def write_matrix(tmp_path, name, n, entries):
    path = tmp_path / name
    path.write_text(json.dumps({"n": n, "entries": entries}))
    return str(path)


def test_factor_verify_round_trip(tmp_path):
    m = write_matrix(tmp_path, "A.json", 2, ["2", "1", "1", "1"])
    cert = str(tmp_path / "cert.json")
    assert run_command(["factor", m, "--output", cert]) == 0
    assert run_command(["verify", cert]) == 0
    obj = certs.load_obj(cert)
    obj["target"]["entries"][0] += "+1"
    bad = str(tmp_path / "bad.json")
    certs.save_obj(obj, bad)
    assert run_command(["verify", bad]) == 1


def test_witness_and_shift_commands(tmp_path, capsys):
    m = write_matrix(tmp_path, "A.json", 2, ["1", "2", "3", "5"])
    out = str(tmp_path / "w.json")
    assert run_command(["witness", m, "--output", out]) == 0
    capsys.readouterr()
    assert certs.verify_certificate(certs.load_obj(out)) is True
    assert run_command(["shift", m, "--seed", "4"]) == 0
    printed = capsys.readouterr().out
    assert json.loads(printed)["diagonal"]


def test_parse_error_exit_code(tmp_path):
    bad = write_matrix(tmp_path, "bad.json", 2, ["1", "2", "3", "$"])
    assert run_command(["factor", bad]) == 3
    missing = str(tmp_path / "nope.json")
    assert run_command(["verify", missing]) == 3


def test_unsupported_and_cap_exit_codes():
    assert run_command(["finite", "reidemeister", "--n", "1", "--p", "5",
                        "--k", "2"]) == 2
    assert run_command(["finite", "reidemeister", "--n", "3",
                        "--p", "7"]) == 4


def test_finite_reidemeister_output(capsys):
    assert run_command(["finite", "reidemeister", "--kind", "GL",
                        "--n", "1", "--p", "3", "--k", "2",
                        "--auto", "frobenius:1"]) == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj["reidemeisterNumber"] == 2
    assert obj["group"] == "GL1(F9)"


def test_finite_width_output(capsys):
    assert run_command(["finite", "width", "--n", "2", "--p", "2",
                        "--k", "2", "--auto", "frobenius:1"]) == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj["width"] == 3 and obj["generates"]


def test_selftest_passes(capsys):
    assert run_command(["selftest"]) == 0
    out = capsys.readouterr().out
    assert "FAIL" not in out and "PASS" in out


def _run_cli(args, tmp_path, env_extra=None):
    env = dict(os.environ)
    env["PYTHONHASHSEED"] = "0"
    if env_extra:
        env.update(env_extra)
    return subprocess.run([sys.executable, "-m", "twistcert.cli"] + args,
                          capture_output=True, cwd=str(tmp_path), env=env)


def test_seeded_commands_byte_identical(tmp_path):
    m = write_matrix(tmp_path, "A.json", 2, ["2", "1", "1", "1"])
    runs = []
    for name in ("c1.json", "c2.json"):
        r = _run_cli(["factor", "A.json", "--seed", "5",
                      "--output", name], tmp_path)
        assert r.returncode == 0
        runs.append((tmp_path / name).read_bytes())
    assert runs[0] == runs[1]
    a = _run_cli(["finite", "reidemeister", "--n", "2", "--p", "2",
                  "--auto", "id"], tmp_path)
    b = _run_cli(["finite", "reidemeister", "--n", "2", "--p", "2",
                  "--auto", "id"], tmp_path)
    assert a.stdout == b.stdout


def test_seed_environment_variable(tmp_path):
    write_matrix(tmp_path, "A.json", 2, ["0", "1", "-1", "0"])
    a = _run_cli(["shift", "A.json"], tmp_path,
                 env_extra={"TWISTCERT_SEED": "9"})
    b = _run_cli(["shift", "A.json", "--seed", "9"], tmp_path)
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout
