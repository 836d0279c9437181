import json
import os
import subprocess
import sys
from fractions import Fraction

import pytest

from moschext.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_eval_identity_by_iteration(capsys):
    code, out, _ = run(capsys, "eval", "--space", "s1", "--term", "iter(s,F)", "--input", "#3")
    assert code == 0 and out.strip() == "#3"


def test_eval_json_schema(capsys):
    code, out, _ = run(capsys, "eval", "--term", "pi(swap, L)", "--input", "(`a`,o)", "--json")
    assert code == 0
    assert json.loads(out) == {"result": "((`a`,o),`a`)", "steps": 0, "status": "ok"}


def test_eval_multivalued(capsys):
    code, out, _ = run(capsys, "eval", "--space", "s2", "--input", "(o,o)",
                       "--term", "iter(sigma(b, L, R), sigma(I, b, I))", "--json")
    assert code == 0
    assert sorted(json.loads(out)["result"]) == ["(o,o)", "o"]


def test_undefined_and_fuel_are_distinct(capsys):
    code, out, _ = run(capsys, "eval", "--term", "iter(I,T)", "--input", "o", "--json")
    assert code == 1 and json.loads(out)["status"] == "undefined"
    code, out, _ = run(capsys, "eval", "--term", "iter(s,T)", "--input", "o", "--json", "--fuel", "30")
    assert code == 1 and json.loads(out)["status"] == "fuel"


def test_trace_goes_to_stderr(capsys):
    code, out, err = run(capsys, "eval", "--term", "iter(R, L)", "--input", "((o,o),o)", "--trace")
    assert code == 0 and out.strip() == "o"
    assert err.count("step") == 2
    code, _, err = run(capsys, "eval", "--space", "s2", "--term", "iter(sigma(b, L, R), sigma(I, b, I))",
                       "--input", "(o,o)", "--trace")
    assert code == 0 and err.splitlines()[1].startswith("  ")


def test_realizer_mode(capsys):
    code, out, _ = run(capsys, "eval", "--term", "pi(swap.R, L)", "--input", "(`a`,`b`)", "--realizer")
    assert code == 0 and out.strip() == "(`a`,`a`)"


def test_syntax_error_is_a_usage_error(capsys):
    code, _, err = run(capsys, "eval", "--term", "pi(L", "--input", "o")
    assert code == 2 and "col 5" in err
    code, _, err = run(capsys, "eval", "--term", "nosuch", "--input", "o")
    assert code == 2 and "nosuch" in err


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as e:
        main(["eval", "--bogus"])
    assert e.value.code == 2
    assert run(capsys, "eval", "--term", "I", "--input", "o", "--fuel", "0")[0] == 2
    assert run(capsys, "eval", "--term", "I")[0] == 2
    assert run(capsys)[0] == 2


def test_term_file(tmp_path, capsys):
    f = tmp_path / "t.term"
    f.write_text("iter(\n  s,\n  F)\n", encoding="utf-8")
    code, out, _ = run(capsys, "eval", "--term-file", str(f), "--input", "#2")
    assert code == 0 and out.strip() == "#2"


def test_name(capsys):
    code, out, _ = run(capsys, "name", "--input", "(o,o)", "--count", "4")
    assert code == 0 and out.strip() == "[1, 1, 1, 1]"
    code, out, _ = run(capsys, "name", "--input", "#2", "--count", "2", "--json")
    assert json.loads(out)["result"] == [5, 5]


def test_real_rec2(capsys):
    code, out, _ = run(capsys, "real", "--example", "rec2", "--x", "-3", "--prec", "20", "--json")
    data = json.loads(out)
    assert code == 0 and data["status"] == "ok"
    assert abs(Fraction(data["result"]) + 6) < Fraction(1, 2 ** 20)
    assert data["steps"] == 4


def test_real_rec1_and_join(capsys):
    code, out, _ = run(capsys, "real", "--example", "rec1", "--x", "7/3", "--json")
    assert abs(Fraction(json.loads(out)["result"]) - Fraction(-14, 9)) < Fraction(1, 2 ** 20)
    code, out, _ = run(capsys, "real", "--example", "join", "--x", "-1/2", "--json")
    assert Fraction(json.loads(out)["result"]) == Fraction(-3, 8)
    code, _, _ = run(capsys, "real", "--example", "rec1", "--x", "-1", "--fuel", "100")
    assert code == 1
    assert run(capsys, "real", "--example", "rec1", "--x", "1/0")[0] == 2


def test_check_suite(capsys):
    code, out, _ = run(capsys, "check", "--suite", "axioms", "--cases", "5", "--seed", "7")
    assert code == 0 and "s2 (11): 5 passed, 0 failed" in out


def test_list_symbols(capsys):
    code, out, _ = run(capsys, "--list-symbols")
    assert code == 0 and "swap" in out and "chi" in out


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "moschext", "eval", "--term", "L", "--input", "(#2,o)"],
                       capture_output=True, text=True, timeout=60)
    assert r.returncode == 0 and r.stdout.strip() == "#2"


def test_fuel_from_environment():
    env_code = "import moschext.combinatory as c; print(c.DEFAULT_FUEL)"
    r = subprocess.run([sys.executable, "-c", env_code], capture_output=True, text=True,
                       env={**os.environ, "MOSCHEXT_FUEL": "77"}, timeout=60)
    assert r.stdout.strip() == "77"
