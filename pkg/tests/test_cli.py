import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from signtrop.cli import _protect_values, main

GOLDEN = Path(__file__).parent / "golden"
UPDATE = os.environ.get("SIGNTROP_UPDATE_GOLDEN") == "1"

EX13_TR = "(-,2);(+,2);(+,0);(-,0);(+,0)"
FIG2_TR = "(+,2);inf;(+,1);(-,-1/2);(-,-1);(+,1/2);(+,1)"
FIG2_T = "2;inf;1;-1/2;-1;1/2;1"
EX13_FACTORS = "lead: 1\nroot: t^(1)\nroot: -t^(1)\nroot: 1 @ 2\n"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def check_golden(name: str, text: str):
    path = GOLDEN / name
    if UPDATE:
        path.write_text(text)
    assert text == path.read_text(), f"golden mismatch for {name}"


@pytest.mark.parametrize("argv,expected", [
    (["mult", "-f", "TR", EX13_TR, "--at", "(+,1)"], "1"),
    (["mult", "-f", "TR", EX13_TR, "--at", "(+,0)"], "2"),
    (["mult", "-f", "TR", EX13_TR, "--at", "(-,0)"], "0"),
    (["mult", "-f", "S", "-1;+1;+1", "--at", "+1"], "1"),
    (["mult", "-f", "S", "0;0;+1;-1", "--at", "0"], "2"),
    (["mult", "-f", "S", "-1;+1;+1", "--at", "-1", "--recursive"], "1"),
    (["mult", "-f", "T", FIG2_T, "--at", "5/6"], "3"),
    (["mult", "-f", "T", FIG2_T, "--at", "-1"], "2"),
    (["mult", "-f", "K", "0;1;0;1", "--at", "1"], "2"),
    (["newton", "-f", "TR", FIG2_TR, "--edges"], "slopes: -5/6, -1/2, 1; hlens: 3, 1, 2"),
    (["newton", "-f", "T", FIG2_T, "--edges"], "slopes: -5/6, -1/2, 1; hlens: 3, 1, 2"),
    (["initial", "-f", "TR", EX13_TR, "--at", "1"], "-; 0; +"),
    (["initial", "-f", "TR", EX13_TR, "--at", "0"], "0; 0; +; -; +"),
])
def test_single_line_outputs(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out.strip() == expected


def test_negative_tokens_are_values():
    assert _protect_values(["mult", "-f", "S", "-1;+1", "--at", "-1"]) == \
        ["mult", "-f", "S", "--input=-1;+1", "--at=-1"]
    assert _protect_values(["--json", "-f"]) == ["--json", "-f"]


@pytest.mark.parametrize("name,argv", [
    ("ex13_newton.txt", ["newton", "-f", "TR", EX13_TR]),
    ("ex13_newton_ascii.txt", ["newton", "-f", "TR", EX13_TR, "--ascii"]),
    ("ex13_newton.json", ["newton", "-f", "TR", EX13_TR, "--json"]),
    ("fig2_newton.txt", ["newton", "-f", "T", FIG2_T]),
    ("fig2_newton_ascii.txt", ["newton", "-f", "TR", FIG2_TR, "--ascii"]),
    ("fig2_newton.json", ["newton", "-f", "T", FIG2_T, "--json"]),
    ("ex13_lift.txt", ["lift", EX13_TR]),
    ("ex13_lift.json", ["lift", EX13_TR, "--json"]),
    ("ex13_verify.txt", ["verify", EX13_FACTORS]),
    ("ex13_verify_negated.txt", ["verify", "--negate", EX13_FACTORS]),
    ("ex13_verify.json", ["verify", "--json", EX13_FACTORS]),
])
def test_golden_text(capsys, name, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    check_golden(name, out)


@pytest.mark.parametrize("name,poly,field", [("ex13.svg", EX13_TR, "TR"), ("fig2.svg", FIG2_TR, "TR")])
def test_golden_svg(capsys, tmp_path, name, poly, field):
    target = tmp_path / name
    code, out, _ = run(capsys, "newton", "-f", field, poly, "--svg", str(target))
    assert code == 0 and out == ""
    check_golden(name, target.read_text())


def test_json_is_parseable(capsys):
    _, out, _ = run(capsys, "mult", "-f", "TR", EX13_TR, "--at", "(+,0)", "--json")
    assert json.loads(out) == {"poly": "(-,2); (+,2); (+,0); (-,0); (+,0)", "at": "(+,0)", "mult": 2}
    _, out, _ = run(capsys, "verify", "--json", EX13_FACTORS)
    assert [(r["delta"], r["roots"]) for r in json.loads(out)] == [(1, 1), (2, 2)]


def test_file_input(capsys, tmp_path):
    f = tmp_path / "p.txt"
    f.write_text(EX13_FACTORS)
    code, out, _ = run(capsys, "verify", "--file", str(f))
    assert code == 0 and out.count("bound=ok") == 2


class TestErrors:
    def test_parse_error_reports_column(self, capsys):
        code, _, err = run(capsys, "mult", "-f", "TR", "(-,2);(+,x)", "--at", "(+,1)")
        assert code == 2
        assert "column 7" in err

    def test_parse_error_reports_line(self, capsys):
        code, _, err = run(capsys, "verify", "lead: 1\nroot: t^(1) @ x")
        assert code == 2
        assert "line 2" in err

    def test_bad_root_text(self, capsys):
        code, _, err = run(capsys, "mult", "-f", "S", "+;-", "--at", "2")
        assert code == 2 and "parse error" in err

    def test_domain_errors(self, capsys):
        assert run(capsys, "mult", "-f", "TR", "inf", "--at", "(+,1)")[0] == 1
        code, _, err = run(capsys, "newton", "-f", "TR", "inf;inf")
        assert code == 1 and "domain error" in err

    def test_usage_errors(self, capsys):
        assert run(capsys, "bogus")[0] == 2
        assert run(capsys, "mult", "-f", "Q", "1")[0] == 2
        assert run(capsys, "mult", "-f", "S", "+;-")[0] == 2

    def test_missing_input(self, capsys):
        code, _, err = run(capsys, "newton")
        assert code == 2 and "no input" in err


def test_axioms_command(capsys, tmp_path):
    cfg = tmp_path / "h.cfg"
    cfg.write_text("axiom_grid = -1, 0, 1/2  # coarse\nseed = 5\n")
    code, out, _ = run(capsys, "axioms", "--samples", "60", "--config", str(cfg))
    assert code == 0
    assert out.strip().endswith("all laws hold")
    code, out, _ = run(capsys, "axioms", "--samples", "30", "--seed", "9", "--json")
    data = json.loads(out)
    assert data["ok"] and data["seed"] == 9 and all(law["ok"] for law in data["laws"])


def test_bad_config_is_usage_error(capsys, tmp_path):
    cfg = tmp_path / "h.cfg"
    cfg.write_text("no_such_key = 3\n")
    assert run(capsys, "axioms", "--config", str(cfg))[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "signtrop", "mult", "-f", "S", "-1;+1;+1", "--at", "+1"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.strip() == "1"
