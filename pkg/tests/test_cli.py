import json
import subprocess
import sys

import jsonschema
import pytest

from vknot.cli import main

POLY = {"type": "array", "items": {"type": "array", "items": {"type": "integer"}, "minItems": 3, "maxItems": 3}}
BUNDLE_SCHEMA = {
    "type": "object",
    "required": ["code", "writhe", "crossings", "nset", "dwrithe", "P", "W", "L", "F", "T", "cosmetic"],
    "additionalProperties": False,
    "properties": {
        "code": {"type": "string"},
        "writhe": {"type": "integer"},
        "crossings": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["label", "sign", "index"],
                "properties": {
                    "label": {"type": "integer", "minimum": 1},
                    "sign": {"enum": [1, -1]},
                    "index": {"type": "integer"},
                },
            },
        },
        "nset": {"type": "array", "items": {"type": "integer", "minimum": 1}},
        "dwrithe": {"type": "object", "additionalProperties": {"type": "integer"}},
        "P": POLY,
        "W": POLY,
        "L": {"type": "object", "additionalProperties": POLY},
        "F": {"type": "object", "additionalProperties": POLY},
        "T": {"type": "object", "additionalProperties": {"type": "array", "items": {"type": "integer"}}},
        "cosmetic": {"type": "object", "additionalProperties": {"enum": ["not_cosmetic", "inconclusive"]}},
    },
}


def run(*args, stdin=None):
    return subprocess.run(
        [sys.executable, "-m", "vknot", *args], input=stdin, capture_output=True, text=True
    )


def test_report_text():
    r = run("report", "O1+O2+U1+U2+")
    assert r.returncode == 0
    assert "P = t + t^-1 - 2" in r.stdout


def test_report_empty_code():
    r = run("report", "", "--json")
    assert r.returncode == 0
    obj = json.loads(r.stdout)
    assert obj["P"] == [] and obj["crossings"] == [] and obj["nset"] == []


def test_report_bad_code_exits_2():
    r = run("report", "O1+U1-")
    assert r.returncode == 2
    assert "SignMismatch" in r.stderr


@pytest.mark.parametrize("code", ["O1+O2+U1+U2+", "", "fig6", "fig20-K", "O1+U2+O3+U1+O2+U3+"])
def test_report_json_validates(code, capsys):
    assert main(["report", code, "--json"]) == 0
    obj = json.loads(capsys.readouterr().out)
    jsonschema.validate(obj, BUNDLE_SCHEMA)


def test_report_is_deterministic():
    assert run("report", "fig20-Kprime", "--json").stdout == run("report", "fig20-Kprime", "--json").stdout


def test_batch_mode_keeps_order_and_flags_bad_lines():
    r = run("report", "--batch", "--json", stdin="O1+U1+\nO1+O2+U1+U2+\nO1+U1-\n\n")
    assert r.returncode == 2
    lines = [json.loads(line) for line in r.stdout.splitlines()]
    assert [obj["code"] for obj in lines] == ["O1+U1+", "O1+O2+U1+U2+", ""]
    assert "SignMismatch" in r.stderr


def test_compare():
    assert run("compare", "fig20-K", "fig20-Kprime").stdout.strip() == "distinguished by F^1"
    assert run("compare", "fig13-K", "fig13-Kstar").stdout.strip() == "distinguished by L^1"
    same = run("compare", "O1+O2+U1+U2+", "U2+O1+O2+U1+")
    assert same.stdout.strip() == "indistinguishable by computed invariants"
    obj = json.loads(run("compare", "fig20-K", "fig20-Kprime", "--json").stdout)
    assert obj["distinguished"] is True and obj["witness"] == "F^1"
    assert run("compare", "O1+", "O1+U1+").returncode == 2


def test_cosmetic(capsys):
    assert main(["cosmetic", "fig6", "--json"]) == 0
    obj = json.loads(capsys.readouterr().out)
    assert {v["status"] for v in obj["cosmetic"].values()} == {"not_cosmetic"}
    assert main(["cosmetic", "O1+U1+", "--json"]) == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj["cosmetic"]["1"]["status"] == "inconclusive"


def test_fuzz_clean_run():
    r = run("fuzz", "fig6", "--moves", "50", "--walks", "100", "--seed", "7")
    assert r.returncode == 0
    assert "violations: 0" in r.stdout


def test_fuzz_json_and_every_step(capsys):
    assert main(["fuzz", "virtual-trefoil", "--moves", "10", "--walks", "3", "--every-step", "--json"]) == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj["violations"] == [] and obj["walks"] == 3


def test_fuzz_reports_violation_with_seed(monkeypatch, capsys):
    import vknot.cli as cli

    real = cli.bundle
    calls = {"n": 0}

    class Fake:
        def __init__(self, b, tag):
            self.b, self.tag = b, tag

        def signature(self):
            return (self.b.signature(), self.tag)

    def fake_bundle(code):
        calls["n"] += 1
        return Fake(real(code), calls["n"] == 1)

    monkeypatch.setattr(cli, "bundle", fake_bundle)
    assert main(["fuzz", "kink", "--moves", "3", "--walks", "2", "--seed", "40"]) == 1
    out = capsys.readouterr().out
    assert "violation in walk seed 40" in out and "violation in walk seed 41" in out


def test_family():
    r = run("family", "--n", "4")
    code = r.stdout.strip()
    assert r.returncode == 0
    assert len(code.replace("+", " ").replace("-", " ").split()) == 14
    obj = json.loads(run("family", "--n", "3", "--mutant", "--json").stdout)
    assert obj["mutant"] is True and obj["labels"]["d"] == 6
    assert run("family", "--n", "0").returncode == 2


def test_fixture_command():
    r = run("fixture", "--name", "fig6", "--json")
    obj = json.loads(r.stdout)
    assert obj["code"] == "O1-U2-O4+U3-O2-U1-U4+O3-"
    assert run("fixture", "--name", "nope").returncode == 2
    assert "fig20-Kprime" in run("fixture", "--list").stdout.split()


def test_missing_argument_exits_2():
    assert run("report").returncode == 2
    assert run("bogus").returncode == 2
