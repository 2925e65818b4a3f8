import io
import json
import os
import subprocess
import sys

import pytest

from gkzkit.cli import main, parse_matrix, parse_rational, parse_vector
from gkzkit.errors import ParseError


def run(*argv):
    buf = io.StringIO()
    code = main(list(argv), out=buf)
    return code, json.loads(buf.getvalue())


def test_analyze_0134():
    code, out = run("analyze", "--A", "1 1 1 1; 0 1 3 4", "--beta", "1,2")
    assert code == 0
    assert out["volume"] == 4 and out["rank"] == {"generic": 4, "monomial_curve": 5}
    assert out["flags"]["saturated"] == "no" and out["flags"]["saturation_witness"] == [1, 2]


def test_analyze_identity():
    code, out = run("analyze", "--A", "1 0; 0 1", "--beta", "0,0")
    assert code == 0 and out["volume"] == 1 and out["resonance"]["resonant"] is True


def test_analyze_with_weight_adds_sections():
    code, out = run("analyze", "--fixture", "m0134", "--beta", "1/3,1/5", "--L", "0,1,2,0",
                    "--truncation", "4")
    assert code == 0
    assert out["triangulation"] == {"cells": [[1, 4]], "volumes": [4]}
    assert len(out["series"]) == 4


def test_parse_error_exit_code_and_position():
    code, out = run("analyze", "--A", "1 0; 0 1", "--beta", "0,1/0")
    assert code == 1
    assert out["error"]["kind"] == "ParseError" and out["error"]["position"] == 2


def test_validation_error_has_certificate():
    code, out = run("analyze", "--A", "1 -1")
    assert code == 2
    assert out["error"]["kind"] == "NotPointed"
    assert out["error"]["certificate"]["positive_dependency"] == [1, 1]
    code, out = run("analyze", "--A", "2 0; 0 1")
    assert code == 2 and out["error"]["certificate"]["snf_diagonal"] == [1, 2]


def test_unknown_flag_is_a_parse_error():
    code, out = run("analyze", "--nope")
    assert code == 1


def test_slopes():
    assert run("slopes", "--A", "1 0 1; 0 1 1", "--hyperplane", "3") == (0, {"slopes": ["2"]})
    code, out = run("slopes", "--fixture", "fourslopes")
    assert out["slopes_by_hyperplane"]["4"] == ["2", "3"]


def test_hodge():
    assert run("hodge", "fedorov", "--lambda", "0,0", "--mu", "1/2,1/2") == (
        0, {"0": 1, "1": 1})
    assert run("hodge", "sabbah-yu", "--lambda", "0") == (0, {"-1": 1})
    code, out = run("hodge", "sabbah-yu", "--lambda", "0", "--mu", "1/2")
    assert code == 2 and out["error"]["kind"] == "NotConfluentCase"


def test_convert_round_trip():
    code, out = run("convert", "--v", "1,1,-1", "--c=-1/2,0,0")
    assert code == 0
    assert out["kernel"] in ([[1, 1, -1]], [[-1, -1, 1]])
    assert out["beta"] == ["-1/2", "0"]
    code, back = run("convert", "--A", "1 0 1; 0 1 1", "--beta=-1/2,0")
    assert back["v"] == [1, 1, -1] and back["c"] == ["-1/2", "0", "0"]


def test_toric_and_stdpairs():
    code, out = run("toric", "--fixture", "kummer", "--L", "1,1,3")
    assert out["generators"] == ["d1*d2 - d3"] and out["initial"]["display"] == "<d3>"
    code, out = run("toric", "--fixture", "kummer", "--L", "1,1,2")
    assert out["initial"]["monomial"] is False
    code, out = run("stdpairs", "--gens", "0 0 0 1 2")
    assert [p["display"] for p in out["pairs"]] == [
        "(1, {1,2,3,4})", "(1, {1,2,3,5})", "(d5, {1,2,3,4})"]
    assert out["components"] == ["<d5>", "<d5^2>", "<d4>"]


def test_series_and_umbrella_jumps():
    code, out = run("series", "--fixture", "m0134", "--beta", "1/3,1/5", "--L", "0,1,2,0")
    assert code == 0 and out["truncation"] == "16"
    assert all(int(s["residual_min_weight"]) > 16 for s in out["series"])
    code, out = run("umbrella", "--fixture", "fourslopes", "--L", "1,1,1,0",
                    "--direction", "0,0,0,1")
    assert out["jumps"] == ["2", "3"]


def test_fuchs():
    code, out = run("fuchs", "--terms", "1 3 1; 2 0 0")
    assert out["regular"] is False and out["slopes"] == ["-2"]
    code, out = run("fuchs", "--theta", "0: 0 1; 1: -1", "--at-infinity")
    assert out["slopes"] == ["-1"]
    assert run("fuchs", "--convert", "2")[1]["fuchs_slope"] == "-1"


def test_svg_output(tmp_path):
    a, b = tmp_path / "u.svg", tmp_path / "f.svg"
    assert run("umbrella", "--fixture", "fourslopes", "--L", "1,1,1,5/2", "--svg", str(a))[0] == 0
    assert run("fuchs", "--terms", "1 3 1; 2 0 0", "--svg", str(b))[0] == 0
    for p in (a, b):
        text = p.read_text()
        assert text.startswith("<?xml") and "<svg" in text and "SVG 1.1" in text
    first = a.read_bytes()
    run("umbrella", "--fixture", "fourslopes", "--L", "1,1,1,5/2", "--svg", str(a))
    assert a.read_bytes() == first


def test_bound_from_environment(monkeypatch):
    monkeypatch.setenv("GKZKIT_BOUND", "7")
    assert run("analyze", "--fixture", "kummer")[1]["resonance"]["bound"] == 7
    assert run("analyze", "--fixture", "kummer", "--bound", "9")[1]["resonance"]["bound"] == 9


def test_module_entry_point_and_hash_seed_independence():
    outs = []
    for seed in ("0", "12345"):
        env = dict(os.environ, PYTHONHASHSEED=seed, GKZKIT_NO_COLOR="1")
        proc = subprocess.run([sys.executable, "-m", "gkzkit", "analyze", "--fixture", "join"],
                              capture_output=True, env=env)
        assert proc.returncode == 0
        outs.append(proc.stdout)
    assert outs[0] == outs[1]


@pytest.mark.parametrize("text,value", [("3", 3), ("-1/2", -0.5), ("+4/8", 0.5)])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


def test_parse_matrix_and_vector():
    assert parse_matrix("1, 2;3 4") == [[1, 2], [3, 4]]
    assert parse_vector("1/2 , -3") == [0.5, -3]
    with pytest.raises(ParseError) as e:
        parse_matrix("1 2; 3 x")
    assert e.value.position == 7
    with pytest.raises(ParseError):
        parse_matrix("1 2; 3")
    with pytest.raises(ParseError):
        parse_matrix("1/2 1")
