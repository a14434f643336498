import json
import random
import subprocess
import sys
from collections import Counter
from fractions import Fraction

import pytest

from frolicher import linalg
from frolicher.bicomplex import DoubleComplex
from frolicher.cli import main
from frolicher.s6 import DiamondParams, realize_model
from frolicher.serialize import (ParseError, complex_to_json, doc_to_complex,
                                 fraction_to_str, json_to_complex,
                                 json_to_multiset, multiset_to_json,
                                 parse_dot_list, str_to_fraction)
from frolicher.zigzag import canonicalize_shape
from genutil import random_complex, random_multiset

import numpy as np


def test_fraction_strings():
    assert fraction_to_str(Fraction(-3, 7)) == "-3/7"
    assert fraction_to_str(Fraction(4, 2)) == "2"
    assert str_to_fraction("-3/7") == Fraction(-3, 7)
    assert str_to_fraction("5") == Fraction(5)
    assert str_to_fraction(5) == Fraction(5)
    with pytest.raises(ParseError):
        str_to_fraction("1/0")
    with pytest.raises(ParseError):
        str_to_fraction("a/b")
    with pytest.raises(ParseError):
        str_to_fraction(None)


def test_round_trip_with_rationals():
    dims = np.zeros((2, 2), dtype=np.int64)
    dims[0, 0] = 2
    dims[1, 0] = 1
    m = linalg.from_rows(1, 2, [[Fraction(1, 2), Fraction(-2, 6)]])
    K = DoubleComplex(1, 1, dims, d_horiz={(0, 0): m})
    text = complex_to_json(K)
    back = json_to_complex(text)
    assert back == K
    doc = json.loads(text)
    assert doc["d_horiz"][0]["m"] == [["1/2", "-1/3"]]


def test_round_trip_random_complexes():
    rng = random.Random(60)
    for i in range(30):
        K = random_complex(rng, 2 + i % 2, 2, rational=(i % 3 == 0))
        assert json_to_complex(complex_to_json(K)) == K


def test_serializer_omits_zero_and_degenerate_maps():
    K = realize_model(DiamondParams(0, 0, 1, 0, 0))
    doc = json.loads(complex_to_json(K))
    for key in ("d_horiz", "d_vert"):
        for item in doc[key]:
            assert any(x != "0" for row in item["m"] for x in row)
            assert doc["dims"][item["p"]][item["q"]] > 0


def test_parse_rejects_malformed_documents():
    good = json.loads(complex_to_json(realize_model(DiamondParams(0, 0, 1, 0, 0))))
    cases = []
    d = json.loads(json.dumps(good))
    d.pop("dims")
    cases.append(d)
    d = json.loads(json.dumps(good))
    d["dims"][0][0] = -1
    cases.append(d)
    d = json.loads(json.dumps(good))
    d["d_horiz"][0]["m"] = [["1"], ["1", "2"]]  # ragged
    cases.append(d)
    d = json.loads(json.dumps(good))
    d["d_horiz"][0]["p"] = 99  # leaves the grid
    cases.append(d)
    d = json.loads(json.dumps(good))
    d["d_horiz"].append(dict(d["d_horiz"][0]))  # duplicate key
    cases.append(d)
    d = json.loads(json.dumps(good))
    d["d_vert"].append({"p": 0, "q": 2, "m": [["1"]]})  # zero-dim spot
    cases.append(d)
    for doc in cases:
        with pytest.raises(ParseError):
            doc_to_complex(doc)
    with pytest.raises(ParseError):
        json_to_complex("{not json")


def test_multiset_round_trip():
    rng = random.Random(61)
    for _ in range(10):
        m = random_multiset(rng, (3, 3))
        text = multiset_to_json(m, (3, 3))
        back, grid = json_to_multiset(text)
        assert back == m and grid == (3, 3)


def test_parse_dot_list():
    assert parse_dot_list("(0,1),(1,1)") == [(0, 1), (1, 1)]
    assert parse_dot_list(" ( 2 , 0 ) ") == [(2, 0)]
    for bad in ("", "(1,2", "1,2", "(1,2)x", "(1,2),,(2,2)"):
        with pytest.raises(ParseError):
            parse_dot_list(bad)


# ---------------------------------------------------------------------------
# CLI


def write_etesi(tmp_path):
    path = tmp_path / "etesi.json"
    path.write_text(complex_to_json(realize_model(DiamondParams(0, 0, 1, 0, 0))))
    return str(path)


def test_cli_validate_ok(tmp_path, capsys):
    path = write_etesi(tmp_path)
    assert main(["validate", path]) == 0
    assert capsys.readouterr().out.strip() == "valid"


def test_cli_validate_reports_violations(tmp_path, capsys):
    doc = json.loads(complex_to_json(realize_model(DiamondParams(0, 0, 1, 0, 0))))
    doc["dims"][1][1] = 3  # break the shapes
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    assert main(["validate", str(path)]) == 1
    err = capsys.readouterr().err
    assert "shape" in err


def test_cli_parse_error_exit_2(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text("{")
    assert main(["validate", str(path)]) == 2
    assert main(["validate", str(tmp_path / "missing.json")]) == 2


def test_cli_cohomology_theories(tmp_path, capsys):
    path = write_etesi(tmp_path)
    for theory in ("dolbeault", "row", "bc", "aeppli"):
        assert main(["cohomology", path, "--theory", theory]) == 0
    assert main(["cohomology", path, "--theory", "derham"]) == 0
    assert "b_k: 1 0 0 0 0 0 1" in capsys.readouterr().out
    assert main(["cohomology", path, "--theory", "genus"]) == 0
    assert capsys.readouterr().out.strip() == "0"


def test_cli_pages_and_degeneration(tmp_path, capsys):
    path = write_etesi(tmp_path)
    assert main(["pages", path, "--max", "4", "--method", "both"]) == 0
    out = capsys.readouterr().out
    assert "methods agree on pages 1..4" in out
    assert "E_1:" in out and "E_4:" in out
    assert main(["degeneration", path]) == 0
    assert capsys.readouterr().out.strip() == "2"


def test_cli_pages_rejects_bad_max(tmp_path, capsys):
    path = write_etesi(tmp_path)
    assert main(["pages", path, "--max", "0"]) == 1


def test_cli_zigzag_profile(capsys):
    assert main(["zigzag", "profile", "--dots", "(0,1),(1,1)"]) == 0
    out = capsys.readouterr().out
    assert "shape: (0,1),(1,1)" in out
    assert "E_1:" in out and "bott_chern:" in out
    assert main(["zigzag", "profile", "--dots", "(0,0),(1,0),(1,1)"]) == 1
    assert "ascending" in capsys.readouterr().err


def test_cli_zigzag_synth_round_trip(tmp_path, capsys):
    m = Counter({canonicalize_shape([(0, 1), (1, 1)]): 2})
    src = tmp_path / "multiset.json"
    src.write_text(multiset_to_json(m, (3, 3)))
    out = tmp_path / "complex.json"
    assert main(["zigzag", "synth", str(src), "-o", str(out)]) == 0
    K = json_to_complex(out.read_text())
    assert K.dim(0, 1) == 2


def test_cli_s6_check(capsys):
    argv = ["s6", "check", "--h10", "0", "--h02", "0", "--h11", "1",
            "--alpha", "0", "--beta", "0"]
    assert main(argv) == 0
    assert "admissible" in capsys.readouterr().out
    argv_bad = ["s6", "check", "--h10", "0", "--h02", "0", "--h11", "0",
                "--alpha", "0", "--beta", "0"]
    assert main(argv_bad) == 1
    assert "violated" in capsys.readouterr().err


def test_cli_s6_enumerate(capsys):
    assert main(["s6", "enumerate", "--bound", "1", "--h11-zero"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines == ["h10=0 h02=0 h11=0 alpha=1 beta=0",
                     "h10=1 h02=0 h11=0 alpha=1 beta=0"]
    assert main(["s6", "enumerate", "--bound", "1", "--format", "table"]) == 0
    assert "h10" in capsys.readouterr().out


def test_cli_s6_realize_pages_match_prediction(tmp_path, capsys):
    out = tmp_path / "etesi.json"
    argv = ["s6", "realize", "--h10", "0", "--h02", "0", "--h11", "1",
            "--alpha", "0", "--beta", "0", "-o", str(out)]
    assert main(argv) == 0
    capsys.readouterr()
    assert main(["pages", str(out), "--max", "4"]) == 0
    capsys.readouterr()
    assert main(["degeneration", str(out)]) == 0
    assert capsys.readouterr().out.strip() == "2"


def test_cli_s6_realize_inadmissible(capsys):
    argv = ["s6", "realize", "--h10", "0", "--h02", "0", "--h11", "0",
            "--alpha", "0", "--beta", "0", "-o", "/tmp/unused.json"]
    assert main(argv) == 1
    assert "inadmissible" in capsys.readouterr().err


def test_cli_s6_predict_and_infer(tmp_path, capsys):
    path = write_etesi(tmp_path)
    argv = ["s6", "predict", "--h10", "0", "--h02", "0", "--h11", "1",
            "--alpha", "0", "--beta", "0"]
    assert main(argv) == 0
    capsys.readouterr()
    assert main(["s6", "infer", path]) == 0
    assert capsys.readouterr().out.strip() == \
        "h10=0 h02=0 h11=1 alpha=0 beta=0"


def test_cli_s6_infer_mismatch(tmp_path, capsys):
    # A complex that is valid but not of the model form: a lone dot at (1,1).
    from frolicher.zigzag import realize_shape
    K = realize_shape(canonicalize_shape([(1, 1)]), (3, 3))
    path = tmp_path / "odd.json"
    path.write_text(complex_to_json(K))
    assert main(["s6", "infer", str(path)]) == 1
    assert "E1 at (0,0)" in capsys.readouterr().err


def test_cli_s6_verify(capsys):
    argv = ["s6", "verify", "--h10", "1", "--h02", "0", "--h11", "0",
            "--alpha", "1", "--beta", "0"]
    assert main(argv) == 0
    assert "all tables match" in capsys.readouterr().out


def test_cli_output_deterministic(tmp_path, capsys):
    path = write_etesi(tmp_path)
    main(["cohomology", path, "--theory", "bc"])
    first = capsys.readouterr().out
    main(["cohomology", path, "--theory", "bc"])
    assert capsys.readouterr().out == first


def test_console_entry_point(tmp_path):
    res = subprocess.run(
        [sys.executable, "-m", "frolicher.cli", "s6", "enumerate",
         "--bound", "1", "--h11-zero"],
        capture_output=True, text=True)
    assert res.returncode == 0
    assert "h10=0 h02=0 h11=0 alpha=1 beta=0" in res.stdout
