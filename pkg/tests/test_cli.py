import json
import subprocess
import sys
from pathlib import Path

import pytest

from bhcr.cli import main
from bhcr.report import AnalysisReport

GOLDEN = Path(__file__).parent / "golden"
KEYS = {"input", "weights", "groups", "transpose", "borcea_voisin", "verdicts"}
CURVE = "x0^2+x1^4+x2^4"
SURFACE = "y0^2+y1^5*y2+y2^5*y3+y3^6"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "bhcr", "table", "verify"], capture_output=True, text=True)
    assert res.returncode == 0
    assert res.stdout.count(" ok") == 13


def test_analyze_json_schema(capsys):
    code, out, _ = run(capsys, "analyze", CURVE, "--transpose", "--json")
    assert code == 0
    data = json.loads(out)
    assert set(data) == KEYS
    assert data["weights"]["weights"] == [2, 1, 1]
    assert data["groups"]["sl_order"] == 8
    assert data["groups"]["sl_tilde_order"] == 2
    assert data["verdicts"]["calabi_yau"] is True
    assert data["transpose"]["potential"] == CURVE
    assert AnalysisReport.from_json(out).to_dict() == data


def test_analyze_text_output(capsys):
    code, out, _ = run(capsys, "analyze", "x0^2+x1^3*x2+x2^4")
    assert code == 0
    assert "weights: (2, 1, 1)" in out
    assert "sl_order: 4" in out


def test_require_cy_failure(capsys):
    code, _, err = run(capsys, "analyze", "x0^3+x1^3+x2^3+x3^3", "--require-cy")
    assert code == 2
    assert "NonCalabiYau" in err


def test_parse_error_exit_code(capsys):
    code, _, err = run(capsys, "analyze", "x^2+x^2")
    assert code == 1
    assert "DuplicateMonomial" in err


def test_transpose_command(capsys):
    code, out, _ = run(capsys, "transpose", SURFACE, "--vars", "y0,y1,y2,y3", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["transpose"]["potential"] == "y0^2+y1^5+y1*y2^5+y2*y3^6"
    assert data["transpose"]["weights"] == [25, 10, 8, 7]


def test_group_command(capsys):
    code, out, _ = run(capsys, "group", CURVE, "--generators", "1/2,0,1/2", "--transposed", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["groups"]["group"]["elements"] == [["0", "0", "0"], ["0", "1/4", "3/4"]]
    assert data["transpose"]["group"]["order"] == 1
    assert data["verdicts"]["double_transpose"] is True


def test_group_non_member(capsys):
    code, _, err = run(capsys, "group", CURVE, "--generators", "1/4,0,0")
    assert code == 1
    assert "NotAMember" in err


def test_mirror_bv_matches_golden(capsys):
    code, out, _ = run(capsys, "mirror-bv", CURVE, SURFACE, "--surface-vars", "y0,y1,y2,y3",
                       "--triple", "1", "1", "1", "--json")
    assert code == 0
    assert json.loads(out) == json.loads((GOLDEN / "mirror_bv_example.json").read_text())


def test_mirror_bv_weight_obstruction(capsys):
    code, _, err = run(capsys, "mirror-bv", CURVE, "y0^2+y1^3+y2^12+y3^12")
    assert code == 2
    assert "divisible by 6" in err


def test_mirror_bv_triple_without_mirror(capsys):
    code, out, err = run(capsys, "mirror-bv", CURVE, SURFACE, "--surface-vars", "y0,y1,y2,y3",
                         "--triple", "14", "6", "0")
    assert code == 2


def test_table_verify_matches_golden(capsys):
    code, out, _ = run(capsys, "table", "verify", "--json")
    assert code == 0
    assert json.loads(out) == json.loads((GOLDEN / "table_verify.json").read_text())


def test_table_print(capsys):
    code, out, _ = run(capsys, "table", "print")
    assert code == 0
    assert len(out.strip().splitlines()) == 13
    assert "ok" not in out


@pytest.mark.parametrize("argv, code", [
    (["triple", "1", "1", "1"], 0),
    (["triple", "14", "6", "0"], 2),
    (["triple", "10", "8", "0"], 2),
    (["triple", "3", "2", "1"], 2),
])
def test_triple_exit_codes(capsys, argv, code):
    assert run(capsys, *argv)[0] == code


def test_triple_json(capsys):
    code, out, _ = run(capsys, "triple", "1", "1", "1", "--json")
    data = json.loads(out)
    assert set(data) == KEYS
    bv = data["borcea_voisin"]
    assert bv["fixed_locus"] == {"genus": 10, "rational_curves": 0}
    assert bv["hodge"] == [6, 60] and bv["mirror_hodge"] == [60, 6]
    assert bv["bhcr_model"] == "Available"


def test_report_round_trip_rejects_bad_keys():
    with pytest.raises(ValueError):
        AnalysisReport.from_dict({"input": None})
