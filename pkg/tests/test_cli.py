import csv
import io
import json

import pytest

from sqhsys.cli import CSV_COLUMNS, family_to_record, main, record_to_family
from sqhsys.enumerator import enumerate_all


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_enumerate_json(capsys):
    code, out, _ = run(capsys, "enumerate", "--degree", "2", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert [r["name"] for r in doc["families"]] == ["X_{0,0,0}", "X_{0,0,2,0,1,1}"]
    assert [r["w_m"] for r in doc["families"]] == [[2, 1, 1, 2], [2, 1, 3, 2]]
    assert [r["lambda"] for r in doc["families"]] == ["-1/1", "1/1"]
    assert len(doc["removed"]) == 1


def test_json_is_byte_identical_across_runs(capsys):
    first = run(capsys, "enumerate", "--degree", "3", "--format", "json")[1]
    second = run(capsys, "enumerate", "--degree", "3", "--format", "json")[1]
    assert first == second


def test_enumerate_csv(capsys):
    code, out, _ = run(capsys, "enumerate", "--degree", "3", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0
    assert tuple(rows[0]) == CSV_COLUMNS
    assert len(rows) == 37
    first = dict(zip(rows[0], rows[1]))
    assert first["support_p"] == "0:3;1:0" and first["lambda"] == "-1/1"


def test_enumerate_text_and_file(capsys, tmp_path):
    code, out, _ = run(capsys, "enumerate", "--degree", "3")
    assert code == 0 and out.rstrip().endswith("families: 36  removed (index 0): 6")
    target = tmp_path / "fams.json"
    code, out, _ = run(capsys, "enumerate", "--degree", "2", "--format", "json", "--output", str(target))
    assert code == 0 and out == ""
    assert len(json.loads(target.read_text())["families"]) == 2


def test_enumerate_rejects_degree_1(capsys):
    code, _, err = run(capsys, "enumerate", "--degree", "1")
    assert code == 2 and "degree must exceed 1" in err


def test_record_round_trip():
    for fam in enumerate_all(3):
        back = record_to_family(json.loads(json.dumps(family_to_record(fam))))
        assert back == fam


def test_check_reports_the_missing_supports(capsys):
    code, out, _ = run(capsys, "check", "--degree", "2")
    assert code == 1
    lines = out.splitlines()
    assert lines[0] == "oracle: 4  enumerator: 2"
    assert lines[-1] == "differences found"


@pytest.mark.parametrize("degree", ["2", "3"])
def test_check_completed_mode_passes(capsys, degree):
    code, out, _ = run(capsys, "check", "--degree", degree, "--complete")
    assert code == 0 and out.rstrip().endswith("no differences")


def test_check_with_tiny_bound_fails(capsys):
    code, out, _ = run(capsys, "check", "--degree", "3", "--s-bound", "1")
    assert code == 1 and out.startswith("oracle: 0")


def test_canonical_single_field(capsys):
    code, out, _ = run(capsys, "canonical", "--", "-y^3 + x^2", "x")
    assert code == 0
    assert "label: H1,1-" in out


def test_canonical_unsupported_field(capsys):
    code, out, _ = run(capsys, "canonical", "8*y^2", "x^3")
    assert code == 1 and "semihomogeneous" in out


def test_canonical_round_trip_command(capsys):
    code, out, _ = run(capsys, "canonical", "--degree", "2", "--trials", "3", "--seed", "1")
    assert code == 0 and out.strip() == "round trips: 30/30 ok (seed 1)"


def test_canonical_bad_input(capsys):
    assert run(capsys, "canonical", "x^^", "y")[0] == 2
    assert run(capsys, "canonical")[0] == 2


def test_center_command(capsys):
    code, out, _ = run(capsys, "center", "--degree", "2")
    assert code == 0 and out.rstrip().endswith("centers: 0")
    code, out, _ = run(capsys, "center", "--degree", "3")
    assert code == 0 and out.rstrip().endswith("centers: 1 (H1,1-)")
    assert run(capsys, "center", "--degree", "4")[0] == 2


def _orbit_rows(out):
    return [line.split("\t") for line in out.splitlines() if not line.startswith("#")]


def test_orbit_closes_with_constant_energy(capsys):
    code, out, _ = run(capsys, "orbit", "0.5", "0")
    assert code == 0
    assert "# closure=true" in out
    hs = [float(r[3]) for r in _orbit_rows(out)]
    assert max(abs(h - 0.5) for h in hs) <= 1e-6


def test_orbit_fixed_point(capsys):
    code, out, _ = run(capsys, "orbit", "0", "0")
    rows = _orbit_rows(out)
    assert code == 0 and "fixed point" in out
    assert len(rows) == 2 and rows[0][1:] == rows[1][1:]


def test_orbit_outside_annulus_warns(capsys):
    code, out, _ = run(capsys, "orbit", "2", "0", "--steps", "200")
    assert code == 0
    assert "# h=-3.25" in out and "warning" in out


def test_invalid_step(capsys):
    assert run(capsys, "orbit", "0.5", "0", "--step", "0")[0] == 2


def test_unknown_command(capsys):
    assert run(capsys, "frobnicate")[0] == 2
