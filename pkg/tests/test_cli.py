import csv
import io
import json
import subprocess
import sys
from importlib import resources
from pathlib import Path

import jsonschema
import pytest

from sp4zeta.cli import JobSpec, main, run

ROOT = Path(__file__).resolve().parents[1]
SCHEMA = json.loads(resources.files("sp4zeta").joinpath("schema.json").read_text())


def invoke(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def invoke_json(capsys, *argv):
    code, out, _ = invoke(capsys, *argv)
    doc = json.loads(out)
    jsonschema.validate(doc, SCHEMA)
    return code, doc


def test_schema_copy_in_docs_is_identical():
    assert json.loads((ROOT / "docs" / "cli-output.schema.json").read_text()) == SCHEMA
    jsonschema.Draft202012Validator.check_schema(SCHEMA)


def test_eval_document(capsys):
    code, doc = invoke_json(capsys, "eval", "--fn", "xi-sp4", "--s", "3+0i", "--bits", "256", "--json")
    assert code == 0 and doc["at_pole"] is False
    assert doc["digits"] == int(256 * 0.30102999566398120) - 10
    assert doc["value"]["re"].startswith("0.00014742292182465674")


def test_eval_pole_flag(capsys):
    code, doc = invoke_json(capsys, "eval", "--fn", "xi-sp4", "--s", "2", "--bits", "96")
    assert code == 0 and doc["at_pole"] is True


@pytest.mark.parametrize("argv", [
    ["eval", "--fn", "eta", "--s", "2"],
    ["eval", "--fn", "xi", "--s", "2", "--bits", "32"],
    ["rect-count", "--fn", "f", "--rect", "0.5,2,-10"],
    ["eval", "--fn", "xi", "--s", "two"],
])
def test_usage_errors_exit_one(capsys, argv):
    code, _, err = invoke(capsys, *argv)
    assert code == 1 and err


def test_rect_count(capsys):
    code, doc = invoke_json(capsys, "rect-count", "--fn", "f", "--rect", "0.5,2,-10,10", "--bits", "96")
    assert code == 0 and doc["count"] == 2


def test_zeros_csv_header_and_rows(capsys):
    code, out, _ = invoke(capsys, "zeros", "--fn", "xi", "--range", "10,26", "--bits", "96", "--csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0
    assert rows[0] == ["index", "function", "re", "im", "residual", "method"]
    assert [r[3][:7] for r in rows[1:]] == ["14.1347", "21.0220", "25.0108"]


def test_census_small(capsys):
    code, doc = invoke_json(capsys, "census", "--fn", "xi", "--height", "22", "--bits", "96")
    assert code == 0
    assert doc["rect_count"] == doc["line_count"] == 2 and doc["suspects"] == []


def test_derive_and_fe_search(capsys):
    code, doc = invoke_json(capsys, "derive", "--n", "2", "--bits", "96")
    assert code == 0 and doc["closed_form_diff"] == [] and len(doc["normalized"]) == 6
    code, doc = invoke_json(capsys, "fe-search", "--n", "2", "--bits", "96")
    assert code == 0 and doc["constant"] == "-1"


def test_verify_bounds_small_grid(capsys):
    code, doc = invoke_json(capsys, "verify-bounds", "--kind", "r_bound", "--sigma-grid", "10;20",
                            "--t-grid", "0;30", "--bits", "96")
    assert code == 0 and doc["all_below"] is True


def test_verify_bounds_failure_exits_two(capsys):
    code, doc = invoke_json(capsys, "verify-bounds", "--kind", "r_bound", "--sigma-grid", "3",
                            "--t-grid", "0", "--bits", "96")
    assert code == 2 and doc["all_below"] is False


def test_plot_data_critical_line_is_imaginary(capsys):
    code, out, _ = invoke(capsys, "plot-data", "--fn", "Z", "--range", "0,30", "--samples", "301",
                          "--bits", "96", "--csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0 and rows[0] == ["param", "re", "im", "abs"] and len(rows) == 302
    for _, re_, _, ab in rows[1:]:
        assert abs(float(re_)) <= 1e-20 * max(1.0, float(ab))


def test_plot_data_real_axis_sign(capsys):
    code, out, _ = invoke(capsys, "plot-data", "--fn", "f", "--axis", "real-axis", "--range=-25,-20.2",
                          "--samples", "49", "--bits", "96", "--csv")
    values = [float(r[1]) for r in list(csv.reader(io.StringIO(out)))[1:]]
    assert code == 0 and len({v > 0 for v in values}) == 1


def test_plot_data_two_samples_and_minimum(capsys):
    code, out, _ = invoke(capsys, "plot-data", "--fn", "xi", "--range", "1,2", "--samples", "2",
                          "--bits", "96", "--csv")
    assert code == 0 and len(out.strip().splitlines()) == 3
    code, _, _ = invoke(capsys, "plot-data", "--fn", "xi", "--range", "1,2", "--samples", "1")
    assert code == 1


def test_job_replay_is_byte_identical(tmp_path, capsys):
    job_file = tmp_path / "job.json"
    code, first, _ = invoke(capsys, "eval", "--fn", "chi", "--s", "0.5+2i", "--bits", "128",
                            "--save-job", str(job_file))
    assert code == 0 and job_file.exists()
    code, second, _ = invoke(capsys, "--job", str(job_file))
    assert code == 0 and first == second
    job = JobSpec.from_json(job_file.read_text())
    assert run(job)[1] == run(JobSpec.from_json(job.to_json()))[1]


def test_out_path(tmp_path, capsys):
    target = tmp_path / "v.json"
    code, out, _ = invoke(capsys, "eval", "--fn", "xi", "--s", "2", "--bits", "96", "--out", str(target))
    assert code == 0 and json.loads(target.read_text())["command"] == "eval"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "sp4zeta", "eval", "--fn", "xi", "--s", "2", "--bits", "80"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["value"]["re"].startswith("0.523598775598")
