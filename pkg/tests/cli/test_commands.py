import csv
import io
import json

import pytest

from click.testing import CliRunner

from puncture_metric import __version__
from puncture_metric.cli import cli
from puncture_metric.config import PRECISION_ENV
from puncture_metric.covering import builtin_coverings, lambda_covering
from puncture_metric.metric import ComplexPoint, metric_expansion_eval


@pytest.fixture
def runner():
    return CliRunner()


def invoke(runner, *args):
    return runner.invoke(cli, list(args))


def test_version(runner):
    result = invoke(runner, "--version")
    assert result.exit_code == 0
    assert __version__ in result.stdout


def test_coeffs_lambda(runner):
    result = invoke(runner, "coeffs", "--N", "2", "--c1", "16", "--c2=-128", "--order", "6")
    assert result.exit_code == 0
    payload = json.loads(result.stdout)
    assert payload["level_N"] == 2
    assert payload["c"][:4] == ["16", "-128", "704", "-3072"]
    assert payload["b"][:3] == ["1/16", "1/32", "21/1024"]


def test_coeffs_gamma3_csv(runner):
    result = invoke(runner, "coeffs", "--N", "3", "--c1", "1", "--c2", "3", "--order", "4", "--format", "csv")
    assert result.exit_code == 0
    rows = list(csv.reader(io.StringIO(result.stdout)))
    assert rows[0] == ["m", "c", "b", "l"]
    assert rows[1][:3] == ["1", "1", "1"]
    assert rows[4][3] == ""
    assert [row[2] for row in rows[1:]] == ["1", "-3", "9", "-22"]


def test_coeffs_vanishing_c1(runner):
    result = invoke(runner, "coeffs", "--N", "2", "--c1", "0", "--c2", "1", "--order", "5")
    assert result.exit_code == 1
    payload = json.loads(result.stdout)
    assert payload["status"] == "error"
    assert payload["error_name"] == "NonInvertibleLeadingCoefficient"
    assert "c1 must be nonzero" in payload["error_message"]


def test_coeffs_unsupported_level(runner):
    result = invoke(runner, "coeffs", "--N", "7", "--c1", "1", "--c2", "0", "--order", "5")
    assert result.exit_code == 1
    assert json.loads(result.stdout)["error_name"] == "UnsupportedLevel"


def test_example_gamma3(runner):
    result = invoke(runner, "example", "gamma3", "--order", "4")
    assert result.exit_code == 0
    payload = json.loads(result.stdout)
    assert payload["covering"]["c"] == ["1", "3", "9", "22"]
    assert payload["covering"]["b"] == ["1", "-3", "9", "-22"]
    assert payload["eta_expansion"] == ["0", "1", "3", "9", "22"]


def test_example_human(runner):
    result = invoke(runner, "example", "lambda", "--order", "3", "--format", "human")
    assert result.exit_code == 0
    assert "Built-in covering lambda" in result.stdout
    assert "-128" in result.stdout


def test_metric_point(runner):
    result = invoke(runner, "metric", "--example", "lambda", "--p", "1e-3", "--M", "2")
    assert result.exit_code == 0
    payload = json.loads(result.stdout)
    expected = metric_expansion_eval(ComplexPoint(re="1e-3"), 1, lambda_covering(12), 2)
    assert float(payload["value"]) == pytest.approx(expected.as_float(), rel=1e-15)
    assert payload["truncation_order"] == 2
    assert payload["method"] == "expansion"


def test_metric_direct(runner):
    result = invoke(runner, "metric", "--example", "gamma3", "--re", "1e-3", "--im", "1e-3", "--direct")
    assert result.exit_code == 0
    payload = json.loads(result.stdout)
    assert payload["method"] == "direct"
    assert payload["truncation_order"] == 12


def test_metric_zero_tangent(runner):
    result = invoke(runner, "metric", "--example", "lambda", "--p", "1e-3", "--v-norm", "0")
    assert result.exit_code == 0
    assert float(json.loads(result.stdout)["value"]) == 0


def test_metric_extended_precision_from_env(runner, monkeypatch):
    monkeypatch.setenv(PRECISION_ENV, "extended")
    result = invoke(runner, "metric", "--example", "lambda", "--p", "1e-3")
    assert result.exit_code == 0
    payload = json.loads(result.stdout)
    assert payload["p"]["precision"] == "extended"
    assert len(payload["value"].replace(".", "")) > 30


def test_metric_grid_csv(runner):
    result = invoke(
        runner, "metric", "--example", "lambda", "--grid", "--radial", "2", "--angular", "3",
        "--workers", "2", "--format", "csv",
    )
    assert result.exit_code == 0
    rows = list(csv.reader(io.StringIO(result.stdout)))
    assert rows[0] == ["re", "im", "chi", "order"]
    assert len(rows) == 7
    assert all(float(row[2]) > 0 for row in rows[1:])


def test_metric_from_coeffs_file(runner, tmp_path):
    path = tmp_path / "lambda.json"
    path.write_text(lambda_covering(8).to_json())
    result = invoke(runner, "metric", "--coeffs-file", str(path), "--p", "1e-3", "--M", "3")
    assert result.exit_code == 0
    assert json.loads(result.stdout)["truncation_order"] == 3


def test_metric_from_tampered_coeffs_file(runner, tmp_path):
    payload = json.loads(lambda_covering(8).to_json())
    payload["c"][3] = "0"
    path = tmp_path / "lambda.json"
    path.write_text(json.dumps(payload))
    result = invoke(runner, "metric", "--coeffs-file", str(path), "--p", "1e-3")
    assert result.exit_code == 1
    assert json.loads(result.stdout)["error_name"] == "InconsistentCoveringData"


def test_metric_needs_one_covering_source(runner):
    result = invoke(runner, "metric", "--example", "lambda", "--N", "2", "--c1", "16", "--c2=-128", "--p", "1e-3")
    assert result.exit_code == 1
    assert "exactly one covering source" in json.loads(result.stdout)["error_message"]


def test_metric_outside_validity_region(runner):
    result = invoke(runner, "metric", "--example", "gamma3", "--p", "0.5")
    assert result.exit_code == 1
    assert json.loads(result.stdout)["error_name"] == "OutsideValidityRegion"


def test_metric_truncation_too_large(runner):
    result = invoke(runner, "metric", "--example", "gamma3", "--order", "4", "--p", "1e-3", "--M", "4")
    assert result.exit_code == 1
    assert json.loads(result.stdout)["error_name"] == "TruncationExceedsData"


def test_metric_needs_a_point(runner):
    result = invoke(runner, "metric", "--example", "gamma3")
    assert result.exit_code == 1
    assert json.loads(result.stdout)["error_name"] == "InvalidEvaluationPoint"


def test_radius_writes_output_file(runner, tmp_path):
    path = tmp_path / "radius.json"
    result = invoke(runner, "radius", "--example", "lambda", "--p", "1e-3", "--M", "4", "--output", str(path))
    assert result.exit_code == 0
    assert result.stdout == ""
    payload = json.loads(path.read_text())
    assert float(payload["relative_gap"]) <= 1e-6
    assert float(payload["bound"]) > 0


def test_radius_human(runner):
    result = invoke(runner, "radius", "--example", "gamma3", "--p", "1e-4", "--format", "human")
    assert result.exit_code == 0
    assert "Picard radius bound" in result.stdout


def test_verify_passes(runner):
    result = invoke(runner, "verify", "--order", "8", "--trials", "2", "--seed", "11")
    assert result.exit_code == 0
    payload = json.loads(result.stdout)
    assert payload["passed"] is True
    assert len(payload["checks"]) == 9


def test_verify_reports_corruption(runner, mocker):
    coverings = builtin_coverings(8)
    lam = coverings["lambda"]
    broken = lam.model_copy(update={"c": (lam.c[0], lam.c[1], lam.c[2] + 1, *lam.c[3:])})
    mocker.patch(
        "puncture_metric.verification.runner.builtin_coverings",
        return_value={**coverings, "lambda": broken},
    )
    result = invoke(runner, "verify", "--order", "8", "--trials", "1", "--format", "csv")
    assert result.exit_code == 1
    rows = {row[0]: row[1] for row in csv.reader(io.StringIO(result.stdout))}
    assert rows["composition_identity"] == "FAIL"
    assert rows["gamma3_example"] == "PASS"


def test_verify_rejects_low_order(runner):
    result = invoke(runner, "verify", "--order", "4")
    assert result.exit_code == 2


def test_metric_precision_flag_beats_env(runner, monkeypatch):
    monkeypatch.setenv(PRECISION_ENV, "double")
    result = invoke(runner, "metric", "--example", "lambda", "--p", "1e-3", "--precision", "extended")
    assert result.exit_code == 0
    assert json.loads(result.stdout)["p"]["precision"] == "extended"


@pytest.mark.parametrize(
    "args",
    [
        ["coeffs", "--N", "2", "--c1", "16", "--c2=-128", "--order", "4"],
        ["example", "lambda"],
        ["verify", "--order", "8"],
    ],
)
def test_exact_commands_do_not_take_precision(runner, args):
    result = invoke(runner, *args, "--precision", "extended")
    assert result.exit_code == 2
    assert "No such option" in result.output
