import json

import numpy as np
import pytest
from numpy.testing import assert_allclose

from chebprob.cli import main, merge_negative_values, parse_grid


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_eval_reproduces_reference_curve(capsys):
    code, out, _ = run(capsys, "eval", "--family", "f2", "--rho", "0.5", "--y", "0.5",
                       "--grid", "-0.9:0.9:181")
    assert code == 0
    lines = out.split("\n")
    assert lines[0] == "x,value" and lines[-1] == ""
    data = np.array([[float(v) for v in ln.split(",")] for ln in lines[1:-1]])
    x = data[:, 0]
    ref = 24 / (7 * np.pi * np.sqrt(1 - x * x)) * (4 - 2 * x + x * x) / (13 - 20 * x + 16 * x * x)
    assert data.shape == (181, 2)
    assert_allclose(data[:, 1], ref, atol=1e-12)


def test_csv_round_trip(capsys):
    from chebprob.densities import DensityParams, pdf
    _, out, _ = run(capsys, "eval", "--a", "0.3,-0.6", "--grid", "-0.5:0.5:11")
    rows = [ln.split(",") for ln in out.splitlines()[1:]]
    x = np.array([float(r[0]) for r in rows])
    vals = np.array([float(r[1]) for r in rows])
    assert np.array_equal(vals, pdf(DensityParams.of(0.3, -0.6), x))


def test_grid_clipped_for_densities(capsys):
    _, out, _ = run(capsys, "eval", "--family", "arcsine", "--grid", "-1:1:3")
    xs = [float(ln.split(",")[0]) for ln in out.splitlines()[1:]]
    assert xs[0] == -1 + 1e-12 and xs[-1] == 1 - 1e-12


def test_kernel_verb(capsys):
    code, out, _ = run(capsys, "kernel", "--id", "GU", "--rho", "0", "--grid", "-1:1:3")
    assert code == 0
    assert out.splitlines() == ["x,value", "-1,1", "0,1", "1,1"]


def test_coeffs_json(capsys):
    code, out, _ = run(capsys, "coeffs", "--a", "0.5,-0.5", "--max-j", "4")
    doc = json.loads(out)
    assert code == 0
    assert set(doc) == {"B", "b", "t"}
    assert_allclose(doc["B"], 10 / 9, rtol=1e-15)
    assert len(doc["t"]) == 5


def test_table(capsys):
    code, out, _ = run(capsys, "table", "--family", "f2", "--rho", "0.5", "--y", "0.5",
                       "--max-j", "3")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "j,value" and lines[1] == "0,1" and len(lines) == 5


def test_sample_with_sidecar(tmp_path, capsys):
    out = tmp_path / "draws.txt"
    code, _, _ = run(capsys, "sample", "--family", "f2", "--rho", "0.5", "--y", "0.5",
                     "--count", "50", "--seed", "7", "--out", str(out))
    assert code == 0
    vals = np.loadtxt(out)
    meta = json.loads((tmp_path / "draws.txt.json").read_text())
    assert vals.shape == (50,) and np.all(np.abs(vals) < 1)
    assert meta["seed"] == 7 and meta["config"]["count"] == 50


def test_verify_kernels_passes(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "kernels", "--rho-max", "0.9")
    assert code == 0
    assert "FAIL" not in out


def test_verify_tolerance_override(capsys, monkeypatch):
    monkeypatch.setenv("CHEB_VERIFY_TOL", "1e-30")
    code, out, _ = run(capsys, "verify", "--suite", "coeffs")
    assert code == 1
    assert "FAIL" in out


def test_domain_error_exit(capsys):
    code, _, err = run(capsys, "coeffs", "--a", "0.5,0.5")
    assert code == 3 and "domain error" in err
    code, _, _ = run(capsys, "eval", "--family", "f2", "--rho", "1.0", "--y", "0", "--grid", "0:0:1")
    assert code == 3


@pytest.mark.parametrize("argv", [
    ["eval", "--family", "f2", "--rho", "0.5", "--grid", "0:1:3"],
    ["eval", "--a", "0.1", "--grid", "0:1"],
    ["eval", "--a", "x,y", "--grid", "0:1:3"],
    ["frobnicate"],
    ["verify", "--rho-max", "2"],
])
def test_usage_errors(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_argument_helpers():
    assert merge_negative_values(["--grid", "-1:1:3", "--a", "-.5,0.2"]) == \
        ["--grid=-1:1:3", "--a=-.5,0.2"]
    assert_allclose(parse_grid("-1:1:5"), [-1, -0.5, 0, 0.5, 1])
