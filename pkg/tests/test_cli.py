import json
import math
import subprocess
import sys

import pytest

from cdwtunnel.cli import main


def run_cli(args, capsys=None):
    code = main(args)
    return code


def read_lines(path):
    return path.read_text(encoding="utf-8").splitlines()


def test_curve_zener_zero_below_threshold(tmp_path):
    out = tmp_path / "curve.csv"
    code = main(
        [
            "curve",
            "--model",
            "zener",
            "--e-t",
            "1",
            "--grid-lo",
            "0.5",
            "--grid-hi",
            "2.0",
            "--grid-n",
            "16",
            "--grid-kind",
            "linear",
            "--out",
            str(out),
        ]
    )
    assert code == 0
    lines = read_lines(out)
    assert lines[0] == "e,i_zener"
    for line in lines[1:]:
        e, i = (float(c) for c in line.split(","))
        if e <= 1.0:
            assert i == 0.0
        else:
            assert i > 0.0


def test_curve_both_row_count(tmp_path):
    out = tmp_path / "both.csv"
    code = main(
        ["curve", "--model", "both", "--grid-lo", "1.1", "--grid-hi", "5", "--grid-n", "5", "--out", str(out)]
    )
    assert code == 0
    lines = read_lines(out)
    assert lines[0] == "e,i_sge,i_zener"
    assert len(lines) == 6  # header + 5 data rows


def test_curve_missing_output_errors_without_file(tmp_path, capsys):
    code = main(["curve", "--model", "zener"])
    assert code == 1
    assert "output path" in capsys.readouterr().err
    assert list(tmp_path.iterdir()) == []


def test_curve_bad_grid_is_usage_error(capsys):
    code = main(["curve", "--grid-lo", "2", "--grid-hi", "1", "--out", "x.csv"])
    assert code == 1
    code = main(["curve", "--grid-n", "1", "--out", "x.csv"])
    assert code == 1
    code = main(["curve", "--grid-lo", "0", "--grid-kind", "log", "--out", "x.csv"])
    assert code == 1


def test_curve_json_format(tmp_path):
    out = tmp_path / "curve.json"
    code = main(
        ["curve", "--model", "sge", "--grid-lo", "1.2", "--grid-hi", "3", "--grid-n", "4", "--format", "json", "--out", str(out)]
    )
    assert code == 0
    payload = json.loads(out.read_text())
    assert payload["columns"] == ["e", "i_sge"]
    assert len(payload["rows"]) == 4


def test_curve_deterministic_bytes(tmp_path):
    args = ["curve", "--model", "both", "--grid-n", "50", "--out"]
    out1 = tmp_path / "a.csv"
    out2 = tmp_path / "b.csv"
    assert main(args + [str(out1)]) == 0
    assert main(args + [str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()


def test_csv_round_trip_is_exact_for_emitted_format(tmp_path):
    out = tmp_path / "c.csv"
    main(["curve", "--model", "sge", "--grid-n", "40", "--out", str(out)])
    lines = read_lines(out)
    rows = [[float(c) for c in line.split(",")] for line in lines[1:]]
    rewritten = lines[:1] + [",".join(format(v, ".12g") for v in row) for row in rows]
    assert "\n".join(rewritten) + "\n" == out.read_text(encoding="utf-8")


def test_config_file_with_flag_override(tmp_path):
    cfg = tmp_path / "run.json"
    cfg.write_text(json.dumps({"model": "zener", "grid_lo": 1.1, "grid_hi": 4.0, "grid_n": 7}))
    out = tmp_path / "from_config.csv"
    code = main(["curve", "--config", str(cfg), "--grid-n", "9", "--out", str(out)])
    assert code == 0
    assert len(read_lines(out)) == 10  # flag wins over config n=7


def test_fit_self_fit_via_csv(tmp_path, capsys):
    data = tmp_path / "target.csv"
    main(
        ["curve", "--model", "sge", "--c-tilde1", "1.5", "--c-v", "1.2", "--grid-lo", "1.3", "--grid-hi", "5", "--grid-n", "40", "--grid-kind", "linear", "--out", str(data)]
    )
    capsys.readouterr()
    out = tmp_path / "report.json"
    code = main(
        ["fit", "--data", str(data), "--start-c-tilde1", "1.2", "--start-c-v", "1.0", "--out", str(out)]
    )
    assert code == 0
    report = json.loads(capsys.readouterr().out)
    assert report["converged"] is True
    assert report["residual_rms"] < 1e-10
    assert report["params"]["c_tilde1"] == pytest.approx(1.5, rel=1e-4)
    assert report["params"]["c_v"] == pytest.approx(1.2, rel=1e-4)
    assert json.loads(out.read_text()) == report


def test_fit_synthetic_zener_report(tmp_path, capsys):
    code = main(["fit", "--grid-n", "60"])
    assert code == 0
    report = json.loads(capsys.readouterr().out)
    assert report["converged"] is True
    assert set(report["params"]) == {"c_tilde1", "c_v"}


def test_fit_malformed_csv_names_line(tmp_path, capsys):
    data = tmp_path / "bad.csv"
    rows = ["e,i"] + [f"{1.0 + 0.1 * n},{0.5 * n}" for n in range(1, 6)] + ["2.2,oops", "2.4,1.0"]
    data.write_text("\n".join(rows) + "\n")
    code = main(["fit", "--data", str(data)])
    assert code == 1
    assert "line 7" in capsys.readouterr().err


def test_fit_empty_data_file(tmp_path, capsys):
    data = tmp_path / "empty.csv"
    data.write_text("e,i\n")
    code = main(["fit", "--data", str(data)])
    assert code == 1
    assert "no data rows" in capsys.readouterr().err


def test_fit_grid_below_threshold_is_runtime_error(capsys):
    code = main(["fit", "--grid-lo", "0.5", "--grid-hi", "5", "--grid-n", "30"])
    assert code == 2
    assert "threshold" in capsys.readouterr().err


def test_profile_sidecar_charge(tmp_path):
    out = tmp_path / "prof.csv"
    code = main(["profile", "--x-a", "-5", "--x-b", "5", "--steepness", "1", "--out", str(out)])
    assert code == 0
    sidecar = json.loads((tmp_path / "prof.meta.json").read_text())
    assert abs(sidecar["topological_charge"]) <= 1e-12
    assert sidecar["pair"]["l"] == 10.0
    lines = read_lines(out)
    assert lines[0] == "x,phi"


def test_profile_kspace_zero_at_harmonic(tmp_path):
    out = tmp_path / "prof.csv"
    # L = 2: the harmonic k = pi lands on row 1 of a [pi, 2 pi] 2-point grid
    code = main(
        ["profile", "--x-a", "-1", "--x-b", "1", "--k-lo", str(math.pi), "--k-hi", str(2 * math.pi), "--k-n", "2", "--out", str(out)]
    )
    assert code == 0
    klines = read_lines(tmp_path / "prof.kspace.csv")
    assert klines[0] == "k,phi_k"
    k0, amp0 = (float(c) for c in klines[1].split(","))
    assert k0 == pytest.approx(math.pi)
    assert abs(amp0) <= 1e-15


def test_profile_minimal_grid(tmp_path):
    out = tmp_path / "two.csv"
    code = main(["profile", "--n", "2", "--out", str(out)])
    assert code == 0
    assert len(read_lines(out)) == 3


def test_matrix_element_table(tmp_path):
    out = tmp_path / "me.csv"
    code = main(
        ["matrix-element", "--over", "l", "--grid-lo", "3", "--grid-hi", "9", "--grid-n", "4", "--grid-kind", "linear", "--out", str(out)]
    )
    assert code == 0
    lines = read_lines(out)
    assert lines[0] == "l,t_analytic,t_simplified,t_oracle"
    for line in lines[1:]:
        cells = [float(c) for c in line.split(",")]
        assert cells[1] > 0.0 and cells[2] > 0.0 and cells[3] > 0.0


def test_matrix_element_over_field_grid(tmp_path):
    out = tmp_path / "me_e.csv"
    code = main(
        ["matrix-element", "--over", "e", "--grid-lo", "0.5", "--grid-hi", "2", "--grid-n", "4", "--grid-kind", "linear", "--delta-s", "2", "--out", str(out)]
    )
    assert code == 0
    lines = read_lines(out)
    e0, l0 = (float(c) for c in lines[1].split(",")[:2])
    assert l0 == pytest.approx(2.0 * 2.0 / e0)


def test_verify_default_all_pass(capsys):
    code = main(["verify"])
    out = capsys.readouterr().out
    assert code == 0
    assert "FAIL" not in out
    assert out.count("PASS") == 11


def test_verify_tolerance_override_forces_fail(capsys):
    code = main(["verify", "--check", "thin-wall-ft", "--tol", "thin-wall-ft=1e-30"])
    out = capsys.readouterr().out
    assert code == 3
    assert "FAIL thin-wall-ft" in out


def test_verify_unknown_check_lists_names(capsys):
    code = main(["verify", "--check", "nonsense"])
    err = capsys.readouterr().err
    assert code == 1
    assert "thin-wall-ft" in err and "bogomolnyi-sweep" in err


def test_verify_single_check(capsys):
    code = main(["verify", "--check", "ratio-18-19"])
    out = capsys.readouterr().out
    assert code == 0
    assert out.count("\n") == 1


def test_unknown_subcommand_is_usage_error(capsys):
    assert main(["frobnicate"]) == 1
    assert main([]) == 1


def test_console_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "cdwtunnel.cli", "--version"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert "cdwtunnel" in proc.stdout
