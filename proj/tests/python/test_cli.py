import json
import math
import os
import subprocess

import pytest

CLI = os.environ["BRILLOUIN_CLI"]


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True, timeout=300)


def run_binary(*args):
    return subprocess.run([CLI, *args], capture_output=True, timeout=300)


def test_requires_subcommand():
    assert run().returncode == 2


def test_help_lists_subcommands():
    r = run("--help")
    assert r.returncode == 0
    for name in ("rg", "count", "zones", "trace", "verify"):
        assert name in r.stdout


def test_rg_range():
    r = run("rg", "0..30")
    assert r.returncode == 0
    lines = r.stdout.splitlines()
    assert len(lines) == 31
    assert lines[0] == "0,1,1,ok"
    assert lines[25] == "25,12,12,ok"
    assert all(line.endswith(",ok") for line in lines)


def test_rg_single_and_bad_input():
    assert run("rg", "25").stdout.strip() == "25,12,12,ok"
    assert run("rg", "abc").returncode == 2
    assert run("rg", "9..3").returncode == 2


def test_count_torus():
    r = run("count", "torus", "--nmax", "25")
    assert r.returncode == 0
    lines = r.stdout.splitlines()
    assert lines[0] == "n,t,count_formula,count_bruteforce"
    assert lines[1] == "1,1,4,4"
    assert lines[25] == "25,5,12,12"
    assert len(lines) == 26


def test_count_torus_nonzero_rows():
    r = run("count", "torus", "--nmax", "10", "--nonzero")
    assert r.returncode == 0
    rows = [line.split(",") for line in r.stdout.splitlines()[1:]]
    assert [int(p[0]) for p in rows] == [1, 2, 4, 5, 8, 9, 10]


def test_count_gamma_closed_form():
    r = run("count", "gamma", "--k", "2", "--nmax", "6")
    assert r.returncode == 0
    lines = r.stdout.splitlines()
    assert lines[0] == "n,t,count_formula,count_bruteforce"
    first = lines[1].split(",")
    assert first[0] == "1"
    assert float(first[1]) == pytest.approx(math.atanh(math.sqrt(0.5)))
    assert first[2] == first[3] == "4"
    for line in lines[1:]:
        parts = line.split(",")
        assert parts[2] == parts[3]


def test_count_gamma_bound_column():
    r = run("count", "gamma", "--k", "7", "--nmax", "8")
    assert r.returncode == 0
    lines = r.stdout.splitlines()
    assert lines[0] == "n,t,count_formula,count_bruteforce,bound"
    for line in lines[1:]:
        parts = line.split(",")
        assert len(parts) == 5
        assert parts[4] == "1"
        assert int(parts[3]) <= int(parts[2])


def test_count_out_file(tmp_path):
    path = tmp_path / "counts.csv"
    r = run("count", "torus", "--nmax", "12", "--out", str(path))
    assert r.returncode == 0
    assert r.stdout == ""
    assert path.read_text() == run("count", "torus", "--nmax", "12").stdout


def test_count_out_unwritable():
    r = run("count", "torus", "--nmax", "3", "--out", "/no-such-dir/x.csv")
    assert r.returncode == 3
    assert "cannot open" in r.stderr


def test_zones_renders_ppm_and_svg(tmp_path):
    ppm = tmp_path / "map.ppm"
    svg = tmp_path / "map.svg"
    r = run("zones", "--metric", "l2", "--set", "z2", "--window", "-2,2,-2,2",
            "--width", "40", "--height", "40", "--ppm", str(ppm), "--svg", str(svg))
    assert r.returncode == 0
    data = ppm.read_bytes()
    assert data.startswith(b"P6\n40 40\n255\n")
    assert len(data) == 13 + 3 * 40 * 40
    text = svg.read_text()
    assert text.startswith("<svg xmlns")
    assert "</svg>" in text


def test_zones_dump_config():
    r = run("zones", "--metric", "l4", "--set", "irrational:1.25",
            "--basepoint", "0.25,-0.5", "--window", "-2,2,-1,3",
            "--width", "50", "--height", "40", "--palette-seed", "9",
            "--max-zone", "7", "--dump-config")
    assert r.returncode == 0
    cfg = json.loads(r.stdout)
    assert cfg["metric"] == {"kind": "lk_norm", "exponent": 4.0}
    assert cfg["set"] == {"kind": "irrational_lattice", "alpha": 1.25}
    assert cfg["basepoint"] == [0.25, -0.5]
    assert cfg["window"] == [-2, 2, -1, 3]
    assert cfg["width"] == 50
    assert cfg["height"] == 40
    assert cfg["palette_seed"] == 9
    assert cfg["max_zone"] == 7


def test_zones_config_file_round_trip(tmp_path):
    dumped = run("zones", "--metric", "l4", "--set", "cross",
                 "--window", "-3,3,-3,3", "--width", "32", "--height", "32",
                 "--dump-config")
    assert dumped.returncode == 0
    path = tmp_path / "scene.json"
    path.write_text(dumped.stdout)
    again = run("zones", "--config", str(path), "--dump-config")
    assert again.returncode == 0
    assert again.stdout == dumped.stdout


def test_zones_without_outputs_is_usage_error():
    r = run("zones", "--metric", "l2")
    assert r.returncode == 2
    assert "nothing to do" in r.stderr


def test_zones_unknown_metric(tmp_path):
    ppm = tmp_path / "x.ppm"
    r = run("zones", "--metric", "l3", "--ppm", str(ppm))
    assert r.returncode == 2
    assert not ppm.exists()


def test_zones_horizon_exit_code(tmp_path):
    ppm = tmp_path / "orbit.ppm"
    args = ("zones", "--metric", "hyperbolic", "--set", "gamma:2:50",
            "--window", "-0.7,0.7,-0.7,0.7", "--width", "12", "--height", "12",
            "--ppm", str(ppm))
    r = run(*args)
    assert r.returncode == 4
    assert not ppm.exists()
    clipped = run(*args, "--allow-horizon-clip")
    assert clipped.returncode == 0
    assert ppm.read_bytes().startswith(b"P6\n12 12\n255\n")


def test_trace_vertical_bisector():
    r = run("trace", "--metric", "l2", "--a", "2,0", "--window", "-5,5,-5,5")
    assert r.returncode == 0
    lines = r.stdout.splitlines()
    assert lines[0] == "x,y,residual"
    rows = [line.split(",") for line in lines[1:]]
    assert len(rows) > 100
    assert all(abs(float(x) - 1.0) <= 1e-6 for x, _, _ in rows)


def test_trace_quartic_residuals():
    r = run("trace", "--a", "1,1")
    assert r.returncode == 0
    rows = [line.split(",") for line in r.stdout.splitlines()[1:]]
    assert len(rows) > 100
    residuals = [float(res) for _, _, res in rows]
    assert all(res <= 1e-3 for res in residuals)
    assert all(res <= 2e-9 for res in residuals[1:-1])


def test_trace_rejects_non_lk_metrics():
    assert run("trace", "--metric", "hyperbolic", "--a", "0.3,0").returncode == 2
    assert run("trace", "--metric", "l1", "--a", "1,1").returncode == 2


def test_trace_window_misses_curve():
    r = run("trace", "--metric", "l2", "--a", "2,0", "--window", "10,11,10,11")
    assert r.returncode == 3
    assert r.stderr != ""


def test_verify_tiling():
    r = run("verify", "--check", "tiling", "--samples", "5000", "--seed", "3")
    assert r.returncode == 0
    report = json.loads(r.stdout)
    assert report["check_name"] == "tiling"
    assert report["passed"] is True
    assert report["samples"] == 5000


def test_verify_equal_area_cross_fails():
    r = run("verify", "--check", "area", "--set", "cross", "--n", "1,2",
            "--samples", "200000", "--seed", "9")
    assert r.returncode == 1
    report = json.loads(r.stdout)
    assert report["passed"] is False
    assert report["statistic"] > 3.0


def test_verify_consistency():
    r = run("verify", "--check", "consistency", "--metric", "l4",
            "--samples", "150", "--seed", "5")
    assert r.returncode == 0
    report = json.loads(r.stdout)
    assert report["passed"] is True
    assert report["statistic"] == 0.0
    assert report["samples"] == 150 * 200


def test_verify_boundary_measure():
    r = run("verify", "--check", "boundary", "--metric", "l2", "--set", "z2")
    assert r.returncode == 0
    report = json.loads(r.stdout)
    assert report["passed"] is True


def test_verify_rejects_bad_arguments():
    assert run("verify", "--check", "volume").returncode == 2
    assert run("verify", "--check", "tiling", "--n", "0").returncode == 2
