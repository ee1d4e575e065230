import json
import subprocess
import sys

import pytest

BASE = [sys.executable, "-m", "sixvertex.cli"]


def run_cli(*args, env=None):
    return subprocess.run(
        BASE + list(args), capture_output=True, text=True, env=env
    )


def test_classify_hard_case2():
    r = run_cli("classify", "2", "2", "1", "1", "1", "1")
    assert r.returncode == 0
    payload = json.loads(r.stdout)
    assert payload["verdict"] == "hard" and payload["case"] == 2


def test_classify_tractable_m():
    r = run_cli("classify", "1", "0", "1", "0", "1", "0")
    payload = json.loads(r.stdout)
    assert payload["verdict"] == "tractable" and payload["class"] == "M"


def test_classify_zero_params():
    payload = json.loads(run_cli("classify", *["0"] * 6).stdout)
    assert payload["verdict"] == "tractable" and payload["class"] == "P"


def test_classify_bad_scalar_exit2():
    r = run_cli("classify", "2", "2", "1", "1", "1", "oops")
    assert r.returncode == 2


def test_torus_eval_round_trip(tmp_path):
    grid = tmp_path / "t2.json"
    r = run_cli("torus", "--n", "2", "--params", *["1"] * 6, "-o", str(grid))
    assert r.returncode == 0
    r = run_cli("eval", str(grid))
    assert r.returncode == 0
    assert "value: 18" in r.stdout
    r = run_cli("--json", "eval", str(grid), "--method", "contract")
    payload = json.loads(r.stdout)
    assert payload["value"] == "18" and payload["class_used"] == "contract"


def test_eval_methods_agree(tmp_path):
    grid = tmp_path / "tm.json"
    run_cli("torus", "--n", "2", "--params", "1", "0", "1", "0", "1", "0", "-o", str(grid))
    values = {}
    for method in ("auto", "brute", "contract", "m"):
        r = run_cli("--json", "eval", str(grid), "--method", method)
        assert r.returncode == 0, r.stderr
        values[method] = json.loads(r.stdout)["value"]
    assert len(set(values.values())) == 1


def test_eval_malformed_port_exit2(tmp_path):
    bad = {
        "vertices": [{"id": 0, "signature": {"six_vertex": ["1"] * 6}}],
        "edges": [[[0, 0], [0, 1]], [[0, 1], [0, 2]]],
    }
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(bad))
    r = run_cli("eval", str(path))
    assert r.returncode == 2
    assert "slot 1" in r.stderr


def test_eval_cap_exit1(tmp_path):
    grid = tmp_path / "t4.json"
    run_cli("torus", "--n", "4", "--params", *["1"] * 6, "-o", str(grid))
    r = run_cli("--cap-edges", "8", "eval", str(grid))
    assert r.returncode == 1
    r = run_cli("--cap-rank", "4", "eval", str(grid), "--method", "contract")
    assert r.returncode == 1


def test_ice_small():
    r = run_cli("--json", "ice", "--n-max", "4")
    assert r.returncode == 0
    rows = json.loads(r.stdout)["rows"]
    assert [row["n"] for row in rows] == [2, 4]
    assert rows[1]["Z"] == "2970"


def test_ice_zero_rows():
    r = run_cli("ice", "--n-max", "0")
    assert r.returncode == 0 and r.stdout.strip() == ""


def test_gadget_commands():
    r = run_cli("gadget", "chain", "--params", "1", "1", "2", "2", "3", "3", "--s", "2")
    assert r.returncode == 0 and "equal: True" in r.stdout
    r = run_cli("--json", "gadget", "mnm", "--params", *["1"] * 6)
    assert json.loads(r.stdout)["result"] == ["1", "1", "2", "2", "2", "2"]
    r = run_cli("--json", "gadget", "two-zero", "--params", "2", "3", "1", "0", "0", "5")
    assert json.loads(r.stdout)["result"] == ["6", "6", "1", "25", "5", "5"]
    r = run_cli("--json", "gadget", "one-zero", "--params", "1", "1", "0", "1", "1", "1")
    payload = json.loads(r.stdout)
    assert payload["branch"] == "product1"
    r = run_cli("gadget", "det27")
    assert "all_nonzero: True" in r.stdout
    r = run_cli("gadget", "chain", "--params", "1", "2", "3", "3", "4", "4", "--s", "2")
    assert r.returncode == 2  # not a twin


def test_interpolate_command(tmp_path):
    from sixvertex.interpolate import make_observations
    from sixvertex.rational import Q
    from sixvertex.scalar import GaussianRational, Scalar, format_scalar

    alpha, beta = GaussianRational(2), GaussianRational(Q(1, 2))
    x = {(0, 0): Scalar(4), (1, 0): Scalar(1), (0, 1): Scalar(2)}
    obs = make_observations(alpha, beta, 1, x)
    values = tmp_path / "vals.json"
    values.write_text(json.dumps([format_scalar(v) for v in obs]))
    r = run_cli(
        "--json",
        "interpolate",
        "--alpha", "2", "--beta", "1/2", "--m", "1",
        "--phi", "3", "--psi", "1/3",
        "--values", str(values),
    )
    assert r.returncode == 0, r.stderr
    payload = json.loads(r.stdout)
    # 4 + 3*1 + (1/3)*2 = 23/3
    assert payload["value"] == "23/3"
    assert payload["lattice"] == {"rank": 1, "generator": [1, 1]}
    r = run_cli(
        "interpolate", "--alpha", "0+(1)r2", "--beta", "2", "--m", "1",
        "--phi", "1", "--psi", "1", "--values", str(values),
    )
    assert r.returncode == 2  # sqrt2 outside Q(i)


def test_selftest_subset():
    r = run_cli("selftest", "--criteria", "9")
    assert r.returncode == 0
    assert "[PASS] criterion 9" in r.stdout


def test_env_config(tmp_path):
    import os

    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"brute_force_edge_cap": 4}))
    grid = tmp_path / "t2.json"
    run_cli("torus", "--n", "2", "--params", *["1"] * 6, "-o", str(grid))
    env = dict(os.environ, HOLANT6V_CONFIG=str(cfg))
    r = run_cli("eval", str(grid), "--method", "brute", env=env)
    assert r.returncode == 1
