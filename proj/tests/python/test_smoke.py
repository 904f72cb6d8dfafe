"""Smoke tests for the eulerlab python module and CLI.

The module is found via PYTHONPATH and the CLI binary via the EULERLAB_CLI
environment variable; both are set by the ctest harness.
"""

import json
import os
import subprocess

import pytest

eulerlab = pytest.importorskip("eulerlab")

mpmath = pytest.importorskip("mpmath")


def test_eval_mzv_against_mpmath():
    out = eulerlab.eval_mzv("3,1", digits=25)
    with mpmath.workdps(30):
        want = mpmath.pi**4 / 360
        got = mpmath.mpf(out["value"])
        assert abs(got - want) < mpmath.mpf(10) ** -24
    assert out["depth"] == 2
    assert out["weight"] == 4
    assert out["terms"] > 0


def test_eval_alternating():
    out = eulerlab.eval_mzv("2~,1", digits=20)
    with mpmath.workdps(25):
        want = mpmath.zeta(3) / 8
        assert abs(mpmath.mpf(out["value"]) - want) < mpmath.mpf(10) ** -19


def test_zeta_and_constants():
    with mpmath.workdps(25):
        assert abs(mpmath.mpf(eulerlab.zeta(2, digits=20)["value"])
                   - mpmath.zeta(2)) < mpmath.mpf(10) ** -19
        assert abs(mpmath.mpf(eulerlab.pi(20)) - mpmath.pi) < mpmath.mpf(10) ** -19
        assert abs(mpmath.mpf(eulerlab.euler_gamma(20))
                   - mpmath.euler) < mpmath.mpf(10) ** -19


def test_param_families():
    assert eulerlab.param("eu-dual", x="0.5+0.25i", digits=20)["ok"]
    assert eulerlab.param("gf2", x="1/3", y=0.2, digits=15)["ok"]
    assert eulerlab.param("tangent", digits=15)["ok"]
    sig = eulerlab.param("sigma", x=0.25, y="1/3", digits=15)
    assert sig["ok"] and len(sig["values"]) == 4


def test_param_accepts_python_complex():
    out = eulerlab.param("eu-dual", x=0.5 + 0.25j, digits=15)
    assert out["ok"]


def test_reduce_pair():
    out = eulerlab.reduce_pair(2, 3, digits=20)
    assert out["expression"] == "9/2*z(5) - 2*z(2)*z(3)"
    assert out["ok"]
    refl = eulerlab.reduce_pair(2, 4, digits=15)
    assert refl["reflection"] and refl["closed"] is None


def test_conjecture_table():
    out = eulerlab.conjecture_table(1, [10, 100], digits=15)
    gaps = [row["gap"] for row in out["rows"]]
    assert gaps[0] > gaps[1] > 0


def test_verify_json_roundtrip():
    report = json.loads(eulerlab.verify(suite="reduction", digits=15, seed=3))
    assert report["summary"]["fail"] == 0
    assert report["summary"]["error"] == 0
    assert report["summary"]["pass"] == len(report["cases"]) > 0


def test_error_mapping():
    with pytest.raises(ValueError):
        eulerlab.eval_mzv("1,2")
    with pytest.raises(ValueError):
        eulerlab.param("no-such-identity", x=1)
    with pytest.raises(RuntimeError):
        eulerlab.eval_mzv("3,1,1,1", digits=30, max_terms=200)


def _cli():
    path = os.environ.get("EULERLAB_CLI")
    if not path or not os.path.exists(path):
        pytest.skip("EULERLAB_CLI not set")
    return path


def test_cli_eval():
    out = subprocess.run([_cli(), "eval", "--mzv", "3,1", "--digits", "20"],
                         capture_output=True, text=True)
    assert out.returncode == 0
    assert "0.27058080842778" in out.stdout


def test_cli_exit_codes():
    assert subprocess.run([_cli(), "eval", "--mzv", "junk"],
                          capture_output=True).returncode == 2
    env = dict(os.environ, EULERLAB_MAX_TERMS="nope")
    assert subprocess.run([_cli(), "eval", "--mzv", "3,1"], env=env,
                          capture_output=True).returncode == 2
    env = dict(os.environ, EULERLAB_MAX_TERMS="200")
    assert subprocess.run([_cli(), "eval", "--mzv", "3,1,1,1", "--digits", "30"],
                          env=env, capture_output=True).returncode == 3


def test_cli_verify_deterministic(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path, jobs in ((a, "1"), (b, "2")):
        r = subprocess.run([_cli(), "verify", "--suite", "reduction", "--digits",
                            "15", "--seed", "11", "--jobs", jobs, "--json",
                            str(path)], capture_output=True)
        assert r.returncode == 0
    strip = lambda p: [l for l in p.read_text().splitlines()
                       if "wall_seconds" not in l]
    assert strip(a) == strip(b)
