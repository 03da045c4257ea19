"""Smoke tests for the Python bindings and the CLI.

Run directly (python3 test_smoke.py) or under ctest, which points
LEGREUEL_CLI at the built binary.
"""

import json
import os
import subprocess

import legreuel

FIXTURES = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "..", "fixtures")


def test_std_basis():
    basis = legreuel.std_basis(["x", "y"], ["x^2 + y^3", "x*y"])
    assert basis == ["x^2 + y^3", "x*y", "y^4"], basis
    assert legreuel.vdim(["x", "y"], ["x^2 + y^3", "x*y"]) == 5


def test_local_global_contrast():
    assert legreuel.vdim(["x"], ["x^2 - x^3"]) == 2
    assert legreuel.vdim(["x"], ["x^2 - x^3"], local=False) == 3
    assert legreuel.vdim(["x", "y"], ["x*y"]) is None


def test_ideal_ops():
    sat, k = legreuel.saturate(["x", "y", "z"], ["x^3*y", "x^2*z"], "x")
    assert sorted(sat) == ["y", "z"] and k == 3, (sat, k)
    meet = legreuel.intersect(["x", "y"], ["x"], ["y"])
    assert meet == ["x*y"], meet


def test_euler_diff():
    r = legreuel.euler_diff(["x", "y", "z"], [], "x*y*z", "x + y + z")
    assert r["value"] == 3, r
    assert r["report"]["terms"][0]["sign"] == 1


def test_icis():
    assert legreuel.icis(["x", "y", "z"], ["x^2 + y^2 + z^2", "z"]) == 2


def test_curve():
    r = legreuel.curve_mu(["x", "y", "t"], ["x*y - t"], "t", "x - y")
    assert r["mu_X"] == 1 and r["mu_f"] == 2 and r["deg_f"] == 2, r
    assert r["mu_f"] == r["mu_X"] + r["deg_f"] - 1


def test_ids():
    r = legreuel.ids(
        ["x", "y", "z", "w"],
        [["x", "y", "z"], ["y", "z", "w"]],
        [["1", "-2", "3"], ["5", "7", "-11"]],
        2,
        f="x + 2*y + 4*z + 8*w",
    )
    assert r["nu_X"] == 1 and r["mu_f"] == 3 and r["nu_slice"] == 2, r


def test_pfaffians():
    pf = legreuel.pfaffians(
        ["a", "b", "c"],
        [["0", "a", "b"], ["-a", "0", "c"], ["-b", "-c", "0"]],
    )
    assert pf == ["c", "b", "a"], pf


def test_errors():
    try:
        legreuel.vdim(["x"], ["x +"])
    except legreuel.ComputationError:
        pass
    else:
        raise AssertionError("malformed input must raise")


def test_cli_roundtrip():
    cli = os.environ.get("LEGREUEL_CLI")
    if not cli:
        return  # only meaningful when ctest supplies the binary
    out = subprocess.run(
        [cli, "euler-diff", os.path.join(FIXTURES, "xyz.lg"), "--json"],
        capture_output=True,
        text=True,
        check=True,
    )
    record = json.loads(out.stdout.splitlines()[0])
    assert record["status"] == "ok" and record["result"]["value"] == 3, record


if __name__ == "__main__":
    passed = 0
    for name in sorted(globals()):
        if name.startswith("test_"):
            globals()[name]()
            print(name, "ok")
            passed += 1
    print(f"{passed} smoke tests passed")
