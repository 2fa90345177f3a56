"""Smoke test for the icosa_py extension module."""

import json

import icosa_py


def main():
    assert icosa_py.j_invariant() == "86048 - 38496*sqrt5"
    assert icosa_py.count_points("3:0") == 8
    assert all(ok for _, ok in icosa_py.selftest())

    sols = icosa_py.klein_solve(1)
    assert any(abs(float(j) + 31.6728618319) < 1e-9 for _, j, _, _, _ in sols)

    code, out, _ = icosa_py.run(["ico", "traces", "--max-norm", "50"])
    assert code == 0
    recs = [json.loads(line) for line in out.splitlines()]
    assert recs and all("chosen" in r for r in recs)

    code, _, err = icosa_py.run(["no-such-command"])
    assert code == 2 and err

    try:
        icosa_py.count_points("2:0")
    except ValueError:
        pass
    else:
        raise AssertionError("bad reduction at 2 should raise")

    print("smoke test ok")


if __name__ == "__main__":
    main()
