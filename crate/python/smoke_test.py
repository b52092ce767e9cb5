"""Smoke test for the qir extension module.

Build and install first, e.g. ``maturin develop -m crates/python/Cargo.toml``.
"""

import json
import math

import qir

LN2 = math.log(2)


def close(a, b, tol=1e-9):
    return abs(a - b) <= tol


def main():
    x = qir.ObservableBasis.computational(2)
    y = qir.ObservableBasis.fourier(2)
    bell = qir.BipartiteState.max_entangled(2)
    mixed = qir.BipartiteState.max_mixed(2, 2)

    assert close(qir.mu_bound(x, y), LN2)
    assert close(qir.cond_entropy(bell), -LN2)
    assert close(qir.uncertainty(x, bell), 0.0)
    assert close(qir.irreality(x, bell), LN2)
    assert close(qir.irreality(x, mixed), 0.0)
    assert close(bell.purity(), 1.0)

    p = qir.profile(x, qir.BipartiteState.werner(0.5))
    assert close(p["irrealityX"], p["hXgB"] - p["hAgB"])

    for state in (bell, mixed, qir.BipartiteState.haar_pure(2, 3, 11)):
        assert qir.slack("eq11", x, y, state) >= -qir.DEFAULT_TOL
    assert close(qir.slack("combined_ur", x, y, bell), 0.0)

    reports = qir.evaluate(x, y, bell, eps=0.5)
    assert set(reports) == {name for name, _ in qir.relations()}
    for rs in reports.values():
        for r in rs:
            assert r.get("satisfied", r.get("holds")), r

    rho = qir.monitor(y, 0.5, bell, n=2)
    assert close(qir.uncertainty(y, rho), qir.uncertainty(y, bell))
    assert qir.dephasings_commute(x, y)

    trace = qir.sweep(x, y, bell, [0.0, 0.5, 1.0])
    assert all(close(v, LN2) for v in trace["irreality_x"])

    again = qir.BipartiteState.from_json(bell.to_json())
    assert again.rho == bell.rho

    res = qir.run_campaign("trials = 40\nseed = 3\n", workers=2)
    assert res["total_trials"] == 40
    assert sum(s["violations"] for s in res["relations"]) == 0

    m = qir.minimize("eq11", 2, 2, restarts=5, seed=7)
    assert m["best_slack"] <= 1e-6
    assert close(qir.replay(json.dumps(m["argmin"])), m["best_slack"])

    try:
        qir.slack("eq99", x, y, bell)
    except ValueError:
        pass
    else:
        raise AssertionError("unknown relation accepted")

    print("python smoke test passed")


if __name__ == "__main__":
    main()
