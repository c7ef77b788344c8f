"""Smoke tests for the tdgcore extension module.

Run directly (python3 test_smoke.py) with the built module on PYTHONPATH;
ctest wires this up automatically.
"""

import sys
from fractions import Fraction

import tdgcore


def frac(s):
    return Fraction(s)


def test_utility_is_exact():
    inst = tdgcore.Instance.from_dict({
        "n": 2,
        "utilities": [{"from": 1, "to": 2, "num": 1, "den": 1}],
        "topology": {"nodes": 3, "edges": [[1, 2], [2, 3]]},
        "factor": {"kind": "reciprocal"},
    })
    assert frac(tdgcore.utility(inst, [1, 2], 1)) == Fraction(1)
    assert frac(tdgcore.utility(inst, [1, 3], 1)) == Fraction(1, 2)
    assert frac(tdgcore.utility(inst, [1, 3], 2)) == Fraction(0)


def test_round_trip_and_repr():
    g = tdgcore.gadget_tree_counterexample()
    inst = tdgcore.Instance.from_dict(g["instance"])
    assert inst.n == 6 and inst.nodes == 10
    back = tdgcore.Instance.from_dict(inst.to_dict())
    assert back.n == 6
    assert "Instance" in repr(inst)


def test_tree_counterexample_has_no_stable_assignment():
    g = tdgcore.gadget_tree_counterexample()
    inst = tdgcore.Instance.from_dict(g["instance"])
    result = tdgcore.exists_stable(inst)
    assert result["exists"] is False
    assert result["witness"] is None


def test_swap_cycle_gadget():
    g = tdgcore.gadget_swap_cycle()
    inst = tdgcore.Instance.from_dict(g["instance"])
    start = g["initial_assignment"]["placement"]
    witness = g["witness_assignment"]["placement"]
    verdict = tdgcore.check(inst, start, notion="swap")
    assert verdict["stable"] is False
    assert len(verdict["deviations"]) == 1
    dev = verdict["deviations"][0]
    assert (dev["agent"], dev["target"]) == (3, 6)
    assert frac(dev["gain"]) == Fraction(1, 2)
    assert tdgcore.check(inst, witness, notion="swap")["stable"] is True
    trace = tdgcore.dynamics(inst, start, policy="first", notion="swap", max_steps=64)
    assert trace["outcome"] == "cycle"


def test_cycle_solver_matches_the_published_layout():
    inst = tdgcore.Instance.from_dict({
        "n": 6,
        "utilities": [
            {"from": i, "to": i % 6 + 1, "num": 1, "den": 1} for i in range(1, 7)
        ],
        "topology": {
            "nodes": 8,
            "edges": [[i, i + 1] for i in range(1, 8)] + [[8, 1]],
        },
        "factor": {"kind": "reciprocal"},
    })
    report = tdgcore.solve(inst, "cycle")
    assert report["status"] == "assignment"
    assert report["assignment"]["placement"] == [3, 2, 1, 4, 5, 6]
    assert tdgcore.check(inst, report["assignment"]["placement"])["stable"] is True


def test_symmetric_dynamics_converges_with_rising_phi():
    inst = tdgcore.Instance.from_dict({
        "n": 3,
        "utilities": [
            {"from": 1, "to": 2, "num": 2, "den": 1},
            {"from": 2, "to": 1, "num": 2, "den": 1},
            {"from": 2, "to": 3, "num": 1, "den": 2},
            {"from": 3, "to": 2, "num": 1, "den": 2},
        ],
        "topology": {"nodes": 6, "edges": [[1, 2], [2, 3], [3, 4], [4, 5], [5, 6]]},
        "factor": {"kind": "reciprocal"},
    })
    trace = tdgcore.dynamics(inst, [1, 4, 6], policy="best")
    assert trace["outcome"] == "converged"
    phis = [Fraction(num, den) for num, den in trace["phi_values"]]
    assert all(a < b for a, b in zip(phis, phis[1:]))
    assert tdgcore.check(inst, trace["final"]["placement"])["stable"] is True


def test_scripted_exponential_counts():
    trace = tdgcore.scripted_exponential(3)
    assert trace["outcome"] in ("converged", "step-limit")
    assert len(trace["steps"]) == 14
    meta = tdgcore.gadget_exponential_family(3)["metadata"]
    tip = int(meta["agent.chain_tip"]) + 1  # wire format is 1-based
    assert sum(1 for s in trace["steps"] if s["agent"] == tip) == 8


def test_statespace_chase():
    g = tdgcore.gadget_cat_and_mouse(4, "path")
    inst = tdgcore.Instance.from_dict(g["instance"])
    summary = tdgcore.statespace(inst, [1, 2])
    assert summary["possibly_converges"] is False
    assert summary["necessarily_converges"] is False
    assert summary["states"] == 12


def test_exjump_pipeline():
    x3c = {"ground_size": 12,
           "sets": [[1, 2, 3], [4, 5, 6], [7, 8, 9], [10, 11, 12], [1, 4, 7]]}
    padded = tdgcore.pad_x3c(x3c)
    assert padded["k_added"] == 10
    cover = [1, 2, 3, 4] + [5 + i for i in range(1, padded["k_added"] + 1)]
    g = tdgcore.gadget_exjump({k: padded[k] for k in ("ground_size", "sets")}, cover=cover)
    inst = tdgcore.Instance.from_dict(g["instance"])
    assert inst.n == 58
    witness = g["witness_assignment"]["placement"]
    assert tdgcore.check(inst, witness)["stable"] is True


def main():
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    failed = 0
    for test in tests:
        try:
            test()
            print(f"PASS {test.__name__}")
        except Exception as exc:  # noqa: BLE001 - report and continue
            failed += 1
            print(f"FAIL {test.__name__}: {exc!r}")
    if failed:
        sys.exit(1)


if __name__ == "__main__":
    main()
