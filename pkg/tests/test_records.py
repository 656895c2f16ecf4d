import json
import math

import pytest

from revivalwalk import (
    golden_config,
    parse_config,
    probability_csv,
    run_spectrum,
    run_walk,
)


def swap_walk_config(**overrides):
    base = {
        "d": 1,
        "n": 2,
        "coin": {"kind": "cyclic", "phases": [0.0, 0.0]},
        "shifts": [[-1, 1]],
        "initial": [{"position": [0], "coin": 1, "amp_re": 1.0, "amp_im": 0.0}],
        "max_steps": 6,
    }
    base.update(overrides)
    return parse_config(json.dumps(base))


def test_run_walk_zero_steps_keeps_only_the_initial_state():
    record = run_walk(swap_walk_config(max_steps=0))
    assert record["period"] is None
    assert len(record["steps"]) == 1
    assert record["steps"][0]["t"] == 0
    assert record["fidelity_series"] == [1.0]
    assert record["distance_series"] == [0.0]


def test_run_walk_record_covers_every_step_past_the_revival():
    record = run_walk(swap_walk_config())
    assert record["period"] == 2
    assert [entry["t"] for entry in record["steps"]] == list(range(7))
    assert len(record["fidelity_series"]) == 7
    # states keep being dumped after the revival
    assert record["steps"][6]["state"]


def test_run_walk_golden_plane_walk():
    record = run_walk(golden_config(3))
    assert record["period"] == 3
    t3 = {(tuple(r["position"]), r["coin"]): complex(r["re"], r["im"])
          for r in record["steps"][3]["state"]}
    t0 = {(tuple(r["position"]), r["coin"]): complex(r["re"], r["im"])
          for r in record["steps"][0]["state"]}
    assert set(t3) == set(t0)
    assert all(abs(t3[key] - t0[key]) <= 1e-12 for key in t0)


def test_state_dumps_are_sorted_and_one_based():
    record = run_walk(golden_config(2))
    rows = record["steps"][0]["state"]
    assert [tuple(r["position"]) for r in rows] == [(1,), (2,), (3,)]
    assert [r["coin"] for r in rows] == [3, 2, 1]


def test_probability_csv_rows_sum_to_one_per_step():
    record = run_walk(golden_config(2))
    text = probability_csv(record)
    lines = text.strip().split("\n")
    assert lines[0] == "step,x1,probability"
    sums: dict[str, float] = {}
    for line in lines[1:]:
        t, _, p = line.split(",")
        sums[t] = sums.get(t, 0.0) + float(p)
    for total in sums.values():
        assert abs(total - 1.0) <= 1e-9


def test_probability_csv_two_dimensional_header():
    text = probability_csv(run_walk(golden_config(3)))
    assert text.startswith("step,x1,x2,probability\n")


def test_run_spectrum_golden_flags_and_shape():
    record = run_spectrum(golden_config(2), samples=8)
    assert record["schema_version"] == 1
    assert record["k_independent"] and record["matches_roots_of_unity"]
    assert len(record["k_samples"]) == 8
    assert len(record["eigenvalues"][0]) == 3
    entry = record["eigenvalues"][0][0]
    assert math.isclose(entry["re"] ** 2 + entry["im"] ** 2, 1.0, abs_tol=1e-9)


def test_run_spectrum_seed_controls_sampling():
    a = run_spectrum(golden_config(2), samples=8, seed=1)
    b = run_spectrum(golden_config(2), samples=8, seed=1)
    c = run_spectrum(golden_config(2), samples=8, seed=2)
    assert a == b
    assert a["k_samples"] != c["k_samples"]


def test_run_spectrum_accepts_dispersive_coins():
    config = parse_config(
        json.dumps(
            {
                "d": 1,
                "n": 2,
                "coin": {"kind": "general_1d", "theta": "pi/4", "phi1": 0, "phi2": 0},
                "shifts": [[-1, 1]],
                "initial": [
                    {"position": [0], "coin": 1, "amp_re": 1.0, "amp_im": 0.0}
                ],
            }
        )
    )
    record = run_spectrum(config, samples=10)
    assert record["k_independent"] is False
