import json
import math

import numpy as np
import pytest

from revivalwalk import (
    CoinKind,
    ConfigError,
    RevivalMode,
    Tolerances,
    build_coin,
    build_instance,
    build_shifts,
    golden_config,
    parse_config,
    parse_phase,
    serialize_config,
    usual_shift_choice,
)
from revivalwalk.golden import golden_config_text


def minimal_config(**overrides):
    base = {
        "d": 1,
        "n": 2,
        "coin": {"kind": "cyclic", "phases": [0.0, 0.0]},
        "shifts": [[-1, 1]],
        "initial": [{"position": [0], "coin": 1, "amp_re": 1.0, "amp_im": 0.0}],
    }
    base.update(overrides)
    return json.dumps(base)


# -- angle strings ------------------------------------------------------------


@pytest.mark.parametrize(
    "text,expected",
    [
        ("pi", math.pi),
        ("-pi", -math.pi),
        ("pi*2/3", math.pi * 2 / 3),
        ("pi/2", math.pi / 2),
        ("pi*4/3", math.pi * 4 / 3),
        ("pi*-1/3", -(math.pi / 3)),
    ],
)
def test_parse_phase_pi_strings(text, expected):
    assert parse_phase(text) == expected


def test_parse_phase_accepts_plain_numbers():
    assert parse_phase(0.25) == 0.25
    assert parse_phase(2) == 2.0


@pytest.mark.parametrize("bad", ["2*pi", "tau", "pie", "pi**2", "pi/0", True, None])
def test_parse_phase_rejects_garbage(bad):
    with pytest.raises(ConfigError):
        parse_phase(bad)


# -- parsing and validation ----------------------------------------------------


def test_bundled_three_state_config_parses():
    config = parse_config(golden_config_text(2))
    assert config.d == 1 and config.n == 3
    assert config.coin.kind == "cyclic"
    assert config.coin.phases == (0.0, math.pi * 2 / 3, math.pi * 4 / 3)
    assert config.shifts == ((-5, 3, 2),)
    assert not config.normalize
    assert config.revival_mode is RevivalMode.EXACT


def test_parse_config_accepts_bytes():
    config = parse_config(golden_config_text(1).encode("utf-8"))
    assert config.n == 2


def test_zero_sum_violation_carries_field_path():
    with pytest.raises(ConfigError) as info:
        parse_config(minimal_config(shifts=[[1, 2]]))
    assert info.value.field == "shifts[0]"


def test_phase_sum_violation_surfaces_with_residual():
    text = minimal_config(
        n=3,
        coin={"kind": "cyclic", "phases": [0.1, 0.2, 0.3]},
        shifts=[[-1, 0, 1]],
    )
    with pytest.raises(ConfigError) as info:
        parse_config(text)
    assert info.value.field == "coin.phases"
    assert "6.000e-01" in str(info.value)


def test_non_unit_initial_rejected_unless_normalize():
    text = minimal_config(
        initial=[{"position": [0], "coin": 1, "amp_re": 0.5, "amp_im": 0.0}]
    )
    with pytest.raises(ConfigError) as info:
        parse_config(text)
    assert info.value.field == "initial"
    normalized = json.loads(text)
    normalized["normalize"] = True
    config = parse_config(json.dumps(normalized))
    state = build_instance(config).initial
    assert math.isclose(state.norm(), 1.0, abs_tol=1e-15)


def test_malformed_json_and_bad_types():
    with pytest.raises(ConfigError):
        parse_config(b"{ not json")
    with pytest.raises(ConfigError):
        parse_config(json.dumps([1, 2]))
    with pytest.raises(ConfigError):
        parse_config(minimal_config(d="one"))
    with pytest.raises(ConfigError):
        parse_config(minimal_config(max_steps=-1))


def test_unknown_fields_rejected():
    obj = json.loads(minimal_config())
    obj["walk_speed"] = 3
    with pytest.raises(ConfigError) as info:
        parse_config(json.dumps(obj))
    assert info.value.field == "walk_speed"

    with pytest.raises(ConfigError):
        parse_config(minimal_config(coin={"kind": "cyclic", "phases": [0, 0], "spin": 1}))


def test_unknown_coin_kind():
    with pytest.raises(ConfigError) as info:
        parse_config(minimal_config(coin={"kind": "grover"}))
    assert info.value.field == "coin.kind"


def test_coin_label_range_checked():
    with pytest.raises(ConfigError) as info:
        parse_config(
            minimal_config(
                initial=[{"position": [0], "coin": 0, "amp_re": 1.0, "amp_im": 0.0}]
            )
        )
    assert info.value.field == "initial[0].coin"
    with pytest.raises(ConfigError):
        parse_config(
            minimal_config(
                initial=[{"position": [0], "coin": 3, "amp_re": 1.0, "amp_im": 0.0}]
            )
        )


def test_coin_labels_are_one_based():
    config = parse_config(minimal_config())
    state = build_instance(config).initial
    assert state.amplitude((0,), 0) == 1.0 + 0j


def test_position_length_checked():
    with pytest.raises(ConfigError) as info:
        parse_config(
            minimal_config(
                initial=[{"position": [0, 0], "coin": 1, "amp_re": 1.0, "amp_im": 0.0}]
            )
        )
    assert info.value.field == "initial[0].position"


def test_schema_version_checked():
    with pytest.raises(ConfigError):
        parse_config(minimal_config(schema_version=99))


def test_seed_must_fit_64_bits():
    with pytest.raises(ConfigError):
        parse_config(minimal_config(seed=-1))
    with pytest.raises(ConfigError):
        parse_config(minimal_config(seed=2**64))
    config = parse_config(minimal_config(seed=2**64 - 1))
    assert config.seed == 2**64 - 1


def test_usual_shifts_expand_per_dimension():
    text = minimal_config(
        d=2,
        n=3,
        coin={"kind": "cyclic", "phases": [0, 0, 0]},
        shifts="usual",
        initial=[{"position": [0, 0], "coin": 1, "amp_re": 1.0, "amp_im": 0.0}],
    )
    config = parse_config(text)
    table = build_shifts(config)
    assert table.displacements == tuple([tuple(usual_shift_choice(3))] * 2)
    assert config.shifts == "usual"


def test_general_coin_config():
    text = minimal_config(
        coin={"kind": "general_1d", "theta": "pi/4", "phi1": 0, "phi2": 0}
    )
    coin = build_coin(parse_config(text))
    assert coin.kind is CoinKind.GENERAL_1D
    s = 1 / math.sqrt(2)
    np.testing.assert_allclose(coin.matrix, [[s, s], [s, -s]], atol=1e-15)


def test_custom_coin_config_checks_unitarity():
    good = minimal_config(
        coin={"kind": "custom", "custom_matrix": [[[0, 0], [1, 0]], [[1, 0], [0, 0]]]}
    )
    coin = build_coin(parse_config(good))
    assert coin.kind is CoinKind.CUSTOM
    bad = minimal_config(
        coin={"kind": "custom", "custom_matrix": [[[1, 0], [1, 0]], [[0, 0], [1, 0]]]}
    )
    with pytest.raises(ConfigError) as info:
        parse_config(bad)
    assert info.value.field == "coin"


def test_partial_cycle_config():
    text = minimal_config(
        n=4,
        coin={"kind": "partial_cycle", "r": 2, "phases": [0.4, -0.4]},
        shifts=[[-1, 1, 0, 0]],
    )
    coin = build_coin(parse_config(text))
    assert coin.kind is CoinKind.PARTIAL_CYCLE
    assert coin.cycle_length == 2


def test_tolerance_overrides():
    config = parse_config(minimal_config(tolerances={"revival": 1e-6, "norm": 1e-10}))
    assert config.tolerances == Tolerances(norm=1e-10, revival=1e-6)
    with pytest.raises(ConfigError):
        parse_config(minimal_config(tolerances={"fuzz": 1.0}))
    with pytest.raises(ConfigError):
        parse_config(minimal_config(tolerances={"norm": -1.0}))


def test_phase_tolerance_override_reaches_coin_construction():
    slightly_off = minimal_config(coin={"kind": "cyclic", "phases": [1e-6, 0.0]})
    with pytest.raises(ConfigError):
        parse_config(slightly_off)
    loose = json.loads(slightly_off)
    loose["tolerances"] = {"phase": 1e-4}
    config = parse_config(json.dumps(loose))
    assert build_coin(config).kind is CoinKind.CYCLIC


def test_round_trip_identity_on_golden_configs():
    for which in (1, 2, 3):
        config = golden_config(which)
        assert parse_config(serialize_config(config)) == config


def test_round_trip_identity_preserves_usual_marker_and_floats():
    text = minimal_config(
        d=1,
        n=3,
        coin={"kind": "cyclic", "phases": [0.1, 0.2, -0.30000000000000004]},
        shifts="usual",
        max_steps=5,
        seed=7,
        revival_mode="global_phase",
    )
    config = parse_config(text)
    again = parse_config(serialize_config(config))
    assert again == config
    assert again.coin.phases == config.coin.phases
