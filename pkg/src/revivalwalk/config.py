"""JSON walk configuration: parsing, validation, serialization.

A config bundles everything needed to run a walk: spatial dimension d,
coin dimension n, a coin description, a d x n shift grid (or the string
"usual" for the symmetric menu), a finite list of initial amplitudes,
and run controls. Angles may be written either as literal radians or as
strings of the form ``pi*<num>/<den>`` (e.g. ``"pi*2/3"``, ``"-pi/2"``)
so that golden configs carry exact phase fractions instead of rounded
decimals.

External files use 1-based coin labels; the Python API is 0-based. The
conversion happens exactly once, here.
"""

from __future__ import annotations

import json
import math
import re
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from typing import Union

from .coins import (
    CoinKind,
    CoinMatrix,
    build_custom_coin,
    build_cyclic_coin,
    build_general_coin_1d,
    build_partial_cycle_coin,
)
from .engine import RevivalMode, WalkInstance
from .errors import ConfigError, ConstraintError, DimensionMismatchError, NormalizationError
from .shifts import ShiftTable, build_shift_table, usual_shift_choice
from .states import WalkState
from .tolerances import Tolerances

SCHEMA_VERSION = 1

_PI_PATTERN = re.compile(r"^\s*(-)?\s*pi\s*(?:\*\s*(-?\d+))?\s*(?:/\s*(\d+))?\s*$")


def parse_phase(value, field_path: str = "phase") -> float:
    """A literal radian number, or a ``pi*<num>/<den>`` string parsed exactly."""
    if isinstance(value, bool):
        raise ConfigError(field_path, f"expected an angle, got {value!r}")
    if isinstance(value, (int, float)):
        return float(value)
    if isinstance(value, str):
        m = _PI_PATTERN.match(value)
        if m is None:
            raise ConfigError(
                field_path,
                f"cannot parse angle {value!r}; use a number or 'pi*<num>/<den>'",
            )
        sign = -1.0 if m.group(1) else 1.0
        num = int(m.group(2)) if m.group(2) else 1
        den = int(m.group(3)) if m.group(3) else 1
        if den == 0:
            raise ConfigError(field_path, "zero denominator in angle")
        return sign * (math.pi * num) / den
    raise ConfigError(field_path, f"expected an angle, got {type(value).__name__}")


@dataclass(frozen=True)
class CoinSpec:
    """Declarative coin description as written in a config file."""

    kind: str
    phases: tuple[float, ...] | None = None
    r: int | None = None
    theta: float | None = None
    phi1: float | None = None
    phi2: float | None = None
    custom_matrix: tuple[tuple[complex, ...], ...] | None = None


@dataclass(frozen=True)
class InitialEntry:
    position: tuple[int, ...]
    coin: int  # 1-based, as in the file
    amp_re: float
    amp_im: float


@dataclass(frozen=True)
class WalkConfig:
    d: int
    n: int
    coin: CoinSpec
    shifts: Union[tuple[tuple[int, ...], ...], str]
    initial: tuple[InitialEntry, ...]
    normalize: bool = False
    max_steps: int = 16
    tolerances: Tolerances = field(default_factory=Tolerances)
    revival_mode: RevivalMode = RevivalMode.EXACT
    seed: int = 0


# -- parsing ----------------------------------------------------------------


def _require(obj: Mapping, key: str, path: str):
    if key not in obj:
        raise ConfigError(f"{path}{key}", "missing required field")
    return obj[key]


def _as_int(value, path: str, minimum: int | None = None) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(path, f"expected an integer, got {value!r}")
    if minimum is not None and value < minimum:
        raise ConfigError(path, f"must be >= {minimum}, got {value}")
    return value


def _as_number(value, path: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(path, f"expected a number, got {value!r}")
    return float(value)


def _as_bool(value, path: str) -> bool:
    if not isinstance(value, bool):
        raise ConfigError(path, f"expected true/false, got {value!r}")
    return value


def _check_keys(obj: Mapping, allowed: set[str], path: str) -> None:
    for key in obj:
        if key not in allowed:
            raise ConfigError(f"{path}{key}", "unknown field")


def _parse_coin_spec(obj, n: int) -> CoinSpec:
    if not isinstance(obj, Mapping):
        raise ConfigError("coin", "expected an object")
    _check_keys(
        obj, {"kind", "phases", "r", "theta", "phi1", "phi2", "custom_matrix"}, "coin."
    )
    kind = _require(obj, "kind", "coin.")
    if kind not in {k.value for k in CoinKind}:
        raise ConfigError("coin.kind", f"unknown coin kind {kind!r}")
    phases = None
    if "phases" in obj:
        raw = obj["phases"]
        if not isinstance(raw, Sequence) or isinstance(raw, str):
            raise ConfigError("coin.phases", "expected a list of angles")
        phases = tuple(
            parse_phase(v, f"coin.phases[{i}]") for i, v in enumerate(raw)
        )
    r = _as_int(obj["r"], "coin.r", minimum=2) if "r" in obj else None
    theta = parse_phase(obj["theta"], "coin.theta") if "theta" in obj else None
    phi1 = parse_phase(obj["phi1"], "coin.phi1") if "phi1" in obj else None
    phi2 = parse_phase(obj["phi2"], "coin.phi2") if "phi2" in obj else None
    custom = None
    if "custom_matrix" in obj:
        raw = obj["custom_matrix"]
        if not isinstance(raw, Sequence) or len(raw) != n:
            raise ConfigError("coin.custom_matrix", f"expected {n} rows")
        rows = []
        for i, row in enumerate(raw):
            if not isinstance(row, Sequence) or len(row) != n:
                raise ConfigError(f"coin.custom_matrix[{i}]", f"expected {n} entries")
            entries = []
            for j, cell in enumerate(row):
                if (
                    not isinstance(cell, Sequence)
                    or isinstance(cell, str)
                    or len(cell) != 2
                ):
                    raise ConfigError(
                        f"coin.custom_matrix[{i}][{j}]", "expected an [re, im] pair"
                    )
                entries.append(
                    complex(
                        _as_number(cell[0], f"coin.custom_matrix[{i}][{j}][0]"),
                        _as_number(cell[1], f"coin.custom_matrix[{i}][{j}][1]"),
                    )
                )
            rows.append(tuple(entries))
        custom = tuple(rows)
    return CoinSpec(
        kind=kind, phases=phases, r=r, theta=theta, phi1=phi1, phi2=phi2,
        custom_matrix=custom,
    )


def _parse_shifts(obj, d: int, n: int):
    if obj == "usual":
        return "usual"
    if not isinstance(obj, Sequence) or isinstance(obj, str):
        raise ConfigError("shifts", "expected a d x n integer grid or \"usual\"")
    if len(obj) != d:
        raise ConfigError("shifts", f"expected {d} row(s), got {len(obj)}")
    rows = []
    for r, row in enumerate(obj):
        if not isinstance(row, Sequence) or isinstance(row, str) or len(row) != n:
            raise ConfigError(f"shifts[{r}]", f"expected {n} integers")
        rows.append(tuple(_as_int(a, f"shifts[{r}][{j}]") for j, a in enumerate(row)))
    return tuple(rows)


def _parse_initial(obj, d: int, n: int) -> tuple[InitialEntry, ...]:
    if not isinstance(obj, Sequence) or isinstance(obj, str) or not obj:
        raise ConfigError("initial", "expected a non-empty list of amplitude entries")
    entries = []
    for i, item in enumerate(obj):
        path = f"initial[{i}]"
        if not isinstance(item, Mapping):
            raise ConfigError(path, "expected an object")
        _check_keys(item, {"position", "coin", "amp_re", "amp_im"}, f"{path}.")
        pos_raw = _require(item, "position", f"{path}.")
        if not isinstance(pos_raw, Sequence) or isinstance(pos_raw, str) or len(pos_raw) != d:
            raise ConfigError(f"{path}.position", f"expected {d} integer coordinate(s)")
        position = tuple(
            _as_int(c, f"{path}.position[{j}]") for j, c in enumerate(pos_raw)
        )
        coin = _as_int(_require(item, "coin", f"{path}."), f"{path}.coin")
        if not 1 <= coin <= n:
            raise ConfigError(f"{path}.coin", f"coin label must be in 1..{n}, got {coin}")
        amp_re = _as_number(_require(item, "amp_re", f"{path}."), f"{path}.amp_re")
        amp_im = _as_number(_require(item, "amp_im", f"{path}."), f"{path}.amp_im")
        entries.append(InitialEntry(position, coin, amp_re, amp_im))
    return tuple(entries)


def _parse_tolerances(obj) -> Tolerances:
    if not isinstance(obj, Mapping):
        raise ConfigError("tolerances", "expected an object")
    _check_keys(obj, {"norm", "mat", "phase", "revival"}, "tolerances.")
    kwargs = {key: _as_number(value, f"tolerances.{key}") for key, value in obj.items()}
    try:
        return Tolerances(**kwargs)
    except ValueError as exc:
        raise ConfigError("tolerances", str(exc)) from exc


def parse_config(text: Union[bytes, str]) -> WalkConfig:
    """Parse and deeply validate a JSON walk config.

    Constraint violations from the construction layers (phase sums,
    zero sums, normalization) are reported here with the path of the
    offending field.
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ConfigError("<config>", f"not valid UTF-8: {exc}") from exc
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError("<config>", f"invalid JSON: {exc}") from exc
    if not isinstance(obj, Mapping):
        raise ConfigError("<config>", "top level must be a JSON object")
    _check_keys(
        obj,
        {
            "schema_version", "d", "n", "coin", "shifts", "initial", "normalize",
            "max_steps", "tolerances", "revival_mode", "seed",
        },
        "",
    )
    if "schema_version" in obj and obj["schema_version"] != SCHEMA_VERSION:
        raise ConfigError(
            "schema_version", f"unsupported version {obj['schema_version']!r}"
        )
    d = _as_int(_require(obj, "d", ""), "d", minimum=1)
    n = _as_int(_require(obj, "n", ""), "n", minimum=2)
    coin = _parse_coin_spec(_require(obj, "coin", ""), n)
    shifts = _parse_shifts(_require(obj, "shifts", ""), d, n)
    initial = _parse_initial(_require(obj, "initial", ""), d, n)
    normalize = _as_bool(obj.get("normalize", False), "normalize")
    max_steps = _as_int(obj.get("max_steps", 16), "max_steps", minimum=0)
    tolerances = _parse_tolerances(obj["tolerances"]) if "tolerances" in obj else Tolerances()
    mode_raw = obj.get("revival_mode", "exact")
    if mode_raw not in {m.value for m in RevivalMode}:
        raise ConfigError("revival_mode", f"expected 'exact' or 'global_phase', got {mode_raw!r}")
    seed = _as_int(obj.get("seed", 0), "seed", minimum=0)
    if seed >= 2**64:
        raise ConfigError("seed", "seed must fit in 64 bits")
    config = WalkConfig(
        d=d, n=n, coin=coin, shifts=shifts, initial=initial, normalize=normalize,
        max_steps=max_steps, tolerances=tolerances,
        revival_mode=RevivalMode(mode_raw), seed=seed,
    )
    # Deep validation: constructing the instance surfaces constraint
    # violations (phase sums, zero sums, norms) with config field paths.
    build_instance(config)
    return config


def load_config(path) -> WalkConfig:
    with open(path, "rb") as handle:
        return parse_config(handle.read())


# -- construction -----------------------------------------------------------


def build_coin(config: WalkConfig) -> CoinMatrix:
    spec = config.coin
    try:
        if spec.kind == CoinKind.CYCLIC.value:
            if spec.phases is None:
                raise ConfigError("coin.phases", "cyclic coins require phases")
            if len(spec.phases) != config.n:
                raise ConfigError(
                    "coin.phases", f"expected {config.n} phases, got {len(spec.phases)}"
                )
            return build_cyclic_coin(spec.phases, tol=config.tolerances.phase)
        if spec.kind == CoinKind.PARTIAL_CYCLE.value:
            if spec.phases is None or spec.r is None:
                raise ConfigError("coin", "partial_cycle coins require phases and r")
            return build_partial_cycle_coin(
                config.n, spec.r, spec.phases, tol=config.tolerances.phase
            )
        if spec.kind == CoinKind.GENERAL_1D.value:
            if config.n != 2:
                raise ConfigError("n", "general_1d coins require n = 2")
            if spec.theta is None or spec.phi1 is None or spec.phi2 is None:
                raise ConfigError("coin", "general_1d coins require theta, phi1, phi2")
            return build_general_coin_1d(spec.theta, spec.phi1, spec.phi2)
        if spec.custom_matrix is None:
            raise ConfigError("coin.custom_matrix", "custom coins require a matrix")
        return build_custom_coin(spec.custom_matrix)
    except ConfigError:
        raise
    except (ConstraintError, DimensionMismatchError, ValueError) as exc:
        path = "coin.phases" if hasattr(exc, "residual") else "coin"
        raise ConfigError(path, str(exc)) from exc


def build_shifts(config: WalkConfig) -> ShiftTable:
    if config.shifts == "usual":
        grid = [usual_shift_choice(config.n)] * config.d
    else:
        grid = list(config.shifts)
    try:
        return build_shift_table(grid)
    except ConstraintError as exc:
        dim = getattr(exc, "dimension", None)
        path = f"shifts[{dim}]" if dim is not None else "shifts"
        raise ConfigError(path, str(exc)) from exc
    except DimensionMismatchError as exc:
        raise ConfigError("shifts", str(exc)) from exc


def initial_state(config: WalkConfig) -> WalkState:
    entries = [
        (e.position, e.coin - 1, complex(e.amp_re, e.amp_im)) for e in config.initial
    ]
    try:
        return WalkState.from_entries(
            config.d, config.n, entries,
            normalize=config.normalize, norm_tol=config.tolerances.norm,
        )
    except NormalizationError as exc:
        raise ConfigError("initial", str(exc)) from exc
    except (ConstraintError, DimensionMismatchError, ValueError) as exc:
        raise ConfigError("initial", str(exc)) from exc


def build_instance(config: WalkConfig) -> WalkInstance:
    coin = build_coin(config)
    shifts = build_shifts(config)
    state = initial_state(config)
    try:
        return WalkInstance(
            coin=coin, shifts=shifts, initial=state, tolerances=config.tolerances
        )
    except (ConstraintError, DimensionMismatchError, NormalizationError, ValueError) as exc:
        raise ConfigError("<config>", str(exc)) from exc


# -- serialization ----------------------------------------------------------


def config_to_dict(config: WalkConfig) -> dict:
    coin: dict = {"kind": config.coin.kind}
    if config.coin.phases is not None:
        coin["phases"] = list(config.coin.phases)
    if config.coin.r is not None:
        coin["r"] = config.coin.r
    for name in ("theta", "phi1", "phi2"):
        value = getattr(config.coin, name)
        if value is not None:
            coin[name] = value
    if config.coin.custom_matrix is not None:
        coin["custom_matrix"] = [
            [[cell.real, cell.imag] for cell in row] for row in config.coin.custom_matrix
        ]
    shifts = config.shifts if config.shifts == "usual" else [list(r) for r in config.shifts]
    return {
        "schema_version": SCHEMA_VERSION,
        "d": config.d,
        "n": config.n,
        "coin": coin,
        "shifts": shifts,
        "initial": [
            {
                "position": list(e.position),
                "coin": e.coin,
                "amp_re": e.amp_re,
                "amp_im": e.amp_im,
            }
            for e in config.initial
        ],
        "normalize": config.normalize,
        "max_steps": config.max_steps,
        "tolerances": {
            "norm": config.tolerances.norm,
            "mat": config.tolerances.mat,
            "phase": config.tolerances.phase,
            "revival": config.tolerances.revival,
        },
        "revival_mode": config.revival_mode.value,
        "seed": config.seed,
    }


def serialize_config(config: WalkConfig) -> str:
    """JSON text whose parse equals ``config`` (floats round-trip via repr)."""
    return json.dumps(config_to_dict(config), indent=2) + "\n"
