"""Position-space evolution: coin toss, shift, revival detection.

One step multiplies every occupied site's amplitude vector by the coin
matrix and then relocates each coin slot by its displacement. The coin
acts first; the tables of amplitudes a walk produces depend on that
order.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from .coins import CoinKind, CoinMatrix
from .errors import ConstraintError, DimensionMismatchError, NormalizationError
from .shifts import ShiftTable, apply_shift
from .states import Position, WalkState, inner_product, l2_distance
from .tolerances import Tolerances


class RevivalMode(enum.Enum):
    """Exact compares states entrywise; GLOBAL_PHASE ignores an overall phase."""

    EXACT = "exact"
    GLOBAL_PHASE = "global_phase"


@dataclass(frozen=True)
class WalkInstance:
    """A coin, a shift table, an initial state, and the tolerances to run with."""

    coin: CoinMatrix
    shifts: ShiftTable
    initial: WalkState
    tolerances: Tolerances = field(default_factory=Tolerances)

    def __post_init__(self) -> None:
        if self.coin.n != self.shifts.n or self.coin.n != self.initial.n:
            raise DimensionMismatchError(
                f"coin dimension mismatch: coin n={self.coin.n}, "
                f"shifts n={self.shifts.n}, state n={self.initial.n}"
            )
        if self.shifts.d != self.initial.d:
            raise DimensionMismatchError(
                f"spatial dimension mismatch: shifts d={self.shifts.d}, "
                f"state d={self.initial.d}"
            )
        norm = self.initial.norm()
        if abs(norm - 1.0) > self.tolerances.norm:
            raise NormalizationError(
                f"initial state norm {norm!r} is not 1 within {self.tolerances.norm:.1e}"
            )


@dataclass(frozen=True)
class RevivalReport:
    """Revival search result.

    ``fidelity_series[t]`` is |<psi_0|psi_t>| and ``distance_series[t]``
    is ||psi_t - psi_0||, for t = 0 up to the detected period (or to
    max_steps when nothing revived).
    """

    period: int | None
    fidelity_series: tuple[float, ...]
    distance_series: tuple[float, ...]
    mode: RevivalMode


def step(state: WalkState, instance: WalkInstance) -> WalkState:
    """Advance one step: coin on every occupied site, then the shift."""
    if state.d != instance.shifts.d or state.n != instance.coin.n:
        raise DimensionMismatchError(
            f"state (d={state.d}, n={state.n}) does not match instance "
            f"(d={instance.shifts.d}, n={instance.coin.n})"
        )
    coin = instance.coin.matrix
    tossed = {pos: coin @ vec for pos, vec in state.items()}
    return apply_shift(WalkState(state.d, state.n, tossed), instance.shifts)


def evolve(instance: WalkInstance, t: int) -> WalkState:
    """State after t steps from the instance's initial state."""
    if t < 0:
        raise ValueError(f"step count must be >= 0, got {t}")
    state = instance.initial
    for _ in range(t):
        state = step(state, instance)
    return state


def detect_revival(
    instance: WalkInstance,
    max_steps: int,
    mode: RevivalMode = RevivalMode.EXACT,
) -> RevivalReport:
    """Find the first step at which the walk returns to its initial state.

    EXACT mode requires the l2 distance to the initial state to drop below
    the revival tolerance; GLOBAL_PHASE mode requires 1 - fidelity to,
    which also accepts returns that differ by an overall phase. The search
    stops at the first hit; later revivals are multiples of it by unitarity.
    """
    if max_steps < 1:
        raise ValueError(f"max_steps must be >= 1, got {max_steps}")
    tol = instance.tolerances.revival
    initial = instance.initial
    fidelity = [abs(inner_product(initial, initial))]
    distance = [0.0]
    period = None
    state = initial
    for t in range(1, max_steps + 1):
        state = step(state, instance)
        f = abs(inner_product(initial, state))
        d = l2_distance(state, initial)
        fidelity.append(f)
        distance.append(d)
        revived = d <= tol if mode is RevivalMode.EXACT else 1.0 - f <= tol
        if revived:
            period = t
            break
    return RevivalReport(
        period=period,
        fidelity_series=tuple(fidelity),
        distance_series=tuple(distance),
        mode=mode,
    )


def probability_distribution(state: WalkState) -> dict[Position, float]:
    """Per-position probability: squared amplitude moduli summed over slots."""
    return {
        pos: float(np.vdot(vec, vec).real) for pos, vec in state.items()
    }


def stationary_component_check(instance: WalkInstance, t: int) -> bool:
    """True iff amplitude on the fixed coin slots never moves or shrinks.

    Only meaningful for a partial-cycle coin whose fixed slots carry zero
    displacements; those two preconditions are enforced. The check runs
    the walk t steps and compares, slot by slot, the modulus of every
    initially parked amplitude against the evolved state at the same
    position.
    """
    coin = instance.coin
    if coin.kind is not CoinKind.PARTIAL_CYCLE:
        raise ConstraintError(
            f"stationary components require a partial-cycle coin, got {coin.kind.value}"
        )
    r = coin.cycle_length
    assert r is not None
    for dim_row in instance.shifts.displacements:
        if any(dim_row[j] != 0 for j in range(r, coin.n)):
            raise ConstraintError(
                "fixed coin slots must have zero displacement in every dimension"
            )
    final = evolve(instance, t)
    tol = instance.tolerances.norm
    for pos, vec in instance.initial.items():
        for j in range(r, coin.n):
            if vec[j] == 0:
                continue
            if abs(abs(final.amplitude(pos, j)) - abs(vec[j])) > tol:
                return False
    return True
