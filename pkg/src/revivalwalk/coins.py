"""Coin operators for lattice walks.

Four families are supported:

* ``CYCLIC`` -- an n-state coin that permutes the coin basis cyclically,
  each hop weighted by a unit-modulus phase e^{i*theta_j}. When the phases
  sum to a multiple of 2*pi the coin has matrix order exactly n, which is
  what makes every walk driven by it revive with period n.
* ``PARTIAL_CYCLE`` -- cycles only the first r coin states and fixes the
  rest; order exactly r. Paired with zero displacements on the fixed
  states it yields walks that revive every r steps while keeping some
  amplitude frozen in place.
* ``GENERAL_1D`` -- the standard two-state coin parameterized by one
  rotation angle and two relative phases.
* ``CUSTOM`` -- any user-supplied unitary; no revival guarantee attached.

Coin basis states are 0-based here (slot j of an amplitude vector); the
JSON config layer uses 1-based labels.
"""

from __future__ import annotations

import enum
import math
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from .errors import ConstraintError, DimensionMismatchError, NonUnitaryError, PhaseSumError
from .linalg import as_complex_matrix, is_unitary
from .tolerances import TOL_MAT, TOL_PHASE

TAU = 2.0 * math.pi


class CoinKind(enum.Enum):
    CYCLIC = "cyclic"
    PARTIAL_CYCLE = "partial_cycle"
    GENERAL_1D = "general_1d"
    CUSTOM = "custom"


@dataclass(frozen=True, eq=False)
class CoinMatrix:
    """An n x n unitary coin plus its construction metadata.

    ``phases`` is present for CYCLIC / PARTIAL_CYCLE kinds (wrapped into
    (-pi, pi]); ``cycle_length`` is present for PARTIAL_CYCLE.
    """

    matrix: np.ndarray
    kind: CoinKind
    phases: tuple[float, ...] | None = None
    cycle_length: int | None = None

    def __post_init__(self) -> None:
        m = as_complex_matrix(self.matrix)
        if not is_unitary(m, TOL_MAT):
            raise NonUnitaryError(f"{self.kind.value} coin matrix is not unitary")
        m = m.copy()
        m.flags.writeable = False
        object.__setattr__(self, "matrix", m)

    @property
    def n(self) -> int:
        return self.matrix.shape[0]


def wrap_phase(theta: float) -> float:
    """Reduce an angle into (-pi, pi] by subtracting multiples of 2*pi."""
    r = math.remainder(float(theta), TAU)
    if r <= -math.pi:
        r += TAU
    return r


def phase_sum_residual(phases: Sequence[float]) -> float:
    """Residual of sum(phases) mod 2*pi, reduced into [-pi, pi]."""
    return math.remainder(math.fsum(phases), TAU)


def complete_phases(partial: Sequence[float]) -> list[float]:
    """Append the final phase that makes the sum a multiple of 2*pi.

    The appended value lies in (-pi, pi]; the given phases pass through
    unchanged.
    """
    last = -math.remainder(math.fsum(partial), TAU)
    if last <= -math.pi:
        last += TAU
    return [*map(float, partial), last]


def random_cyclic_phases(n: int, rng: np.random.Generator) -> list[float]:
    """n-1 phases drawn uniformly from (-pi, pi], completed to a valid set."""
    if n < 2:
        raise DimensionMismatchError(f"cyclic coins need n >= 2, got {n}")
    return complete_phases(rng.uniform(-math.pi, math.pi, size=n - 1).tolist())


def _check_phase_sum(phases: Sequence[float], tol: float = TOL_PHASE) -> None:
    residual = phase_sum_residual(phases)
    if abs(residual) > tol:
        raise PhaseSumError(residual, tol)


def build_cyclic_coin(phases: Sequence[float], tol: float = TOL_PHASE) -> CoinMatrix:
    """Cyclic phase coin: slot j feeds slot j+1 (mod n) with weight e^{i*theta}.

    ``phases[j]`` weights the hop into slot j, i.e. entry (j, j-1) of the
    matrix for j >= 1 and entry (0, n-1) for j = 0. The phases must sum to
    a multiple of 2*pi within ``tol``; inputs are wrapped into (-pi, pi],
    not rejected.
    """
    n = len(phases)
    if n < 2:
        raise DimensionMismatchError(f"cyclic coins need n >= 2, got {n}")
    _check_phase_sum(phases, tol)
    wrapped = tuple(wrap_phase(t) for t in phases)
    m = np.zeros((n, n), dtype=np.complex128)
    m[0, n - 1] = np.exp(1j * wrapped[0])
    for j in range(1, n):
        m[j, j - 1] = np.exp(1j * wrapped[j])
    return CoinMatrix(matrix=m, kind=CoinKind.CYCLIC, phases=wrapped)


def build_partial_cycle_coin(
    n: int, r: int, phases: Sequence[float], tol: float = TOL_PHASE
) -> CoinMatrix:
    """Coin cycling slots 0..r-1 with phases and fixing slots r..n-1.

    Requires n >= r >= 2 and len(phases) == r with a 2*pi-multiple sum.
    The fixed block is the exact identity, so any amplitude parked there
    (with a zero shifting rule) never moves.
    """
    if r < 2 or r > n:
        raise DimensionMismatchError(f"need n >= r >= 2, got n={n}, r={r}")
    if len(phases) != r:
        raise DimensionMismatchError(f"expected {r} phases, got {len(phases)}")
    _check_phase_sum(phases, tol)
    wrapped = tuple(wrap_phase(t) for t in phases)
    m = np.eye(n, dtype=np.complex128)
    m[:r, :r] = 0.0
    m[0, r - 1] = np.exp(1j * wrapped[0])
    for j in range(1, r):
        m[j, j - 1] = np.exp(1j * wrapped[j])
    return CoinMatrix(matrix=m, kind=CoinKind.PARTIAL_CYCLE, phases=wrapped, cycle_length=r)


def build_general_coin_1d(theta: float, phi1: float, phi2: float) -> CoinMatrix:
    """Two-state coin [[cos t, e^{i p1} sin t], [e^{i p2} sin t, -e^{i(p1+p2)} cos t]].

    theta must lie in [0, 2*pi); phi1 and phi2 in [0, pi).
    """
    if not 0.0 <= theta < TAU:
        raise ConstraintError(f"theta must be in [0, 2*pi), got {theta}")
    for name, value in (("phi1", phi1), ("phi2", phi2)):
        if not 0.0 <= value < math.pi:
            raise ConstraintError(f"{name} must be in [0, pi), got {value}")
    c, s = math.cos(theta), math.sin(theta)
    m = np.array(
        [
            [c, np.exp(1j * phi1) * s],
            [np.exp(1j * phi2) * s, -np.exp(1j * (phi1 + phi2)) * c],
        ],
        dtype=np.complex128,
    )
    return CoinMatrix(matrix=m, kind=CoinKind.GENERAL_1D)


def build_custom_coin(matrix) -> CoinMatrix:
    """Wrap an arbitrary unitary as a coin; no revival structure is assumed."""
    return CoinMatrix(matrix=as_complex_matrix(matrix), kind=CoinKind.CUSTOM)


def cyclic_power_closed_form(coin: CoinMatrix, m: int) -> np.ndarray:
    """W^m of a cyclic coin assembled entry by entry, without multiplying.

    Each entry of W^m is a product of m consecutive hop phases placed at
    the cyclically shifted slot; m = n collapses to (prod of all phases)
    times the identity. Serves as the closed-form counterpart to repeated
    matrix multiplication in tests.
    """
    if coin.kind is not CoinKind.CYCLIC:
        raise ConstraintError(f"closed-form powers require a cyclic coin, got {coin.kind.value}")
    n = coin.n
    if not 1 <= m <= n:
        raise ConstraintError(f"power must be in 1..{n}, got {m}")
    lam = np.exp(1j * np.asarray(coin.phases, dtype=np.float64))
    if m == n:
        return lam.prod() * np.eye(n, dtype=np.complex128)
    if m == 1:
        return coin.matrix.copy()
    out = np.zeros((n, n), dtype=np.complex128)
    # Hops that do not wrap: slot k-m feeds slot k (1-based k = m+1 .. n).
    for k in range(m + 1, n + 1):
        out[k - 1, k - m - 1] = lam[k - m : k].prod()
    # Hops that wrap past slot n: head phases 1..j times tail phases n-v.
    for j in range(1, m):
        head = lam[:j].prod()
        tail = lam[n - (m - j) :].prod()
        out[j - 1, n - (m - j) - 1] = head * tail
    out[m - 1, n - 1] = lam[:m].prod()
    return out
