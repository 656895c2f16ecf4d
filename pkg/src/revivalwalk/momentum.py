"""Momentum-space propagator, spectrum checks, and a dense lattice oracle.

At quasi-momentum k the walk is governed by an n x n matrix: the coin
with each row j multiplied by a plane-wave factor exp(sigma*i*sum_r
a_{r,j} k_r). For cyclic coins with zero-sum shifts the product of the
nonzero entries is 1 regardless of k, so the characteristic polynomial is
lambda^n - 1 and the spectrum is the n-th roots of unity at every k. That
flatness is the fingerprint of exact revivals, and this module verifies
it two independent ways (closed form and numeric eigensolver).

The dense oracle cross-checks the sparse engine by materializing the full
one-step matrix on a truncated lattice window and applying it literally.
It refuses windows that the evolution could outrun: amplitudes reaching a
boundary would be dropped, and a wrapped boundary would fake revivals.
"""

from __future__ import annotations

import enum
import math
from collections.abc import Sequence
from dataclasses import dataclass
from itertools import product

import numpy as np

from .coins import CoinKind, CoinMatrix, TAU
from .engine import WalkInstance
from .errors import ConstraintError, DimensionMismatchError, OrderMismatchError, WindowTooSmallError
from .linalg import matrix_order
from .shifts import ShiftTable
from .states import Position, WalkState
from .tolerances import TOL_MAT


class SignConvention(enum.Enum):
    """Sign of i in the plane-wave factor exp(sigma * i * a.k)."""

    PLUS_IK = 1
    MINUS_IK = -1


@dataclass(frozen=True, eq=False)
class MomentumPropagator:
    """Coin plus shift table, evaluated as an n x n matrix at momentum k.

    Any unitary coin is accepted; the flat roots-of-unity spectrum is only
    guaranteed for cyclic (and partial-cycle) constructions, which is
    precisely what the sweep functions below test.
    """

    coin: CoinMatrix
    shifts: ShiftTable
    sign_convention: SignConvention = SignConvention.MINUS_IK

    def __post_init__(self) -> None:
        if self.coin.n != self.shifts.n:
            raise DimensionMismatchError(
                f"coin n={self.coin.n} does not match shift table n={self.shifts.n}"
            )

    @property
    def d(self) -> int:
        return self.shifts.d

    @property
    def n(self) -> int:
        return self.coin.n


def wrap_momentum(k: float) -> float:
    """Reduce a momentum component into [-pi, pi)."""
    r = math.remainder(float(k), TAU)
    if r >= math.pi:
        r -= TAU
    return r


def _as_momentum(prop: MomentumPropagator, k) -> np.ndarray:
    arr = np.atleast_1d(np.asarray(k, dtype=np.float64))
    if arr.shape != (prop.d,):
        raise DimensionMismatchError(
            f"momentum must have {prop.d} component(s), got shape {arr.shape}"
        )
    return np.array([wrap_momentum(c) for c in arr])


def evaluate_propagator(prop: MomentumPropagator, k) -> np.ndarray:
    """The n x n step matrix at momentum k (components wrapped into [-pi, pi)).

    Row j of the coin picks up exp(sigma * i * sum_r a_{r,j} k_r), i.e. the
    matrix is the diagonal of plane-wave factors times the coin.
    """
    kk = _as_momentum(prop, k)
    a = np.asarray(prop.shifts.displacements, dtype=np.float64)  # d x n
    row_phases = kk @ a  # length n: sum_r a[r, j] * k_r
    factors = np.exp(1j * prop.sign_convention.value * row_phases)
    return factors[:, None] * prop.coin.matrix


def momentum_samples(d: int, n_random: int, rng: np.random.Generator) -> list[np.ndarray]:
    """Deterministic edge points (0 and -pi on each axis) plus random draws."""
    samples = [np.zeros(d)]
    for axis in range(d):
        edge = np.zeros(d)
        edge[axis] = -math.pi
        samples.append(edge)
    for _ in range(n_random):
        samples.append(rng.uniform(-math.pi, math.pi, size=d))
    return samples


def propagator_order(
    prop: MomentumPropagator,
    k_samples: int,
    max_order: int,
    seed: int = 0,
    tol: float = TOL_MAT,
) -> int | None:
    """The matrix order of the propagator, required to agree at every sample.

    Samples are ``k_samples`` uniform draws plus the deterministic edge
    set. Returns None when no sampled point has an order within
    ``max_order``. A disagreement between samples means the construction
    is not a revival walk (impossible for valid cyclic coins with zero-sum
    shifts) and raises OrderMismatchError.
    """
    if k_samples < 1:
        raise ValueError(f"k_samples must be >= 1, got {k_samples}")
    rng = np.random.default_rng(seed)
    samples = momentum_samples(prop.d, k_samples, rng)
    orders = [matrix_order(evaluate_propagator(prop, k), max_order, tol) for k in samples]
    first = orders[0]
    for k, order in zip(samples, orders):
        if order != first:
            raise OrderMismatchError(
                f"propagator order differs across momenta: {first} at "
                f"{tuple(samples[0])} vs {order} at {tuple(k)}"
            )
    return first


def roots_of_unity(n: int) -> np.ndarray:
    """The n-th roots of unity sorted by principal argument."""
    roots = np.exp(2j * math.pi * np.arange(n) / n)
    return roots[np.argsort(np.angle(roots))]


def _sorted_by_argument(values: np.ndarray) -> np.ndarray:
    return values[np.argsort(np.angle(values))]


def spectrum_distance(a: np.ndarray, b: np.ndarray) -> float:
    """Distance between two same-size unit-circle spectra.

    Both inputs are sorted by argument; the principal-argument cut at
    +/-pi can rotate one sorted sequence relative to the other, so the
    distance is the best cyclic alignment of the two.
    """
    a = _sorted_by_argument(np.asarray(a, dtype=np.complex128))
    b = _sorted_by_argument(np.asarray(b, dtype=np.complex128))
    if a.shape != b.shape:
        raise DimensionMismatchError(f"spectra differ in size: {a.shape} vs {b.shape}")
    n = len(a)
    return min(float(np.abs(a - np.roll(b, s)).max()) for s in range(n))


def characteristic_eigenvalues(prop: MomentumPropagator, k) -> np.ndarray:
    """Closed-form eigenvalues of a cyclic propagator at momentum k.

    The determinant of (V - lambda*I) reduces to lambda^n minus the
    product p of the n nonzero entries, so the eigenvalues are the n-th
    roots of p. Returned sorted by principal argument.
    """
    if prop.coin.kind is not CoinKind.CYCLIC:
        raise ConstraintError(
            f"characteristic roots require a cyclic coin, got {prop.coin.kind.value}"
        )
    v = evaluate_propagator(prop, k)
    n = prop.n
    p = v[0, n - 1]
    for j in range(1, n):
        p = p * v[j, j - 1]
    magnitude = abs(p) ** (1.0 / n)
    base = np.angle(p) / n
    roots = magnitude * np.exp(1j * (base + TAU * np.arange(n) / n))
    return _sorted_by_argument(roots)


@dataclass(frozen=True, eq=False)
class SpectrumReport:
    """Eigenvalues of the propagator across momentum samples.

    ``k_independent`` records whether the argument-sorted spectra agree
    across all samples; ``matches_roots_of_unity`` whether each one equals
    the n-th roots of unity. Both at the dense-matrix tolerance.
    """

    k_samples: tuple[tuple[float, ...], ...]
    eigenvalue_sets: tuple[tuple[complex, ...], ...]
    k_independent: bool
    matches_roots_of_unity: bool


def spectrum_sweep(
    prop: MomentumPropagator,
    samples: int,
    seed: int = 0,
    tol: float = TOL_MAT,
) -> SpectrumReport:
    """Numerically diagonalize the propagator across momentum samples.

    Uses a dense eigensolver, making it an oracle that is independent of
    the closed-form route, and valid for any coin kind (dispersive coins
    report k_independent=False).
    """
    if samples < 2:
        raise ValueError(f"need at least 2 samples, got {samples}")
    rng = np.random.default_rng(seed)
    points = momentum_samples(prop.d, max(0, samples - (prop.d + 1)), rng)[:samples]
    spectra = []
    for k in points:
        eig = np.linalg.eigvals(evaluate_propagator(prop, k))
        spectra.append(_sorted_by_argument(eig))
    reference = spectra[0]
    k_independent = all(spectrum_distance(reference, s) <= tol for s in spectra[1:])
    expected = roots_of_unity(prop.n)
    matches = all(spectrum_distance(expected, s) <= tol for s in spectra)
    return SpectrumReport(
        k_samples=tuple(tuple(float(c) for c in k) for k in points),
        eigenvalue_sets=tuple(tuple(complex(x) for x in s) for s in spectra),
        k_independent=k_independent,
        matches_roots_of_unity=matches,
    )


def _required_half_widths(instance: WalkInstance, t: int) -> tuple[int, ...]:
    d = instance.shifts.d
    positions = instance.initial.positions()
    required = []
    for r in range(d):
        reach = max(abs(a) for a in instance.shifts.displacements[r])
        radius = max(abs(pos[r]) for pos in positions)
        required.append(radius + reach * t)
    return tuple(required)


def dense_oracle_evolve(
    instance: WalkInstance,
    t: int,
    window: Sequence[int],
) -> WalkState:
    """Brute-force evolution via one explicit dense step matrix.

    The lattice is truncated to the box |x_r| <= window[r]; the one-step
    operator on the n * prod(2*window[r] + 1) dimensional truncated space
    is materialized entrywise and applied t times to the embedded initial
    state. The window must be wide enough that no amplitude can touch the
    boundary within t steps, otherwise the call refuses and reports the
    minimum usable half-widths.
    """
    if t < 0:
        raise ValueError(f"step count must be >= 0, got {t}")
    d, n = instance.shifts.d, instance.coin.n
    half = tuple(int(w) for w in window)
    if len(half) != d or any(w < 0 for w in half):
        raise DimensionMismatchError(
            f"window must give {d} non-negative half-width(s), got {window}"
        )
    required = _required_half_widths(instance, t)
    if any(w < need for w, need in zip(half, required)):
        raise WindowTooSmallError(half, required)

    axes = [range(-w, w + 1) for w in half]
    positions: list[Position] = [tuple(map(int, p)) for p in product(*axes)]
    index = {pos: i for i, pos in enumerate(positions)}
    size = n * len(positions)

    coin = instance.coin.matrix
    cols = tuple(
        tuple(instance.shifts.displacements[r][j] for r in range(d)) for j in range(n)
    )
    u = np.zeros((size, size), dtype=np.complex128)
    for pos, ip in index.items():
        for i in range(n):
            target = tuple(x + a for x, a in zip(pos, cols[i]))
            iy = index.get(target)
            if iy is None:
                continue  # unreachable under the window precondition
            for j in range(n):
                if coin[i, j] != 0:
                    u[iy * n + i, ip * n + j] = coin[i, j]

    vec = np.zeros(size, dtype=np.complex128)
    for pos, amps in instance.initial.items():
        vec[index[pos] * n : index[pos] * n + n] = amps
    for _ in range(t):
        vec = u @ vec

    amplitudes: dict[Position, np.ndarray] = {}
    for pos, ip in index.items():
        block = vec[ip * n : ip * n + n]
        if block.any():
            amplitudes[pos] = block
    return WalkState(d, n, amplitudes)
