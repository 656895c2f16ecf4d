"""Sparse coin-walker states on d-dimensional integer lattices.

A :class:`WalkState` maps occupied lattice positions (tuples of ints) to
dense length-n complex amplitude vectors, one slot per coin basis state.
Coin indices are 0-based throughout the Python API; the JSON config layer
speaks 1-based indices to match the usual bra-ket labelling.

States are value-semantic: every operation returns a new state, the
amplitude arrays are frozen (non-writeable), and positions whose vectors
are exactly zero are never stored. Epsilon pruning is opt-in via
:meth:`WalkState.prune`; by default only exact zeros are dropped so that
support structure stays meaningful in revival checks.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Mapping
from typing import Union

import numpy as np

from .errors import DimensionMismatchError, NormalizationError
from .tolerances import TOL_NORM

Position = tuple[int, ...]

#: Lattice coordinates are kept inside the signed 64-bit range; shifts that
#: would leave it raise instead of wrapping (see shifts.apply_shift).
COORD_LIMIT = 2**63 - 1


class WalkState:
    """Sparse map from lattice positions to length-n amplitude vectors."""

    __slots__ = ("d", "n", "_amps")

    def __init__(self, d: int, n: int, amplitudes: Mapping[Position, np.ndarray]):
        if d < 1:
            raise DimensionMismatchError(f"spatial dimension must be >= 1, got {d}")
        if n < 1:
            raise DimensionMismatchError(f"coin dimension must be >= 1, got {n}")
        self.d = d
        self.n = n
        amps: dict[Position, np.ndarray] = {}
        for pos, vec in amplitudes.items():
            key = tuple(int(c) for c in pos)
            if len(key) != d:
                raise DimensionMismatchError(
                    f"position {key} has {len(key)} coordinates, expected {d}"
                )
            arr = np.asarray(vec, dtype=np.complex128)
            if arr.shape != (n,):
                raise DimensionMismatchError(
                    f"amplitude vector at {key} has shape {arr.shape}, expected ({n},)"
                )
            if not np.isfinite(arr).all():
                raise ValueError(f"non-finite amplitude at position {key}")
            if not arr.any():
                continue  # exact-zero vectors are never stored
            arr = arr.copy()
            arr.flags.writeable = False
            amps[key] = arr
        self._amps = amps

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_entries(
        cls,
        d: int,
        n: int,
        entries: Iterable[tuple[Union[Position, Iterable[int]], int, complex]],
        normalize: bool = False,
        norm_tol: float = TOL_NORM,
    ) -> "WalkState":
        """Build a state from (position, coin index, amplitude) triples.

        Duplicate (position, coin) entries accumulate. Unless ``normalize``
        is set, the total norm must already be 1 within ``norm_tol``;
        nothing is ever rescaled silently.
        """
        amps: dict[Position, np.ndarray] = {}
        for pos, coin, amp in entries:
            key = tuple(int(c) for c in pos)
            coin = int(coin)
            if not 0 <= coin < n:
                raise DimensionMismatchError(
                    f"coin index {coin} out of range for coin dimension {n}"
                )
            vec = amps.setdefault(key, np.zeros(n, dtype=np.complex128))
            vec[coin] += complex(amp)
        state = cls(d, n, amps)
        norm = state.norm()
        if normalize:
            if norm == 0.0:
                raise NormalizationError("cannot normalize the zero state")
            scaled = {pos: vec / norm for pos, vec in state._amps.items()}
            return cls(d, n, scaled)
        if abs(norm - 1.0) > norm_tol:
            raise NormalizationError(
                f"state norm {norm!r} is not 1 within {norm_tol:.1e} "
                f"(set normalize to rescale explicitly)"
            )
        return state

    @classmethod
    def localized(cls, d: int, n: int, position: Iterable[int], coin: int) -> "WalkState":
        """Unit amplitude on a single coin state at a single position."""
        return cls.from_entries(d, n, [(tuple(position), coin, 1.0)])

    # -- accessors ---------------------------------------------------------

    def positions(self) -> list[Position]:
        return list(self._amps.keys())

    def items(self):
        return self._amps.items()

    def amplitude(self, position: Iterable[int], coin: int) -> complex:
        """Amplitude at (position, coin); exact 0 for unoccupied slots."""
        if not 0 <= coin < self.n:
            raise DimensionMismatchError(f"coin index {coin} out of range")
        vec = self._amps.get(tuple(int(c) for c in position))
        if vec is None:
            return 0j
        return complex(vec[coin])

    def vector_at(self, position: Iterable[int]) -> np.ndarray:
        """Length-n amplitude vector at a position (zeros if unoccupied)."""
        vec = self._amps.get(tuple(int(c) for c in position))
        if vec is None:
            return np.zeros(self.n, dtype=np.complex128)
        return vec

    def norm(self) -> float:
        total = 0.0
        for vec in self._amps.values():
            total += float(np.vdot(vec, vec).real)
        return math.sqrt(total)

    def prune(self, epsilon: float) -> "WalkState":
        """Drop amplitudes with |amp| < epsilon (opt-in, for long runs)."""
        amps = {}
        for pos, vec in self._amps.items():
            kept = np.where(np.abs(vec) < epsilon, 0j, vec)
            if kept.any():
                amps[pos] = kept
        return WalkState(self.d, self.n, amps)

    def __len__(self) -> int:
        return len(self._amps)

    def __repr__(self) -> str:
        return (
            f"WalkState(d={self.d}, n={self.n}, sites={len(self._amps)}, "
            f"norm={self.norm():.6f})"
        )


def _check_compatible(a: WalkState, b: WalkState) -> None:
    if a.d != b.d or a.n != b.n:
        raise DimensionMismatchError(
            f"incompatible states: (d={a.d}, n={a.n}) vs (d={b.d}, n={b.n})"
        )


def inner_product(a: WalkState, b: WalkState) -> complex:
    """<a|b> over the shared support; conjugation is on the first argument."""
    _check_compatible(a, b)
    total = 0j
    for pos, vec in a.items():
        other = b._amps.get(pos)
        if other is not None:
            total += complex(np.vdot(vec, other))
    return total


def l2_distance(a: WalkState, b: WalkState) -> float:
    """l2 norm of a - b over the union of supports (missing slots are 0)."""
    _check_compatible(a, b)
    total = 0.0
    for pos, vec in a.items():
        diff = vec - b.vector_at(pos)
        total += float(np.vdot(diff, diff).real)
    for pos, vec in b.items():
        if pos not in a._amps:
            total += float(np.vdot(vec, vec).real)
    return math.sqrt(total)
