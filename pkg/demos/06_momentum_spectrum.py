"""Why the revivals are exact: a flat roots-of-unity spectrum.

At quasi-momentum k the walk reduces to an n x n matrix. For a cyclic
coin with zero-sum shifts the product of its nonzero entries is 1 at
every k, so the eigenvalues are the n-th roots of unity everywhere: no
dispersion, hence exact recurrence. A rotation-style coin shows the
opposite: its eigenvalues wander with k.
"""

import math

import numpy as np

from revivalwalk import (
    MomentumPropagator,
    build_cyclic_coin,
    build_general_coin_1d,
    build_shift_table,
    characteristic_eigenvalues,
    conventional_two_state_shifts,
    evaluate_propagator,
    propagator_order,
    spectrum_sweep,
)

flat = MomentumPropagator(
    coin=build_cyclic_coin([0.0, 2 * math.pi / 3, 4 * math.pi / 3]),
    shifts=build_shift_table([(-5, 3, 2)]),
)

print("cyclic coin, shifts (-5, 3, 2):")
for k in (0.0, 0.9, -2.4):
    closed = characteristic_eigenvalues(flat, [k])
    numeric = np.sort(np.angle(np.linalg.eigvals(evaluate_propagator(flat, [k]))))
    print(f"  k = {k:+.2f}: closed-form args {np.sort(np.angle(closed)).round(6)}"
          f"  eigensolver args {numeric.round(6)}")

report = spectrum_sweep(flat, 12)
print("  k-independent:", report.k_independent,
      " equals roots of unity:", report.matches_roots_of_unity)
print("  propagator order:", propagator_order(flat, 10, 8))

dispersive = MomentumPropagator(
    coin=build_general_coin_1d(math.pi / 4, 0.0, 0.0),
    shifts=conventional_two_state_shifts(),
)
print("\nrotation coin (theta = pi/4), conventional shifts:")
for k in (0.0, 0.9, -2.4):
    args = np.sort(np.angle(np.linalg.eigvals(evaluate_propagator(dispersive, [k]))))
    print(f"  k = {k:+.2f}: eigenvalue args {args.round(6)}")
report = spectrum_sweep(dispersive, 12)
print("  k-independent:", report.k_independent,
      " equals roots of unity:", report.matches_roots_of_unity)
