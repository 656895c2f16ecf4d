"""Three coin states, wildly asymmetric shifts, still a sharp revival.

The displacements (-5, +3, +2) sum to zero, which is all the revival
construction asks of them. The walker sprays out to distant sites and
snaps back to its exact starting state after 3 steps.
"""

import math

from revivalwalk import (
    WalkInstance,
    WalkState,
    build_cyclic_coin,
    build_shift_table,
    detect_revival,
    evolve,
    probability_distribution,
)

amp = 1 / math.sqrt(3)
instance = WalkInstance(
    coin=build_cyclic_coin([0.0, 2 * math.pi / 3, 4 * math.pi / 3]),
    shifts=build_shift_table([(-5, 3, 2)]),
    initial=WalkState.from_entries(
        1, 3, [((3,), 0, amp), ((2,), 1, amp), ((1,), 2, amp)]
    ),
)

for t in range(4):
    dist = probability_distribution(evolve(instance, t))
    cells = ", ".join(f"P(x={x[0]:+d}) = {p:.4f}" for x, p in sorted(dist.items()))
    print(f"t = {t}:  {cells}")

report = detect_revival(instance, 8)
print("\ndetected period:", report.period)
print("fidelity with the initial state per step:",
      [f"{f:.4f}" for f in report.fidelity_series])
