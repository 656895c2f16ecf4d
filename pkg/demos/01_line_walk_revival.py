"""A two-state walker that returns home every second step.

The coin cycles the two internal slots with phases 4*pi/3 and 2*pi/3
(summing to 2*pi), and the shift sends slot 0 left and slot 1 right.
Because the coin's matrix order is exactly 2 and the shifts cancel over
one cycle, the joint coin-and-position state revives, amplitude for
amplitude, with period 2.
"""

import math

from revivalwalk import (
    WalkInstance,
    WalkState,
    build_cyclic_coin,
    build_shift_table,
    detect_revival,
    evolve,
    matrix_order,
)

coin = build_cyclic_coin([4 * math.pi / 3, 2 * math.pi / 3])
print("coin matrix:")
print(coin.matrix.round(6))
print("matrix order:", matrix_order(coin.matrix, 8))

amp = 1 / math.sqrt(2)
instance = WalkInstance(
    coin=coin,
    shifts=build_shift_table([(-1, 1)]),
    initial=WalkState.from_entries(1, 2, [((1,), 0, amp), ((1,), 1, amp)]),
)

for t in range(3):
    state = evolve(instance, t)
    print(f"\nt = {t}")
    for pos, vec in sorted(state.items()):
        for slot, value in enumerate(vec):
            if value != 0:
                print(f"  x = {pos[0]:+d}  slot {slot + 1}  amp = {value:.6f}")

report = detect_revival(instance, 8)
print("\ndetected period:", report.period)
print("distance to the initial state per step:",
      [f"{d:.2e}" for d in report.distance_series])
