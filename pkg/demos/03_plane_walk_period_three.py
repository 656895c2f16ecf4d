"""A period-3 walk on the 2-d integer lattice.

Each spatial dimension gets its own zero-sum displacement row, so the
same three-phase coin that drives the line walk drives a plane walk:
dimension and period are decoupled. The x row is (1, 1, -2) and the y
row its negative.
"""

import math

from revivalwalk import (
    WalkInstance,
    WalkState,
    build_cyclic_coin,
    build_shift_table,
    detect_revival,
    evolve,
)

amp = 1 / math.sqrt(3)
instance = WalkInstance(
    coin=build_cyclic_coin([0.0, 2 * math.pi / 3, 4 * math.pi / 3]),
    shifts=build_shift_table([(1, 1, -2), (-1, -1, 2)]),
    initial=WalkState.from_entries(
        2, 3, [((0, 0), 0, amp), ((0, 0), 1, amp), ((0, 0), 2, amp)]
    ),
)

for t in range(4):
    state = evolve(instance, t)
    print(f"t = {t}")
    for pos, vec in sorted(state.items()):
        for slot, value in enumerate(vec):
            if value != 0:
                print(
                    f"  (x, y) = ({pos[0]:+d}, {pos[1]:+d})  "
                    f"slot {slot + 1}  amp = {value:.6f}"
                )

print("\ndetected period:", detect_revival(instance, 8).period)
