"""
Solving Subset Sum by growing a circuit
=======================================

The instance S = {11, 25, 37, 39}, n = 75 is compiled into a colour
pattern. The 26 circuit tile types can grow that pattern only from a seed
whose tags pick a subset summing to n.
"""

import itertools

from tilepats.assembler import verify_solves
from tilepats.reduction import (
    T26,
    SubsetSumInstance,
    build_circuit_pattern,
    build_seed,
    circuit_height,
    display_height,
    evaluate_choice,
    format_choices,
    running_totals,
    simulate_choice,
    solve_ss_by_assembly,
    subset_sum_dp,
)
from tilepats.render import render_ascii

inst = SubsetSumInstance((11, 25, 37, 39), 75)

# seven rows are enough to draw it; the safe height keeps n + sum(S) in range
h = display_height(inst, 7)
print("drawing height", h, "safe height", circuit_height(inst))

pattern = build_circuit_pattern(inst, h)
print(f"{pattern.width}x{pattern.height} pattern in {len(pattern.colors())} colors")
print(render_ascii(pattern).decode())

# every tag choice, with the residual the circuit leaves in its last column
for choice in itertools.product((True, False), repeat=len(inst.elements)):
    ok = verify_solves(T26, build_seed(inst, h, choice), pattern)
    print(format_choices(choice), evaluate_choice(inst, h, choice), "accepts" if ok else "")

# the running total after each element, read off the assembled glues
out = simulate_choice(inst, h, "**x*")
print("running totals:", running_totals(out, len(inst.elements), h))

print("witness:", format_choices(solve_ss_by_assembly(inst)), "dp says", subset_sum_dp(inst))
