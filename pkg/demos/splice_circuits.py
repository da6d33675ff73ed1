"""
Joining two circuits
====================

A circuit whose last boundary carries 0 can feed a second circuit that
expects its own target n_B. The connector between them is one more element
block, subtracting (0 - n_B) mod 2**h so the numbers agree.
"""

from tilepats.assembler import assemble, column_glue_trace
from tilepats.reduction import (
    T26,
    SubsetSumInstance,
    build_circuit_pattern,
    connector_value,
    decode_trace,
    format_choices,
    search_seed,
    splice,
)

h = 8
a = SubsetSumInstance((11, 25, 37, 39), 75)
b = SubsetSumInstance((3, 6, 5), 8)
pa, pb = build_circuit_pattern(a, h), build_circuit_pattern(b, h)

print("connector subtracts", connector_value(0, b.target, h))
composite = splice(pa, 0, pb, b.target, h)
print("widths", pa.width, "+", h + 1, "+", pb.width, "=", composite.width)

choice, seed = search_seed(composite)
print("seed tags", format_choices(choice))

asm = assemble(T26, seed, composite.width, h).assembly
for x in (pa.width, pa.width + h + 1, composite.width):
    print("column", x, "carries", decode_trace(column_glue_trace(asm, x).glues))

# an unsolvable second half leaves nothing to search for
dead = splice(pa, 0, build_circuit_pattern(SubsetSumInstance((2, 4), 5), h), 5, h)
print("with an unsolvable half:", search_seed(dead))
