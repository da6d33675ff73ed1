"""
A four-type decrementing counter
================================

Each tile subtracts the borrow arriving from below from the bit arriving
from the west. Stacking them in a column counts down by one per column.
"""

from tilepats.assembler import assemble, column_glue_trace
from tilepats.reduction import half_subtractor_counter
from tilepats.render import render_ascii

ts, seed, width, height = half_subtractor_counter(bits=4, start=15, width=6)

for t in ts:
    print(f"{t.color:5s} west={t.west} south={t.south} -> east={t.east} north={t.north}")

out = assemble(ts, seed, width, height)
print("status:", out.status)

# column x holds 15 - x, least significant bit at the bottom
for x in range(1, width + 1):
    bits = column_glue_trace(out.assembly, x).glues
    print(x, "".join(reversed(bits)), int("".join(reversed(bits)), 2))

palette = {"Red": ((220, 40, 40), "R"), "Blue": ((40, 60, 220), "b")}
print(render_ascii(out.assembly, palette).decode())
