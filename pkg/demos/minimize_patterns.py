"""
Smallest tile sets for small patterns
=====================================

Branch and bound over cell partitions finds the fewest tile types that
grow a given colour pattern, and a brute-force enumeration checks it.
"""

from collections import Counter
import itertools

from tilepats.formats import format_seed, format_tileset
from tilepats.solver import brute_force_min, minimize_tileset, verify_certificate
from tilepats.tiles import Pattern

checker = Pattern.from_top_rows([["Black", "White"], ["White", "Black"]])
cert = minimize_tileset(checker)
print("checkerboard k =", cert.k)
print(format_tileset(cert.tileset), format_seed(cert.seed), sep="")

# a single White corner forces a third type
corner = Pattern.from_top_rows([["Black", "White"], ["Black", "Black"]])
print("corner k =", minimize_tileset(corner).k, "brute force", brute_force_min(corner))

# how many types every two-color 3x3 pattern needs
sizes = Counter()
for bits in itertools.product("BW", repeat=9):
    p = Pattern.from_top_rows([bits[0:3], bits[3:6], bits[6:9]])
    c = minimize_tileset(p)
    assert verify_certificate(p, c)
    sizes[c.k] += 1
print("k distribution over 512 patterns:", dict(sorted(sizes.items())))
