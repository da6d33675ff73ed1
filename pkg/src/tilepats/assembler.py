"""Deterministic rectilinear assembly from an L-shaped seed.

A tile attaches at ``(x, y)`` when its west glue equals the east glue exposed
at ``(x - 1, y)`` and its south glue equals the north glue exposed at
``(x, y - 1)``; the seed supplies both along row 0 and column 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .tiles import Assembly, Cell, Glue, Pattern, SeedGlues, TileSet, TileType

COMPLETE = "complete"
STUCK = "stuck"
AMBIGUOUS = "ambiguous"


@dataclass
class AssemblyOutcome:
    assembly: Assembly
    status: str
    cell: Cell | None = None

    @property
    def complete(self) -> bool:
        return self.status == COMPLETE

    def __str__(self) -> str:
        if self.cell is None:
            return self.status
        return f"{self.status}{self.cell}"


def default_order(width: int, height: int) -> list[Cell]:
    """Column-major sweep: x ascending, y ascending within each column."""
    return [(x, y) for x in range(1, width + 1) for y in range(1, height + 1)]


def check_order(order: Sequence[Cell], width: int, height: int) -> None:
    """Raise unless ``order`` lists every cell once, each after its west and south neighbours."""
    cells = list(order)
    if len(cells) != width * height or set(cells) != set(default_order(width, height)):
        raise ValueError("attachment order must list every cell exactly once")
    pos = {c: i for i, c in enumerate(cells)}
    for (x, y), i in pos.items():
        if (x > 1 and pos[(x - 1, y)] > i) or (y > 1 and pos[(x, y - 1)] > i):
            raise ValueError(f"attachment order places {(x, y)} before a west/south neighbour")


def assemble(
    ts: TileSet,
    seed: SeedGlues,
    width: int,
    height: int,
    order: Iterable[Cell] | None = None,
) -> AssemblyOutcome:
    """Grow the terminal assembly of ``(ts, seed)`` on a ``width`` x ``height`` rectangle.

    ``order`` may be any linear extension of the south-west dominance order;
    the result does not depend on it. Cells whose west or south neighbour
    never gets placed are skipped, so a stuck system still yields everything
    that can attach. The reported stuck/ambiguous cell is the first one in
    column-major order.
    """
    if len(seed.north) != width or len(seed.east) != height:
        raise ValueError(
            f"seed is {len(seed.north)}x{len(seed.east)}, assembly is {width}x{height}"
        )
    if order is None:
        order = default_order(width, height)
    else:
        order = list(order)
        check_order(order, width, height)

    index = {}
    for t in ts:
        key = (t.south, t.west)
        index[key] = None if key in index else t  # None marks a clash

    placed: dict[Cell, TileType] = {}
    stuck: list[Cell] = []
    ambiguous: list[Cell] = []
    seed_north, seed_east = seed.north, seed.east
    for x, y in order:
        if x == 1:
            west = seed_east[y - 1]
        else:
            left = placed.get((x - 1, y))
            if left is None:
                continue
            west = left.east
        if y == 1:
            south = seed_north[x - 1]
        else:
            below = placed.get((x, y - 1))
            if below is None:
                continue
            south = below.north
        key = (south, west)
        if key not in index:
            stuck.append((x, y))
            continue
        t = index[key]
        if t is None:
            ambiguous.append((x, y))
            continue
        placed[(x, y)] = t

    asm = Assembly(width, height, placed)
    bad = stuck + ambiguous
    if not bad:
        return AssemblyOutcome(asm, COMPLETE)
    first = min(bad)  # tuples sort by (x, y): column-major
    return AssemblyOutcome(asm, AMBIGUOUS if first in ambiguous else STUCK, first)


@dataclass
class Verdict:
    ok: bool
    cell: Cell | None = None
    reason: str = ""
    outcome: AssemblyOutcome | None = None

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        if self.ok:
            return "ok"
        return f"{self.reason} at {self.cell}"


def verify_solves(ts: TileSet, seed: SeedGlues, p: Pattern) -> Verdict:
    """Does ``(ts, seed)`` uniquely assemble pattern ``p``?

    Failure carries the first offending cell: the stuck/ambiguous cell if
    assembly halted, else the first colour mismatch in row-major order.
    """
    if seed.width != p.width or seed.height != p.height:
        return Verdict(False, None, "seed dimensions do not match pattern")
    out = assemble(ts, seed, p.width, p.height)
    if not out.complete:
        return Verdict(False, out.cell, out.status, out)
    placed = out.assembly.placed
    for cell in p.cells():
        if placed[cell].color != p[cell]:
            return Verdict(
                False, cell, f"color {placed[cell].color} where {p[cell]} expected", out
            )
    return Verdict(True, None, "", out)


@dataclass(frozen=True)
class GlueTrace:
    position: int
    side: str  # "east-of-column" or "north-of-row"
    glues: tuple[Glue, ...]


def column_glue_trace(a: Assembly, x: int) -> GlueTrace:
    """East glues of column ``x``, south to north."""
    missing = [y for y in range(1, a.height + 1) if (x, y) not in a.placed]
    if missing:
        raise ValueError(f"column {x} is not fully placed (row {missing[0]} empty)")
    return GlueTrace(
        x, "east-of-column", tuple(a.placed[(x, y)].east for y in range(1, a.height + 1))
    )


def row_glue_trace(a: Assembly, y: int) -> GlueTrace:
    """North glues of row ``y``, west to east."""
    missing = [x for x in range(1, a.width + 1) if (x, y) not in a.placed]
    if missing:
        raise ValueError(f"row {y} is not fully placed (column {missing[0]} empty)")
    return GlueTrace(
        y, "north-of-row", tuple(a.placed[(x, y)].north for x in range(1, a.width + 1))
    )
