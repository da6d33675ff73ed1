"""Subset Sum compiled into a 9-colour subtraction circuit pattern.

The pattern has height ``h``; row ``r`` carries bit ``r`` of a running
total (row 1 least significant, row ``h`` most significant). Column 1 writes
the target ``n`` in Black (0) and White (1). Each element then takes ``h + 1``
columns laid out as a staircase:

* local column 0: right-arrow (RA) cell for bit 1 at row 1, CarryBlue above;
* local column ``j`` in ``1..h-1``, with ``b`` = bit ``j + 1`` of the element:
  el-colour(b) in rows ``1..j-1``, up-arrow UA(b) at row ``j``, RA(b) at row
  ``j + 1``, CarryBlue above;
* local column ``h``: el-Black in rows ``1..h-1`` and UAB on top, converting
  the last signal back to a horizontal bit.

The final column is all Black: the running total must come out as 0.

With the 26-type tile set from :func:`build_tileset_t26`, the only freedom in
the seed is the ON (``*``) / OFF (``x``) tag under each element's first
column. An ON element is subtracted, mod ``2**h``, from the running total.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, NamedTuple, Sequence

from .assembler import AssemblyOutcome, Verdict, assemble, column_glue_trace, verify_solves
from .tiles import Pattern, SeedGlues, TileSet, TileType

# colours
BLACK, WHITE = "Black", "White"
EL_BLACK, EL_WHITE = "el-Black", "el-White"
CARRY = "CarryBlue"
RAB, RAW, UAB, UAW = "RAB", "RAW", "UAB", "UAW"
CIRCUIT_COLORS = (BLACK, WHITE, EL_BLACK, EL_WHITE, CARRY, RAB, RAW, UAB, UAW)

# glues
NEUTRAL = "#"
ON, OFF = "*", "x"

DEFAULT_MIN_HEIGHT = 21
MAX_SEARCH_ELEMENTS = 24


def hglue(bit: int) -> str:
    return f"{bit}h"


def vp(bit: int) -> str:
    return f"{bit}vp"


def vc(bit: int) -> str:
    return f"{bit}vc"


def signal(bit: int, tag: str) -> str:
    return f"{bit}{tag}"


def bit(value: int, r: int) -> int:
    """Bit ``r`` of ``value``, 1-indexed from the least significant end."""
    return (value >> (r - 1)) & 1


@dataclass(frozen=True)
class SubsetSumInstance:
    elements: tuple[int, ...]
    target: int

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(int(v) for v in self.elements))
        if not self.elements:
            raise ValueError("instance needs at least one element")
        if any(v < 1 for v in self.elements):
            raise ValueError("elements must be positive integers")
        if self.target < 1:
            raise ValueError("target must be a positive integer")


# signal choices --------------------------------------------------------------

def parse_choices(text: str) -> tuple[bool, ...]:
    """``"**x*"`` -> (True, True, False, True); ``*`` subtracts, ``x`` skips."""
    bad = set(text) - {ON, OFF}
    if bad:
        raise ValueError(f"choice string may only contain '*' and 'x', got {sorted(bad)}")
    return tuple(c == ON for c in text)


def format_choices(choice: Sequence[bool]) -> str:
    return "".join(ON if c else OFF for c in choice)


def _choice_tuple(choice) -> tuple[bool, ...]:
    if isinstance(choice, str):
        return parse_choices(choice)
    return tuple(bool(c) for c in choice)


# geometry --------------------------------------------------------------------

def circuit_height(inst: SubsetSumInstance, min_height: int = DEFAULT_MIN_HEIGHT) -> int:
    """``max(ceil(log2(n + sum(S))), min_height)``."""
    total = inst.target + sum(inst.elements)
    return max((total - 1).bit_length(), min_height)


def display_height(inst: SubsetSumInstance, min_height: int) -> int:
    """Smallest height ``>= min_height`` that fits ``n`` and every element.

    Drops the ``n + sum(S)`` headroom of :func:`circuit_height`, so running
    totals may wrap around; meant for drawing small examples.
    """
    fit = max(v.bit_length() for v in (inst.target, *inst.elements))
    return max(fit, min_height)


def circuit_width(n_elements: int, h: int) -> int:
    return 2 + n_elements * (h + 1)


def element_start(i: int, h: int) -> int:
    """First column of element ``i`` (1-indexed)."""
    return 2 + (i - 1) * (h + 1)


def boundary_column(i: int, h: int) -> int:
    """Last column of element ``i``; its east glues hold the running total."""
    return element_start(i, h) + h


class Role(NamedTuple):
    kind: str  # target, RA, UA, EL, carry, final
    element: int | None = None  # 1-indexed element, None outside elements
    bit: int | None = None  # value of the bit the cell encodes
    row: int | None = None


@dataclass(frozen=True)
class CircuitLayout:
    h: int
    width: int
    starts: tuple[int, ...]
    roles: dict  # (x, y) -> Role

    def color(self, cell) -> str:
        return role_color(self.roles[cell])


def role_color(role: Role) -> str:
    kind, b = role.kind, role.bit
    if kind in ("target", "final"):
        return WHITE if b else BLACK
    if kind == "RA":
        return RAW if b else RAB
    if kind == "UA":
        return UAW if b else UAB
    if kind == "EL":
        return EL_WHITE if b else EL_BLACK
    if kind == "carry":
        return CARRY
    raise ValueError(f"unknown role {kind}")


def _element_roles(value: int, h: int, element: int | None) -> list[list[Role]]:
    """Roles of the ``h + 1`` columns encoding ``value``, each listed south to north."""
    cols = []
    cols.append([Role("RA", element, bit(value, 1), 1)] + [Role("carry", element)] * (h - 1))
    for j in range(1, h):
        b = bit(value, j + 1)
        col = [Role("EL", element, b, y) for y in range(1, j)]
        col.append(Role("UA", element, b, j))
        col.append(Role("RA", element, b, j + 1))
        col.extend([Role("carry", element)] * (h - j - 1))
        cols.append(col)
    cols.append([Role("EL", element, 0, y) for y in range(1, h)] + [Role("UA", element, 0, h)])
    return cols


def _number_roles(value: int, h: int, kind: str) -> list[Role]:
    return [Role(kind, None, bit(value, y), y) for y in range(1, h + 1)]


def _check_fits(inst: SubsetSumInstance, h: int) -> None:
    if h < 1:
        raise ValueError("height must be positive")
    if inst.target.bit_length() > h:
        raise ValueError(f"height {h} too small for target n={inst.target}")
    for i, v in enumerate(inst.elements, 1):
        if v.bit_length() > h:
            raise ValueError(f"height {h} too small for element {i} (value {v})")


def circuit_layout(inst: SubsetSumInstance, h: int) -> CircuitLayout:
    _check_fits(inst, h)
    columns = [_number_roles(inst.target, h, "target")]
    for i, v in enumerate(inst.elements, 1):
        columns.extend(_element_roles(v, h, i))
    columns.append(_number_roles(0, h, "final"))
    roles = {
        (x, y): col[y - 1] for x, col in enumerate(columns, 1) for y in range(1, h + 1)
    }
    starts = tuple(element_start(i, h) for i in range(1, len(inst.elements) + 1))
    return CircuitLayout(h, len(columns), starts, roles)


def build_circuit_pattern(inst: SubsetSumInstance, h: int) -> Pattern:
    layout = circuit_layout(inst, h)
    return Pattern(
        tuple(
            tuple(layout.color((x, y)) for x in range(1, layout.width + 1))
            for y in range(1, h + 1)
        )
    )


def element_columns(value: int, h: int) -> list[list[str]]:
    """Colour columns (south to north) of a standalone element block."""
    if not 0 <= value < 2**h:
        raise ValueError(f"value {value} does not fit in {h} bits")
    return [[role_color(r) for r in col] for col in _element_roles(value, h, None)]


def number_column(value: int, h: int) -> list[str]:
    return [WHITE if bit(value, y) else BLACK for y in range(1, h + 1)]


# tile set --------------------------------------------------------------------

def build_tileset_t26() -> TileSet:
    """The 26 circuit tile types; each realises ``west - south`` style arithmetic."""
    types = [
        TileType(NEUTRAL, NEUTRAL, hglue(0), hglue(0), BLACK),
        TileType(NEUTRAL, NEUTRAL, hglue(1), hglue(1), WHITE),
    ]
    for color, b in ((EL_BLACK, 0), (EL_WHITE, 1)):
        for t in (0, 1):
            types.append(TileType(vp(b), vp(b), hglue(t), hglue(t), color))
    # ripple borrow: total bit t from the west, borrow b from below
    for b in (0, 1):
        for t in (0, 1):
            types.append(TileType(vc(b & (1 - t)), vc(b), hglue(t ^ b), hglue(t), CARRY))
    for tag in (ON, OFF):
        for t in (0, 1):
            types.append(TileType(vc(0), signal(0, tag), signal(t, tag), hglue(t), RAB))
    for tag in (ON, OFF):
        for t in (0, 1):
            if tag == ON:
                types.append(TileType(vc(1 - t), signal(1, ON), signal(t ^ 1, ON), hglue(t), RAW))
            else:
                types.append(TileType(vc(0), signal(1, OFF), signal(t, OFF), hglue(t), RAW))
    for color, b in ((UAB, 0), (UAW, 1)):
        for tag in (ON, OFF):
            for t in (0, 1):
                types.append(TileType(signal(b, tag), vp(b), hglue(t), signal(t, tag), color))
    return TileSet(types)


T26 = build_tileset_t26()


# seeds -----------------------------------------------------------------------

def build_seed(inst: SubsetSumInstance, h: int, choice) -> SeedGlues:
    choice = _choice_tuple(choice)
    if len(choice) != len(inst.elements):
        raise ValueError(f"{len(choice)} choices for {len(inst.elements)} elements")
    _check_fits(inst, h)
    north = [NEUTRAL]
    for v, on in zip(inst.elements, choice):
        north.append(signal(bit(v, 1), ON if on else OFF))
        north.extend(vp(bit(v, j + 1)) for j in range(1, h))
        north.append(vp(0))
    north.append(NEUTRAL)
    east = [hglue(bit(inst.target, y)) for y in range(1, h + 1)]
    return SeedGlues(tuple(north), tuple(east))


_SEED_BY_FOOT = {
    BLACK: NEUTRAL,
    WHITE: NEUTRAL,
    EL_BLACK: vp(0),
    UAB: vp(0),
    EL_WHITE: vp(1),
    UAW: vp(1),
}


@dataclass(frozen=True)
class SeedTemplate:
    """Seeds for which T26 can grow a circuit-shaped pattern.

    Every glue is forced except the tags at ``signal_columns``.
    """

    north: tuple[str, ...]  # signal columns hold the bare bit, e.g. "1"
    east: tuple[str, ...]
    signal_columns: tuple[int, ...]  # 1-indexed

    def seed(self, choice) -> SeedGlues:
        choice = _choice_tuple(choice)
        if len(choice) != len(self.signal_columns):
            raise ValueError(f"{len(choice)} choices for {len(self.signal_columns)} signal columns")
        north = list(self.north)
        for x, on in zip(self.signal_columns, choice):
            north[x - 1] = signal(int(north[x - 1]), ON if on else OFF)
        return SeedGlues(tuple(north), self.east)

    def seeds(self) -> Iterator[tuple[tuple[bool, ...], SeedGlues]]:
        """All feasible seeds, ON-before-OFF in lexicographic order."""
        for choice in product((True, False), repeat=len(self.signal_columns)):
            yield choice, self.seed(choice)


def seed_template(p: Pattern) -> SeedTemplate:
    """Read the forced seed glues of T26 off a circuit-shaped pattern.

    The bottom row's colours fix every north seed glue except under RA cells;
    column 1 must be Black/White, fixing the east seed glues.
    """
    north, signals = [], []
    for x in range(1, p.width + 1):
        c = p[(x, 1)]
        if c in (RAB, RAW):
            north.append("1" if c == RAW else "0")
            signals.append(x)
        elif c in _SEED_BY_FOOT:
            north.append(_SEED_BY_FOOT[c])
        else:
            raise ValueError(f"no T26 tile of color {c} can sit on the seed at column {x}")
    east = []
    for y in range(1, p.height + 1):
        c = p[(1, y)]
        if c not in (BLACK, WHITE):
            raise ValueError(f"column 1 must be Black/White, found {c} at row {y}")
        east.append(hglue(1 if c == WHITE else 0))
    return SeedTemplate(tuple(north), tuple(east), tuple(signals))


def search_seed(p: Pattern, ts: TileSet = T26) -> tuple[tuple[bool, ...], SeedGlues] | None:
    """First feasible seed (in :meth:`SeedTemplate.seeds` order) that grows ``p``."""
    template = seed_template(p)
    if len(template.signal_columns) > MAX_SEARCH_ELEMENTS:
        raise ValueError(f"{len(template.signal_columns)} signal columns exceed search guard")
    for choice, seed in template.seeds():
        if verify_solves(ts, seed, p):
            return choice, seed
    return None


# evaluation ------------------------------------------------------------------

def evaluate_choice(inst: SubsetSumInstance, h: int, choice) -> int:
    """Analytic circuit output: ``(n - sum of ON elements) mod 2**h``."""
    choice = _choice_tuple(choice)
    if len(choice) != len(inst.elements):
        raise ValueError(f"{len(choice)} choices for {len(inst.elements)} elements")
    taken = sum(v for v, on in zip(inst.elements, choice) if on)
    return (inst.target - taken) % (2**h)


def decode_trace(glues: Sequence[str]) -> int:
    """Horizontal glues ``0h``/``1h`` (least significant first) to an integer."""
    value = 0
    for r, g in enumerate(glues):
        if g not in ("0h", "1h"):
            raise ValueError(f"glue {g!r} does not carry a horizontal bit")
        value |= (g == "1h") << r
    return value


def simulate_choice(inst: SubsetSumInstance, h: int, choice) -> AssemblyOutcome:
    seed = build_seed(inst, h, choice)
    return assemble(T26, seed, circuit_width(len(inst.elements), h), h)


def running_totals(outcome: AssemblyOutcome, n_elements: int, h: int) -> list[int]:
    """Decoded east traces of column 1 and of each element's boundary column."""
    asm = outcome.assembly
    cols = [1] + [boundary_column(i, h) for i in range(1, n_elements + 1)]
    return [decode_trace(column_glue_trace(asm, x).glues) for x in cols]


def verify_choice(inst: SubsetSumInstance, h: int, choice) -> Verdict:
    return verify_solves(T26, build_seed(inst, h, choice), build_circuit_pattern(inst, h))


def solve_ss_by_assembly(inst: SubsetSumInstance, h: int | None = None) -> tuple[bool, ...] | None:
    """Some choice of tags under which T26 grows the circuit, or None.

    Choices are tried ON-before-OFF lexicographically; the first accepting
    one is returned.
    """
    if len(inst.elements) > MAX_SEARCH_ELEMENTS:
        raise ValueError(f"{len(inst.elements)} elements exceed the search guard of {MAX_SEARCH_ELEMENTS}")
    if h is None:
        h = circuit_height(inst)
    pattern = build_circuit_pattern(inst, h)
    for choice in product((True, False), repeat=len(inst.elements)):
        if verify_solves(T26, build_seed(inst, h, choice), pattern):
            return choice
    return None


def subset_sum_dp(inst: SubsetSumInstance, max_cells: int = 10**8) -> bool:
    """Pseudo-polynomial reachability: does some subset sum to ``n``?"""
    n = inst.target
    if n * len(inst.elements) > max_cells:
        raise ValueError(f"n * |S| = {n * len(inst.elements)} exceeds guard {max_cells}")
    reach = [True] + [False] * n
    for v in inst.elements:
        for s in range(n, v - 1, -1):
            if reach[s - v]:
                reach[s] = True
    return reach[n]


# splicing --------------------------------------------------------------------

def connector_value(v1: int, v2: int, h: int) -> int:
    return (v1 - v2) % (2**h)


def splice(p1: Pattern, v1: int, p2: Pattern, v2: int, h: int) -> Pattern:
    """Join ``p1`` and ``p2`` with an element block subtracting ``v1 - v2`` mod ``2**h``.

    ``v1`` is the number ``p1``'s east boundary carries and ``v2`` the number
    ``p2``'s west boundary expects. With the connector's tag ON the composite
    grows under T26 exactly when both halves do.
    """
    if p1.height != h or p2.height != h:
        raise ValueError(f"both patterns must have height {h} (got {p1.height}, {p2.height})")
    for v in (v1, v2):
        if not 0 <= v < 2**h:
            raise ValueError(f"boundary value {v} outside [0, 2**{h})")
    middle = element_columns(connector_value(v1, v2, h), h)
    return Pattern.from_columns(p1.columns() + middle + p2.columns())


# decrementing counter ----------------------------------------------------------

def half_subtractor_counter(bits: int = 4, start: int | None = None, width: int = 4):
    """Four-type decrementing counter: each column is the previous minus one.

    Tiles compute ``west - south``: east = west xor borrow-in, north =
    borrow-out. Red marks an output bit of 1, Blue an output bit of 0. The
    seed writes ``start`` (default all ones) down column 0 and feeds a borrow
    of 1 into every column from row 0.

    Returns ``(tileset, seed, width, height)``.
    """
    if start is None:
        start = 2**bits - 1
    types = []
    for t in (0, 1):
        for b in (0, 1):
            out = t ^ b
            types.append(
                TileType(str(b & (1 - t)), str(b), str(out), str(t), "Red" if out else "Blue")
            )
    seed = SeedGlues(("1",) * width, tuple(str(bit(start, y)) for y in range(1, bits + 1)))
    return TileSet(types), seed, width, bits
