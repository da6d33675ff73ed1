"""Core value types for rectilinear tile assembly: tile types, tile sets,
patterns, seeds and assemblies, plus uniqueness checks and canonical forms.

Glues and colors are plain strings. Two glues match iff they are equal;
colors never take part in matching.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Mapping, Sequence

Glue = str
Color = str
Cell = tuple[int, int]

SIDES = ("north", "south", "east", "west")


@dataclass(frozen=True, order=True)
class TileType:
    north: Glue
    south: Glue
    east: Glue
    west: Glue
    color: Color

    def renamed(self, mapping: Mapping[Glue, Glue]) -> "TileType":
        return TileType(
            mapping.get(self.north, self.north),
            mapping.get(self.south, self.south),
            mapping.get(self.east, self.east),
            mapping.get(self.west, self.west),
            self.color,
        )


class AmbiguousLookup(ValueError):
    """Raised when more than one tile type has the requested (south, west) pair."""


class TileSet:
    """An ordered collection of distinct tile types.

    Clashing types (same south and west glue) are allowed at construction so
    that broken systems can still be inspected; :func:`check_uniqueness`
    reports them.
    """

    __slots__ = ("_types", "_index")

    def __init__(self, types: Iterable[TileType] = ()):
        types = tuple(types)
        seen = set()
        for t in types:
            if not isinstance(t, TileType):
                raise TypeError(f"not a TileType: {t!r}")
            if t in seen:
                raise ValueError(f"duplicate tile type {t}")
            seen.add(t)
        self._types = types
        index: dict[tuple[Glue, Glue], list[TileType]] = {}
        for t in types:
            index.setdefault((t.south, t.west), []).append(t)
        self._index = index

    @property
    def types(self) -> tuple[TileType, ...]:
        return self._types

    @property
    def size(self) -> int:
        return len(self._types)

    def __len__(self) -> int:
        return len(self._types)

    def __iter__(self) -> Iterator[TileType]:
        return iter(self._types)

    def __getitem__(self, i: int) -> TileType:
        return self._types[i]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, TileSet) and self._types == other._types

    def __hash__(self) -> int:
        return hash(self._types)

    def __repr__(self) -> str:
        return f"TileSet({len(self._types)} types)"

    def colors(self) -> set[Color]:
        return {t.color for t in self._types}

    def glues(self) -> set[Glue]:
        return {getattr(t, s) for t in self._types for s in SIDES}

    def candidates(self, south: Glue, west: Glue) -> list[TileType]:
        return self._index.get((south, west), [])

    def without(self, t: TileType) -> "TileSet":
        return TileSet(u for u in self._types if u != t)

    def renamed(self, mapping: Mapping[Glue, Glue]) -> "TileSet":
        return TileSet(t.renamed(mapping) for t in self._types)


@dataclass(frozen=True)
class Pattern:
    """A rectangular color pattern.

    ``rows[y - 1][x - 1]`` is the color at cell ``(x, y)``; ``(1, 1)`` is the
    south-west corner and ``y`` grows northward.
    """

    rows: tuple[tuple[Color, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        if not rows or not rows[0]:
            raise ValueError("pattern must be non-empty")
        if any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("pattern rows have unequal lengths")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_top_rows(cls, rows: Sequence[Sequence[Color]]) -> "Pattern":
        """Build from rows listed top (north) row first."""
        return cls(tuple(tuple(r) for r in reversed(rows)))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[Color]]) -> "Pattern":
        """Build from columns listed west to east, each south to north."""
        height = len(columns[0])
        return cls(tuple(tuple(col[y] for col in columns) for y in range(height)))

    @property
    def width(self) -> int:
        return len(self.rows[0])

    @property
    def height(self) -> int:
        return len(self.rows)

    def __getitem__(self, cell: Cell) -> Color:
        x, y = cell
        if not (1 <= x <= self.width and 1 <= y <= self.height):
            raise IndexError(f"cell {cell} outside {self.width}x{self.height} pattern")
        return self.rows[y - 1][x - 1]

    def column(self, x: int) -> tuple[Color, ...]:
        return tuple(r[x - 1] for r in self.rows)

    def columns(self) -> list[tuple[Color, ...]]:
        return [self.column(x) for x in range(1, self.width + 1)]

    def cells(self) -> Iterator[Cell]:
        """Cells in row-major order (y outer, x inner)."""
        for y in range(1, self.height + 1):
            for x in range(1, self.width + 1):
                yield (x, y)

    def colors(self) -> set[Color]:
        return {c for r in self.rows for c in r}


@dataclass(frozen=True)
class SeedGlues:
    """Glues exposed by an L-shaped seed.

    ``north[x - 1]`` sits above seed tile ``(x, 0)``; ``east[y - 1]`` sits to
    the right of seed tile ``(0, y)``.
    """

    north: tuple[Glue, ...]
    east: tuple[Glue, ...]

    def __post_init__(self):
        object.__setattr__(self, "north", tuple(self.north))
        object.__setattr__(self, "east", tuple(self.east))

    @property
    def width(self) -> int:
        return len(self.north)

    @property
    def height(self) -> int:
        return len(self.east)

    def renamed(self, mapping: Mapping[Glue, Glue]) -> "SeedGlues":
        return SeedGlues(
            tuple(mapping.get(g, g) for g in self.north),
            tuple(mapping.get(g, g) for g in self.east),
        )


@dataclass
class Assembly:
    """Tiles placed on a ``width`` x ``height`` rectangle, possibly partial."""

    width: int
    height: int
    placed: dict[Cell, TileType] = field(default_factory=dict)

    def __getitem__(self, cell: Cell) -> TileType:
        return self.placed[cell]

    def __contains__(self, cell: Cell) -> bool:
        return cell in self.placed

    @property
    def is_complete(self) -> bool:
        return len(self.placed) == self.width * self.height

    def color_pattern(self) -> Pattern:
        if not self.is_complete:
            raise ValueError("assembly is not total")
        return Pattern(
            tuple(
                tuple(self.placed[(x, y)].color for x in range(1, self.width + 1))
                for y in range(1, self.height + 1)
            )
        )

    def types_used(self) -> set[TileType]:
        return set(self.placed.values())

    def mismatched_edges(self) -> list[tuple[Cell, Cell]]:
        """Adjacent placed pairs whose shared-edge glues disagree."""
        bad = []
        for (x, y), t in self.placed.items():
            right = self.placed.get((x + 1, y))
            if right is not None and right.west != t.east:
                bad.append(((x, y), (x + 1, y)))
            above = self.placed.get((x, y + 1))
            if above is not None and above.south != t.north:
                bad.append(((x, y), (x, y + 1)))
        return bad


def check_uniqueness(ts: TileSet) -> list[tuple[int, int]]:
    """Index pairs of tile types that clash (share south and west glues)."""
    clashes = []
    for i, j in combinations(range(len(ts)), 2):
        if ts[i].south == ts[j].south and ts[i].west == ts[j].west:
            clashes.append((i, j))
    return clashes


def lookup_tile(ts: TileSet, south: Glue, west: Glue) -> TileType | None:
    found = ts.candidates(south, west)
    if len(found) > 1:
        raise AmbiguousLookup(f"{len(found)} tile types share (south={south}, west={west})")
    return found[0] if found else None


def rename_glues(ts: TileSet, mapping: Mapping[Glue, Glue]) -> TileSet:
    """Apply a glue renaming; ``mapping`` must be injective on the glues used."""
    images = [mapping.get(g, g) for g in ts.glues()]
    if len(set(images)) != len(images):
        raise ValueError("glue renaming is not injective")
    return ts.renamed(mapping)


# Canonical form -------------------------------------------------------------
#
# Types are ordered to minimise an encoding in which glues are numbered by
# first appearance over the field sequence south, west, north, east. The exact
# minimum over all orderings is found by depth-first search with prefix
# pruning; a colour-refinement pass over types and glues cuts the ties that
# have to be explored.

_FIELDS = ("south", "west", "north", "east")


def _refine(ts: TileSet) -> list[int]:
    """Isomorphism-invariant rank for each type (Weisfeiler-Lehman style)."""
    types = ts.types

    def shape(t: TileType) -> tuple:
        gs = [getattr(t, f) for f in _FIELDS]
        return (t.color, tuple(gs.index(g) for g in gs))

    labels = _ranks([shape(t) for t in types])
    n_classes = len(set(labels))
    while True:
        occ: dict[Glue, list] = {}
        for t, lab in zip(types, labels):
            for k, f in enumerate(_FIELDS):
                occ.setdefault(getattr(t, f), []).append((lab, k))
        glue_lab = {g: tuple(sorted(v)) for g, v in occ.items()}
        sigs = [
            (lab, tuple(glue_lab[getattr(t, f)] for f in _FIELDS))
            for t, lab in zip(types, labels)
        ]
        new = _ranks(sigs)
        if len(set(new)) == n_classes:
            return labels
        labels, n_classes = new, len(set(new))


def _ranks(keys: list) -> list[int]:
    order = {k: i for i, k in enumerate(sorted(set(keys)))}
    return [order[k] for k in keys]


def canonical_form(ts: TileSet) -> tuple[TileSet, dict[Glue, Glue]]:
    """Canonical representative of ``ts`` and the glue renaming that produces it."""
    types = ts.types
    n = len(types)
    if n == 0:
        return TileSet(), {}
    rank = _refine(ts)
    best: list = [None, None]  # encoding, order

    def encode(t: TileType, numbering: dict[Glue, int]) -> tuple:
        local = dict(numbering)
        code = []
        for f in _FIELDS:
            g = getattr(t, f)
            if g not in local:
                local[g] = len(local)
            code.append(local[g])
        return tuple(code)

    def extend(numbering: dict[Glue, int], t: TileType) -> dict[Glue, int]:
        numbering = dict(numbering)
        for f in _FIELDS:
            g = getattr(t, f)
            if g not in numbering:
                numbering[g] = len(numbering)
        return numbering

    def search(prefix: list, order: list[int], remaining: list[int], numbering):
        depth = len(prefix)
        if best[0] is not None and tuple(prefix) > best[0][:depth]:
            return
        if not remaining:
            enc = tuple(prefix)
            if best[0] is None or enc < best[0]:
                best[0], best[1] = enc, list(order)
            return
        scored = [(rank[i], types[i].color, encode(types[i], numbering), i) for i in remaining]
        lead = min(s[:3] for s in scored)
        if best[0] is not None and lead > best[0][depth]:
            return
        for *key, i in scored:
            if tuple(key) != lead:
                continue
            rest = [j for j in remaining if j != i]
            search(prefix + [lead], order + [i], rest, extend(numbering, types[i]))

    search([], [], list(range(n)), {})
    order = best[1]
    numbering: dict[Glue, int] = {}
    for i in order:
        numbering = extend(numbering, types[i])
    mapping = {g: f"g{k}" for g, k in numbering.items()}
    return TileSet(types[i].renamed(mapping) for i in order), mapping


def canonicalize(ts: TileSet) -> TileSet:
    return canonical_form(ts)[0]


def tilesets_isomorphic(a: TileSet, b: TileSet) -> bool:
    if len(a) != len(b) or sorted(t.color for t in a) != sorted(t.color for t in b):
        return False
    return canonicalize(a) == canonicalize(b)
