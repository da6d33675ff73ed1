"""Plain-text file formats for tile sets, patterns, seeds, instances and palettes.

Tile set: one type per line, ``color north south east west``.
Pattern: ``width height`` then ``height`` lines of color tokens, top row first.
Seed: ``north: g1 ... gW`` and ``east: g1 ... gH`` (east listed bottom to top).
Instance: target ``n`` on line 1, elements on line 2.
Palette: ``color=R,G,B[,token]`` per line.

Lines whose first non-blank character is ``#`` are comments in every format.
Parse errors raise :class:`FormatError` carrying the offending line number.
"""

from __future__ import annotations

from pathlib import Path

from .reduction import SubsetSumInstance
from .tiles import Pattern, SeedGlues, TileSet, TileType


class FormatError(ValueError):
    def __init__(self, message: str, line: int | None = None, source: str | None = None):
        self.line = line
        self.source = source
        where = ""
        if source:
            where += f"{source}:"
        if line is not None:
            where += f"{line}:"
        super().__init__(f"{where} {message}" if where else message)


def _content_lines(text: str):
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield no, line


def read_text(path: str | Path) -> str:
    return Path(path).read_text()


def _token(value: str, leading: bool = False) -> str:
    """Reject values that would not survive a write/read cycle."""
    if not value or any(c.isspace() for c in value):
        raise ValueError(f"token {value!r} is empty or contains whitespace")
    if leading and value.startswith("#"):
        raise ValueError(f"token {value!r} would start a comment line")
    return value


# tile sets -----------------------------------------------------------------

def parse_tileset(text: str, source: str | None = None) -> TileSet:
    types = []
    for no, line in _content_lines(text):
        tok = line.split()
        if len(tok) != 5:
            raise FormatError(f"expected 'color north south east west', got {len(tok)} tokens", no, source)
        color, n, s, e, w = tok
        types.append(TileType(north=n, south=s, east=e, west=w, color=color))
    try:
        return TileSet(types)
    except ValueError as exc:
        raise FormatError(str(exc), None, source) from exc


def format_tileset(ts: TileSet) -> str:
    return "".join(
        " ".join([_token(t.color, leading=True)] + [_token(g) for g in (t.north, t.south, t.east, t.west)]) + "\n"
        for t in ts
    )


# patterns ------------------------------------------------------------------

def parse_pattern(text: str, source: str | None = None) -> Pattern:
    lines = list(_content_lines(text))
    if not lines:
        raise FormatError("empty pattern file", None, source)
    no, header = lines[0]
    try:
        width, height = (int(v) for v in header.split())
    except ValueError:
        raise FormatError("header must be 'width height'", no, source) from None
    if width < 1 or height < 1:
        raise FormatError("width and height must be positive", no, source)
    body = lines[1:]
    if len(body) != height:
        raise FormatError(f"expected {height} rows, found {len(body)}", None, source)
    rows = []
    for no, line in body:
        tok = line.split()
        if len(tok) != width:
            raise FormatError(f"expected {width} colors, found {len(tok)}", no, source)
        rows.append(tok)
    return Pattern.from_top_rows(rows)


def format_pattern(p: Pattern) -> str:
    out = [f"{p.width} {p.height}\n"]
    for row in reversed(p.rows):
        out.append(" ".join(_token(c, leading=(x == 0)) for x, c in enumerate(row)) + "\n")
    return "".join(out)


# seeds ---------------------------------------------------------------------

def parse_seed(text: str, source: str | None = None) -> SeedGlues:
    found: dict[str, list[str]] = {}
    for no, line in _content_lines(text):
        key, sep, rest = line.partition(":")
        key = key.strip()
        if not sep or key not in ("north", "east"):
            raise FormatError("expected 'north: ...' or 'east: ...'", no, source)
        if key in found:
            raise FormatError(f"duplicate '{key}' line", no, source)
        found[key] = rest.split()
    for key in ("north", "east"):
        if key not in found:
            raise FormatError(f"missing '{key}' line", None, source)
        if not found[key]:
            raise FormatError(f"'{key}' line has no glues", None, source)
    return SeedGlues(tuple(found["north"]), tuple(found["east"]))


def format_seed(seed: SeedGlues) -> str:
    north = " ".join(_token(g) for g in seed.north)
    east = " ".join(_token(g) for g in seed.east)
    return f"north: {north}\neast: {east}\n"


# subset sum instances ------------------------------------------------------

def parse_instance(text: str, source: str | None = None) -> SubsetSumInstance:
    lines = list(_content_lines(text))
    if len(lines) != 2:
        raise FormatError("expected target on line 1 and elements on line 2", None, source)
    try:
        target = int(lines[0][1])
    except ValueError:
        raise FormatError("target must be an integer", lines[0][0], source) from None
    try:
        elements = tuple(int(v) for v in lines[1][1].split())
    except ValueError:
        raise FormatError("elements must be integers", lines[1][0], source) from None
    try:
        return SubsetSumInstance(elements, target)
    except ValueError as exc:
        raise FormatError(str(exc), None, source) from None


def format_instance(inst: SubsetSumInstance) -> str:
    return f"{inst.target}\n{' '.join(str(v) for v in inst.elements)}\n"


# palettes ------------------------------------------------------------------

def parse_palette(text: str, source: str | None = None) -> dict[str, tuple[tuple[int, int, int], str | None]]:
    """Map color -> ((r, g, b), token or None)."""
    out = {}
    for no, line in _content_lines(text):
        color, sep, rest = line.partition("=")
        parts = [p.strip() for p in rest.split(",")]
        if not sep or len(parts) not in (3, 4):
            raise FormatError("expected 'color=R,G,B[,token]'", no, source)
        try:
            rgb = tuple(int(v) for v in parts[:3])
        except ValueError:
            raise FormatError("RGB components must be integers", no, source) from None
        if any(not 0 <= v <= 255 for v in rgb):
            raise FormatError("RGB components must be in 0..255", no, source)
        token = parts[3] if len(parts) == 4 else None
        out[color.strip()] = (rgb, token)
    return out
