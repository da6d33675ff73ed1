"""ASCII and binary PPM renderings of patterns and assemblies."""

from __future__ import annotations

from typing import Mapping

import numpy as np

from .tiles import Assembly, Pattern

# color -> ((r, g, b), ascii token)
DEFAULT_PALETTE: dict[str, tuple[tuple[int, int, int], str]] = {
    "Black": ((0, 0, 0), "B"),
    "White": ((255, 255, 255), "W"),
    "el-Black": ((70, 70, 70), "b"),
    "el-White": ((200, 200, 200), "w"),
    "CarryBlue": ((40, 90, 220), "c"),
    "RAB": ((120, 20, 20), "R"),
    "RAW": ((250, 150, 150), "r"),
    "UAB": ((20, 100, 40), "U"),
    "UAW": ((150, 240, 170), "u"),
    "G1": ((0, 160, 0), "1"),
    "G2": ((60, 200, 60), "2"),
    "G3": ((110, 220, 110), "3"),
    "G4": ((170, 240, 170), "4"),
    "P1": ((90, 0, 120), "p"),
    "P2": ((110, 20, 140), "q"),
    "P3": ((130, 40, 160), "s"),
    "P4": ((150, 60, 180), "t"),
    "P5": ((170, 80, 200), "v"),
    "P6": ((190, 100, 210), "x"),
    "P7": ((205, 120, 225), "y"),
    "P8": ((220, 140, 240), "z"),
    "R1": ((200, 30, 30), "A"),
    "R2": ((210, 50, 40), "C"),
    "R3": ((220, 70, 50), "D"),
    "R4": ((230, 90, 60), "E"),
    "R5": ((235, 110, 70), "F"),
    "R6": ((240, 130, 80), "G"),
    "R7": ((245, 150, 90), "H"),
    "R8": ((250, 170, 100), "I"),
}


def merge_palette(overrides: Mapping[str, tuple[tuple[int, int, int], str | None]] | None):
    """Default palette updated with parsed palette-file entries."""
    pal = dict(DEFAULT_PALETTE)
    for color, (rgb, token) in (overrides or {}).items():
        if token is None:
            token = pal[color][1] if color in pal else "?"
        pal[color] = (tuple(rgb), token)
    return pal


def _colors(obj: Assembly | Pattern) -> Pattern:
    if isinstance(obj, Assembly):
        return obj.color_pattern()
    return obj


def _check(p: Pattern, palette) -> None:
    missing = sorted(p.colors() - set(palette))
    if missing:
        raise KeyError(f"no palette entry for color(s): {', '.join(missing)}")


def render_ascii(obj: Assembly | Pattern, palette=None) -> bytes:
    """One line per row, top row first, one token per cell."""
    palette = palette or DEFAULT_PALETTE
    p = _colors(obj)
    _check(p, palette)
    lines = ["".join(palette[c][1] for c in row) for row in reversed(p.rows)]
    return ("\n".join(lines) + "\n").encode()


def render_ppm(obj: Assembly | Pattern, palette=None, scale: int = 1) -> bytes:
    """Binary P6 image, ``scale`` x ``scale`` pixels per cell."""
    if scale < 1:
        raise ValueError("scale must be a positive integer")
    palette = palette or DEFAULT_PALETTE
    p = _colors(obj)
    _check(p, palette)
    img = np.array(
        [[palette[c][0] for c in row] for row in reversed(p.rows)], dtype=np.uint8
    )
    img = img.repeat(scale, axis=0).repeat(scale, axis=1)
    header = f"P6\n{img.shape[1]} {img.shape[0]}\n255\n".encode()
    return header + img.tobytes()


def render(obj: Assembly | Pattern, format: str = "ascii", palette=None, scale: int = 1) -> bytes:
    if format == "ascii":
        return render_ascii(obj, palette)
    if format == "ppm":
        return render_ppm(obj, palette, scale)
    raise ValueError(f"unknown render format {format!r}")
