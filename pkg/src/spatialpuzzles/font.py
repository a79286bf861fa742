"""Embedded 8x8 monochrome glyphs for A-Z and 0-9, doubled to 16x16.

The character-recognition game splits the 16x16 bitmap into four 8x8
quadrant fragments; the rasterizer also uses these glyphs for letter tiles
and slot labels.
"""

from __future__ import annotations

import functools

_GLYPHS = {
    "A": (
        "..XXX...",
        ".XX.XX..",
        "XX...XX.",
        "XX...XX.",
        "XXXXXXX.",
        "XX...XX.",
        "XX...XX.",
        "........",
    ),
    "B": (
        "XXXXXX..",
        "XX...XX.",
        "XX...XX.",
        "XXXXXX..",
        "XX...XX.",
        "XX...XX.",
        "XXXXXX..",
        "........",
    ),
    "C": (
        ".XXXXX..",
        "XX...XX.",
        "XX......",
        "XX......",
        "XX......",
        "XX...XX.",
        ".XXXXX..",
        "........",
    ),
    "D": (
        "XXXXX...",
        "XX..XX..",
        "XX...XX.",
        "XX...XX.",
        "XX...XX.",
        "XX..XX..",
        "XXXXX...",
        "........",
    ),
    "E": (
        "XXXXXXX.",
        "XX......",
        "XX......",
        "XXXXXX..",
        "XX......",
        "XX......",
        "XXXXXXX.",
        "........",
    ),
    "F": (
        "XXXXXXX.",
        "XX......",
        "XX......",
        "XXXXXX..",
        "XX......",
        "XX......",
        "XX......",
        "........",
    ),
    "G": (
        ".XXXXX..",
        "XX...XX.",
        "XX......",
        "XX.XXXX.",
        "XX...XX.",
        "XX...XX.",
        ".XXXXX..",
        "........",
    ),
    "H": (
        "XX...XX.",
        "XX...XX.",
        "XX...XX.",
        "XXXXXXX.",
        "XX...XX.",
        "XX...XX.",
        "XX...XX.",
        "........",
    ),
    "I": (
        "XXXXXX..",
        "..XX....",
        "..XX....",
        "..XX....",
        "..XX....",
        "..XX....",
        "XXXXXX..",
        "........",
    ),
    "J": (
        "..XXXXX.",
        "....XX..",
        "....XX..",
        "....XX..",
        "XX..XX..",
        "XX..XX..",
        ".XXXX...",
        "........",
    ),
    "K": (
        "XX...XX.",
        "XX..XX..",
        "XX.XX...",
        "XXXX....",
        "XX.XX...",
        "XX..XX..",
        "XX...XX.",
        "........",
    ),
    "L": (
        "XX......",
        "XX......",
        "XX......",
        "XX......",
        "XX......",
        "XX......",
        "XXXXXXX.",
        "........",
    ),
    "M": (
        "XX...XX.",
        "XXX.XXX.",
        "XXXXXXX.",
        "XX.X.XX.",
        "XX...XX.",
        "XX...XX.",
        "XX...XX.",
        "........",
    ),
    "N": (
        "XX...XX.",
        "XXX..XX.",
        "XXXX.XX.",
        "XX.XXXX.",
        "XX..XXX.",
        "XX...XX.",
        "XX...XX.",
        "........",
    ),
    "O": (
        ".XXXXX..",
        "XX...XX.",
        "XX...XX.",
        "XX...XX.",
        "XX...XX.",
        "XX...XX.",
        ".XXXXX..",
        "........",
    ),
    "P": (
        "XXXXXX..",
        "XX...XX.",
        "XX...XX.",
        "XXXXXX..",
        "XX......",
        "XX......",
        "XX......",
        "........",
    ),
    "Q": (
        ".XXXXX..",
        "XX...XX.",
        "XX...XX.",
        "XX...XX.",
        "XX.X.XX.",
        "XX..XX..",
        ".XXX.XX.",
        "........",
    ),
    "R": (
        "XXXXXX..",
        "XX...XX.",
        "XX...XX.",
        "XXXXXX..",
        "XX.XX...",
        "XX..XX..",
        "XX...XX.",
        "........",
    ),
    "S": (
        ".XXXXXX.",
        "XX......",
        "XX......",
        ".XXXXX..",
        "......XX",
        "......XX",
        "XXXXXX..",
        "........",
    ),
    "T": (
        "XXXXXX..",
        "..XX....",
        "..XX....",
        "..XX....",
        "..XX....",
        "..XX....",
        "..XX....",
        "........",
    ),
    "U": (
        "XX...XX.",
        "XX...XX.",
        "XX...XX.",
        "XX...XX.",
        "XX...XX.",
        "XX...XX.",
        ".XXXXX..",
        "........",
    ),
    "V": (
        "XX...XX.",
        "XX...XX.",
        "XX...XX.",
        "XX...XX.",
        ".XX.XX..",
        ".XX.XX..",
        "..XXX...",
        "........",
    ),
    "W": (
        "XX...XX.",
        "XX...XX.",
        "XX...XX.",
        "XX.X.XX.",
        "XXXXXXX.",
        "XXX.XXX.",
        "XX...XX.",
        "........",
    ),
    "X": (
        "XX...XX.",
        ".XX.XX..",
        "..XXX...",
        "..XXX...",
        ".XX.XX..",
        "XX...XX.",
        "XX...XX.",
        "........",
    ),
    "Y": (
        "XX...XX.",
        ".XX.XX..",
        "..XXX...",
        "..XX....",
        "..XX....",
        "..XX....",
        "..XX....",
        "........",
    ),
    "Z": (
        "XXXXXXX.",
        "....XX..",
        "...XX...",
        "..XX....",
        ".XX.....",
        "XX......",
        "XXXXXXX.",
        "........",
    ),
    "0": (
        ".XXXXX..",
        "XX...XX.",
        "XX..XXX.",
        "XX.X.XX.",
        "XXX..XX.",
        "XX...XX.",
        ".XXXXX..",
        "........",
    ),
    "1": (
        "..XX....",
        ".XXX....",
        "..XX....",
        "..XX....",
        "..XX....",
        "..XX....",
        "XXXXXX..",
        "........",
    ),
    "2": (
        ".XXXXX..",
        "XX...XX.",
        ".....XX.",
        "...XXX..",
        "..XX....",
        ".XX.....",
        "XXXXXXX.",
        "........",
    ),
    "3": (
        "XXXXXX..",
        ".....XX.",
        ".....XX.",
        "..XXXX..",
        ".....XX.",
        ".....XX.",
        "XXXXXX..",
        "........",
    ),
    "4": (
        "...XXX..",
        "..XXXX..",
        ".XX.XX..",
        "XX..XX..",
        "XXXXXXX.",
        "....XX..",
        "....XX..",
        "........",
    ),
    "5": (
        "XXXXXXX.",
        "XX......",
        "XXXXXX..",
        ".....XX.",
        ".....XX.",
        "XX...XX.",
        ".XXXXX..",
        "........",
    ),
    "6": (
        ".XXXXX..",
        "XX......",
        "XX......",
        "XXXXXX..",
        "XX...XX.",
        "XX...XX.",
        ".XXXXX..",
        "........",
    ),
    "7": (
        "XXXXXXX.",
        ".....XX.",
        "....XX..",
        "...XX...",
        "..XX....",
        "..XX....",
        "..XX....",
        "........",
    ),
    "8": (
        ".XXXXX..",
        "XX...XX.",
        "XX...XX.",
        ".XXXXX..",
        "XX...XX.",
        "XX...XX.",
        ".XXXXX..",
        "........",
    ),
    "9": (
        ".XXXXX..",
        "XX...XX.",
        "XX...XX.",
        ".XXXXXX.",
        ".....XX.",
        ".....XX.",
        ".XXXXX..",
        "........",
    ),
}

GLYPH_SET = "".join(sorted(_GLYPHS))  # digits first, then A-Z


@functools.lru_cache(maxsize=64)
def glyph8(ch: str) -> tuple:
    """8x8 bitmap as a tuple of 8 rows, each a tuple of 0/1."""
    rows = _GLYPHS[ch]
    return tuple(tuple(1 if px == "X" else 0 for px in row) for row in rows)


@functools.lru_cache(maxsize=64)
def glyph16(ch: str) -> tuple:
    """16x16 bitmap: the 8x8 glyph pixel-doubled."""
    small = glyph8(ch)
    out = []
    for row in small:
        doubled = tuple(v for px in row for v in (px, px))
        out.append(doubled)
        out.append(doubled)
    return tuple(out)


def glyph_quadrant(ch: str, quadrant: int) -> tuple:
    """One 8x8 quadrant of the 16x16 glyph, row-major quadrant order."""
    big = glyph16(ch)
    r0 = (quadrant // 2) * 8
    c0 = (quadrant % 2) * 8
    return tuple(tuple(big[r0 + r][c0 + c] for c in range(8)) for r in range(8))


def rotate_bitmap(bitmap: tuple, degrees: int) -> tuple:
    """Rotate a square bitmap counterclockwise by a multiple of 90 degrees."""
    n = len(bitmap)
    out = bitmap
    for _ in range((degrees // 90) % 4):
        out = tuple(tuple(out[r][n - 1 - c] for r in range(n)) for c in range(n))
    return out
