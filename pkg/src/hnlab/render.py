"""Deterministic SVG pictures of shadows on the slice diagram.

The horizontal axis carries the phase, decreasing from left to right;
vertical slices at integer phases are drawn as solid lines and labelled.
Extreme stable objects sit on the dashed top line; other stable objects
get a vertical slot from a stable hash of their identifier.  Coordinates
come from exact rational arithmetic (a taxicab angle proxy replaces the
true angle, which preserves order and integer slices), so the output is
byte-identical across platforms.
"""

from __future__ import annotations

import hashlib
from fractions import Fraction

from .charges import Phase
from .objects import FormalObject

UNIT = 240  # pixels per phase strip
MARGIN = 40
AXIS_Y = 200
EXTREME_Y = 60
BAND_TOP = 100
BAND_HEIGHT = 80


def _proxy(p: Phase) -> Fraction:
    """Monotone rational surrogate of the phase value.

    Agrees with the true value at quarter turns and at integers, and is
    strictly increasing, which is all the picture needs.
    """
    x, y = p.dir
    return p.shift + Fraction(y - 2 * min(x, 0), 2 * (abs(x) + y)) if y else p.shift + 1


def _slot(label) -> int:
    if label.kind == "extreme":
        return EXTREME_Y
    digest = hashlib.sha256(label.ident.encode("utf-8")).hexdigest()
    return BAND_TOP + int(digest[:8], 16) % BAND_HEIGHT


def _fmt(v: Fraction) -> str:
    return f"{float(v):.2f}"


def shadow_svg(x: FormalObject) -> str:
    """Deterministic SVG of the shadow of one formal object."""
    if not x.pieces:
        raise ValueError("empty object has no shadow")
    values = [_proxy(p.phase) for p in x.pieces]
    hi = values[0].__floor__() + 1
    lo = values[-1].__floor__()
    if values[-1] == lo:
        lo -= 1
    width = 2 * MARGIN + (hi - lo) * UNIT

    def px(v: Fraction) -> Fraction:
        # larger phase on the left
        return MARGIN + (hi - v) * UNIT

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="240" viewBox="0 0 {width} 240">',
        f'<rect width="{width}" height="240" fill="white"/>',
        f'<line x1="0" y1="{AXIS_Y}" x2="{width}" y2="{AXIS_Y}" '
        'stroke="black" stroke-width="1"/>',
        f'<line x1="0" y1="{EXTREME_Y}" x2="{width}" y2="{EXTREME_Y}" '
        'stroke="black" stroke-width="1" stroke-dasharray="6 4"/>',
    ]
    for n in range(lo, hi + 1):
        xpix = _fmt(px(Fraction(n)))
        lines.append(
            f'<line x1="{xpix}" y1="{EXTREME_Y - 20}" x2="{xpix}" '
            f'y2="{AXIS_Y}" stroke="black" stroke-width="2"/>'
        )
        lines.append(
            f'<text x="{xpix}" y="{AXIS_Y + 20}" text-anchor="middle" '
            f'font-family="monospace" font-size="14">{n}</text>'
        )
    points = []  # one representative per piece, for the connecting polyline
    dots = []
    for p, v in zip(x.pieces, values):
        xp = px(v)
        slots = sorted(_slot(lab) for lab, _ in p.jh.entries)
        for s in slots:
            dots.append((xp, s))
        points.append((xp, slots[0]))
    if len(points) > 1:
        path = " ".join(f"{_fmt(a)},{b}" for a, b in points)
        lines.append(
            f'<polyline points="{path}" fill="none" stroke="black" '
            'stroke-width="2"/>'
        )
    for a, b in dots:
        lines.append(f'<circle cx="{_fmt(a)}" cy="{b}" r="5" fill="black"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
