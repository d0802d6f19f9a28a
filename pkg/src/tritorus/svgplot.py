"""SVG rendering of the fundamental domain [0, 2*pi)^2 and its loci."""

from __future__ import annotations

import math
from typing import Iterable, Optional

import numpy as np

from .measure import Region, region_mask
from .torus import LocusId

TWO_PI = 2.0 * math.pi

# (offset point, primitive direction); the locus is offset + t*direction mod 2*pi.
_LOCUS_LINES: dict[LocusId, tuple[tuple[float, float], tuple[int, int]]] = {
    LocusId.D_A: ((0.0, 0.0), (1, 0)),
    LocusId.D_B: ((0.0, 0.0), (0, 1)),
    LocusId.D_C: ((0.0, 0.0), (1, 1)),
    LocusId.I_A: ((0.0, 0.0), (1, 2)),
    LocusId.I_B: ((0.0, 0.0), (2, 1)),
    LocusId.I_C: ((0.0, 0.0), (1, -1)),
    LocusId.R_A: ((0.0, math.pi), (1, 0)),
    LocusId.R_B: ((math.pi, 0.0), (0, 1)),
    LocusId.R_C: ((0.0, math.pi), (1, 1)),
}

_ANTI_LOCUS_LINES: dict[LocusId, tuple[tuple[float, float], tuple[int, int]]] = {
    LocusId.IPERP_A: ((0.0, 0.0), (2, -1)),
    LocusId.IPERP_B: ((0.0, 0.0), (1, -2)),
    LocusId.ANTI_RIGHT: ((0.0, math.pi), (1, -1)),
}

# Torsion points of order 1, 2, 3 and 4 (identity, degenerate isosceles,
# equilateral pair, right isosceles six).
_TORSION_POINTS = (
    (0.0, 0.0),
    (2 * math.pi / 3, 4 * math.pi / 3),
    (4 * math.pi / 3, 2 * math.pi / 3),
    (math.pi, 0.0),
    (0.0, math.pi),
    (math.pi, math.pi),
    (math.pi / 2, math.pi),
    (3 * math.pi / 2, math.pi),
    (math.pi, math.pi / 2),
    (math.pi, 3 * math.pi / 2),
    (math.pi / 2, 3 * math.pi / 2),
    (3 * math.pi / 2, math.pi / 2),
)

_LOCUS_STYLE = {
    "D": "stroke:#333333;stroke-width:2",
    "I": "stroke:#1f77b4;stroke-width:1.5",
    "R": "stroke:#d62728;stroke-width:1.5",
    "X": "stroke:#9467bd;stroke-width:1;stroke-dasharray:4 3",
}


def _segments(offset: tuple[float, float], direction: tuple[int, int]):
    """Split the wrapped line into straight segments inside the square."""
    dx, dy = direction
    # Parameter values where a coordinate hits a multiple of 2*pi.
    breaks = {0.0, TWO_PI}
    for comp, d in ((offset[0], dx), (offset[1], dy)):
        if d == 0:
            continue
        # all t in (0, 2*pi) with comp + t*d = k*2*pi
        k_lo = math.floor(min(comp, comp + d * TWO_PI) / TWO_PI)
        k_hi = math.ceil(max(comp, comp + d * TWO_PI) / TWO_PI)
        for k in range(k_lo, k_hi + 1):
            t = (k * TWO_PI - comp) / d
            if 0.0 < t < TWO_PI:
                breaks.add(t)
    ts = sorted(breaks)
    for t0, t1 in zip(ts, ts[1:]):
        mid = 0.5 * (t0 + t1)
        mx = (offset[0] + mid * dx) % TWO_PI
        my = (offset[1] + mid * dy) % TWO_PI
        half = 0.5 * (t1 - t0)
        yield (
            (mx - half * dx, my - half * dy),
            (mx + half * dx, my + half * dy),
        )


class SvgCanvas:
    def __init__(self, size: int = 640, margin: int = 30):
        self.size = size
        self.margin = margin
        self.scale = (size - 2 * margin) / TWO_PI
        self.body: list[str] = []

    def xy(self, p: tuple[float, float]) -> tuple[float, float]:
        # y axis points up in the mathematical picture
        x = self.margin + p[0] * self.scale
        y = self.size - self.margin - p[1] * self.scale
        return (x, y)

    def fmt(self, p: tuple[float, float]) -> str:
        x, y = self.xy(p)
        return f"{x:.3f} {y:.3f}"

    def add(self, element: str) -> None:
        self.body.append(element)

    def document(self) -> str:
        head = (
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{self.size}" '
            f'height="{self.size}" viewBox="0 0 {self.size} {self.size}">'
        )
        return "\n".join([head, *self.body, "</svg>"]) + "\n"


def render_fundamental_domain(
    samples: Optional[np.ndarray] = None,
    include_anti: bool = False,
    size: int = 640,
) -> str:
    """Render the square, orientation regions, loci, torsion points, samples."""
    cv = SvgCanvas(size=size)

    # Orientation regions: positive above the diagonal, negative below.
    pos_pts = " ".join(cv.fmt(p) for p in [(0, 0), (0, TWO_PI), (TWO_PI, TWO_PI)])
    neg_pts = " ".join(cv.fmt(p) for p in [(0, 0), (TWO_PI, 0), (TWO_PI, TWO_PI)])
    cv.add(f'<polygon class="region-positive" points="{pos_pts}" style="fill:#fff3b0"/>')
    cv.add(f'<polygon class="region-negative" points="{neg_pts}" style="fill:#d9d9d9"/>')

    if samples is not None and len(samples):
        obt = region_mask(samples, Region.OBTUSE)
        acu = region_mask(samples, Region.ACUTE)
        for (x, y), is_obt, is_acu in zip(samples, obt, acu):
            cls = "obtuse" if is_obt else ("acute" if is_acu else "boundary")
            color = {"obtuse": "#d62728", "acute": "#2ca02c", "boundary": "#000000"}[cls]
            px, py = cv.xy((x, y))
            cv.add(
                f'<circle class="sample {cls}" cx="{px:.3f}" cy="{py:.3f}" '
                f'r="1.2" style="fill:{color};fill-opacity:0.5"/>'
            )

    lines = dict(_LOCUS_LINES)
    if include_anti:
        lines.update(_ANTI_LOCUS_LINES)
    for locus, (offset, direction) in lines.items():
        family = "X" if locus in _ANTI_LOCUS_LINES else locus.value[0]
        parts = [
            f"M {cv.fmt(a)} L {cv.fmt(b)}" for a, b in _segments(offset, direction)
        ]
        cv.add(
            f'<path class="locus" id="locus-{locus.value}" d="{" ".join(parts)}" '
            f'style="fill:none;{_LOCUS_STYLE[family]}"/>'
        )

    # Domain border drawn on top of the regions.
    x0, y0 = cv.xy((0.0, TWO_PI))
    side = TWO_PI * cv.scale
    cv.add(
        f'<rect class="border" x="{x0:.3f}" y="{y0:.3f}" width="{side:.3f}" '
        f'height="{side:.3f}" style="fill:none;stroke:#000000;stroke-width:2"/>'
    )

    for p in _TORSION_POINTS:
        px, py = cv.xy(p)
        cv.add(
            f'<circle class="torsion" cx="{px:.3f}" cy="{py:.3f}" r="4" '
            f'style="fill:#000000"/>'
        )

    return cv.document()
