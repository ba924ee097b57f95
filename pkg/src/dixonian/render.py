"""Grid sampling and domain-colored output for sm, cm, and the lattice wp.

Output is binary PPM (P6, maxval 255): hue encodes phase (hue angle =
arg/2pi), lightness grows with log(1 + |v|) mapped into [0.15, 0.95]. Pole
pixels are pure white, values of magnitude <= 1e-9 pure black. Identical
grids color to identical bytes regardless of worker count.
"""

from __future__ import annotations

import colorsys
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .evaluator import EllipticValue, sm_cm, wp

MAX_PIXELS = 4096 * 4096

ZERO_CLIP = 1e-9
_L_MIN, _L_MAX = 0.15, 0.95
_TWO_PI = 2.0 * math.pi

SELECTORS = ("sm", "cm", "wp")


@dataclass(frozen=True)
class Region:
    """Axis-aligned rectangle of nx * ny sample points, endpoints included."""

    center: complex
    width: float
    height: float
    nx: int
    ny: int

    def __post_init__(self):
        if not (self.width > 0.0 and self.height > 0.0):
            raise ValueError("width and height must be positive")
        if self.nx < 1 or self.ny < 1:
            raise ValueError("nx and ny must be at least 1")
        if self.nx * self.ny > MAX_PIXELS:
            raise ValueError(f"grid exceeds the {MAX_PIXELS} sample cap")

    def xs(self) -> list[float]:
        return self._axis(self.center.real, self.width, self.nx)

    def ys(self) -> list[float]:
        return self._axis(self.center.imag, self.height, self.ny)

    @staticmethod
    def _axis(mid: float, span: float, count: int) -> list[float]:
        if count == 1:
            return [mid]
        step = span / (count - 1)
        return [mid - span / 2.0 + i * step for i in range(count)]


@dataclass(frozen=True)
class ValueGrid:
    """Row-major samples: values[j * nx + i] is the point (xs[i], ys[j])."""

    region: Region
    values: tuple[EllipticValue, ...]


def sample_grid(region: Region, selector: str, workers: int = 1) -> ValueGrid:
    """Evaluate the selected function over the region.

    Rows are independent; with workers > 1 they are computed on a thread
    pool and reassembled in order, so the result never depends on schedule.
    """
    if selector not in SELECTORS:
        raise ValueError(f"selector must be one of {SELECTORS}, got {selector!r}")
    if selector == "wp":
        fn = wp
    elif selector == "sm":
        fn = lambda z: sm_cm(z)[0]
    else:
        fn = lambda z: sm_cm(z)[1]
    xs = region.xs()

    def row(y: float) -> list[EllipticValue]:
        return [fn(complex(x, y)) for x in xs]

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(row, region.ys()))
    else:
        rows = [row(y) for y in region.ys()]
    return ValueGrid(region, tuple(v for r in rows for v in r))


def _pixel(v: EllipticValue) -> tuple[int, int, int]:
    if v.is_pole:
        return 255, 255, 255
    mag = abs(v.value)
    if mag <= ZERO_CLIP:
        return 0, 0, 0
    hue = (math.atan2(v.value.imag, v.value.real) / _TWO_PI) % 1.0
    x = math.log1p(mag)
    light = _L_MIN + (_L_MAX - _L_MIN) * x / (1.0 + x)
    r, g, b = colorsys.hls_to_rgb(hue, light, 1.0)
    return int(255.0 * r + 0.5), int(255.0 * g + 0.5), int(255.0 * b + 0.5)


def domain_color(grid: ValueGrid) -> bytes:
    """Render the grid as a binary PPM image (P6, maxval 255)."""
    if not grid.values:
        raise ValueError("empty grid")
    header = f"P6\n{grid.region.nx} {grid.region.ny}\n255\n".encode("ascii")
    body = bytearray()
    for v in grid.values:
        body.extend(_pixel(v))
    return header + bytes(body)


def grid_to_csv(grid: ValueGrid) -> str:
    """Numeric dump, one "re,im,s_re,s_im,pole" line per sample point.

    17 significant digits; pole rows carry nan values and pole = 1.
    """
    xs, ys = grid.region.xs(), grid.region.ys()
    nx = grid.region.nx
    lines = ["re,im,s_re,s_im,pole"]
    for idx, v in enumerate(grid.values):
        z = complex(xs[idx % nx], ys[idx // nx])
        if v.is_pole:
            lines.append(f"{z.real:.17g},{z.imag:.17g},nan,nan,1")
        else:
            lines.append(
                f"{z.real:.17g},{z.imag:.17g},{v.value.real:.17g},{v.value.imag:.17g},0"
            )
    return "\n".join(lines) + "\n"
