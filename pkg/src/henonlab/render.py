"""Deterministic tile-based rendering of plane slices to binary PPM images.

Pixels are classified independently, so tiles can be computed by any number
of workers; results are merged by tile index, never by completion order, and
the output bytes are identical for identical jobs regardless of parallelism.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import BinaryIO, Union

from .classify import ClassificationResult, ClassifyConfig, Status, classify
from .core import MapParams, Point
from .regions import QUADRANT_PATTERNS

__all__ = [
    "TILE_SIZE",
    "DEFAULT_PALETTE",
    "SliceSpec",
    "RenderJob",
    "ImageBuffer",
    "pixel_to_point",
    "classification_grid",
    "render",
    "write_ppm",
]

TILE_SIZE = 64

# Palette order: the four quadrant labels (++, -+, --, +-), then saturated,
# then exhausted.  Arbitrary but fixed for reproducibility.
DEFAULT_PALETTE = (
    (220, 60, 60),
    (60, 120, 220),
    (230, 180, 40),
    (60, 180, 90),
    (0, 0, 0),
    (128, 128, 128),
)


@dataclass(frozen=True, slots=True)
class SliceSpec:
    """A 2-real-dimensional slice of the phase space.

    mode "real": both coordinates real, axes Re z (rightward) by Re w (upward).
    mode "zplane": w pinned to fixed_value, axes Re z by Im z.
    """

    mode: str
    center: tuple[float, float]
    extent: tuple[float, float]
    resolution: tuple[int, int]
    fixed_value: complex = 0j

    def __post_init__(self) -> None:
        if self.mode not in ("real", "zplane"):
            raise ValueError(f"unknown slice mode {self.mode!r}")
        if self.extent[0] <= 0 or self.extent[1] <= 0:
            raise ValueError("extents must be positive")
        w, h = self.resolution
        if w < 1 or h < 1:
            raise ValueError("resolution must be positive")
        if w * h > 10**8:
            raise ValueError("resolution exceeds the 1e8 pixel cap")


@dataclass(frozen=True, slots=True)
class RenderJob:
    slice_spec: SliceSpec
    cfg: ClassifyConfig
    params: MapParams
    palette: tuple[tuple[int, int, int], ...] = DEFAULT_PALETTE
    shading: float = 1.0  # capture-step dimming base, in (0, 1]

    def __post_init__(self) -> None:
        if len(self.palette) != 6 or len(set(self.palette)) != 6:
            raise ValueError("palette must hold 6 distinct RGB triples")
        if not 0.0 < self.shading <= 1.0:
            raise ValueError("shading factor must lie in (0, 1]")


@dataclass(frozen=True, slots=True)
class ImageBuffer:
    width: int
    height: int
    data: bytes  # row-major RGB

    def __post_init__(self) -> None:
        if len(self.data) != 3 * self.width * self.height:
            raise ValueError("byte length must equal 3 * width * height")


def pixel_to_point(spec: SliceSpec, i: int, j: int) -> Point:
    """Map a pixel center to slice coordinates.

    Column i grows along the first axis, row j downward along the decreasing
    second axis.  Written so that the grid is exactly symmetric under the
    180-degree pixel rotation when the center is the origin.
    """
    w, h = spec.resolution
    if not (0 <= i < w and 0 <= j < h):
        raise ValueError(f"pixel ({i}, {j}) outside {w}x{h}")
    x = spec.center[0] + (i + 0.5 - w / 2) * (spec.extent[0] / w)
    y = spec.center[1] - (j + 0.5 - h / 2) * (spec.extent[1] / h)
    if spec.mode == "real":
        return Point(complex(x, 0.0), complex(y, 0.0))
    return Point(complex(x, y), spec.fixed_value)


def _pixel_color(
    result: ClassificationResult,
    palette: tuple[tuple[int, int, int], ...],
    shading: float,
) -> tuple[int, int, int]:
    if result.status is Status.CAPTURED:
        base = palette[QUADRANT_PATTERNS.index(result.label)]
        dim = shading**result.capture_step
        return (
            int(base[0] * dim + 0.5),
            int(base[1] * dim + 0.5),
            int(base[2] * dim + 0.5),
        )
    if result.status is Status.SATURATED:
        return palette[4]
    # BudgetExhausted and LeftS share the "exhausted" palette entry
    return palette[5]


def classification_grid(job: RenderJob) -> list[ClassificationResult]:
    """Row-major classification of every pixel center (analysis helper)."""
    w, h = job.slice_spec.resolution
    return [
        classify(pixel_to_point(job.slice_spec, i, j), job.cfg, job.params)
        for j in range(h)
        for i in range(w)
    ]


def _render_tile(job: RenderJob, tile: tuple[int, int, int, int]) -> bytes:
    x0, y0, x1, y1 = tile
    out = bytearray()
    for j in range(y0, y1):
        for i in range(x0, x1):
            result = classify(pixel_to_point(job.slice_spec, i, j), job.cfg, job.params)
            out += bytes(_pixel_color(result, job.palette, job.shading))
    return bytes(out)


def render(job: RenderJob, workers: int = 1) -> ImageBuffer:
    """Classify every pixel and color it by label, status and capture time.

    Tiles of TILE_SIZE x TILE_SIZE pixels are the parallel work unit; the
    merge by tile index is the only synchronization point.
    """
    w, h = job.slice_spec.resolution
    tiles = [
        (x0, y0, min(x0 + TILE_SIZE, w), min(y0 + TILE_SIZE, h))
        for y0 in range(0, h, TILE_SIZE)
        for x0 in range(0, w, TILE_SIZE)
    ]
    if workers <= 1:
        blocks = [_render_tile(job, t) for t in tiles]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            blocks = list(pool.map(lambda t: _render_tile(job, t), tiles))
    buf = bytearray(3 * w * h)
    for (x0, y0, x1, y1), block in zip(tiles, blocks):
        row_bytes = 3 * (x1 - x0)
        for j in range(y0, y1):
            offset = 3 * (j * w + x0)
            start = (j - y0) * row_bytes
            buf[offset : offset + row_bytes] = block[start : start + row_bytes]
    return ImageBuffer(w, h, bytes(buf))


def write_ppm(img: ImageBuffer, destination: Union[str, os.PathLike, BinaryIO]) -> int:
    """Write binary PPM (P6, maxval 255); returns the total bytes written."""
    payload = f"P6\n{img.width} {img.height}\n255\n".encode("ascii") + img.data
    if isinstance(destination, (str, os.PathLike)):
        with open(destination, "wb") as fh:
            fh.write(payload)
    else:
        destination.write(payload)
    return len(payload)
