#!/usr/bin/env python3
"""Render a small gallery of phase-plane slices to PPM files.

The real-plane view shows the four escaping components as a period-4 color
pinwheel; the zplane views cut through one component at fixed w and expose
the saturated (black) blow-up region.
"""

import argparse
import pathlib
import time

from henonlab import ClassifyConfig, ConeSchedule, MapParams, RenderJob, SliceSpec, render, write_ppm


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--delta", type=float, default=3.0)
    parser.add_argument("--res", type=int, default=400)
    parser.add_argument("--budget", type=int, default=100)
    parser.add_argument("--outdir", default="gallery")
    parser.add_argument("--workers", type=int, default=1)
    args = parser.parse_args()

    outdir = pathlib.Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)

    params = MapParams(args.delta)
    cfg = ClassifyConfig(
        schedule=ConeSchedule.for_delta(args.delta),
        budget=args.budget,
        compute_h1=False,
    )
    resolution = (args.res, args.res)
    jobs = {
        "real_plane": SliceSpec("real", (0.0, 0.0), (60.0, 60.0), resolution),
        "real_plane_core": SliceSpec("real", (0.0, 0.0), (6.0, 6.0), resolution),
        "zplane_w2": SliceSpec(
            "zplane", (0.0, 0.0), (8.0, 8.0), resolution, fixed_value=2 + 0j
        ),
        "zplane_w20": SliceSpec(
            "zplane", (0.0, 0.0), (60.0, 60.0), resolution, fixed_value=20 + 0j
        ),
    }
    for name, spec in jobs.items():
        t0 = time.perf_counter()
        img = render(RenderJob(spec, cfg, params, shading=0.97), workers=args.workers)
        path = outdir / f"{name}_delta{args.delta:g}.ppm"
        count = write_ppm(img, path)
        print(f"{path}  {img.width}x{img.height}  {count} bytes  {time.perf_counter() - t0:.1f}s")


if __name__ == "__main__":
    main()
