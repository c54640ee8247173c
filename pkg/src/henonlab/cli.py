"""Command-line front end: orbit dumps, classification, verification, rendering.

Exit codes: 0 success, 2 usage or parse error, 3 point not captured,
4 output write failure.  Every command is deterministic given its flags
and seed.
"""

from __future__ import annotations

import argparse
import re
import sys
from typing import Sequence

from .classify import ClassifyConfig, Status, classify
from .core import MapParams, Point, iterate
from .regions import ConeSchedule, point_in_S
from .render import DEFAULT_PALETTE, RenderJob, SliceSpec, render, write_ppm
from .verify import (
    SUITE_NAMES,
    UnknownSuite,
    default_sampler,
    emit_report,
    run_suite,
)

__all__ = ["parse_complex", "main", "entry"]

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NOT_CAPTURED = 3
EXIT_IO = 4

# Literal grammar: optional sign, decimal, optional +/-<decimal>i.
# No whitespace inside a literal; "1", "-2.5", "1+2i", "0-0.5e-3i".
_DECIMAL = r"(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?"
_COMPLEX_RE = re.compile(rf"^([+-]?{_DECIMAL})(?:([+-]{_DECIMAL})i)?$")


class _ParseFailure(ValueError):
    pass


def parse_complex(text: str) -> complex:
    """Parse the CLI complex literal grammar (see module docstring)."""
    match = _COMPLEX_RE.match(text)
    if match is None:
        raise _ParseFailure(f"bad complex literal {text!r}")
    real, imag = match.groups()
    return complex(float(real), float(imag) if imag is not None else 0.0)


def _parse_pair(text: str) -> tuple[float, float]:
    parts = text.split(",")
    if len(parts) != 2:
        raise _ParseFailure(f"expected X,Y pair, got {text!r}")
    return float(parts[0]), float(parts[1])


def _parse_resolution(text: str) -> tuple[int, int]:
    parts = text.lower().split("x")
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise _ParseFailure(f"expected WxH resolution, got {text!r}")
    return int(parts[0]), int(parts[1])


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="henonlab",
        description="Iterate, classify, verify and render the map "
        "(z, w) -> (exp(-z^2) - delta*w, z).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--delta", type=float, default=3.0, help="map parameter, > 2")
        p.add_argument("--r0", type=float, default=None, help="cone base radius override")
        p.add_argument("--C", dest="big_c", type=float, default=1.0, help="absorbing core threshold")
        p.add_argument("--seed", type=int, default=1, help="64-bit sampling seed")
        p.add_argument("--budget", type=int, default=200, help="iteration budget")
        p.add_argument("--out", default=None, help="output path (default: stdout)")

    p_orbit = sub.add_parser("orbit", help="dump an orbit as CSV")
    p_orbit.add_argument("z0")
    p_orbit.add_argument("w0")
    p_orbit.add_argument("n", type=int)
    common(p_orbit)

    p_classify = sub.add_parser("classify", help="classify one point")
    p_classify.add_argument("z0")
    p_classify.add_argument("w0")
    common(p_classify)

    p_verify = sub.add_parser("verify", help="run verification suites")
    p_verify.add_argument("--suite", default="all", help="suite name or 'all'")
    p_verify.add_argument("--samples", type=int, default=None, help="sample count override")
    common(p_verify)

    p_render = sub.add_parser("render", help="render a plane slice to PPM")
    p_render.add_argument("--slice", dest="slice_mode", choices=("real", "zplane"), default="real")
    p_render.add_argument("--center", type=str, default="0,0", help="slice center X,Y")
    p_render.add_argument("--extent", type=str, default="60,60", help="slice extent X,Y")
    p_render.add_argument("--res", type=str, default="400x400", help="resolution WxH")
    p_render.add_argument("--fixed", type=str, default="0", help="fixed w for zplane slices")
    p_render.add_argument("--gamma", type=float, default=1.0, help="capture-step dimming in (0,1]")
    p_render.add_argument("--workers", type=int, default=1, help="parallel tile workers")
    common(p_render)

    return parser


def _make_schedule(args) -> ConeSchedule:
    if args.r0 is not None:
        return ConeSchedule(args.delta, args.r0)  # validates r0 > r0_min(delta)
    return ConeSchedule.for_delta(args.delta)


def _open_out(args):
    if args.out is None:
        return sys.stdout, False
    return open(args.out, "w", encoding="utf-8"), True


def _fmt(x: float) -> str:
    return repr(x)


def cmd_orbit(args) -> int:
    params = MapParams(args.delta)
    p = Point(parse_complex(args.z0), parse_complex(args.w0))
    orbit = iterate(p, args.n, params)
    out, close = _open_out(args)
    try:
        out.write("step,re_z,im_z,re_w,im_w,in_S,u_n\n")
        for step, pt in enumerate(orbit.points):
            u = ""
            if step >= 1:
                u = _fmt(-(pt.z.real * pt.z.real - pt.z.imag * pt.z.imag) / step)
            out.write(
                f"{step},{_fmt(pt.z.real)},{_fmt(pt.z.imag)},{_fmt(pt.w.real)},"
                f"{_fmt(pt.w.imag)},{'true' if point_in_S(pt) else 'false'},{u}\n"
            )
    finally:
        if close:
            out.close()
    return EXIT_OK


def cmd_classify(args) -> int:
    params = MapParams(args.delta)
    cfg = ClassifyConfig(schedule=_make_schedule(args), budget=args.budget)
    p = Point(parse_complex(args.z0), parse_complex(args.w0))
    result = classify(p, cfg, params)
    label = str(result.label) if result.label is not None else "-"
    step = str(result.capture_step) if result.capture_step is not None else "-"
    if result.h1_at_point is not None:
        re_h1, im_h1 = _fmt(result.h1_at_point.real), _fmt(result.h1_at_point.imag)
    else:
        re_h1 = im_h1 = "-"
    out, close = _open_out(args)
    try:
        out.write(f"{result.status.value} {label} {step} {re_h1} {im_h1}\n")
    finally:
        if close:
            out.close()
    return EXIT_OK if result.status is Status.CAPTURED else EXIT_NOT_CAPTURED


def cmd_verify(args) -> int:
    params = MapParams(args.delta)
    names = SUITE_NAMES if args.suite == "all" else (args.suite,)
    reports = [
        run_suite(name, default_sampler(name, args.seed, args.samples), params)
        for name in names
    ]
    payload = emit_report(reports)
    if args.out is None:
        sys.stdout.write(payload.decode("utf-8"))
    else:
        with open(args.out, "wb") as fh:
            fh.write(payload)
    return EXIT_OK if all(r.failures == 0 for r in reports) else 1


def cmd_render(args) -> int:
    params = MapParams(args.delta)
    spec = SliceSpec(
        mode=args.slice_mode,
        center=_parse_pair(args.center),
        extent=_parse_pair(args.extent),
        resolution=_parse_resolution(args.res),
        fixed_value=parse_complex(args.fixed),
    )
    cfg = ClassifyConfig(schedule=_make_schedule(args), budget=args.budget, compute_h1=False)
    job = RenderJob(spec, cfg, params, DEFAULT_PALETTE, args.gamma)
    img = render(job, workers=args.workers)
    path = args.out if args.out is not None else "render.ppm"
    written = write_ppm(img, path)
    sys.stdout.write(f"{img.width} {img.height} {written}\n")
    return EXIT_OK


_COMMANDS = {
    "orbit": cmd_orbit,
    "classify": cmd_classify,
    "verify": cmd_verify,
    "render": cmd_render,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (_ParseFailure, UnknownSuite, ValueError) as exc:
        print(f"henonlab: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"henonlab: {exc}", file=sys.stderr)
        return EXIT_IO


def entry() -> None:
    sys.exit(main())
