"""Command-line front end: twist evaluation, flow sampling, verification.

Subcommands:

* ``twist``   one twisted quadruple plus the core length and trace
* ``dehn``    the m-fold Dehn twist (rational map, no transcendentals)
* ``flow``    uniform samples of the flow, emitted as CSV/JSON and
              optionally an SVG polyline of a 2D projection
* ``verify``  seeded randomized equivalence and invariance suites

Exit codes: 0 success, 1 validation or usage error, 2 verification failure.
Output formatting is fixed (17 significant digits, newline-terminated) so
identical inputs produce byte-identical files.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass

from .annulus import AnnulusCoords, core_geodesic, coords_from_endpoints, endpoints
from .sampling import Lcg, random_coords
from .twist import (
    TwistRangeError,
    dehn_twist,
    twist_closed_form,
    twist_oracle,
    twist_p_form,
)

METHODS = {
    "closed": twist_closed_form,
    "p-form": twist_p_form,
    "oracle": twist_oracle,
}

CSV_HEADER = "t,X1,X2,X3,X4,L,trace"

SVG_WIDTH = 800
SVG_HEIGHT = 600
_MARGIN_LEFT, _MARGIN_RIGHT, _MARGIN_TOP, _MARGIN_BOTTOM = 70, 25, 25, 55


class UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad flags; we report usage problems as 1
    def error(self, message):
        raise UsageError(message)


@dataclass(frozen=True)
class TrajectorySample:
    """One flow sample: parameter, coordinates, and the (constant) invariants."""

    t: float
    x1: float
    x2: float
    x3: float
    x4: float
    length: float
    trace: float

    def row(self):
        return (self.t, self.x1, self.x2, self.x3, self.x4, self.length, self.trace)


def _fmt(v: float) -> str:
    return f"{v:.17g}"


def parse_coords(text: str) -> AnnulusCoords:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 4:
        raise UsageError(f"--coords needs four comma-separated values, got {len(parts)}")
    try:
        values = [float(p) for p in parts]
    except ValueError:
        raise UsageError(f"--coords values must be numbers, got {text!r}") from None
    return AnnulusCoords(*values)


def parse_projection(text: str):
    """Parse an axis pair like ``X1,X3`` or ``logX1,logX2``."""
    parts = text.split(",")
    if len(parts) != 2:
        raise UsageError(f"--proj needs two comma-separated axes, got {text!r}")
    axes = []
    for part in parts:
        part = part.strip()
        name = part
        is_log = part.startswith("log")
        if is_log:
            part = part[3:]
        if len(part) == 2 and part[0] in "Xx" and part[1] in "1234":
            axes.append((name, int(part[1]), is_log))
        else:
            raise UsageError(f"invalid projection axis {name!r} (use X1..X4 or logX1..logX4)")
    return axes


def _write_text(text: str, path):
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", newline="") as fp:
            fp.write(text)


def _rel_err(a: float, b: float) -> float:
    return abs(a - b) / max(abs(a), abs(b), 1e-300)


def _max_rel(a: AnnulusCoords, b: AnnulusCoords) -> float:
    return max(_rel_err(u, v) for u, v in zip(a.as_tuple(), b.as_tuple()))


# ---------------------------------------------------------------- twist/dehn

def _quadruple_report(coords, result, input_fields, fmt, out):
    core = core_geodesic(coords)
    if fmt == "csv":
        lines = [
            "X1,X2,X3,X4,L,trace",
            ",".join(_fmt(v) for v in result.as_tuple() + (core.length, core.trace_abs)),
        ]
        _write_text("\n".join(lines) + "\n", out)
    else:
        payload = {
            "input": input_fields,
            "L": core.length,
            "trace": core.trace_abs,
            "output": list(result.as_tuple()),
        }
        _write_text(json.dumps(payload, indent=2) + "\n", out)
    return 0


def cmd_twist(args) -> int:
    coords = parse_coords(args.coords)
    result = METHODS[args.method](coords, args.t)
    fields = {"coords": list(coords.as_tuple()), "t": args.t, "method": args.method}
    return _quadruple_report(coords, result, fields, args.format or "json", args.out)


def cmd_dehn(args) -> int:
    coords = parse_coords(args.coords)
    result = dehn_twist(coords, args.m)
    fields = {"coords": list(coords.as_tuple()), "m": args.m}
    return _quadruple_report(coords, result, fields, args.format or "json", args.out)


# ----------------------------------------------------------------------- flow

def sample_flow(coords: AnnulusCoords, t_max: float, steps: int, method="p-form"):
    """steps + 1 samples at uniform parameters in [0, t_max].

    Length and trace are recomputed from each sample so the emitted rows
    exhibit, rather than assume, their invariance.
    """
    twist = METHODS[method]
    samples = []
    for i in range(steps + 1):
        t = i * t_max / steps
        point = twist(coords, t)
        core = core_geodesic(point)
        samples.append(TrajectorySample(t, *point.as_tuple(), core.length, core.trace_abs))
    return samples


def format_csv(samples) -> str:
    lines = [CSV_HEADER]
    for s in samples:
        lines.append(",".join(_fmt(v) for v in s.row()))
    return "\n".join(lines) + "\n"


def format_flow_json(coords, t_max, steps, samples) -> str:
    core = core_geodesic(coords)
    payload = {
        "input": {"coords": list(coords.as_tuple()), "t_max": t_max, "steps": steps},
        "invariants": {"L": core.length, "trace": core.trace_abs},
        "samples": [
            {
                "t": s.t,
                "X1": s.x1,
                "X2": s.x2,
                "X3": s.x3,
                "X4": s.x4,
                "L": s.length,
                "trace": s.trace,
            }
            for s in samples
        ],
    }
    return json.dumps(payload, indent=2) + "\n"


def _axis_value(sample: TrajectorySample, axis) -> float:
    _, index, is_log = axis
    v = (sample.x1, sample.x2, sample.x3, sample.x4)[index - 1]
    return math.log10(v) if is_log else v


def _scale(lo: float, hi: float):
    if hi - lo < 1e-12:
        pad = max(abs(lo) * 0.05, 0.5)
        lo, hi = lo - pad, hi + pad
    else:
        pad = (hi - lo) * 0.05
        lo, hi = lo - pad, hi + pad
    return lo, hi


def render_svg(samples, proj, stroke="magenta") -> str:
    """Polyline of the projected trajectory in a fixed 800x600 frame."""
    xs = [_axis_value(s, proj[0]) for s in samples]
    ys = [_axis_value(s, proj[1]) for s in samples]
    x_lo, x_hi = _scale(min(xs), max(xs))
    y_lo, y_hi = _scale(min(ys), max(ys))
    plot_w = SVG_WIDTH - _MARGIN_LEFT - _MARGIN_RIGHT
    plot_h = SVG_HEIGHT - _MARGIN_TOP - _MARGIN_BOTTOM

    def sx(v):
        return _MARGIN_LEFT + (v - x_lo) / (x_hi - x_lo) * plot_w

    def sy(v):
        return _MARGIN_TOP + plot_h - (v - y_lo) / (y_hi - y_lo) * plot_h

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SVG_WIDTH}" height="{SVG_HEIGHT}" '
        f'viewBox="0 0 {SVG_WIDTH} {SVG_HEIGHT}">',
        f'<rect width="{SVG_WIDTH}" height="{SVG_HEIGHT}" fill="white"/>',
    ]
    axis_y = _MARGIN_TOP + plot_h
    parts.append(
        f'<line x1="{_MARGIN_LEFT}" y1="{axis_y}" x2="{_MARGIN_LEFT + plot_w}" y2="{axis_y}" '
        'stroke="black" stroke-width="1"/>'
    )
    parts.append(
        f'<line x1="{_MARGIN_LEFT}" y1="{_MARGIN_TOP}" x2="{_MARGIN_LEFT}" y2="{axis_y}" '
        'stroke="black" stroke-width="1"/>'
    )
    for frac in (0.0, 0.5, 1.0):
        vx = x_lo + frac * (x_hi - x_lo)
        vy = y_lo + frac * (y_hi - y_lo)
        px = sx(vx)
        py = sy(vy)
        parts.append(
            f'<text x="{px:.1f}" y="{axis_y + 18:.1f}" font-size="11" '
            f'text-anchor="middle">{vx:.3g}</text>'
        )
        parts.append(
            f'<text x="{_MARGIN_LEFT - 6:.1f}" y="{py + 4:.1f}" font-size="11" '
            f'text-anchor="end">{vy:.3g}</text>'
        )
    parts.append(
        f'<text x="{_MARGIN_LEFT + plot_w / 2:.1f}" y="{SVG_HEIGHT - 12}" font-size="13" '
        f'text-anchor="middle">{proj[0][0]}</text>'
    )
    parts.append(
        f'<text x="16" y="{_MARGIN_TOP + plot_h / 2:.1f}" font-size="13" text-anchor="middle" '
        f'transform="rotate(-90 16 {_MARGIN_TOP + plot_h / 2:.1f})">{proj[1][0]}</text>'
    )
    points = " ".join(f"{sx(x):.2f},{sy(y):.2f}" for x, y in zip(xs, ys))
    parts.append(
        f'<polyline points="{points}" fill="none" stroke="{stroke}" stroke-width="1.5"/>'
    )
    n = len(samples)
    marks = sorted({0, n // 4, n // 2, 3 * n // 4, n - 1})
    for i in marks:
        px, py = sx(xs[i]), sy(ys[i])
        parts.append(f'<circle cx="{px:.2f}" cy="{py:.2f}" r="2.5" fill="{stroke}"/>')
        parts.append(
            f'<text x="{px + 5:.1f}" y="{py - 5:.1f}" font-size="10">t={samples[i].t:.3g}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def cmd_flow(args) -> int:
    coords = parse_coords(args.coords)
    if args.steps < 2:
        raise UsageError(f"--steps must be at least 2, got {args.steps}")
    if not (math.isfinite(args.t) and args.t > 0.0):
        raise UsageError(f"--t must be positive and finite for flow sampling, got {args.t}")
    proj = parse_projection(args.proj)
    samples = sample_flow(coords, args.t, args.steps, args.method)
    fmt = args.format or "csv"
    if fmt == "csv":
        _write_text(format_csv(samples), args.out)
    else:
        _write_text(format_flow_json(coords, args.t, args.steps, samples), args.out)
    if args.svg is not None:
        _write_text(render_svg(samples, proj), args.svg)
    return 0


# --------------------------------------------------------------------- verify

def run_verify_suites(samples: int, seed: int):
    """Max relative error of each randomized suite; every suite re-seeds."""
    results = {}

    rng = Lcg(seed)
    worst = 0.0
    for _ in range(samples):
        coords = random_coords(rng)
        t = rng.uniform(0.0, 3.0)
        a = twist_closed_form(coords, t)
        b = twist_p_form(coords, t)
        c = twist_oracle(coords, t)
        worst = max(worst, _max_rel(a, b), _max_rel(b, c), _max_rel(a, c))
    results["oracle-equivalence"] = worst

    rng = Lcg(seed)
    worst = 0.0
    for _ in range(samples):
        coords = random_coords(rng)
        s = rng.uniform(0.0, 2.0)
        t = rng.uniform(0.0, 2.0)
        two_step = twist_p_form(twist_p_form(coords, s), t)
        one_step = twist_p_form(coords, s + t)
        worst = max(worst, _max_rel(two_step, one_step))
    results["flow-additivity"] = worst

    rng = Lcg(seed)
    worst = 0.0
    for _ in range(samples):
        coords = random_coords(rng)
        t = rng.uniform(0.0, 3.0)
        moved = twist_p_form(coords, t)
        worst = max(
            worst,
            _rel_err(core_geodesic(coords).trace_abs, core_geodesic(moved).trace_abs),
        )
    results["trace-invariance"] = worst

    rng = Lcg(seed)
    worst = 0.0
    for _ in range(samples):
        coords = random_coords(rng)
        for m in (1, 2, 3):
            worst = max(
                worst, _max_rel(dehn_twist(coords, m), twist_closed_form(coords, float(m)))
            )
    results["dehn-compatibility"] = worst

    rng = Lcg(seed)
    worst = 0.0
    for _ in range(samples):
        coords = random_coords(rng)
        worst = max(worst, _max_rel(coords_from_endpoints(endpoints(coords)), coords))
    results["endpoint-round-trip"] = worst

    return results


def cmd_verify(args) -> int:
    if args.samples < 1:
        raise UsageError(f"--samples must be at least 1, got {args.samples}")
    if not args.tol > 0.0:
        raise UsageError(f"--tol must be positive, got {args.tol}")
    results = run_verify_suites(args.samples, args.seed)
    failures = 0
    for name, err in results.items():
        ok = err <= args.tol
        failures += 0 if ok else 1
        print(f"{name:24s} max rel err {err:.3e}  {'ok' if ok else 'FAIL'}")
    if failures:
        print(f"verify: {failures} suite(s) exceeded tolerance {args.tol:g}")
        return 2
    print(f"verify: all suites within tolerance {args.tol:g} "
          f"({args.samples} samples, seed {args.seed})")
    return 0


# ----------------------------------------------------------------------- main

def build_parser() -> _Parser:
    parser = _Parser(prog="fntwist", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_t=True):
        p.add_argument("--coords", required=True, help="four comma-separated positive values")
        if with_t:
            p.add_argument("--t", type=float, default=1.0, help="twist parameter in core lengths")
        p.add_argument("--method", choices=sorted(METHODS), default="p-form")
        p.add_argument("--format", choices=["csv", "json"], default=None)
        p.add_argument("--out", default=None, help="output path (default stdout)")
        p.add_argument("--seed", type=int, default=0)

    p_twist = sub.add_parser("twist", help="evaluate one twist")
    add_common(p_twist)
    p_twist.set_defaults(func=cmd_twist)

    p_dehn = sub.add_parser("dehn", help="m-fold Dehn twist (rational map)")
    add_common(p_dehn, with_t=False)
    p_dehn.add_argument("--m", type=int, default=1, help="twist count, may be negative")
    p_dehn.set_defaults(func=cmd_dehn)

    p_flow = sub.add_parser("flow", help="sample the flow on [0, t]")
    add_common(p_flow)
    p_flow.add_argument("--steps", type=int, default=100, help="number of intervals (>= 2)")
    p_flow.add_argument("--svg", default=None, help="also render an SVG to this path")
    p_flow.add_argument("--proj", default="logX1,logX2",
                        help="2D projection, e.g. X1,X3 or logX1,logX2")
    p_flow.set_defaults(func=cmd_flow)

    p_verify = sub.add_parser("verify", help="run the randomized verification suites")
    p_verify.add_argument("--samples", type=int, default=1000)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--tol", type=float, default=1e-9)
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, TwistRangeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
