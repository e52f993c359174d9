#!/usr/bin/env python3
"""Overlay twist-flow trajectories from several starting coordinates.

Writes one SVG with all curves in the (log X1, log X2) plane plus a CSV per
curve, and prints the observed trace drift along each trajectory (which
should sit at rounding level, the trace being a flow invariant).

Usage:
    python scripts/draw_flow.py --out flow_out --t 2.0 --steps 200
"""

import argparse
import math
import os

from fntwist import AnnulusCoords, core_geodesic
from fntwist.cli import format_csv, sample_flow

STARTS = [
    (1.0, 1.0, 1.0, 1.0),
    (2.0, 0.5, 1.0, 1.0),
    (4.0, 0.25, 1.0, 1.0),
    (0.5, 3.0, 1.0, 1.0),
    (6.0, 2.0, 1.0, 1.0),
]

PALETTE = ["magenta", "#4466dd", "#22aa66", "#dd8822", "#884499"]

WIDTH, HEIGHT, MARGIN = 800, 600, 60


def svg_overlay(curves):
    xs = [x for pts, _ in curves for x, _ in pts]
    ys = [y for pts, _ in curves for _, y in pts]
    x_lo, x_hi = min(xs), max(xs)
    y_lo, y_hi = min(ys), max(ys)
    x_pad = (x_hi - x_lo) * 0.05 or 0.5
    y_pad = (y_hi - y_lo) * 0.05 or 0.5
    x_lo, x_hi = x_lo - x_pad, x_hi + x_pad
    y_lo, y_hi = y_lo - y_pad, y_hi + y_pad
    plot_w, plot_h = WIDTH - 2 * MARGIN, HEIGHT - 2 * MARGIN

    def sx(v):
        return MARGIN + (v - x_lo) / (x_hi - x_lo) * plot_w

    def sy(v):
        return MARGIN + plot_h - (v - y_lo) / (y_hi - y_lo) * plot_h

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<line x1="{MARGIN}" y1="{MARGIN + plot_h}" x2="{MARGIN + plot_w}" '
        f'y2="{MARGIN + plot_h}" stroke="black"/>',
        f'<line x1="{MARGIN}" y1="{MARGIN}" x2="{MARGIN}" y2="{MARGIN + plot_h}" '
        'stroke="black"/>',
        f'<text x="{MARGIN + plot_w / 2}" y="{HEIGHT - 20}" font-size="13" '
        'text-anchor="middle">log10 X1</text>',
        f'<text x="20" y="{MARGIN + plot_h / 2}" font-size="13" text-anchor="middle" '
        f'transform="rotate(-90 20 {MARGIN + plot_h / 2})">log10 X2</text>',
    ]
    for (pts, color) in curves:
        path = " ".join(f"{sx(x):.2f},{sy(y):.2f}" for x, y in pts)
        parts.append(
            f'<polyline points="{path}" fill="none" stroke="{color}" stroke-width="1.5"/>'
        )
        x0, y0 = pts[0]
        parts.append(f'<circle cx="{sx(x0):.2f}" cy="{sy(y0):.2f}" r="3" fill="{color}"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default="flow_out", help="output directory")
    ap.add_argument("--t", type=float, default=2.0, help="flow span in core lengths")
    ap.add_argument("--steps", type=int, default=200)
    args = ap.parse_args()

    os.makedirs(args.out, exist_ok=True)
    curves = []
    for start, color in zip(STARTS, PALETTE):
        coords = AnnulusCoords(*start)
        samples = sample_flow(coords, args.t, args.steps)
        csv_path = os.path.join(args.out, "flow_" + "_".join(f"{v:g}" for v in start) + ".csv")
        with open(csv_path, "w", newline="") as fp:
            fp.write(format_csv(samples))
        pts = [(math.log10(s.x1), math.log10(s.x2)) for s in samples]
        curves.append((pts, color))
        trace = core_geodesic(coords).trace_abs
        drift = max(abs(s.trace - trace) / trace for s in samples)
        print(f"start {start}: trace {trace:.6f}, max drift {drift:.3e}, wrote {csv_path}")

    svg_path = os.path.join(args.out, "flow_overlay.svg")
    with open(svg_path, "w", newline="") as fp:
        fp.write(svg_overlay(curves))
    print(f"wrote {svg_path}")


if __name__ == "__main__":
    main()
