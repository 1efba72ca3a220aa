#!/usr/bin/env python3
"""Render Newton polygon figures as SVG files.

Draws the six-point demonstration polygon plus the polygon of a chosen
polynomial, exercising the exact hull arithmetic end to end.

    python3 scripts/polygon_figure.py --out-dir build/figures
"""

import argparse
from dataclasses import dataclass, field
from pathlib import Path

from maclane import (
    BaseField,
    MacLaneChain,
    NewtonPolygon,
    Polynomial,
    newton_polygon,
    parse_polynomial,
    polygon_svg,
)


@dataclass
class FigureConfig:
    out_dir: Path = Path("build/figures")
    p: int = 2
    poly: str = "x^4+4*x^2+6*x+8"
    demo_points: tuple = ((0, 1), (1, 0), (2, 3), (3, 2), (4, 1), (5, 2))
    width: int = 520
    height: int = 380


def render(config: FigureConfig):
    config.out_dir.mkdir(parents=True, exist_ok=True)
    written = []

    demo = NewtonPolygon.from_points(config.demo_points)
    path = config.out_dir / "demo_polygon.svg"
    path.write_text(polygon_svg(demo, config.width, config.height))
    written.append((path, demo))

    base = BaseField.rationals(config.p)
    f = parse_polynomial(base, config.poly)
    np_ = newton_polygon(MacLaneChain.gauss(base), Polynomial.x(base), f)
    path = config.out_dir / "gauss_polygon.svg"
    path.write_text(polygon_svg(np_, config.width, config.height))
    written.append((path, np_))
    return written


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out-dir", type=Path, default=FigureConfig.out_dir)
    ap.add_argument("--p", type=int, default=FigureConfig.p)
    ap.add_argument("--poly", default=FigureConfig.poly)
    args = ap.parse_args()
    config = FigureConfig(out_dir=args.out_dir, p=args.p, poly=args.poly)
    for path, np_ in render(config):
        slopes = ", ".join(str(s.slope) for s in np_.sides) or "none"
        vertices = ", ".join(f"({i}, {v})" for i, v in np_.vertices)
        print(f"{path}  vertices=[{vertices}]  slopes=[{slopes}]")


if __name__ == "__main__":
    main()
