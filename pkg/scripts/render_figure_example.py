#!/usr/bin/env python3
"""Render the running n=2 example (c_12 = 1, ell = (3, 5)) to an SVG file.

The picture shows the closed triangle of density +1 points, the half-open
hatched region containing the single density -1 lattice point at (-1, 5),
and dashes on every strict-inequality edge.
"""

import argparse
import sys

from twistedcubes.render import render_svg
from twistedcubes.twistedcube import lattice_points
from twistedcubes.weightword import TwistData


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="figure_example.svg", help="output SVG path")
    args = parser.parse_args()

    d = TwistData(n=2, c={(1, 2): 1}, ell=(3, 5))
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(render_svg(d))
    census = lattice_points(d)
    print(
        f"wrote {args.out}: {census.num_positive} positive and "
        f"{census.num_negative} negative lattice points "
        f"(signed count {census.signed_count})"
    )
    return 0


if __name__ == "__main__":
    sys.exit(main())
