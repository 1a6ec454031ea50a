#!/usr/bin/env python3
"""Tabulate how many words avoid hesitant lambda-walks, for rank <= 2 types.

For each (type, weight) pair the table lists, per word length, the number of
avoiding words over the total; these are exactly the words whose twisted
cube is untwisted.
"""

import argparse
import json
import sys

from twistedcubes.harness import SweepSpec, atlas


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=6, help="maximum word length")
    parser.add_argument(
        "--alphabet",
        type=int,
        nargs="+",
        default=[0, 1, 2],
        help="weight-coefficient alphabet",
    )
    parser.add_argument("--json", action="store_true", help="emit raw JSON instead of a table")
    args = parser.parse_args()

    spec = SweepSpec(
        ("A1", "A2", "B2", "G2"), args.max_n, tuple(args.alphabet)
    )
    report = atlas(spec)
    if args.json:
        print(json.dumps(report.to_json(), sort_keys=True))
        return 0
    for type_name in sorted(report.counts):
        for weight_key in sorted(report.counts[type_name]):
            per_length = report.counts[type_name][weight_key]
            cells = "  ".join(
                f"n={n}: {per_length[n]['avoiding']}/{per_length[n]['total']}"
                for n in sorted(per_length, key=int)
            )
            print(f"{type_name} weight ({weight_key}):  {cells}")
    print(f"# {report.instances} instances total", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
