#!/usr/bin/env python3
"""Run the full default verification sweep and print the merged JSON report.

Exit status follows the CLI protocol: 0 when every instance is consistent,
1 when any counterexample is found.
"""

import argparse
import json
import sys

from twistedcubes.harness import SweepReport, default_specs, verify_equivalence


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--jobs", type=int, default=1, help="parallel workers")
    parser.add_argument(
        "--no-extended",
        action="store_true",
        help="skip the {0,1,2} weight-alphabet blocks",
    )
    args = parser.parse_args()

    merged = SweepReport()
    for spec in default_specs(extended=not args.no_extended):
        block = verify_equivalence(spec, jobs=args.jobs)
        print(
            f"# {','.join(spec.lie_types)} n<={spec.max_word_length} "
            f"weights {spec.weight_alphabet}: {block.instances} instances, "
            f"{len(block.counterexamples)} counterexamples, {block.wall_ms} ms",
            file=sys.stderr,
        )
        merged.merge(block)
    print(json.dumps(merged.to_json(), indent=2))
    return 0 if not merged.counterexamples else 1


if __name__ == "__main__":
    sys.exit(main())
