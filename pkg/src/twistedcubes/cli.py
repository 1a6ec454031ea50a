"""Command-line front door.

Exit-code protocol: 0 = untwisted / success, 1 = twisted / counterexamples
found, 2 = malformed input or unsupported request.  This makes the tool
usable as a shell predicate.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import cartier, harness, walks
from .errors import MalformedInput, TwistedCubeError
from .render import render_svg
from .rootdata import parse_lie_type
from .twistedcube import lattice_points
from .weightword import DEFAULT_N_CAP, DominantWeight, TwistData, Word, derive_twist_data

EXIT_UNTWISTED = 0
EXIT_TWISTED = 1
EXIT_ERROR = 2


def load_instance(path: str):
    """Read an instance file; returns (twist_data, context) where context is
    (lie_type, word, weight) for derived instances and None for raw ones."""
    try:
        with open(path, encoding="utf-8") as fh:
            obj = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise MalformedInput(f"cannot read instance file {path}: {exc}") from exc
    if not isinstance(obj, dict):
        raise MalformedInput("instance file must hold a JSON object")
    derived_keys = {"type", "word", "weight"}
    raw_keys = {"n", "ell"}
    if derived_keys <= obj.keys():
        if raw_keys & obj.keys():
            raise MalformedInput("instance mixes derived and raw fields")
        t = parse_lie_type(obj["type"])
        w = Word(tuple(obj["word"]))
        lam = DominantWeight(tuple(obj["weight"]))
        return derive_twist_data(t, w, lam), (t, w, lam)
    if raw_keys <= obj.keys():
        c: dict[tuple[int, int], int] = {}
        for key, value in obj.get("c", {}).items():
            try:
                j, k = (int(part) for part in key.split(","))
            except ValueError as exc:
                raise MalformedInput(f"bad c key {key!r}; expected 'j,k'") from exc
            c[(j, k)] = int(value)
        return TwistData(n=int(obj["n"]), c=c, ell=tuple(obj["ell"])), None
    raise MalformedInput(
        "instance must be {type, word, weight} or {n, c, ell}"
    )


def _walk_json(t, lam, witness: walks.WalkWitness) -> dict:
    return {
        "kind": witness.kind,
        "positions": list(witness.positions),
        "subword": list(witness.subword),
        "minimal": walks.is_minimal(t, witness, lam),
    }


def cmd_check(args) -> int:
    d, context = load_instance(args.instance)
    result = cartier.is_untwisted(d, cap=args.max_n)
    report = result.to_json()
    if not result.untwisted and context is not None:
        t, w, lam = context
        witness = walks.find_hesitant_lambda_walk(t, w, lam)
        if witness is not None:
            report["walk"] = _walk_json(t, lam, witness)
    if args.format == "json":
        print(json.dumps(report))
    else:
        if result.untwisted:
            print("untwisted: every Cartier vector is entrywise nonnegative")
        else:
            print(f"twisted: sigma={result.sigma} has m={list(result.m.m)} (k={result.k})")
            if "walk" in report:
                wj = report["walk"]
                print(
                    f"hesitant lambda-walk at positions {wj['positions']} "
                    f"(subword {wj['subword']})"
                )
    return EXIT_UNTWISTED if result.untwisted else EXIT_TWISTED


def cmd_lattice(args) -> int:
    d, _ = load_instance(args.instance)
    census = lattice_points(d, cap=args.max_n)
    out = open(args.out, "w", encoding="utf-8") if args.out else sys.stdout
    try:
        for point, rho in census.points:
            out.write(json.dumps({"x": list(point), "rho": rho}) + "\n")
        out.write(
            json.dumps(
                {
                    "positive": census.num_positive,
                    "negative": census.num_negative,
                    "signed": census.signed_count,
                }
            )
            + "\n"
        )
    finally:
        if args.out:
            out.close()
    return EXIT_UNTWISTED


def cmd_render(args) -> int:
    d, _ = load_instance(args.instance)
    svg = render_svg(d)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(svg)
    return EXIT_UNTWISTED


def _load_specs(path: str | None) -> list[harness.SweepSpec]:
    if path is None:
        return harness.default_specs()
    try:
        with open(path, encoding="utf-8") as fh:
            obj = json.load(fh)
        blocks = obj if isinstance(obj, list) else [obj]
        return [harness.SweepSpec.from_json(b) for b in blocks]
    except (OSError, json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise MalformedInput(f"cannot read sweep spec {path}: {exc}") from exc


def cmd_verify(args) -> int:
    merged = harness.SweepReport()
    for spec in _load_specs(args.spec):
        merged.merge(harness.verify_equivalence(spec, jobs=args.jobs))
    if args.format == "json":
        print(json.dumps(merged.to_json()))
    else:
        print(
            f"{merged.instances} instances: {merged.untwisted_count} untwisted, "
            f"{merged.twisted_count} twisted, "
            f"{len(merged.counterexamples)} counterexamples ({merged.wall_ms} ms)"
        )
        for ce in merged.counterexamples:
            print(f"  {json.dumps(ce)}")
    return EXIT_UNTWISTED if not merged.counterexamples else EXIT_TWISTED


def cmd_atlas(args) -> int:
    merged = harness.AtlasReport()
    for spec in _load_specs(args.spec):
        block = harness.atlas(spec)
        merged.instances += block.instances
        merged.counts.update(block.counts)
    print(json.dumps(merged.to_json(), sort_keys=True))
    return EXIT_UNTWISTED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twistedcubes",
        description="Decide untwistedness, enumerate signed lattice points, "
        "render n=2 pictures, and run verification sweeps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, instance=True):
        if instance:
            p.add_argument("--instance", required=True, help="instance JSON file")
        p.add_argument("--max-n", type=int, default=DEFAULT_N_CAP, help="sign-sweep cap")
        p.add_argument("--format", choices=("json", "human"), default="json")

    p = sub.add_parser("check", help="decide the untwistedness criterion")
    common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("lattice", help="stream the signed lattice-point census")
    common(p)
    p.add_argument("--out", help="write JSON lines here instead of stdout")
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("render", help="render an n=2 instance as SVG")
    common(p)
    p.add_argument("--out", required=True, help="output SVG path")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("verify", help="run the equivalence sweep")
    common(p, instance=False)
    p.add_argument("--spec", help="sweep spec JSON (object or list); default sweep if omitted")
    p.add_argument("--jobs", type=int, default=1, help="parallel workers")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("atlas", help="tally avoiding words per type/weight/length")
    common(p, instance=False)
    p.add_argument("--spec", help="sweep spec JSON (object or list); default sweep if omitted")
    p.set_defaults(func=cmd_atlas)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except TwistedCubeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
