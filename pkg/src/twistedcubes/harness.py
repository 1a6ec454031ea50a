"""Exhaustive and randomized verification of the untwisted/avoidance
equivalence, the cross-module witness round-trips, and census tallies."""

from __future__ import annotations

import itertools
import json
import random
import time
from dataclasses import dataclass, field
from multiprocessing import Pool

from . import cartier, walks
from .rootdata import LieType, parse_lie_type
from .twistedcube import contains_PD, lattice_points
from .weightword import DominantWeight, Word, derive_twist_data


@dataclass(frozen=True)
class SweepSpec:
    """One block of instances: types x words up to a length x weight vectors."""

    lie_types: tuple[str, ...]
    max_word_length: int
    weight_alphabet: tuple[int, ...] = (0, 1)
    seed: int | None = None
    sample_count: int | None = None

    @classmethod
    def from_json(cls, obj: dict) -> "SweepSpec":
        return cls(
            lie_types=tuple(obj["lie_types"]),
            max_word_length=int(obj["max_word_length"]),
            weight_alphabet=tuple(obj.get("weight_alphabet", (0, 1))),
            seed=obj.get("seed"),
            sample_count=obj.get("sample_count"),
        )


@dataclass
class SweepReport:
    instances: int = 0
    counterexamples: list[dict] = field(default_factory=list)
    untwisted_count: int = 0
    twisted_count: int = 0
    wall_ms: int = 0

    def to_json(self, include_timing: bool = True) -> dict:
        out = {
            "instances": self.instances,
            "counterexamples": self.counterexamples,
            "untwisted_count": self.untwisted_count,
            "twisted_count": self.twisted_count,
        }
        # Timing is the one nondeterministic field; drop it when byte-stable
        # output is wanted.
        if include_timing:
            out["wall_ms"] = self.wall_ms
        return out

    def merge(self, other: "SweepReport") -> None:
        self.instances += other.instances
        self.counterexamples.extend(other.counterexamples)
        self.untwisted_count += other.untwisted_count
        self.twisted_count += other.twisted_count
        self.wall_ms += other.wall_ms


Instance = tuple[str, tuple[int, ...], tuple[int, ...]]


def iter_instances(spec: SweepSpec):
    """Deterministic instance stream: exhaustive by default, seeded-random
    when sample_count is set."""
    if spec.sample_count is not None:
        rng = random.Random(spec.seed)
        for _ in range(spec.sample_count):
            t = parse_lie_type(rng.choice(spec.lie_types))
            n = rng.randint(0, spec.max_word_length)
            word = tuple(rng.randint(1, t.rank) for _ in range(n))
            weight = tuple(rng.choice(spec.weight_alphabet) for _ in range(t.rank))
            yield (str(t), word, weight)
        return
    for name in spec.lie_types:
        t = parse_lie_type(name)
        weights = list(itertools.product(spec.weight_alphabet, repeat=t.rank))
        for n in range(spec.max_word_length + 1):
            for word in itertools.product(range(1, t.rank + 1), repeat=n):
                for weight in weights:
                    yield (str(t), word, weight)


def check_instance(inst: Instance) -> list[dict]:
    """All per-instance assertions; returns a list of counterexample records."""
    type_name, word_entries, weight_coeffs = inst
    problems: list[str] = []
    t = parse_lie_type(type_name)
    w = Word(word_entries)
    lam = DominantWeight(weight_coeffs)
    d = derive_twist_data(t, w, lam)

    result = cartier.is_untwisted(d)
    walk = walks.find_hesitant_lambda_walk(t, w, lam)
    if result.untwisted != (walk is None):
        problems.append(
            f"verdict mismatch: criterion says untwisted={result.untwisted}, "
            f"detector witness={walk}"
        )

    if walk is not None:
        try:
            if not walks.is_hesitant_lambda_walk(t, Word(walk.subword), lam):
                problems.append(f"detector witness {walk} fails its predicate")
            minimal = walks.minimize(t, walk, lam)
            sigma, mv = cartier.witness_sigma_from_walk(d, minimal.positions)
            if mv.m[minimal.positions[0] - 1] >= 0:
                problems.append(f"sigma witness from {minimal.positions} not negative")
        except Exception as exc:  # noqa: BLE001 - failures are data here
            problems.append(f"walk-to-sigma round trip raised {exc!r}")

    if not result.untwisted:
        try:
            k = cartier.maximal_failing_index(d, result.sigma)
            rebuilt = cartier.hesitant_walk_from_twist_witness(d, w, result.sigma, k)
            if not walks.is_hesitant_lambda_walk(t, Word(rebuilt.subword), lam):
                problems.append(f"rebuilt walk {rebuilt} fails its predicate")
        except Exception as exc:  # noqa: BLE001
            problems.append(f"sigma-to-walk round trip raised {exc!r}")

    if result.untwisted:
        census = lattice_points(d)
        if any(rho != 1 for _, rho in census.points):
            problems.append("untwisted census has a point of density != +1")
        if any(not contains_PD(d, p) for p, _ in census.points):
            problems.append("untwisted census point escapes the weak-inequality polytope")

    instance_json = {"type": type_name, "word": list(word_entries), "weight": list(weight_coeffs)}
    return [{"instance": instance_json, "problem": p} for p in problems]


def _worker(inst: Instance) -> tuple[bool, list[dict]]:
    type_name, word_entries, weight_coeffs = inst
    d = derive_twist_data(
        parse_lie_type(type_name), Word(word_entries), DominantWeight(weight_coeffs)
    )
    return cartier.is_untwisted(d).untwisted, check_instance(inst)


def verify_equivalence(spec: SweepSpec, jobs: int = 1) -> SweepReport:
    """Run every per-instance check over the sweep; failures are report data,
    never exceptions."""
    start = time.monotonic()
    report = SweepReport()
    instances = list(iter_instances(spec))
    if jobs > 1:
        with Pool(jobs) as pool:
            results = pool.map(_worker, instances, chunksize=256)
    else:
        results = map(_worker, instances)
    for untwisted, problems in results:
        report.instances += 1
        if untwisted:
            report.untwisted_count += 1
        else:
            report.twisted_count += 1
        report.counterexamples.extend(problems)
    report.counterexamples.sort(key=lambda ce: json.dumps(ce, sort_keys=True))
    report.wall_ms = int((time.monotonic() - start) * 1000)
    return report


def scaling_invariance_failures(spec: SweepSpec, factor: int = 3) -> list[dict]:
    """Instances whose untwisted verdict changes when the weight is scaled;
    the criterion depends on the weight only through its support, so this
    must come back empty."""
    failures: list[dict] = []
    for type_name, word_entries, weight_coeffs in iter_instances(spec):
        t = parse_lie_type(type_name)
        w = Word(word_entries)
        lam = DominantWeight(weight_coeffs)
        base = cartier.is_untwisted(derive_twist_data(t, w, lam)).untwisted
        scaled = cartier.is_untwisted(derive_twist_data(t, w, lam.scaled(factor))).untwisted
        if base != scaled:
            failures.append(
                {
                    "type": type_name,
                    "word": list(word_entries),
                    "weight": list(weight_coeffs),
                    "factor": factor,
                }
            )
    return failures


@dataclass
class AtlasReport:
    """Per (type, weight, word-length) tallies of avoiding words."""

    counts: dict = field(default_factory=dict)
    instances: int = 0

    def to_json(self) -> dict:
        return {"instances": self.instances, "counts": self.counts}


def atlas(spec: SweepSpec) -> AtlasReport:
    """Tally hesitant-lambda-walk-avoiding words across the sweep."""
    report = AtlasReport()
    for type_name, word_entries, weight_coeffs in iter_instances(spec):
        t = parse_lie_type(type_name)
        w = Word(word_entries)
        lam = DominantWeight(weight_coeffs)
        avoiding = walks.find_hesitant_lambda_walk(t, w, lam) is None
        weight_key = ",".join(str(c) for c in weight_coeffs)
        slot = (
            report.counts.setdefault(type_name, {})
            .setdefault(weight_key, {})
            .setdefault(str(len(w)), {"avoiding": 0, "total": 0})
        )
        slot["total"] += 1
        slot["avoiding"] += int(avoiding)
        report.instances += 1
    return report


def default_specs(extended: bool = True) -> list[SweepSpec]:
    """The desk-scale sweep: every case branch of the sufficiency analysis at
    small rank, under 60 s single-threaded for the {0, 1} alphabet part."""
    specs = [
        SweepSpec(("A1", "A2", "A3", "B2", "B3", "C3"), 5, (0, 1)),
        SweepSpec(("D4", "F4"), 4, (0, 1)),
        SweepSpec(("G2",), 6, (0, 1)),
    ]
    if extended:
        specs += [
            SweepSpec(("A1", "A2", "B2"), 5, (0, 1, 2)),
            SweepSpec(("G2",), 6, (0, 1, 2)),
        ]
    return specs
