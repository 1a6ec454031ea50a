"""End-to-end acceptance checks.

Each test covers one headline guarantee and prints a single PASS/FAIL line on
the real terminal stream (so the verdicts are visible even under pytest's
output capture).  Every comparison is exact; the only tolerance anywhere is
the wall-clock budget on the exhaustive sweep.
"""

import itertools
import random
import sys
import time

import pytest

from twistedcubes.cartier import (
    SignVector,
    compute_m,
    is_untwisted,
    witness_sigma_from_walk,
)
from twistedcubes.harness import (
    SweepSpec,
    default_specs,
    scaling_invariance_failures,
    verify_equivalence,
)
from twistedcubes.rootdata import all_types_up_to_rank, parse_lie_type
from twistedcubes.twistedcube import (
    brute_force_census,
    contains,
    density,
    lattice_points,
    signed_count,
)
from twistedcubes.walks import (
    find_hesitant_lambda_walk,
    find_hesitant_lambda_walk_naive,
    is_hesitant_lambda_walk,
)
from twistedcubes.weightword import DominantWeight, TwistData, Word, derive_twist_data


_CAPSYS = None


@pytest.fixture(autouse=True)
def _grab_capsys(capsys):
    global _CAPSYS
    _CAPSYS = capsys
    yield
    _CAPSYS = None


def _report(number: int, label: str, ok: bool) -> None:
    verdict = "PASS" if ok else "FAIL"
    line = f"[acceptance {number}] {verdict}: {label}"
    if _CAPSYS is not None:
        with _CAPSYS.disabled():
            print(line, flush=True)
    else:
        print(line, file=sys.stdout, flush=True)
    assert ok, f"acceptance criterion {number} failed: {label}"


def _derived(type_name, word, weight):
    return derive_twist_data(parse_lie_type(type_name), Word(word), DominantWeight(weight))


def test_criterion_1_equivalence_sweep():
    start = time.monotonic()
    total = untwisted = twisted = 0
    counterexamples = []
    for spec in default_specs(extended=False):
        report = verify_equivalence(spec, jobs=1)
        total += report.instances
        untwisted += report.untwisted_count
        twisted += report.twisted_count
        counterexamples.extend(report.counterexamples)
    wall = time.monotonic() - start
    ok = total > 0 and not counterexamples and wall < 60.0
    _report(
        1,
        f"criterion/avoidance agree on all {total} default-sweep instances "
        f"({untwisted} untwisted, {twisted} twisted) in {wall:.1f}s < 60s",
        ok,
    )


def test_criterion_2_derived_constants():
    d = _derived("A2", (1, 2, 1), (2, 1))
    ok = (
        d.c_at(1, 2) == -1
        and d.c_at(1, 3) == 2
        and d.c_at(2, 3) == -1
        and d.ell == (2, 1, 2)
    )
    _report(2, "A2 word (1,2,1), weight (2,1) gives c=(-1,2,-1), ell=(2,1,2)", ok)


def test_criterion_3_running_example_census():
    d = TwistData(n=2, c={(1, 2): 1}, ell=(3, 5))
    census = lattice_points(d)
    negatives = [p for p, rho in census.points if rho == -1]
    ok = (
        census.num_positive == 10
        and census.num_negative == 1
        and negatives == [(-1, 5)]
        and not contains(d, (0, 4))
        and density(d, (1, 1)) == 1
    )
    _report(3, "n=2 running example: 10 points of density +1, one -1 at (-1,5)", ok)


def test_criterion_4_untwisted_example():
    d = _derived("A3", (1, 2, 3, 1, 2, 1), (0, 0, 3))
    vectors = [
        compute_m(d, SignVector(sigma)) for sigma in itertools.product("+-", repeat=6)
    ]
    ok = (
        len(vectors) == 64
        and all(mv.min_entry >= 0 for mv in vectors)
        and is_untwisted(d).untwisted
    )
    _report(4, "A3 word (1,2,3,1,2,1), weight 3*w3: all 64 Cartier vectors >= 0", ok)


def test_criterion_5_closed_form_witnesses():
    chain = _derived("A3", (1, 1, 2, 3), (0, 0, 1))
    _, mv_chain = witness_sigma_from_walk(chain, (1, 2, 3, 4))
    against = _derived("B3", (3, 3, 2, 1), (1, 0, 0))
    _, mv_against = witness_sigma_from_walk(against, (1, 2, 3, 4))
    ok = (
        mv_chain.m[0] == -chain.ell[3] == -1
        and mv_against.m[0] == -2 * against.ell[3] == -2
    )
    _report(
        5,
        "closed-form witness entries: -ell (simply-laced chain), -2*ell (against the arrow)",
        ok,
    )


def test_criterion_6_length_two_closed_form_randomized():
    rng = random.Random(20260823)
    ok = True
    for _ in range(1000):
        n = rng.randint(2, 6)
        i = rng.randint(1, n - 1)
        j = rng.randint(i + 1, n)
        c = {
            (p, q): rng.randint(-3, 3)
            for p in range(1, n + 1)
            for q in range(p + 1, n + 1)
        }
        c[(i, j)] = rng.randint(2, 5)
        shared = rng.randint(1, 4)
        ell = [rng.randint(0, 4) for _ in range(n)]
        ell[i - 1] = ell[j - 1] = shared
        d = TwistData(n=n, c=c, ell=tuple(ell))
        mv = compute_m(d, SignVector.minus_at(n, [i, j]))
        if mv.m[i - 1] != shared * (1 - c[(i, j)]) or is_untwisted(d).untwisted:
            ok = False
            break
    _report(
        6,
        "1000 random instances with c_ij > 1, ell_i = ell_j > 0: always twisted, "
        "m_i = ell_i(1 - c_ij)",
        ok,
    )


def _detectors_agree(t, w, lam) -> bool:
    fast = find_hesitant_lambda_walk(t, w, lam)
    slow = find_hesitant_lambda_walk_naive(t, w, lam)
    if (fast is None) != (slow is None):
        return False
    for witness in (fast, slow):
        if witness is not None and not is_hesitant_lambda_walk(t, Word(witness.subword), lam):
            return False
    return True


def test_criterion_7_detector_oracle_equivalence():
    checked = 0
    ok = True
    for t in all_types_up_to_rank(3):
        weights = [DominantWeight(v) for v in itertools.product((0, 1), repeat=t.rank)]
        for n in range(9):
            for word in itertools.product(range(1, t.rank + 1), repeat=n):
                w = Word(word)
                for lam in weights:
                    checked += 1
                    if not _detectors_agree(t, w, lam):
                        ok = False
    rng = random.Random(42)
    types = all_types_up_to_rank(6)
    for _ in range(10_000):
        t = rng.choice(types)
        n = rng.randint(0, 12)
        w = Word(tuple(rng.randint(1, t.rank) for _ in range(n)))
        lam = DominantWeight(tuple(rng.randint(0, 2) for _ in range(t.rank)))
        checked += 1
        if not _detectors_agree(t, w, lam):
            ok = False
    _report(
        7,
        f"efficient and naive walk detectors agree on all {checked} instances "
        "(exhaustive rank<=3 n<=8 plus 10000 random rank<=6 n<=12)",
        ok,
    )


def _weyl_dim_a2(l1: int, l2: int) -> int:
    return (l1 + 1) * (l2 + 1) * (l1 + l2 + 2) // 2


@pytest.mark.parametrize(
    "weight,expected,positive,negative",
    [((1, 0), 3, 3, 0), ((1, 1), 8, 8, 0), ((2, 1), 15, 16, 1)],
)
def test_criterion_8_signed_counts(weight, expected, positive, negative):
    d = _derived("A2", (1, 2, 1), weight)
    census = lattice_points(d)
    oracle = brute_force_census(d)
    ok = (
        signed_count(d) == expected == _weyl_dim_a2(*weight)
        and census.num_positive == positive
        and census.num_negative == negative
        and oracle.points == census.points
    )
    _report(
        8,
        f"A2 word (1,2,1), weight {weight}: signed count {expected} matches the "
        "Weyl dimension formula and the brute-force box oracle",
        ok,
    )


def test_criterion_9_support_scaling_invariance():
    failures = []
    for spec in default_specs(extended=False):
        failures.extend(scaling_invariance_failures(spec, factor=3))
    _report(
        9,
        "tripling the weight never flips the untwisted verdict across the default sweep"
        + (f" ({len(failures)} failures)" if failures else ""),
        not failures,
    )
