import pytest
from hypothesis import given, settings, strategies as st

from twistedcubes.cartier import (
    CartierVector,
    SignVector,
    compute_m,
    hesitant_walk_from_twist_witness,
    is_untwisted,
    maximal_failing_index,
    witness_sigma_from_walk,
)
from twistedcubes.errors import (
    CapExceeded,
    DimensionMismatch,
    NotMinimalWitness,
    PreconditionViolated,
)
from twistedcubes.rootdata import parse_lie_type
from twistedcubes.walks import is_hesitant_lambda_walk
from twistedcubes.weightword import DominantWeight, TwistData, Word, derive_twist_data


def derived(type_name, word, weight):
    return derive_twist_data(parse_lie_type(type_name), Word(word), DominantWeight(weight))


A2_TWISTED = derived("A2", (1, 2, 1), (2, 1))


def test_all_plus_gives_zero():
    assert compute_m(A2_TWISTED, SignVector.from_string("+++")).m == (0, 0, 0)


def test_compute_m_worked_example():
    mv = compute_m(A2_TWISTED, SignVector.from_string("-+-"))
    assert mv.m == (-2, 0, 2)
    assert mv.min_entry == -2


def test_length_two_closed_form():
    d = TwistData(n=2, c={(1, 2): 2}, ell=(4, 4))
    mv = compute_m(d, SignVector.from_string("--"))
    assert mv.m[0] == 4 * (1 - 2)


def test_compute_m_length_mismatch():
    with pytest.raises(DimensionMismatch):
        compute_m(A2_TWISTED, SignVector.from_string("--"))


def test_untwisted_avoiding_example():
    d = derived("A3", (1, 2, 3, 1, 2, 1), (0, 0, 3))
    assert is_untwisted(d).untwisted


def test_twisted_with_canonical_witness():
    res = is_untwisted(A2_TWISTED)
    assert not res.untwisted
    assert str(res.sigma) == "-+-"
    assert res.k == 1
    assert res.m.m == (-2, 0, 2)
    assert res.to_json() == {"untwisted": False, "sigma": "-+-", "k": 1, "m": [-2, 0, 2]}


def test_zero_weight_untwisted():
    d = derived("G2", (1, 2, 1, 2), (0, 0))
    res = is_untwisted(d)
    assert res.untwisted
    assert res.to_json() == {"untwisted": True}


def test_cap_exceeded():
    d = TwistData(n=3, c={}, ell=(0, 0, 0))
    with pytest.raises(CapExceeded):
        is_untwisted(d, cap=2)


def test_witness_sigma_simple_chain():
    d = derived("A3", (1, 1, 2, 3), (0, 0, 1))
    sigma, mv = witness_sigma_from_walk(d, (1, 2, 3, 4))
    assert str(sigma) == "----"
    assert mv.m == (-1, 1, 1, 1)
    assert mv.m[0] == -d.ell[3]


def test_witness_sigma_type_B_against_arrow():
    d = derived("B3", (3, 3, 2, 1), (1, 0, 0))
    _, mv = witness_sigma_from_walk(d, (1, 2, 3, 4))
    assert mv.m[0] == -2 * d.ell[3] == -2


def test_witness_sigma_type_G():
    d = derived("G2", (1, 1, 2), (0, 1))
    _, mv = witness_sigma_from_walk(d, (1, 2, 3))
    assert mv.m[0] == -3
    assert mv.m[0] < 0


def test_witness_sigma_length_two():
    d = derived("A2", (1, 2, 1), (2, 1))
    sigma, mv = witness_sigma_from_walk(d, (1, 3))
    assert str(sigma) == "-+-"
    assert mv.m[0] == 2 * (1 - 2)


def test_witness_sigma_rejects_non_minimal():
    # Interior letter appears in the weight: minimality precondition fails.
    d = derived("A3", (1, 1, 2, 3), (0, 1, 1))
    with pytest.raises(NotMinimalWitness):
        witness_sigma_from_walk(d, (1, 2, 3, 4))
    # Raw instance whose repetition entry is below 2.
    with pytest.raises(NotMinimalWitness):
        witness_sigma_from_walk(TwistData(n=2, c={(1, 2): 1}, ell=(3, 5)), (1, 2))
    with pytest.raises(NotMinimalWitness):
        witness_sigma_from_walk(A2_TWISTED, (3, 1))


def test_hesitant_walk_from_twist_witness_examples():
    w = Word((1, 2, 1))
    rebuilt = hesitant_walk_from_twist_witness(A2_TWISTED, w, SignVector.from_string("-+-"), 1)
    assert rebuilt.positions == (1, 3)
    assert rebuilt.subword == (1, 1)

    d = derived("A3", (1, 1, 2, 3), (0, 0, 1))
    rebuilt = hesitant_walk_from_twist_witness(
        d, Word((1, 1, 2, 3)), SignVector.from_string("----"), 1
    )
    assert rebuilt.positions == (1, 2, 3, 4)


def test_hesitant_walk_precondition():
    with pytest.raises(PreconditionViolated):
        hesitant_walk_from_twist_witness(
            A2_TWISTED, Word((1, 2, 1)), SignVector.from_string("+++"), 1
        )


def test_maximal_failing_index():
    assert maximal_failing_index(A2_TWISTED, SignVector.from_string("-+-")) == 1
    with pytest.raises(PreconditionViolated):
        maximal_failing_index(A2_TWISTED, SignVector.from_string("+++"))


def test_round_trip_witness_revalidates():
    t = parse_lie_type("B3")
    w = Word((3, 1, 3, 2, 1))
    lam = DominantWeight((1, 0, 0))
    d = derive_twist_data(t, w, lam)
    res = is_untwisted(d)
    assert not res.untwisted
    k = maximal_failing_index(d, res.sigma)
    rebuilt = hesitant_walk_from_twist_witness(d, w, res.sigma, k)
    assert is_hesitant_lambda_walk(t, Word(rebuilt.subword), lam)


def _raw(args):
    n, ell, cvals = args
    keys = [(j, k) for j in range(1, n + 1) for k in range(j + 1, n + 1)]
    return TwistData(n=n, c=dict(zip(keys, cvals)), ell=tuple(ell))


def raw_twist_data(max_n=5, bound=3):
    return st.integers(1, max_n).flatmap(
        lambda n: st.tuples(
            st.just(n),
            st.lists(st.integers(-bound, bound), min_size=n, max_size=n),
            st.lists(
                st.integers(-bound, bound),
                min_size=n * (n - 1) // 2,
                max_size=n * (n - 1) // 2,
            ),
        )
    ).map(_raw)


@given(raw_twist_data(), st.data())
def test_m_depends_only_on_suffix(d, data):
    k = data.draw(st.integers(1, d.n))
    signs = tuple(data.draw(st.sampled_from("+-")) for _ in range(d.n))
    base = compute_m(d, SignVector(signs)).m
    # Perturb everything strictly below k: prefix signs, prefix ells, and
    # c entries whose first index is below k.
    new_signs = tuple(
        data.draw(st.sampled_from("+-")) if p < k - 1 else signs[p] for p in range(d.n)
    )
    new_ell = tuple(
        data.draw(st.integers(-3, 3)) if p < k - 1 else d.ell[p] for p in range(d.n)
    )
    new_c = {
        key: (data.draw(st.integers(-3, 3)) if key[0] < k else value)
        for key, value in d.c.items()
    }
    perturbed = compute_m(TwistData(n=d.n, c=new_c, ell=new_ell), SignVector(new_signs)).m
    assert perturbed[k - 1 :] == base[k - 1 :]


@settings(max_examples=80)
@given(raw_twist_data(), st.data())
def test_single_minus_gives_ell(d, data):
    k = data.draw(st.integers(1, d.n))
    mv = compute_m(d, SignVector.minus_at(d.n, [k]))
    assert mv.m[k - 1] == d.ell[k - 1]
    assert all(v == 0 for p, v in enumerate(mv.m, start=1) if p != k)


def test_cartier_vector_zero_on_plus():
    for d in (A2_TWISTED, derived("G2", (1, 1, 2), (0, 1))):
        import itertools

        for raw in itertools.product("+-", repeat=d.n):
            mv = compute_m(d, SignVector(raw))
            assert all(
                m == 0 for s, m in zip(raw, mv.m) if s == "+"
            ), CartierVector(mv.m)
