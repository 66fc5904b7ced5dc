import itertools

import pytest
from hypothesis import given, strategies as st

from khtorus.polynomial import LaurentPoly2, tq
from khtorus.torusform import (AdmissibleSubset, ZigZag, admissible_subsets, binom, catalan,
                               center_profile, h0_profile, enumerate_zigzags,
                               is_admissible, reflect, stable_constant_part, stable_P2,
                               stable_P3, subset_to_sequence, theorem1_bounds, theorem2_profile,
                               theorem2_rank, theorem3_branch, theorem3_poincare,
                               torus_prime_shift, unreflect, zigzag_count)


def test_binom_values():
    assert binom(4, 2) == 6
    assert binom(4, -1) == 0 and binom(-1, 0) == 0 and binom(3, 4) == 0
    assert binom(6, 3) == 20 == 2 * binom(5, 3)


def test_pascal_fails_only_at_minus_one():
    fails = [(n, k) for n, k in itertools.product(range(-25, 25), repeat=2)
             if binom(n + 1, k + 1) != binom(n, k) + binom(n, k + 1)]
    assert fails == [(-1, -1)]


@given(st.integers(0, 40), st.integers(-5, 45))
def test_binom_symmetry(n, k):
    assert binom(n, k) == binom(n, n - k)


def test_catalan():
    assert [catalan(k) for k in range(7)] == [1, 1, 2, 5, 14, 42, 132]


def test_zigzag_examples():
    assert zigzag_count(0, 2, 4) == 4
    assert sum(1 for z in enumerate_zigzags(0, 4) if z.target == 2) == 4
    assert zigzag_count(0, 4, 4) == 1
    assert zigzag_count(0, 3, 4) == 0
    with pytest.raises(ValueError):
        ZigZag((0, 2))


def test_reflect_examples():
    assert reflect(ZigZag((0, -1, 0, 1, 2))).values == (-2, -1, 0, 1, 2)
    assert reflect(ZigZag((0, 1, 0, -1, 0))).values == (-2, -3, -2, -1, 0)
    with pytest.raises(ValueError):
        reflect(ZigZag((0, 1, 2)))


@given(st.integers(1, 6), st.data())
def test_reflect_is_involution(k, data):
    bad = [z for z in enumerate_zigzags(0, 2 * k) if not z.is_nonnegative()]
    z = data.draw(st.sampled_from(bad))
    r = reflect(z)
    assert r.source == -2 and r.target == z.target
    assert unreflect(r) == z


@pytest.mark.parametrize("k", range(1, 7))
def test_reflection_cardinalities(k):
    for i in range(k + 1):
        t = 2 * k - 2 * i
        bad = {reflect(z).values for z in enumerate_zigzags(0, 2 * k)
               if z.target == t and not z.is_nonnegative()}
        low = {z.values for z in enumerate_zigzags(-2, 2 * k) if z.target == t}
        assert bad == low
        assert len(bad) == binom(2 * k, i - 1)


def test_admissible_examples():
    assert [str(x) for x in admissible_subsets(1)] == ["{}", "{2}"]
    assert [str(x) for x in admissible_subsets(2)] == ["{}", "{2}", "{3}", "{4}", "{2,4}", "{3,4}"]
    assert len(admissible_subsets(3)) == 20
    with pytest.raises(ValueError):
        AdmissibleSubset(1, frozenset({1}))


@pytest.mark.parametrize("k", range(0, 9))
def test_admissible_counts_exhaustive(k):
    brute = {}
    for bits in range(1 << (2 * k)):
        X = {m + 1 for m in range(2 * k) if bits >> m & 1}
        if is_admissible(X, k):
            brute[len(X)] = brute.get(len(X), 0) + 1
    want = {i: binom(2 * k, i) - binom(2 * k, i - 1) for i in range(k + 1)}
    assert brute == want
    gen = {}
    for X in admissible_subsets(k):
        gen[len(X)] = gen.get(len(X), 0) + 1
    assert gen == want


def test_subset_to_sequence():
    assert subset_to_sequence(set(), 2).values == (0, 1, 2, 3, 4)
    assert subset_to_sequence({2, 4}, 2).values == (0, 1, 0, 1, 0)
    z = subset_to_sequence({1}, 1)
    assert z.values == (0, -1, 0) and not z.is_nonnegative()


@given(st.integers(1, 6), st.data())
def test_admissible_iff_nonnegative(k, data):
    X = data.draw(st.sets(st.integers(1, 2 * k)))
    z = subset_to_sequence(X, k)
    assert z.target == 2 * k - 2 * len(X)
    assert is_admissible(X, k) == z.is_nonnegative()


def test_theorem1_bounds():
    assert theorem1_bounds(1, 1) == (2, 6)
    assert theorem1_bounds(2, 1) == (8, 24)
    assert theorem1_bounds(1, 3) == (6, 18)


def test_theorem2_examples():
    assert theorem2_profile(1, 1).ranks == {6: 1, 4: 1}
    assert theorem2_profile(2, 1).ranks == {24: 2, 22: 3, 20: 1}
    assert theorem2_profile(3, 1).ranks == {54: 5, 52: 9, 50: 5, 48: 1}


@given(st.integers(1, 8), st.integers(1, 4))
def test_theorem2_profile_invariants(k, n):
    p = theorem2_profile(k, n)
    assert p.total == binom(2 * k, k)
    assert p.ranks[6 * k * k * n] == catalan(k) == binom(2 * k, k) // (k + 1)
    assert theorem2_rank(k, n, -1) == 0 and theorem2_rank(k, n, k + 1) == 0


def test_corollary_and_center_profiles():
    assert h0_profile(2).ranks == {0: 2, -2: 3, -4: 1}
    assert center_profile(3) == {0: 1, 2: 5, 4: 9, 6: 5}
    assert torus_prime_shift(2, 1) == (8, 24)


def test_theorem3_branches():
    assert theorem3_branch(6) == (2, "3n")
    assert theorem3_branch(5) == (2, "3n-1")
    assert theorem3_branch(4) == (2, "3n-2")
    with pytest.raises(ValueError):
        theorem3_branch(0)


def test_theorem3_small_cases():
    assert theorem3_poincare(1) == tq(0, -1) + tq(0, 1)
    # T(3,2) is the trefoil
    assert theorem3_poincare(2) == tq(0, 1) + tq(0, 3) + tq(2, 5) + tq(3, 9)
    want = (tq(0, 5) + tq(0, 7) + tq(2, 9) + tq(3, 13) + tq(4, 11) + tq(4, 13)
            + tq(5, 15) + tq(5, 17))
    assert theorem3_poincare(4) == want


@given(st.integers(0, 10))
def test_theorem3_branch_boundaries(n):
    diag = lambda q: theorem3_poincare(q).shift(0, -2 * q)
    if n >= 1:
        assert diag(3 * n + 2) - diag(3 * n + 1) == tq(4 * n + 2, 6 * n + 1) + tq(4 * n + 3, 6 * n + 5)
    assert diag(3 * n + 3) - diag(3 * n + 2) == (tq(4 * n + 4, 6 * n + 3) + tq(4 * n + 4, 6 * n + 5, 3)
                                                 + tq(4 * n + 4, 6 * n + 7, 2))


def test_stable_series():
    assert stable_P2(0) == tq(0, 0) + tq(0, -2) + tq(-1, -2) + tq(-2, -6)
    assert stable_constant_part(stable_P3(3)) == tq(0, 1, 2) + tq(0, -1, 3) + tq(0, -3)
    with pytest.raises(ValueError):
        stable_P2(-1)


@given(st.integers(0, 6))
def test_stable_series_truncations_nest(order):
    lo, hi = stable_P2(order), stable_P2(order + 1)
    cut = -2 * order - 2
    assert lo.filter(lambda t, q: t >= cut) == hi.filter(lambda t, q: t >= cut)
