import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from khtorus.archring import (ArcBasisElement, ArcRing, ArcRingElement, CrossinglessMatching,
                              center, enumerate_matchings, glue_circles)
from khtorus.torusform import catalan


@pytest.mark.parametrize("k", range(0, 7))
def test_matching_count(k):
    ms = enumerate_matchings(k)
    assert len(ms) == catalan(k)
    assert [m.parens() for m in ms] == sorted(m.parens() for m in ms)
    for m in ms:
        assert CrossinglessMatching.from_parens(m.parens()) == m


def test_bad_matchings():
    with pytest.raises(ValueError):
        CrossinglessMatching.from_parens("(()")
    with pytest.raises(ValueError):
        CrossinglessMatching(2, (2, 3, 0, 1))     # crossing arcs


def test_glue_circles():
    a = CrossinglessMatching.from_parens("(())")
    b = CrossinglessMatching.from_parens("()()")
    assert glue_circles(a, a) == [(0, 3), (1, 2)]
    assert glue_circles(a, b) == [(0, 1, 2, 3)]


@pytest.mark.parametrize("k,dim", [(1, 2), (2, 12), (3, 104)])
def test_dimension(k, dim):
    assert ArcRing(k).dimension == dim


@pytest.mark.parametrize("k", [1, 2, 3])
def test_axioms(k):
    assert ArcRing(k).axiom_failures() == []


def test_contraction_orders_agree():
    left, right = ArcRing(2, order="left"), ArcRing(2, order="right")
    for a, b, c in itertools.product(left.matchings, repeat=3):
        assert np.array_equal(left.tensor(a, b, c), right.tensor(a, b, c))


def test_idempotents_degree_zero():
    R = ArcRing(2)
    for a in R.matchings:
        e = R.idempotent(a)
        assert e.degree == 0
        assert R.element(e) * R.element(e) == R.element(e)


@pytest.mark.parametrize("k,ranks", [(1, {0: 1, 2: 1}), (2, {0: 1, 2: 3, 4: 2}),
                                     (3, {0: 1, 2: 5, 4: 9, 6: 5})])
def test_center_ranks(k, ranks):
    res = center(k)
    assert res.ranks == ranks


def test_center_guard():
    with pytest.raises(ValueError):
        center(5)


@pytest.mark.parametrize("k", [1, 2])
def test_center_elements_commute(k):
    R = ArcRing(k)
    res = center(k)
    for deg, vecs in res.basis.items():
        xs = res.unknowns[deg]
        for v in vecs:
            z = ArcRingElement(R, {x: c for x, c in zip(xs, v) if c})
            for y in R.basis():
                w = R.element(y)
                assert z * w == w * z


@given(st.data())
def test_multiplication_degree_additive(data):
    R = ArcRing(2)
    B = R.basis()
    x = data.draw(st.sampled_from(B))
    y = data.draw(st.sampled_from(B))
    prod = R.multiply_basis(x, y)
    for z in prod.coeffs:
        assert z.degree == x.degree + y.degree
