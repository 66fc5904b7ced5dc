import json
from math import gcd

import pytest
from hypothesis import given, strategies as st

from khtorus.diagram import (BraidWord, close_braid, parse_braid, resolve, reverse_orientation,
                             torus_braid, torus_diagram, torus_prime_diagram, unknot)

from conftest import braid_diagrams, braid_words


def test_parse_braid_round_trip():
    w = parse_braid("1 -2 1", 3)
    assert w.letters == (1, -2, 1)
    assert str(w) == "1 -2 1"
    with pytest.raises(ValueError):
        parse_braid("1 x", 3)
    with pytest.raises(ValueError):
        parse_braid("3", 3)
    with pytest.raises(ValueError):
        parse_braid("0", 3)


def test_torus_braid_word():
    assert torus_braid(3, 2).letters == (1, 2, 1, 2)
    with pytest.raises(ValueError):
        torus_braid(0, 1)


@pytest.mark.parametrize("p,q", [(2, 1), (2, 2), (2, 5), (3, 3), (3, 4), (4, 4), (4, 6)])
def test_torus_components(p, q):
    d = torus_diagram(p, q)
    assert d.n_crossings == (p - 1) * q
    assert d.n_components == gcd(p, q)
    assert d.n_minus == 0 and d.n_plus == d.n_crossings


def test_unknot_and_kink():
    assert unknot().n_components == 1 and unknot().n_crossings == 0
    kink = close_braid(BraidWord(2, (1,)))
    assert kink.n_components == 1 and kink.n_plus == 1


@pytest.mark.parametrize("k,n", [(1, 1), (1, 2), (2, 1)])
def test_torus_prime_signs(k, n):
    d = torus_prime_diagram(2 * k, 2 * k * n)
    assert (d.n_plus, d.n_minus) == (2 * k * (k - 1) * n, 2 * k * k * n)


def test_crossing_positions():
    d = torus_diagram(3, 2)
    assert d.crossing_at(2, 1).position == (2, 1)
    assert d.crossing_at(1, 2).position == (1, 2)
    with pytest.raises(KeyError):
        d.crossing_at(3, 1)


def test_resolve_hopf_link():
    d = torus_diagram(2, 2)
    c = d.crossings[0].id
    d0, d1 = resolve(d, c, 0), resolve(d, c, 1)
    assert d0.n_crossings == d1.n_crossings == 1
    assert d0.n_components == d1.n_components == 1
    # the two resolutions are the two kinks, of opposite sign
    assert sorted([d0.n_plus, d1.n_plus]) == [0, 1]


def test_canonical_is_json_and_stable():
    a, b = torus_diagram(3, 4), torus_diagram(3, 4)
    assert a.canonical() == b.canonical()
    json.loads(a.canonical())
    assert a.canonical() != torus_diagram(3, 5).canonical()


@given(braid_words())
def test_components_match_permutation_cycles(w):
    d = close_braid(w)
    assert d.n_components == w.cycle_count()
    assert d.n_crossings == len(w)
    assert d.signs == tuple(1 if l > 0 else -1 for l in w.letters)


@given(braid_diagrams(), st.data())
def test_reversing_everything_keeps_signs(d, data):
    r = reverse_orientation(d, d.component_ids)
    assert r.signs == d.signs
    one = data.draw(st.sampled_from(d.component_ids))
    assert reverse_orientation(reverse_orientation(d, [one]), [one]).signs == d.signs


@given(braid_diagrams(max_len=6), st.data())
def test_resolution_drops_one_crossing(d, data):
    if not d.crossings:
        return
    c = data.draw(st.sampled_from([x.id for x in d.crossings]))
    for r in (0, 1):
        e = resolve(d, c, r)
        assert e.n_crossings == d.n_crossings - 1
        assert abs(e.n_components - d.n_components) <= 1
