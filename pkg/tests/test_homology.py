import pytest
from hypothesis import given, strategies as st

from khtorus.algebra import AbelianGroupIso
from khtorus.chain import RAW_CROSSING_CAP, build_complex
from khtorus.cube import CrossingCapError
from khtorus.diagram import BraidWord, close_braid, torus_diagram, unknot
from khtorus.homology import (BigradedAbelianGroup, complex_euler, cone_check, delta_width,
                              homology, homology_euler, khovanov_homology, lee_degree_ranks,
                              poincare, skein_euler)
from khtorus.polynomial import tq
from khtorus.reduction import reduced_complex

from conftest import braid_diagrams


def t2_closed_form(m: int) -> dict:
    """Integral homology of the positive (2, m) torus link, written out by hand."""
    g = {(0, m - 2): AbelianGroupIso(1), (0, m): AbelianGroupIso(1)}
    for k in range(2, m + 1):
        if k == m and m % 2 == 0:
            g[(k, 3 * m - 2)] = AbelianGroupIso(1)
            g[(k, 3 * m)] = AbelianGroupIso(1)
        elif k % 2 == 0:
            g[(k, m + 2 * k - 2)] = AbelianGroupIso(1)
        else:
            g[(k, m + 2 * k - 2)] = AbelianGroupIso(0, (2,))
            g[(k, m + 2 * k)] = AbelianGroupIso(1)
    return g


@pytest.mark.parametrize("m", range(1, 9))
def test_t2m_closed_form(m):
    assert khovanov_homology(torus_diagram(2, m)).groups == t2_closed_form(m)


def test_unknot_and_kinks():
    want = {(0, 1): AbelianGroupIso(1), (0, -1): AbelianGroupIso(1)}
    for d in (unknot(), close_braid(BraidWord(2, (1,))), close_braid(BraidWord(2, (-1,)))):
        assert khovanov_homology(d).groups == want


def test_t34_torsion():
    h = khovanov_homology(torus_diagram(3, 4))
    assert h[(3, 11)] == AbelianGroupIso(0, (2,))
    assert h.rationalized() == khovanov_homology(torus_diagram(3, 4), "Q")


def test_json_round_trip():
    h = khovanov_homology(torus_diagram(3, 4))
    assert BigradedAbelianGroup.from_json(h.dumps()) == h
    assert BigradedAbelianGroup.from_json(h.to_json()).dumps() == h.dumps()


def test_q_ring_rejects_torsion():
    with pytest.raises(ValueError):
        BigradedAbelianGroup({(0, 0): AbelianGroupIso(0, (2,))}, "Q")


def test_delta_width():
    assert delta_width(khovanov_homology(torus_diagram(2, 3))) == 2
    with pytest.raises(ValueError):
        delta_width(BigradedAbelianGroup())


def test_raw_cap_message():
    with pytest.raises(CrossingCapError, match="--reduce"):
        build_complex(torus_diagram(2, RAW_CROSSING_CAP + 1))


def test_reference_builder_matches():
    for d in (torus_diagram(2, 3), torus_diagram(3, 3)):
        for spec in ("KHOVANOV", "LEE"):
            a = build_complex(d, spec)
            b = build_complex(d, spec, method="reference")
            assert a.d == b.d and (a.gi == b.gi).all() and (a.gj == b.gj).all()


@given(braid_diagrams(max_len=7))
def test_d_squared_and_degrees(d):
    for spec in ("KHOVANOV", "LEE"):
        c = build_complex(d, spec, check=False)
        assert c.check_d_squared()
        assert c.check_degrees()


@given(braid_diagrams(max_len=7))
def test_euler_characteristic_three_ways(d):
    h = khovanov_homology(d, shifted=False)
    chi = skein_euler(d)
    assert homology_euler(h) == chi
    assert complex_euler(build_complex(d)) == chi


@given(braid_diagrams(max_len=8))
def test_reduced_matches_raw_over_z(d):
    raw = homology(build_complex(d), "Z")
    red = homology(reduced_complex(d), "Z")
    assert raw == red


@given(braid_diagrams(max_len=7))
def test_lee_total_rank(d):
    ranks = lee_degree_ranks(d)
    assert sum(ranks.values()) == 2 ** d.n_components
    assert ranks == lee_degree_ranks(d, reduce=True)


@given(braid_diagrams(max_len=6), st.data())
def test_cone_check_every_diagram(d, data):
    if not d.crossings:
        return
    c = data.draw(st.sampled_from([x.id for x in d.crossings]))
    assert cone_check(d, c).passed


def test_poincare_t34():
    want = (tq(0, 5) + tq(0, 7) + tq(2, 9) + tq(3, 13) + tq(4, 11) + tq(4, 13)
            + tq(5, 15) + tq(5, 17))
    assert poincare(khovanov_homology(torus_diagram(3, 4), "Q")) == want
