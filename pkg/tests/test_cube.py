import numpy as np
import pytest
from hypothesis import given

from khtorus.cube import (MAX_CROSSINGS, CrossingCapError, EdgeKind, ResolutionState,
                          StateTable, basis, circles, edge_map_kind, enumerate_states)
from khtorus.diagram import torus_diagram, unknot

from conftest import braid_diagrams


def test_state_int_round_trip():
    s = ResolutionState((1, 0, 1, 1))
    assert s.as_int() == 0b1011
    assert ResolutionState.from_int(0b1011, 4) == s
    assert s.flip(1).bits == (1, 1, 1, 1)
    assert s.weight == 3


def test_hopf_circles_and_edges():
    d = torus_diagram(2, 2)
    counts = [circles(d, s).count for s in enumerate_states(d)]
    # 00 -> two circles, 01 and 10 -> one, 11 -> two
    assert counts == [2, 1, 1, 2]
    s00 = ResolutionState((0, 0))
    assert edge_map_kind(d, s00, 0) is EdgeKind.MERGE
    assert edge_map_kind(d, ResolutionState((1, 0)), 1) is EdgeKind.SPLIT
    with pytest.raises(ValueError):
        edge_map_kind(d, ResolutionState((1, 0)), 0)


def test_basis_gradings_unknot():
    b = basis(unknot(), ResolutionState(()))
    assert sorted((e.grading.i, e.grading.j) for e in b) == [(0, -1), (0, 1)]


def test_cap():
    d = torus_diagram(2, MAX_CROSSINGS + 1)
    with pytest.raises(CrossingCapError):
        next(enumerate_states(d))


@given(braid_diagrams(max_len=6))
def test_state_table_matches_reference(d):
    tab = StateTable(d)
    gs, gm, gi, gj = tab.generators()
    ref = []
    for s in enumerate_states(d):
        for e in basis(d, s):
            ref.append((s.as_int(), e.mask, e.grading.i, e.grading.j))
    got = sorted(zip(gs.tolist(), gm.tolist(), gi.tolist(), gj.tolist()))
    assert got == sorted(ref)


@given(braid_diagrams(max_len=6))
def test_merge_split_changes_circle_count(d):
    for s in enumerate_states(d):
        for k in range(d.n_crossings):
            if s.bits[k]:
                continue
            a, b = circles(d, s).count, circles(d, s.flip(k)).count
            kind = edge_map_kind(d, s, k)
            assert b - a == (-1 if kind is EdgeKind.MERGE else 1)
