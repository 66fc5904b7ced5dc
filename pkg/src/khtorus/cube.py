"""The cube of resolutions: states, circles, enhanced states and edge types.

Two routes are provided.  The object-level functions (``enumerate_states``,
``circles``, ``basis``, ``edge_map_kind``) work one state at a time and are the
reference implementation.  ``StateTable`` computes the same data for all states
at once with numpy and is what the fast complex builder uses.

State encoding: crossing ``k`` (in diagram order) is bit ``n-1-k`` of the state
integer, so integer order coincides with lexicographic order of bit tuples.
Circles in a state are numbered by their smallest edge id.  Within a state,
enhanced states are ordered by the label mask, bit ``x`` set meaning circle
``x`` carries the label X.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .algebra import Label
from .diagram import SMOOTHINGS, LinkDiagram, _UnionFind

MAX_CROSSINGS = 30


class CrossingCapError(ValueError):
    pass


class EdgeKind(enum.Enum):
    MERGE = "merge"
    SPLIT = "split"


@dataclass(frozen=True)
class Bigrading:
    i: int
    j: int


@dataclass(frozen=True)
class ResolutionState:
    bits: tuple[int, ...]

    @property
    def weight(self) -> int:
        return sum(self.bits)

    def as_int(self) -> int:
        v = 0
        for b in self.bits:
            v = (v << 1) | b
        return v

    @classmethod
    def from_int(cls, value: int, n: int) -> "ResolutionState":
        return cls(tuple((value >> (n - 1 - k)) & 1 for k in range(n)))

    def flip(self, k: int) -> "ResolutionState":
        b = list(self.bits)
        b[k] ^= 1
        return ResolutionState(tuple(b))

    def __str__(self):
        return "".join(map(str, self.bits))


@dataclass(frozen=True)
class CircleSet:
    count: int
    circle_of: dict          # edge id -> circle id

    def members(self, cid: int) -> tuple[int, ...]:
        return tuple(sorted(e for e, c in self.circle_of.items() if c == cid))


@dataclass(frozen=True)
class EnhancedState:
    state: ResolutionState
    labels: tuple[Label, ...]      # indexed by circle id

    @property
    def mask(self) -> int:
        return sum(1 << x for x, l in enumerate(self.labels) if l is Label.X)

    @property
    def grading(self) -> Bigrading:
        w = self.state.weight
        n_one = sum(1 for l in self.labels if l is Label.ONE)
        return Bigrading(w, w + n_one - (len(self.labels) - n_one))


def _check_cap(d: LinkDiagram, cap: int = MAX_CROSSINGS):
    if d.n_crossings > cap:
        raise CrossingCapError(
            f"{d.n_crossings} crossings exceeds the cap of {cap}; use the reduced pipeline")


def enumerate_states(d: LinkDiagram) -> Iterator[ResolutionState]:
    """All 2^n states in increasing binary order (crossing 0 most significant)."""
    _check_cap(d)
    n = d.n_crossings
    for v in range(1 << n):
        yield ResolutionState.from_int(v, n)


def circles(d: LinkDiagram, s: ResolutionState) -> CircleSet:
    if len(s.bits) != d.n_crossings:
        raise ValueError("state length does not match crossing count")
    uf = _UnionFind(d.edges)
    for c, b in zip(d.crossings, s.bits):
        for x, y in SMOOTHINGS[b]:
            uf.union(c.slots[x], c.slots[y])
    roots = sorted({uf.find(e) for e in d.edges})
    cid = {r: k for k, r in enumerate(roots)}
    return CircleSet(len(roots), {e: cid[uf.find(e)] for e in d.edges})


def basis(d: LinkDiagram, s: ResolutionState) -> list[EnhancedState]:
    m = circles(d, s).count
    out = []
    for mask in range(1 << m):
        labels = tuple(Label.X if (mask >> x) & 1 else Label.ONE for x in range(m))
        out.append(EnhancedState(s, labels))
    return out


def edge_map_kind(d: LinkDiagram, s: ResolutionState, k: int) -> EdgeKind:
    """Type of the cube edge leaving ``s`` along crossing index ``k``."""
    if s.bits[k] != 0:
        raise ValueError(f"crossing {k} is already 1-resolved in state {s}")
    cs = circles(d, s)
    c = d.crossings[k]
    return EdgeKind.MERGE if cs.circle_of[c.slots[0]] != cs.circle_of[c.slots[2]] \
        else EdgeKind.SPLIT


class StateTable:
    """Circle data for every state of a diagram, computed with numpy.

    Attributes
    ----------
    edges : sorted edge ids; column e of ``circle`` refers to ``edges[e]``
    slots : (n, 4) crossing slots as column indices into ``edges``
    count : (S,) number of circles per state
    circle : (S, E) circle id of each edge in each state
    weight : (S,) number of 1-smoothings
    """

    def __init__(self, d: LinkDiagram, cap: int = MAX_CROSSINGS):
        _check_cap(d, cap)
        self.n = n = d.n_crossings
        self.edges = np.array(d.edges, dtype=np.int64)
        col = {e: k for k, e in enumerate(d.edges)}
        E = len(self.edges)
        self.slots = np.array([[col[e] for e in c.slots] for c in d.crossings],
                              dtype=np.int64).reshape(n, 4)
        S = 1 << n
        self.states = st = np.arange(S, dtype=np.int64)
        self.bit = [((st >> (n - 1 - k)) & 1).astype(bool) for k in range(n)]
        self.weight = np.zeros(S, np.int64)
        for b in self.bit:
            self.weight += b
        dtype = np.int16 if E < 2 ** 15 else np.int32
        lab = np.tile(np.arange(E, dtype=dtype), (S, 1))
        # propagate the minimum edge label along every smoothing arc
        changed = True
        while changed:
            changed = False
            for k in range(n):
                a, b, c, dd = self.slots[k]
                for (x0, y0), (x1, y1) in ((( a, b), (a, dd)), ((c, dd), (b, c))):
                    x = np.where(self.bit[k], x1, x0)
                    y = np.where(self.bit[k], y1, y0)
                    lx, ly = lab[st, x], lab[st, y]
                    ne = lx != ly
                    if ne.any():
                        changed = True
                        m = np.minimum(lx, ly)
                        lab[st, x] = m
                        lab[st, y] = m
            lab = np.take_along_axis(lab, lab.astype(np.int64), axis=1)
        root = lab == np.arange(E, dtype=dtype)[None, :]
        self.count = root.sum(axis=1).astype(np.int64)
        cid = np.cumsum(root, axis=1, dtype=np.int64) - 1
        self.circle = np.take_along_axis(cid, lab.astype(np.int64), axis=1)
        # representative (smallest) edge column of each circle
        self.max_circles = int(self.count.max()) if S else 0
        self.root_edge = np.zeros((S, max(self.max_circles, 1)), np.int64)
        ss, ee = np.nonzero(root)
        self.root_edge[ss, cid[ss, ee]] = ee
        self.offset = np.zeros(S + 1, np.int64)
        np.cumsum(np.int64(1) << self.count, out=self.offset[1:])

    @property
    def n_generators(self) -> int:
        return int(self.offset[-1])

    def generators(self):
        """(state, mask, i, j) arrays over all enhanced states in basis order."""
        cnt = self.count
        N = self.n_generators
        gs = np.repeat(self.states, np.int64(1) << cnt)
        gm = np.arange(N, dtype=np.int64) - self.offset[gs]
        pc = np.zeros(N, np.int64)
        for b in range(self.max_circles):
            pc += (gm >> b) & 1
        gi = self.weight[gs]
        gj = gi + cnt[gs] - 2 * pc
        return gs, gm, gi, gj

    def crossing_bit(self, k: int) -> int:
        return 1 << (self.n - 1 - k)
