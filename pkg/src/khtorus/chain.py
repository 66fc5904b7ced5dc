"""Chain complexes of the cube of resolutions.

``build_complex`` assembles the full differential of a diagram for a given
Frobenius algebra.  Generators are enhanced states, ordered by state integer
and then by label mask (see ``cube``), and carry the unshifted bigrading
``i = weight``, ``j = weight + #ONE - #X``.  The edge along crossing ``k`` gets
the sign ``(-1)^(number of 1-smoothings among crossings 0..k-1)``.

Two independent builders exist: a vectorised one over ``StateTable`` and a
plain per-state reference one; tests compare them entry by entry.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, Optional

import numpy as np

from .algebra import FrobeniusSpec, Label, SparseIntMatrix, frobenius_tables
from .cube import (EdgeKind, MAX_CROSSINGS, StateTable, basis, circles, edge_map_kind,
                   enumerate_states, _check_cap)
from .diagram import LinkDiagram

RAW_CROSSING_CAP = 14


@dataclass
class BigradedComplex:
    """Generators with (i, j) and one global differential (rows = targets).

    For a q-homogeneous algebra the differential preserves ``j``; otherwise
    (Lee) only ``j mod 4`` is preserved and blocks are split by that class.
    """
    spec: str
    gi: np.ndarray
    gj: np.ndarray
    d: SparseIntMatrix
    homogeneous: bool
    n_plus: int = 0
    n_minus: int = 0
    n_components: int = 0
    reduced: bool = False

    @property
    def n_generators(self) -> int:
        return len(self.gi)

    @property
    def gkey(self) -> np.ndarray:
        return self.gj if self.homogeneous else np.mod(self.gj, 4)

    def ranks(self) -> dict[tuple[int, int], int]:
        """Chain group ranks per bidegree."""
        if not len(self.gi):
            return {}
        keys, counts = np.unique(np.stack([self.gi, self.gj]), axis=1, return_counts=True)
        return {(int(a), int(b)): int(c) for (a, b), c in zip(keys.T, counts)}

    def check_d_squared(self) -> bool:
        return (self.d @ self.d).is_zero()

    def check_degrees(self) -> bool:
        """Differential raises i by one; j is preserved (or moves by 0 or 4)."""
        if not self.d.nnz:
            return True
        r, c = self.d.row_idx, self.d.col_idx
        if not np.all(self.gi[r] == self.gi[c] + 1):
            return False
        dj = self.gj[r] - self.gj[c]
        if self.homogeneous:
            return bool(np.all(dj == 0))
        return bool(np.all((dj == 0) | (dj == 4)))

    @cached_property
    def _grouping(self):
        gi, gk = self.gi, self.gkey
        N = len(gi)
        order = np.lexsort((np.arange(N), gk, gi))
        si, sk = gi[order], gk[order]
        brk = np.ones(N, bool)
        if N:
            brk[1:] = (si[1:] != si[:-1]) | (sk[1:] != sk[:-1])
        starts = np.nonzero(brk)[0]
        sizes = np.diff(np.append(starts, N))
        gid = np.cumsum(brk) - 1
        local = np.empty(N, np.int64)
        local[order] = np.arange(N) - starts[gid]
        group_of = np.empty(N, np.int64)
        group_of[order] = gid
        keys = [(int(si[s]), int(sk[s])) for s in starts]
        return keys, sizes, local, group_of

    def group_sizes(self) -> dict[tuple[int, int], int]:
        keys, sizes, _, _ = self._grouping
        return {k: int(s) for k, s in zip(keys, sizes)}

    def blocks(self) -> dict[tuple[int, int], SparseIntMatrix]:
        """(i, key) -> matrix from generators at (i, key) to (i+1, key)."""
        keys, sizes, local, group_of = self._grouping
        size = {k: int(s) for k, s in zip(keys, sizes)}
        out = {}
        r, c, v = self.d.row_idx, self.d.col_idx, self.d.data
        src_group = group_of[c]
        order = np.argsort(src_group, kind="stable")
        bounds = np.searchsorted(src_group[order], np.arange(len(keys) + 1))
        for g, (i, k) in enumerate(keys):
            sel = order[bounds[g]:bounds[g + 1]]
            rows = size.get((i + 1, k), 0)
            out[(i, k)] = SparseIntMatrix(rows, size[(i, k)], local[r[sel]], local[c[sel]],
                                          v[sel], check=False)
        return out


def _popcount_prefix(states: np.ndarray, n: int, k: int) -> np.ndarray:
    """Number of 1-smoothings among crossings 0..k-1 (the top k bits)."""
    top = states >> (n - k) if k else np.zeros_like(states)
    cnt = np.zeros_like(states)
    while k > 0:
        cnt += top & 1
        top >>= 1
        k -= 1
    return cnt


def crossing_entries(tab: StateTable, spec: FrobeniusSpec, k: int):
    """Differential entries along crossing ``k``: (target, source, value) arrays."""
    n = tab.n
    bit = tab.crossing_bit(k)
    src = tab.states[(tab.states & bit) == 0]
    if not len(src):
        e = np.zeros(0, np.int64)
        return e, e, e
    tgt = src | bit
    sign = 1 - 2 * (_popcount_prefix(src, n, k) & 1)
    a, b, c, _ = tab.slots[k]
    ca, cc = tab.circle[src, a], tab.circle[src, c]
    merge = ca != cc
    cs = tab.count[src]
    cmax = int(cs.max())
    root = tab.root_edge[src, :cmax]
    live = np.arange(cmax)[None, :] < cs[:, None]
    phi = np.where(live, tab.circle[tgt[:, None], root], 0)
    ng = np.int64(1) << cs
    e_src = np.repeat(np.arange(len(src)), ng)
    mask = np.arange(int(ng.sum()), dtype=np.int64) - np.repeat(np.cumsum(ng) - ng, ng)
    ph = phi[e_src]
    tm = np.zeros(len(mask), np.int64)
    for x in range(cmax):
        tm |= ((mask >> x) & 1) << ph[:, x]
    A, C = ca[e_src], cc[e_src]
    la = (mask >> A) & 1
    lc = (mask >> C) & 1
    mg = merge[e_src]
    T = tgt[e_src]
    gsrc = tab.offset[src[e_src]] + mask
    toff = tab.offset[T]
    sg = sign[e_src]
    rows, cols, vals = [], [], []
    # merge: both circles land on z
    z = ph[np.arange(len(mask)), A]
    base_m = tm & ~(np.int64(1) << z)
    for (u, w), out in spec.mult.items():
        sel = mg & (la == int(u)) & (lc == int(w))
        for lab, coef in out.items():
            rows.append(toff[sel] + (base_m[sel] | (np.int64(int(lab)) << z[sel])))
            cols.append(gsrc[sel])
            vals.append(coef * sg[sel])
    # split: circle through slot a and the one through slot b in the target
    xa = tab.circle[T, a]
    yb = tab.circle[T, b]
    base_s = tm & ~((np.int64(1) << xa) | (np.int64(1) << yb))
    for u, out in spec.comult.items():
        sel = ~mg & (la == int(u))
        for (lx, ly), coef in out.items():
            rows.append(toff[sel] + (base_s[sel] | (np.int64(int(lx)) << xa[sel])
                                     | (np.int64(int(ly)) << yb[sel])))
            cols.append(gsrc[sel])
            vals.append(coef * sg[sel])
    return np.concatenate(rows), np.concatenate(cols), np.concatenate(vals).astype(np.int64)


def build_complex(d: LinkDiagram, spec: FrobeniusSpec | str = "KHOVANOV", *,
                  method: str = "vectorized", check: bool = True,
                  cap: int = RAW_CROSSING_CAP) -> BigradedComplex:
    if isinstance(spec, str):
        spec = frobenius_tables(spec)
    if d.n_crossings > cap:
        from .cube import CrossingCapError
        raise CrossingCapError(
            f"{d.n_crossings} crossings exceeds the raw cap of {cap}; "
            "rerun with --reduce (reduce=True) for the reduced pipeline")
    if method == "vectorized":
        cx = _build_vectorized(d, spec)
    elif method == "reference":
        cx = _build_reference(d, spec)
    else:
        raise ValueError(f"unknown build method {method!r}")
    if check:
        if not cx.check_d_squared():
            raise ArithmeticError("construction bug: d^2 != 0")
        if not cx.check_degrees():
            raise ArithmeticError("construction bug: differential has the wrong degree")
    return cx


def _build_vectorized(d: LinkDiagram, spec: FrobeniusSpec) -> BigradedComplex:
    tab = StateTable(d)
    _, _, gi, gj = tab.generators()
    N = tab.n_generators
    parts = [crossing_entries(tab, spec, k) for k in range(d.n_crossings)]
    if parts:
        r = np.concatenate([p[0] for p in parts])
        c = np.concatenate([p[1] for p in parts])
        v = np.concatenate([p[2] for p in parts])
    else:
        r = c = v = np.zeros(0, np.int64)
    D = SparseIntMatrix(N, N, r, c, v, check=False)
    return BigradedComplex(spec.name, gi, gj, D, spec.q_homogeneous, d.n_plus, d.n_minus,
                           d.n_components)


def _build_reference(d: LinkDiagram, spec: FrobeniusSpec) -> BigradedComplex:
    """One state at a time, from circle memberships and the algebra tables."""
    index: dict = {}
    gi, gj = [], []
    cache = {}
    for s in enumerate_states(d):
        cache[s] = circles(d, s)
        for g in basis(d, s):
            index[(s, g.mask)] = len(gi)
            gi.append(g.grading.i)
            gj.append(g.grading.j)
    entries: dict = {}
    for s in cache:
        cs = cache[s]
        for k, b in enumerate(s.bits):
            if b:
                continue
            t = s.flip(k)
            ct = cache[t]
            sign = -1 if sum(s.bits[:k]) % 2 else 1
            cr = d.crossings[k]
            kind = edge_map_kind(d, s, k)
            # where each source circle goes: follow any edge on it
            dest = {}
            for e, x in cs.circle_of.items():
                dest.setdefault(x, ct.circle_of[e])
            for mask in range(1 << cs.count):
                lab = {x: Label((mask >> x) & 1) for x in range(cs.count)}
                if kind is EdgeKind.MERGE:
                    x, y = cs.circle_of[cr.slots[0]], cs.circle_of[cr.slots[2]]
                    z = ct.circle_of[cr.slots[0]]
                    rest = {dest[w]: l for w, l in lab.items() if w not in (x, y)}
                    outs = [({z: o}, coef) for o, coef in spec.m(lab[x], lab[y]).items()]
                else:
                    x = cs.circle_of[cr.slots[0]]
                    u, w = ct.circle_of[cr.slots[0]], ct.circle_of[cr.slots[1]]
                    rest = {dest[v]: l for v, l in lab.items() if v != x}
                    outs = [({u: o1, w: o2}, coef)
                            for (o1, o2), coef in spec.delta(lab[x]).items()]
                for new, coef in outs:
                    full = {**rest, **new}
                    tmask = sum(1 << c for c, l in full.items() if l is Label.X)
                    key = (index[(t, tmask)], index[(s, mask)])
                    entries[key] = entries.get(key, 0) + sign * coef
    N = len(gi)
    D = SparseIntMatrix.from_dict(N, N, entries)
    return BigradedComplex(spec.name, np.array(gi, np.int64), np.array(gj, np.int64), D,
                           spec.q_homogeneous, d.n_plus, d.n_minus, d.n_components)
