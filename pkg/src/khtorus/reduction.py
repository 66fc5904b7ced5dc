"""Homotopy-preserving reduction of cube complexes by Gaussian cancellation.

If ``Y`` and ``X`` are disjoint generator sets and the block ``D[Y, X]`` is an
invertible signed permutation matrix, the complex is chain homotopy equivalent
over Z to the one on the remaining generators ``K`` with differential

    D'  =  D[K, K] - D[K, X] D[Y, X]^{-1} D[Y, K].

The first round uses a matching known in advance: pair enhanced states across
the first crossing, where every edge map is a merge or split with a unit
component.  This avoids ever holding the full differential in memory.  Later
rounds pick +-1 entries greedily (cheapest by Markowitz count) and drop pairs
until the chosen block is a signed permutation, then apply the formula in one
sparse product.
"""
from __future__ import annotations

import logging
import time

import numpy as np
import scipy.sparse as sp

from .algebra import FrobeniusSpec, Label, SparseIntMatrix, frobenius_tables, _I64_SAFE
from .chain import BigradedComplex, build_complex, crossing_entries
from .cube import CrossingCapError, StateTable
from .diagram import LinkDiagram

log = logging.getLogger(__name__)

REDUCED_CROSSING_CAP = 18

CRITICAL, LOWER, UPPER = 0, 1, 2


def _check_matchable(spec: FrobeniusSpec):
    one, x = Label.ONE, Label.X
    for u in (one, x):
        if spec.mult[(u, one)] != {u: 1}:
            raise ValueError(f"{spec.name}: multiplication by ONE is not the identity")
        ups = [(lx, c) for (lx, ly), c in spec.comult[u].items() if ly is x]
        if len(ups) != 1 or ups[0][1] != 1 or ups[0][0] is not u:
            raise ValueError(f"{spec.name}: comultiplication lacks a unit X-component")


def classify_first_crossing(tab: StateTable, gs: np.ndarray, gm: np.ndarray) -> np.ndarray:
    """Role of each generator in the matching along crossing 0.

    0-side, merge: partnered with its image when the circle at slots c/d is ONE.
    0-side, split: always partnered.
    1-side after a merge: always partnered.
    1-side after a split: partnered when the circle through slot b is X.
    """
    bit = tab.crossing_bit(0)
    a, b, c, _ = tab.slots[0]
    on = (gs & bit) != 0
    src_state = gs & ~bit
    merge_state = tab.circle[:, a] != tab.circle[:, c]
    merge = merge_state[src_state]
    cls = np.empty(len(gs), np.int8)
    lab_c = (gm >> tab.circle[gs, c]) & 1
    lab_b = (gm >> tab.circle[gs, b]) & 1
    cls[~on & merge] = np.where(lab_c[~on & merge] == 0, LOWER, CRITICAL)
    cls[~on & ~merge] = LOWER
    cls[on & merge] = UPPER
    cls[on & ~merge] = np.where(lab_b[on & ~merge] == 1, UPPER, CRITICAL)
    return cls


def _structural_round(d: LinkDiagram, spec: FrobeniusSpec):
    tab = StateTable(d, cap=REDUCED_CROSSING_CAP)
    gs, gm, gi, gj = tab.generators()
    del gs
    gs = np.repeat(tab.states, np.int64(1) << tab.count)
    cls = classify_first_crossing(tab, gs, gm)
    del gs, gm
    N = len(cls)
    K = np.nonzero(cls == CRITICAL)[0]
    Y = np.nonzero(cls == UPPER)[0]
    kidx = np.full(N, -1, np.int64)
    kidx[K] = np.arange(len(K))
    pidx = np.full(N, -1, np.int64)
    pidx[Y] = np.arange(len(Y))
    # the partner of a lower generator is its unique upper target along crossing 0
    r0, c0, v0 = crossing_entries(tab, spec, 0)
    sel = (cls[c0] == LOWER) & (cls[r0] == UPPER)
    pr, pc, pv = r0[sel], c0[sel], v0[sel]
    n_lower = int((cls == LOWER).sum())
    if not (len(pr) == n_lower == len(Y) and np.all(pv == 1)
            and len(np.unique(pr)) == len(pr) and len(np.unique(pc)) == len(pc)):
        raise ArithmeticError("first-crossing matching is not a bijection with unit weights")
    pidx[pc] = pidx[pr]
    parts = {"A": [], "B": [], "C": []}
    for k in range(d.n_crossings):
        r, c, v = (r0, c0, v0) if k == 0 else crossing_entries(tab, spec, k)
        cr, cc = cls[r], cls[c]
        s = (cc == CRITICAL) & (cr == CRITICAL)
        parts["A"].append((kidx[r[s]], kidx[c[s]], v[s]))
        s = (cc == LOWER) & (cr == CRITICAL)
        parts["B"].append((kidx[r[s]], pidx[c[s]], v[s]))
        s = (cc == CRITICAL) & (cr == UPPER)
        parts["C"].append((pidx[r[s]], kidx[c[s]], v[s]))
        del r, c, v
    del r0, c0, v0, tab

    def mat(key, shape):
        p = parts.pop(key)
        return sp.csr_matrix((np.concatenate([x[2] for x in p]),
                              (np.concatenate([x[0] for x in p]),
                               np.concatenate([x[1] for x in p]))), shape=shape, dtype=np.int64)

    nk, ny = len(K), len(Y)
    A = mat("A", (nk, nk))
    B = mat("B", (nk, ny))
    C = mat("C", (ny, nk))
    _guard(A, B, C)
    D = (A - B @ C).tocsr()
    D.eliminate_zeros()
    return gi[K], gj[K], D


def _guard(A, B, C):
    ma = int(abs(A.data).max()) if A.nnz else 0
    mb = int(abs(B.data).max()) if B.nnz else 0
    mc = int(abs(C.data).max()) if C.nnz else 0
    inner = int(np.diff(B.tocsr().indptr).max()) if B.nnz else 0
    if ma + mb * mc * inner >= _I64_SAFE:
        raise OverflowError("reduction entries may exceed int64")


def cancel_units(D, max_rounds: int = 1000):
    """Greedy rounds of induced unit cancellation on a square complex matrix.

    Returns (indices of surviving generators, reduced csr matrix).
    """
    keep = np.arange(D.shape[0])
    D = D.tocoo()
    for _ in range(max_rounds):
        N = D.shape[0]
        u = np.abs(D.data) == 1
        if not u.any():
            break
        rl = np.bincount(D.row, minlength=N)
        cl = np.bincount(D.col, minlength=N)
        r, c, v = D.row[u], D.col[u], D.data[u]
        cost = (rl[r] - 1) * (cl[c] - 1)
        o = np.lexsort((r, c, cost))
        r, c, v = r[o], c[o], v[o]
        _, first = np.unique(c, return_index=True)
        r, c, v = r[first], c[first], v[first]
        cost = (rl[r] - 1) * (cl[c] - 1)
        o = np.lexsort((c, cost))
        r, c, v = r[o], c[o], v[o]
        _, first = np.unique(r, return_index=True)
        first.sort()
        r, c, v = r[first], c[first], v[first]
        # a generator may sit in one pair only
        is_target = np.zeros(N, bool)
        is_target[r] = True
        ok = ~is_target[c]
        r, c, v = r[ok], c[ok], v[ok]
        m = len(r)
        pos_r = np.full(N, -1, np.int64)
        pos_r[r] = np.arange(m)
        pos_c = np.full(N, -1, np.int64)
        pos_c[c] = np.arange(m)
        sel = (pos_r[D.row] >= 0) & (pos_c[D.col] >= 0)
        pr, pc = pos_r[D.row[sel]], pos_c[D.col[sel]]
        off = pr != pc
        bad = np.zeros(m, bool)
        bad[np.maximum(pr[off], pc[off])] = True
        r, c, v = r[~bad], c[~bad], v[~bad]
        if not len(r):
            break
        Dc = D.tocsr()
        kmask = np.ones(N, bool)
        kmask[r] = False
        kmask[c] = False
        Kk = np.nonzero(kmask)[0]
        DK = Dc[Kk]
        A = DK[:, Kk]
        B = DK[:, c]
        C = Dc[r][:, Kk]
        _guard(A, B, C)
        D = (A - B @ sp.diags(v) @ C).tocoo()
        D.eliminate_zeros()
        keep = keep[Kk]
    return keep, D.tocsr()


def reduced_complex(d: LinkDiagram, spec: FrobeniusSpec | str = "KHOVANOV", *,
                    cap: int = REDUCED_CROSSING_CAP) -> BigradedComplex:
    """A small complex homotopy equivalent (over Z) to the cube complex of ``d``."""
    if isinstance(spec, str):
        spec = frobenius_tables(spec)
    if d.n_crossings > cap:
        raise CrossingCapError(
            f"{d.n_crossings} crossings exceeds the reduced cap of {cap}")
    if d.n_crossings == 0:
        cx = build_complex(d, spec)
        cx.reduced = True
        return cx
    _check_matchable(spec)
    t0 = time.perf_counter()
    gi, gj, D = _structural_round(d, spec)
    log.info("first-crossing matching: %d generators left (%.1fs)", len(gi),
             time.perf_counter() - t0)
    key = gj if spec.q_homogeneous else np.mod(gj, 4)
    kept, rows, cols, vals = [], [], [], []
    base = 0
    for kv in np.unique(key):
        idx = np.nonzero(key == kv)[0]
        sub = D[idx][:, idx]
        keep, R = cancel_units(sub)
        R = R.tocoo()
        kept.append(idx[keep])
        rows.append(R.row + base)
        cols.append(R.col + base)
        vals.append(R.data)
        base += len(keep)
    del D
    survivors = np.concatenate(kept) if kept else np.zeros(0, np.int64)
    order = np.argsort(survivors, kind="stable")
    inv = np.empty_like(order)
    inv[order] = np.arange(len(order))
    r = inv[np.concatenate(rows)]
    c = inv[np.concatenate(cols)]
    v = np.concatenate(vals).astype(np.int64)
    survivors = survivors[order]
    M = SparseIntMatrix(len(survivors), len(survivors), r, c, v, check=False)
    log.info("unit cancellation: %d generators left (%.1fs)", len(survivors),
             time.perf_counter() - t0)
    return BigradedComplex(spec.name, gi[survivors], gj[survivors], M, spec.q_homogeneous,
                           d.n_plus, d.n_minus, d.n_components, reduced=True)
