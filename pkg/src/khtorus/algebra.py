"""Exact integer linear algebra and the rank-two Frobenius algebras.

Matrices are stored as sorted COO arrays (column-major).  Values live in
``int64`` arrays while they provably fit, and in object arrays of Python ints
otherwise, so every result here is exact.

Smith forms and ranks run in two phases.  A vectorised phase repeatedly picks a
set of +-1 pivots that is "induced" (the pivot rows restricted to the pivot
columns form a signed permutation matrix) and replaces the matrix by its Schur
complement in one sparse product.  Whatever survives is finished by a sparse
pivoting elimination over Python integers.
"""
from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np
import scipy.sparse as sp

__all__ = [
    "Label", "FrobeniusSpec", "frobenius_tables", "frobenius_axiom_failures",
    "SparseIntMatrix", "SNFResult", "AbelianGroupIso",
    "snf", "rank_q", "homology_of_pair", "integer_kernel",
]


class Label(enum.IntEnum):
    ONE = 0
    X = 1


# ---------------------------------------------------------------------------
# Frobenius algebras on the basis {ONE, X}

@dataclass(frozen=True)
class FrobeniusSpec:
    name: str
    mult: dict          # (a, b) -> {c: coeff}
    comult: dict        # a -> {(b, c): coeff}
    unit: Label
    counit: dict        # a -> coeff
    q_homogeneous: bool

    def m(self, a: Label, b: Label) -> dict:
        return self.mult[(a, b)]

    def delta(self, a: Label) -> dict:
        return self.comult[a]


def frobenius_tables(name: str) -> FrobeniusSpec:
    key = name.upper()
    one, x = Label.ONE, Label.X
    if key == "KHOVANOV":
        mult = {(one, one): {one: 1}, (one, x): {x: 1}, (x, one): {x: 1}, (x, x): {}}
        comult = {one: {(one, x): 1, (x, one): 1}, x: {(x, x): 1}}
        homog = True
    elif key == "LEE":
        mult = {(one, one): {one: 1}, (one, x): {x: 1}, (x, one): {x: 1}, (x, x): {one: 1}}
        comult = {one: {(one, x): 1, (x, one): 1}, x: {(x, x): 1, (one, one): 1}}
        homog = False
    else:
        raise ValueError(f"unknown Frobenius algebra {name!r}; expected KHOVANOV or LEE")
    return FrobeniusSpec(key, mult, comult, one, {one: 0, x: 1}, homog)


def _lin(f, vec: dict) -> dict:
    """Extend f: basis tuple -> dict linearly over a dict of tuples."""
    out: dict = {}
    for k, c in vec.items():
        for k2, c2 in f(k).items():
            out[k2] = out.get(k2, 0) + c * c2
    return {k: v for k, v in out.items() if v}


def frobenius_axiom_failures(spec: FrobeniusSpec) -> list[str]:
    """Check the commutative Frobenius algebra axioms on all basis inputs."""
    B = list(Label)
    fails = []

    def m2(t):     # (a, b) -> {(c,): coeff}
        return {(c,): v for c, v in spec.mult[t].items()}

    def d1(t):     # (a,) -> {(b, c): coeff}
        return dict(spec.comult[t[0]])

    for a, b, c in itertools.product(B, repeat=3):
        left = _lin(lambda t: m2((t[0], c)), m2((a, b)))
        right = _lin(lambda t: m2((a, t[0])), m2((b, c)))
        if left != right:
            fails.append(f"associativity at {a.name},{b.name},{c.name}")
    for a, b in itertools.product(B, repeat=2):
        if spec.mult[(a, b)] != spec.mult[(b, a)]:
            fails.append(f"commutativity at {a.name},{b.name}")
    for a in B:
        if spec.mult[(spec.unit, a)] != {a: 1}:
            fails.append(f"unit law at {a.name}")
        # coassociativity
        left = _lin(lambda t: {(u, v, t[1]): w for (u, v), w in spec.comult[t[0]].items()},
                    d1((a,)))
        right = _lin(lambda t: {(t[0], u, v): w for (u, v), w in spec.comult[t[1]].items()},
                     d1((a,)))
        if left != right:
            fails.append(f"coassociativity at {a.name}")
        # counit
        for side in (0, 1):
            got: dict = {}
            for pair, w in spec.comult[a].items():
                coef = spec.counit[pair[side]] * w
                if coef:
                    got[pair[1 - side]] = got.get(pair[1 - side], 0) + coef
            if {k: v for k, v in got.items() if v} != {a: 1}:
                fails.append(f"counit law ({side}) at {a.name}")
        # cocommutativity
        if spec.comult[a] != {(v, u): w for (u, v), w in spec.comult[a].items()}:
            fails.append(f"cocommutativity at {a.name}")
    for a, b in itertools.product(B, repeat=2):
        dm = _lin(d1, m2((a, b)))
        # (m x id)(id x Delta)
        r1 = _lin(lambda t: {(c, t[2]): v for c, v in spec.mult[(t[0], t[1])].items()},
                  {(a, u, v): w for (u, v), w in spec.comult[b].items()})
        # (id x m)(Delta x id)
        r2 = _lin(lambda t: {(t[0], c): v for c, v in spec.mult[(t[1], t[2])].items()},
                  {(u, v, b): w for (u, v), w in spec.comult[a].items()})
        if not (dm == r1 == r2):
            fails.append(f"Frobenius compatibility at {a.name},{b.name}")
    return fails


# ---------------------------------------------------------------------------
# Sparse integer matrices

_I64_SAFE = 2 ** 62


class SparseIntMatrix:
    """Immutable sparse integer matrix, entries sorted by (col, row)."""

    __slots__ = ("rows", "cols", "row_idx", "col_idx", "data")

    def __init__(self, rows: int, cols: int, row_idx, col_idx, data, *, check: bool = True):
        self.rows, self.cols = int(rows), int(cols)
        r = np.asarray(row_idx, dtype=np.int64).ravel()
        c = np.asarray(col_idx, dtype=np.int64).ravel()
        v = _as_values(data)
        if check:
            if not (len(r) == len(c) == len(v)):
                raise ValueError("index and value arrays differ in length")
            if len(r) and (r.min() < 0 or r.max() >= self.rows or c.min() < 0
                           or c.max() >= self.cols):
                raise ValueError("entry index out of bounds")
            if np.any(v == 0):
                raise ValueError("zero entries may not be stored")
        order = np.lexsort((r, c))
        r, c, v = r[order], c[order], v[order]
        if check and len(r) > 1:
            dup = (r[1:] == r[:-1]) & (c[1:] == c[:-1])
            if dup.any():
                raise ValueError("duplicate (row, col) entries")
        self.row_idx, self.col_idx, self.data = r, c, v

    # -- constructors ----------------------------------------------------
    @classmethod
    def from_triplets(cls, rows, cols, row_idx, col_idx, data) -> "SparseIntMatrix":
        """Sum duplicate coordinates and drop zeros."""
        r = np.asarray(row_idx, dtype=np.int64).ravel()
        c = np.asarray(col_idx, dtype=np.int64).ravel()
        v = _as_values(data)
        if len(r) == 0:
            return cls.zeros(rows, cols)
        key = c * max(int(rows), 1) + r
        uk, inv = np.unique(key, return_inverse=True)
        if v.dtype == object:
            acc = np.zeros(len(uk), dtype=object)
            np.add.at(acc, inv, v)
        else:
            if len(v) and int(np.abs(v).max()) * len(v) >= _I64_SAFE:
                return cls.from_triplets(rows, cols, r, c, v.astype(object))
            acc = np.zeros(len(uk), dtype=np.int64)
            np.add.at(acc, inv, v)
        nz = acc != 0
        uk = uk[nz]
        return cls(rows, cols, uk % max(int(rows), 1), uk // max(int(rows), 1), acc[nz],
                   check=False)

    @classmethod
    def from_dict(cls, rows, cols, entries: dict) -> "SparseIntMatrix":
        items = [(r, c, v) for (r, c), v in entries.items() if v]
        if not items:
            return cls.zeros(rows, cols)
        r, c, v = zip(*items)
        return cls(rows, cols, r, c, list(v))

    @classmethod
    def from_dense(cls, mat: Sequence[Sequence[int]]) -> "SparseIntMatrix":
        rows = len(mat)
        cols = len(mat[0]) if rows else 0
        return cls.from_dict(rows, cols, {(i, j): int(x) for i, row in enumerate(mat)
                                          for j, x in enumerate(row) if x})

    @classmethod
    def from_scipy(cls, m) -> "SparseIntMatrix":
        m = m.tocoo()
        keep = m.data != 0
        return cls(m.shape[0], m.shape[1], m.row[keep], m.col[keep],
                   m.data[keep].astype(np.int64), check=False)

    @classmethod
    def zeros(cls, rows, cols) -> "SparseIntMatrix":
        e = np.zeros(0, np.int64)
        return cls(rows, cols, e, e, e, check=False)

    # -- accessors -------------------------------------------------------
    @property
    def shape(self):
        return (self.rows, self.cols)

    @property
    def nnz(self) -> int:
        return len(self.data)

    @property
    def fits_int64(self) -> bool:
        return self.data.dtype != object

    def entries(self):
        for r, c, v in zip(self.row_idx.tolist(), self.col_idx.tolist(), self.data.tolist()):
            yield r, c, int(v)

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.cols for _ in range(self.rows)]
        for r, c, v in self.entries():
            out[r][c] = v
        return out

    def to_scipy(self):
        if not self.fits_int64:
            raise OverflowError("entries exceed int64")
        return sp.csr_matrix((self.data, (self.row_idx, self.col_idx)), shape=self.shape,
                             dtype=np.int64)

    def transpose(self) -> "SparseIntMatrix":
        return SparseIntMatrix(self.cols, self.rows, self.col_idx, self.row_idx, self.data,
                               check=False)

    def max_abs(self) -> int:
        if not self.nnz:
            return 0
        return int(max(abs(int(x)) for x in (self.data.max(), self.data.min())))

    def __matmul__(self, other: "SparseIntMatrix") -> "SparseIntMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        if self.fits_int64 and other.fits_int64 and self.nnz and other.nnz:
            inner = max(1, int(np.bincount(self.row_idx, minlength=self.rows).max()))
            if self.max_abs() * other.max_abs() * inner < _I64_SAFE:
                return SparseIntMatrix.from_scipy(self.to_scipy() @ other.to_scipy())
        left: dict = {}
        for r, c, v in self.entries():
            left.setdefault(c, []).append((r, v))
        acc: dict = {}
        for r2, c2, v2 in other.entries():
            for r, v in left.get(r2, ()):
                acc[(r, c2)] = acc.get((r, c2), 0) + v * v2
        return SparseIntMatrix.from_dict(self.rows, other.cols, acc)

    def is_zero(self) -> bool:
        return self.nnz == 0

    def __eq__(self, other):
        if not isinstance(other, SparseIntMatrix):
            return NotImplemented
        return (self.shape == other.shape and np.array_equal(self.row_idx, other.row_idx)
                and np.array_equal(self.col_idx, other.col_idx)
                and all(int(a) == int(b) for a, b in zip(self.data, other.data)))

    def __repr__(self):
        return f"SparseIntMatrix({self.rows}x{self.cols}, nnz={self.nnz})"


def _as_values(data) -> np.ndarray:
    if isinstance(data, np.ndarray) and data.dtype != object:
        return data.astype(np.int64, copy=False).ravel()
    vals = [int(x) for x in (data.tolist() if isinstance(data, np.ndarray) else data)]
    if vals and max(abs(x) for x in vals) >= _I64_SAFE:
        return np.array(vals, dtype=object)
    return np.array(vals, dtype=np.int64)


# ---------------------------------------------------------------------------
# Result types

@dataclass(frozen=True)
class SNFResult:
    factors: tuple[int, ...]

    def __post_init__(self):
        for a, b in zip(self.factors, self.factors[1:]):
            if b % a:
                raise ValueError(f"divisibility chain broken: {a} does not divide {b}")
        if any(f <= 0 for f in self.factors):
            raise ValueError("invariant factors must be positive")

    @property
    def rank(self) -> int:
        return len(self.factors)

    @property
    def torsion(self) -> tuple[int, ...]:
        return tuple(f for f in self.factors if f > 1)


@dataclass(frozen=True)
class AbelianGroupIso:
    free: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.free < 0:
            raise ValueError("negative free rank")
        if any(t < 2 for t in self.torsion):
            raise ValueError("torsion orders must be at least 2")
        object.__setattr__(self, "torsion", tuple(sorted(self.torsion)))

    @property
    def is_trivial(self) -> bool:
        return self.free == 0 and not self.torsion

    def __str__(self):
        parts = []
        if self.free:
            parts.append("Z" if self.free == 1 else f"Z^{self.free}")
        parts += [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) or "0"


# ---------------------------------------------------------------------------
# Vectorised unit-pivot phase

def _select_unit_pivots(m):
    """Pick an induced set of +-1 pivots from a COO matrix (rows, cols disjoint)."""
    u = np.abs(m.data) == 1
    if not u.any():
        return None
    R, C = m.shape
    rl = np.bincount(m.row, minlength=R)
    cl = np.bincount(m.col, minlength=C)
    r, c, v = m.row[u], m.col[u], m.data[u]
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
    # induced: the pivot block must be diagonal; drop the later pair of any clash
    k = len(r)
    pos_r = np.full(R, -1, np.int64)
    pos_r[r] = np.arange(k)
    pos_c = np.full(C, -1, np.int64)
    pos_c[c] = np.arange(k)
    sel = (pos_r[m.row] >= 0) & (pos_c[m.col] >= 0)
    pr, pc = pos_r[m.row[sel]], pos_c[m.col[sel]]
    off = pr != pc
    bad = np.zeros(k, bool)
    bad[np.maximum(pr[off], pc[off])] = True
    return r[~bad], c[~bad], v[~bad]


def _unit_phase(M: SparseIntMatrix, min_size: int = 16):
    """Schur-complement all +-1 pivots reachable in bulk.

    Returns (number of unit pivots, remaining SparseIntMatrix).
    """
    if not M.fits_int64 or M.nnz == 0:
        return 0, M
    m = M.to_scipy().tocoo()
    done = 0
    while m.nnz and min(m.shape) > min_size:
        piv = _select_unit_pivots(m)
        if piv is None:
            break
        r, c, v = piv
        R, C = m.shape
        keep_r = np.ones(R, bool)
        keep_r[r] = False
        keep_c = np.ones(C, bool)
        keep_c[c] = False
        Kr, Kc = np.nonzero(keep_r)[0], np.nonzero(keep_c)[0]
        csr = m.tocsr()
        A = csr[Kr][:, Kc]
        B = csr[Kr][:, c]
        Cm = csr[r][:, Kc]
        # overflow guard for A - B diag(v) Cm
        mb = int(abs(B.data).max()) if B.nnz else 0
        mc = int(abs(Cm.data).max()) if Cm.nnz else 0
        ma = int(abs(A.data).max()) if A.nnz else 0
        inner = int(np.diff(B.indptr).max()) if B.nnz else 0
        if ma + mb * mc * inner >= _I64_SAFE:
            break
        m = (A - B @ sp.diags(v) @ Cm).tocoo()
        m.eliminate_zeros()
        done += len(r)
    return done, SparseIntMatrix.from_scipy(m)


# ---------------------------------------------------------------------------
# Sparse elimination over Python integers

class _RowStore:
    def __init__(self, M: SparseIntMatrix):
        self.rows: dict[int, dict[int, int]] = {}
        self.cols: dict[int, set[int]] = {}
        for r, c, v in M.entries():
            self.rows.setdefault(r, {})[c] = v
            self.cols.setdefault(c, set()).add(r)

    def __bool__(self):
        return bool(self.rows)

    def pick_pivot(self):
        best = None
        for r, row in self.rows.items():
            lr = len(row) - 1
            for c, v in row.items():
                key = (abs(v), lr * (len(self.cols[c]) - 1), r, c)
                if best is None or key < best:
                    best = key
        return best[2], best[3]

    def axpy_row(self, dst: int, src: int, q: int):
        """row[dst] -= q * row[src]"""
        drow = self.rows[dst]
        for c, v in self.rows[src].items():
            nv = drow.get(c, 0) - q * v
            if nv:
                if c not in drow:
                    self.cols[c].add(dst)
                drow[c] = nv
            elif c in drow:
                del drow[c]
                self.cols[c].discard(dst)
        if not drow:
            del self.rows[dst]

    def drop(self, r: int, c: int):
        for cc in self.rows.pop(r, {}):
            self.cols[cc].discard(r)
            if not self.cols[cc]:
                del self.cols[cc]
        for rr in self.cols.pop(c, set()):
            row = self.rows[rr]
            row.pop(c, None)
            if not row:
                del self.rows[rr]


def _nearest_quotient(a: int, p: int) -> int:
    # the remainder shares the sign of p; stepping once more halves it
    q, rem = divmod(a, p)
    if 2 * abs(rem) > abs(p):
        q += 1
    return q


def _sparse_snf_diagonal(M: SparseIntMatrix) -> list[int]:
    st = _RowStore(M)
    diag = []
    while st:
        r, c = st.pick_pivot()
        while True:
            p = st.rows[r][c]
            moved = False
            for i in sorted(st.cols[c] - {r}):
                a = st.rows[i][c]
                q = _nearest_quotient(a, p)
                st.axpy_row(i, r, q)
                rem = st.rows.get(i, {}).get(c, 0)
                if rem:
                    r, moved = i, True
                    break
            if moved:
                continue
            # column c now holds only p; column operations touch row r only
            row = st.rows[r]
            for j in sorted(k for k in row if k != c):
                a = row[j]
                q = _nearest_quotient(a, p)
                rem = a - q * p
                if rem:
                    row[j] = rem
                    c, moved = j, True
                    break
                del row[j]
                st.cols[j].discard(r)
                if not st.cols[j]:
                    del st.cols[j]
            if moved:
                continue
            diag.append(abs(p))
            st.drop(r, c)
            break
    return diag


def _diagonal_to_chain(diag: Iterable[int]) -> tuple[int, ...]:
    """Invariant factors of a diagonal matrix via the prime-power decomposition
    trick: repeatedly replace a pair by (gcd, lcm)."""
    d = sorted(x for x in diag if x)
    ones = [x for x in d if x == 1]
    rest = [x for x in d if x != 1]
    n = len(rest)
    for i in range(n):
        for j in range(i + 1, n):
            a, b = rest[i], rest[j]
            g = math.gcd(a, b)
            rest[i], rest[j] = g, a // g * b
    return tuple(ones + rest)


def snf(M: SparseIntMatrix) -> SNFResult:
    units, rest = _unit_phase(M)
    diag = _sparse_snf_diagonal(rest) if rest.nnz else []
    return SNFResult(tuple([1] * units) + _diagonal_to_chain(diag))


def _sparse_rank(M: SparseIntMatrix) -> int:
    """Fraction-free row elimination, rows divided by their content."""
    st = _RowStore(M)
    rank = 0
    while st:
        r, c = st.pick_pivot()
        p = st.rows[r][c]
        for i in sorted(st.cols[c] - {r}):
            row = st.rows[i]
            a = row[c]
            g = math.gcd(a, p)
            ma, mp = p // g, a // g
            new = {k: ma * v for k, v in row.items()}
            for k, v in st.rows[r].items():
                new[k] = new.get(k, 0) - mp * v
            new = {k: v for k, v in new.items() if v}
            cont = 0
            for v in new.values():
                cont = math.gcd(cont, v)
            for k in row:
                st.cols[k].discard(i)
            if new:
                st.rows[i] = {k: v // cont for k, v in new.items()}
                for k in new:
                    st.cols.setdefault(k, set()).add(i)
            else:
                del st.rows[i]
        for k in list(st.cols):
            if not st.cols[k]:
                del st.cols[k]
        rank += 1
        st.drop(r, c)
    return rank


def _divide_content(M: SparseIntMatrix) -> SparseIntMatrix:
    """Divide every row, then every column, by the gcd of its entries.

    Scaling rows and columns by nonzero rationals keeps the rational rank.
    """
    if not M.fits_int64 or not M.nnz:
        return M
    m = M.to_scipy()
    for axis in (0, 1):
        m = m.tocsr() if axis == 0 else m.tocsc()
        m.sort_indices()
        counts = np.diff(m.indptr)
        starts = m.indptr[:-1][counts > 0]
        g = np.gcd.reduceat(np.abs(m.data), starts)
        div = np.repeat(g, counts[counts > 0])
        m.data = m.data // div
    return SparseIntMatrix.from_scipy(m)


def rank_q(M: SparseIntMatrix) -> int:
    units, rest = _unit_phase(M)
    while rest.nnz:
        scaled = _divide_content(rest)
        if not np.any(np.abs(scaled.data) == 1) or scaled == rest:
            break
        more, rest = _unit_phase(scaled)
        if not more:
            rest = scaled
            break
        units += more
    return units + (_sparse_rank(rest) if rest.nnz else 0)


def homology_of_pair(d_in: SparseIntMatrix, d_out: SparseIntMatrix, ring: str = "Z",
                     check: bool = True) -> AbelianGroupIso:
    """ker(d_out) / im(d_in) for C' --d_in--> C --d_out--> C''."""
    if d_in.rows != d_out.cols:
        raise ValueError(f"incompatible shapes {d_in.shape} then {d_out.shape}")
    if check and d_in.nnz and d_out.nnz and not (d_out @ d_in).is_zero():
        raise ArithmeticError("internal consistency failure: d_out . d_in != 0")
    dim = d_in.rows
    r_out = rank_q(d_out) if d_out.nnz else 0
    if ring.upper() == "Q":
        r_in = rank_q(d_in) if d_in.nnz else 0
        return AbelianGroupIso(dim - r_out - r_in)
    s = snf(d_in) if d_in.nnz else SNFResult(())
    return AbelianGroupIso(dim - r_out - s.rank, s.torsion)


def integer_kernel(rows: Sequence[Sequence[int]], n: int) -> list[list[int]]:
    """A Z-basis of {x in Z^n : A x = 0}, A given by its rows.

    Unimodular column operations bring A to column echelon form while the same
    operations are applied to the identity; columns of the transform matching
    zero columns span the integral kernel.  The basis is returned in Hermite
    normal form (row echelon, positive pivots, reduced above pivots).
    """
    # work with columns of A as lists together with their transform columns
    cols = [[int(rows[i][j]) for i in range(len(rows))] for j in range(n)]
    trans = [[1 if i == j else 0 for i in range(n)] for j in range(n)]
    active = list(range(n))
    for i in range(len(rows)):
        nz = [j for j in active if cols[j][i]]
        while len(nz) > 1:
            nz.sort(key=lambda j: abs(cols[j][i]))
            p = nz[0]
            for j in nz[1:]:
                q = cols[j][i] // cols[p][i]
                if q:
                    cj, cp = cols[j], cols[p]
                    for t in range(i, len(rows)):
                        cj[t] -= q * cp[t]
                    tj, tp = trans[j], trans[p]
                    for t in range(n):
                        tj[t] -= q * tp[t]
            nz = [j for j in nz if cols[j][i]]
        if nz:
            active.remove(nz[0])
    basis = [trans[j] for j in active]
    return _hermite_rows(basis, n)


def _hermite_rows(vecs: list[list[int]], n: int) -> list[list[int]]:
    rows = [list(v) for v in vecs]
    out = []
    col = 0
    while rows and col < n:
        nz = [r for r in rows if r[col]]
        if not nz:
            col += 1
            continue
        while len(nz) > 1:
            nz.sort(key=lambda r: abs(r[col]))
            p = nz[0]
            for r in nz[1:]:
                q = r[col] // p[col]
                for t in range(n):
                    r[t] -= q * p[t]
            nz = [r for r in nz if r[col]]
        p = nz[0]
        if p[col] < 0:
            p[:] = [-x for x in p]
        rows = [r for r in rows if r is not p and any(r)]
        for o in out:
            q = o[col] // p[col]
            if q:
                o[:] = [a - q * b for a, b in zip(o, p)]
        out.append(p)
        col += 1
    return out
