"""The arc ring H^k of crossingless matchings and its graded center.

As a group, H^k is the sum over pairs (a, b) of crossingless matchings of
A^{tensor circles}, one tensor factor per circle of the closed 1-manifold
obtained by gluing a to the mirror image of b.  A basis element is a pair
(a, b) plus a ONE/X label on every circle.  The product of (a, b) and (b, d)
contracts the k arcs of b against their mirror images by saddles, applying
the Frobenius multiplication on merges and comultiplication on splits.

Grading: a basis element has degree ``k + #X - #ONE``.  Idempotents (all
labels ONE on the k circles of (a, a)) then sit in degree 0 and every saddle
raises degree by one, so multiplication is degree-additive.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Sequence

import numpy as np

from .algebra import FrobeniusSpec, Label, frobenius_tables, integer_kernel
from .report import Report
from .torusform import binom, catalan, center_profile, h0_profile

__all__ = [
    "CrossinglessMatching", "enumerate_matchings", "glue_circles", "ArcBasisElement",
    "ArcRingElement", "ArcRing", "multiply", "center", "CenterResult",
    "compare_center_with_H0",
]

CENTER_MAX_K = 4


@dataclass(frozen=True)
class CrossinglessMatching:
    k: int
    pairing: tuple[int, ...]      # pairing[p] = partner of point p (0-based)

    def __post_init__(self):
        p = self.pairing
        if len(p) != 2 * self.k:
            raise ValueError("pairing length must be 2k")
        for i, j in enumerate(p):
            if p[j] != i or i == j:
                raise ValueError("pairing must be a fixed-point-free involution")
        for i, j in self.arcs:
            for u, v in self.arcs:
                if i < u < j < v:
                    raise ValueError("arcs cross")

    @property
    def arcs(self) -> list[tuple[int, int]]:
        return sorted((i, j) for i, j in enumerate(self.pairing) if i < j)

    @classmethod
    def from_parens(cls, s: str) -> "CrossinglessMatching":
        stack, pairing = [], [0] * len(s)
        for i, ch in enumerate(s):
            if ch == "(":
                stack.append(i)
            elif ch == ")":
                if not stack:
                    raise ValueError(f"unbalanced: {s!r}")
                j = stack.pop()
                pairing[i], pairing[j] = j, i
            else:
                raise ValueError(f"bad character {ch!r}")
        if stack:
            raise ValueError(f"unbalanced: {s!r}")
        return cls(len(s) // 2, tuple(pairing))

    def parens(self) -> str:
        return "".join("(" if self.pairing[i] > i else ")" for i in range(2 * self.k))

    def __str__(self):
        return self.parens()


def enumerate_matchings(k: int) -> list[CrossinglessMatching]:
    """All crossingless matchings of 2k points, sorted by parenthesis string."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    out = []

    def rec(prefix: str, opened: int, closed: int):
        if closed == k:
            out.append(prefix)
            return
        if opened < k:
            rec(prefix + "(", opened + 1, closed)
        if closed < opened:
            rec(prefix + ")", opened, closed + 1)

    rec("", 0, 0)
    return [CrossinglessMatching.from_parens(s) for s in sorted(out)]


def glue_circles(a: CrossinglessMatching, b: CrossinglessMatching) -> list[tuple[int, ...]]:
    """Circles of a glued to mirrored b, as sorted point tuples ordered by min point."""
    if a.k != b.k:
        raise ValueError("matchings have different k")
    seen = [False] * (2 * a.k)
    circles = []
    for start in range(2 * a.k):
        if seen[start]:
            continue
        pts, p, use_a = [], start, True
        while not seen[p]:
            seen[p] = True
            pts.append(p)
            p = a.pairing[p] if use_a else b.pairing[p]
            use_a = not use_a
        circles.append(tuple(sorted(pts)))
    return sorted(circles)


# ---------------------------------------------------------------------------
# saddle contraction

def _components(nodes, edges) -> list[frozenset]:
    parent = {v: v for v in nodes}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    groups: dict = {}
    for v in nodes:
        groups.setdefault(find(v), set()).add(v)
    return sorted((frozenset(g) for g in groups.values()), key=min)


def _product_tensor(a, b, d, spec: FrobeniusSpec, order: str = "left") -> np.ndarray:
    """Structure constants S[out, x, y] for (a, b) x (b, d) -> (a, d)."""
    k = a.k
    nodes = [(lvl, p) for lvl in (1, 2) for p in range(2 * k)]
    top = [((1, i), (1, j)) for i, j in a.arcs]
    bottom = [((2, i), (2, j)) for i, j in d.arcs]
    middle = {(i, j): [((1, i), (1, j)), ((2, i), (2, j))] for i, j in b.arcs}
    arcs = b.arcs if order == "left" else list(reversed(b.arcs))
    vertical: list = []
    comps = _components(nodes, top + bottom + [e for v in middle.values() for e in v])
    # initial labelling: x labels the level-1 circles, y the level-2 ones
    cx = glue_circles(a, b)
    cy = glue_circles(b, d)
    nx, ny = len(cx), len(cy)
    pos = {}
    for idx, comp in enumerate(comps):
        lvl, p = min(comp)
        pos[idx] = (0, cx.index(next(c for c in cx if p in c))) if lvl == 1 else \
            (1, cy.index(next(c for c in cy if p in c)))
    # states: dict labels-tuple (indexed by current comps) -> coefficient, per input pair
    inputs = list(itertools.product(range(1 << nx), range(1 << ny)))
    vecs = []
    for mx, my in inputs:
        lab = tuple(Label((mx if pos[c][0] == 0 else my) >> pos[c][1] & 1)
                    for c in range(len(comps)))
        vecs.append({lab: 1})
    for arc in arcs:
        removed = middle.pop(arc)
        i, j = arc
        vertical += [((1, i), (2, i)), ((1, j), (2, j))]
        new = _components(nodes, top + bottom + vertical
                          + [e for v in middle.values() for e in v])
        where_old = {v: n for n, c in enumerate(comps) for v in c}
        where_new = {v: n for n, c in enumerate(new) for v in c}
        u, w = where_old[removed[0][0]], where_old[removed[1][0]]
        if u != w:
            z = where_new[removed[0][0]]
            others = [(o, where_new[min(comps[o])]) for o in range(len(comps)) if o not in (u, w)]

            def step(lab):
                out = {}
                for res, c in spec.m(lab[u], lab[w]).items():
                    nl = [None] * len(new)
                    for o, t in others:
                        nl[t] = lab[o]
                    nl[z] = res
                    out[tuple(nl)] = c
                return out
        else:
            x, y = where_new[(1, i)], where_new[(1, j)]
            others = [(o, where_new[min(comps[o])]) for o in range(len(comps)) if o != u]

            def step(lab):
                out = {}
                for (r1, r2), c in spec.delta(lab[u]).items():
                    nl = [None] * len(new)
                    for o, t in others:
                        nl[t] = lab[o]
                    nl[x], nl[y] = r1, r2
                    out[tuple(nl)] = c
                return out
        vecs = [_apply(step, v) for v in vecs]
        comps = new
    cz = glue_circles(a, d)
    final_pos = [cz.index(next(c for c in cz if min(p for lvl, p in comp if lvl == 1) in c))
                 for comp in comps]
    S = np.zeros((1 << len(cz), 1 << nx, 1 << ny), dtype=np.int64)
    for n_in, (mx, my) in enumerate(inputs):
        for lab, c in vecs[n_in].items():
            mask = sum(int(l) << final_pos[t] for t, l in enumerate(lab))
            S[mask, mx, my] += c
    return S


def _apply(step, vec: dict) -> dict:
    out: dict = {}
    for lab, c in vec.items():
        for nl, c2 in step(lab).items():
            out[nl] = out.get(nl, 0) + c * c2
    return {k: v for k, v in out.items() if v}


# ---------------------------------------------------------------------------
# ring

@dataclass(frozen=True)
class ArcBasisElement:
    top: CrossinglessMatching
    bottom: CrossinglessMatching
    mask: int          # bit t set: circle t (ordered by min point) labelled X

    @property
    def circles(self):
        return glue_circles(self.top, self.bottom)

    @property
    def degree(self) -> int:
        m = len(self.circles)
        n_x = bin(self.mask).count("1")
        return self.top.k + n_x - (m - n_x)

    def __str__(self):
        return f"[{self.top}|{self.bottom}|{self.mask:b}]"


class ArcRing:
    """Structure constants of H^k, computed lazily per matching triple."""

    def __init__(self, k: int, spec: FrobeniusSpec | str = "KHOVANOV", order: str = "left"):
        self.k = k
        self.spec = frobenius_tables(spec) if isinstance(spec, str) else spec
        self.order = order
        self.matchings = enumerate_matchings(k)
        self._tensors: dict = {}
        self._ncirc = {(a, b): len(glue_circles(a, b))
                       for a in self.matchings for b in self.matchings}

    def dim(self, a, b) -> int:
        return 1 << self._ncirc[(a, b)]

    @property
    def dimension(self) -> int:
        return sum(self.dim(a, b) for a in self.matchings for b in self.matchings)

    def basis(self) -> list[ArcBasisElement]:
        return [ArcBasisElement(a, b, m) for a in self.matchings for b in self.matchings
                for m in range(self.dim(a, b))]

    def tensor(self, a, b, d) -> np.ndarray:
        key = (a, b, d)
        if key not in self._tensors:
            self._tensors[key] = _product_tensor(a, b, d, self.spec, self.order)
        return self._tensors[key]

    def multiply_basis(self, x: ArcBasisElement, y: ArcBasisElement) -> "ArcRingElement":
        if x.top.k != self.k or y.top.k != self.k:
            raise ValueError("k mismatch")
        if x.bottom != y.top:
            return ArcRingElement(self)
        col = self.tensor(x.top, x.bottom, y.bottom)[:, x.mask, y.mask]
        return ArcRingElement(self, {ArcBasisElement(x.top, y.bottom, int(m)): int(c)
                                     for m, c in enumerate(col) if c})

    def idempotent(self, a) -> ArcBasisElement:
        return ArcBasisElement(a, a, 0)

    def one(self) -> "ArcRingElement":
        return ArcRingElement(self, {self.idempotent(a): 1 for a in self.matchings})

    def element(self, x: ArcBasisElement, c: int = 1) -> "ArcRingElement":
        return ArcRingElement(self, {x: c})

    def axiom_failures(self) -> list[str]:
        """Associativity, unit laws and degree additivity on all structure constants."""
        fails = []
        M = self.matchings
        for a, b, c in itertools.product(M, repeat=3):
            S = self.tensor(a, b, c)
            # degree additivity
            for o, x, y in zip(*np.nonzero(S)):
                dx = ArcBasisElement(a, b, int(x)).degree
                dy = ArcBasisElement(b, c, int(y)).degree
                if ArcBasisElement(a, c, int(o)).degree != dx + dy:
                    fails.append(f"degree not additive at {a},{b},{c}")
                    break
        for a, b in itertools.product(M, repeat=2):
            n = self.dim(a, b)
            left = self.tensor(a, a, b)[:, 0, :]
            right = self.tensor(a, b, b)[:, :, 0]
            if not (np.array_equal(left, np.eye(n, dtype=np.int64))
                    and np.array_equal(right, np.eye(n, dtype=np.int64))):
                fails.append(f"unit law fails on ({a},{b})")
        for a, b, c, d in itertools.product(M, repeat=4):
            S_abc, S_acd = self.tensor(a, b, c), self.tensor(a, c, d)
            S_bcd, S_abd = self.tensor(b, c, d), self.tensor(a, b, d)
            lhs = np.einsum("pmz,mxy->pxyz", S_acd, S_abc)
            rhs = np.einsum("pxm,myz->pxyz", S_abd, S_bcd)
            if not np.array_equal(lhs, rhs):
                fails.append(f"associativity fails on ({a},{b},{c},{d})")
        return fails


class ArcRingElement:
    def __init__(self, ring: ArcRing, coeffs: Optional[dict] = None):
        self.ring = ring
        self.coeffs = {x: c for x, c in (coeffs or {}).items() if c}

    def __add__(self, other):
        out = dict(self.coeffs)
        for x, c in other.coeffs.items():
            out[x] = out.get(x, 0) + c
        return ArcRingElement(self.ring, out)

    def __sub__(self, other):
        return self + other * -1

    def __mul__(self, other):
        if isinstance(other, int):
            return ArcRingElement(self.ring, {x: c * other for x, c in self.coeffs.items()})
        if other.ring.k != self.ring.k:
            raise ValueError("k mismatch")
        out: dict = {}
        for x, c in self.coeffs.items():
            for y, e in other.coeffs.items():
                for z, f in self.ring.multiply_basis(x, y).coeffs.items():
                    out[z] = out.get(z, 0) + c * e * f
        return ArcRingElement(self.ring, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, ArcRingElement) and self.coeffs == other.coeffs

    def is_zero(self) -> bool:
        return not self.coeffs

    def __repr__(self):
        return " + ".join(f"{c}*{x}" for x, c in self.coeffs.items()) or "0"


def multiply(x: ArcRingElement, y: ArcRingElement) -> ArcRingElement:
    return x * y


# ---------------------------------------------------------------------------
# center

@dataclass
class CenterResult:
    k: int
    ranks: dict                 # degree -> rank
    basis: dict                 # degree -> list of integer vectors over `unknowns[degree]`
    unknowns: dict              # degree -> list of ArcBasisElement

    @property
    def total(self) -> int:
        return sum(self.ranks.values())


def center(k: int, max_k: int = CENTER_MAX_K) -> CenterResult:
    """Graded center of H^k over Z as the integral kernel of the commutator map.

    A central element commutes with every idempotent, so it lies in the sum of
    the diagonal pieces (a, a); the unknowns are their basis elements, grouped
    by degree because the commutator map preserves degree.
    """
    if k > max_k:
        raise ValueError(f"k={k} exceeds the dimension guard k <= {max_k}")
    ring = ArcRing(k)
    M = ring.matchings
    unknowns: dict = {}
    for a in M:
        for m in range(ring.dim(a, a)):
            x = ArcBasisElement(a, a, m)
            unknowns.setdefault(x.degree, []).append(x)
    ranks, basis = {}, {}
    for deg, xs in sorted(unknowns.items()):
        col = {x: n for n, x in enumerate(xs)}
        rows = set()
        for b, c in itertools.product(M, repeat=2):
            S_bbc = ring.tensor(b, b, c)
            S_bcc = ring.tensor(b, c, c)
            for mx in range(ring.dim(b, c)):
                eq = np.zeros((ring.dim(b, c), len(xs)), dtype=np.int64)
                for z in xs:
                    if z.top == b:
                        eq[:, col[z]] += S_bbc[:, z.mask, mx]
                    if z.top == c:
                        eq[:, col[z]] -= S_bcc[:, mx, z.mask]
                for r in eq:
                    if r.any():
                        rows.add(tuple(int(v) for v in r))
        kern = integer_kernel(sorted(rows), len(xs))
        basis[deg] = kern
        if kern:
            ranks[deg] = len(kern)
    return CenterResult(k, ranks, basis, unknowns)


def compare_center_with_H0(k: int, n: int = 1, computed: Optional[dict] = None,
                           reduce: bool = False) -> Report:
    """Center degree 2k - 2i against rank H^{0,-2i} of the oppositely oriented
    torus link, from the closed form and from a direct computation."""
    rep = Report(f"center of H^{k} vs degree-0 homology of T'({2 * k},{2 * k * n})")
    cen = center(k)
    formula = h0_profile(k).ranks
    if computed is None:
        from .diagram import torus_prime_diagram
        from .homology import khovanov_homology
        h = khovanov_homology(torus_prime_diagram(2 * k, 2 * k * n), "Z", reduce=reduce)
        computed = {j: g.free for j, g in h.degree(0).items()}
        rep.check(not any(g.torsion for g in h.degree(0).values()),
                  "degree-0 homology is torsion-free")
    js = sorted(set(formula) | set(computed) | {2 * i - 2 * k for i in range(k + 1)})
    for j in js:
        i = -j // 2
        c = cen.ranks.get(2 * k - 2 * i, 0)
        rep.check(c == formula.get(j, 0) == computed.get(j, 0),
                  f"q={j}: center deg {2 * k - 2 * i} rank {c}, formula {formula.get(j, 0)}, "
                  f"computed {computed.get(j, 0)}")
    rep.check(computed.get(0, 0) == catalan(k), f"rank at q=0 is Catalan({k}) = {catalan(k)}")
    return rep
