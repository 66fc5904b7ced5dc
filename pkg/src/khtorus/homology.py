"""Khovanov and Lee homology of link diagrams.

Diagram homology ``H^{i,j}(D)`` is computed in the unshifted grading of
``chain``; ``shift_to_invariant`` converts it to the link invariant via
``H^{i - n_-, j + n_+ - 2 n_-}``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping, Optional

import numpy as np

from .algebra import AbelianGroupIso, SparseIntMatrix, rank_q, snf
from .chain import BigradedComplex, build_complex, RAW_CROSSING_CAP
from .diagram import LinkDiagram, resolve
from .polynomial import LaurentPoly2
from .reduction import reduced_complex
from .report import Report

__all__ = [
    "BigradedAbelianGroup", "BigradedComplex", "build_complex", "homology",
    "shift_to_invariant", "poincare", "lee_degree_ranks", "cone_check", "delta_width",
    "khovanov_homology", "complex_euler", "homology_euler", "skein_euler",
    "lee_homology_ranks", "complex_for",
]


class BigradedAbelianGroup:
    """Map (i, j) -> AbelianGroupIso; trivial entries are not stored."""

    def __init__(self, groups: Mapping[tuple[int, int], AbelianGroupIso] | None = None,
                 ring: str = "Z"):
        self.ring = ring.upper()
        self.groups = {(int(i), int(j)): g for (i, j), g in (groups or {}).items()
                       if not g.is_trivial}
        if self.ring == "Q" and any(g.torsion for g in self.groups.values()):
            raise ValueError("rational homology cannot carry torsion")

    def __getitem__(self, ij) -> AbelianGroupIso:
        return self.groups.get(tuple(ij), AbelianGroupIso())

    def __iter__(self):
        return iter(sorted(self.groups.items()))

    def __len__(self):
        return len(self.groups)

    def __eq__(self, other):
        if not isinstance(other, BigradedAbelianGroup):
            return NotImplemented
        return self.ring == other.ring and self.groups == other.groups

    @property
    def support(self) -> list[tuple[int, int]]:
        return sorted(self.groups)

    def rank(self, i: int, j: int) -> int:
        return self[(i, j)].free

    def total_rank(self) -> int:
        return sum(g.free for g in self.groups.values())

    def degree(self, i: int) -> dict[int, AbelianGroupIso]:
        return {j: g for (a, j), g in sorted(self.groups.items()) if a == i}

    def has_torsion(self) -> bool:
        return any(g.torsion for g in self.groups.values())

    def shifted(self, di: int, dj: int) -> "BigradedAbelianGroup":
        return BigradedAbelianGroup({(i + di, j + dj): g for (i, j), g in self.groups.items()},
                                    self.ring)

    def rationalized(self) -> "BigradedAbelianGroup":
        return BigradedAbelianGroup({k: AbelianGroupIso(g.free) for k, g in self.groups.items()},
                                    "Q")

    def to_json(self) -> dict:
        return {"ring": self.ring,
                "groups": [{"i": i, "j": j, "free": g.free, "torsion": list(g.torsion)}
                           for (i, j), g in sorted(self.groups.items())]}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json(cls, obj) -> "BigradedAbelianGroup":
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls({(g["i"], g["j"]): AbelianGroupIso(g["free"], tuple(g["torsion"]))
                    for g in obj["groups"]}, obj["ring"])

    def __repr__(self):
        body = ", ".join(f"({i},{j}): {g}" for (i, j), g in self)
        return f"BigradedAbelianGroup[{self.ring}]({body})"


def homology(c: BigradedComplex, ring: str = "Z") -> BigradedAbelianGroup:
    """Per-bidegree homology of a q-graded complex."""
    if not c.homogeneous:
        raise ValueError("complex is only filtered in q; use lee_homology_ranks")
    ring = ring.upper()
    if ring not in ("Z", "Q"):
        raise ValueError(f"unknown ring {ring!r}")
    blocks = c.blocks()
    sizes = c.group_sizes()
    # one elimination per block: it serves as d_out for (i, j) and d_in for (i + 1, j)
    if ring == "Z":
        forms = {key: snf(m) for key, m in blocks.items()}
        rank = {key: f.rank for key, f in forms.items()}
    else:
        forms = {}
        rank = {key: rank_q(m) for key, m in blocks.items()}
    out = {}
    for (i, j), n in sizes.items():
        incoming = forms.get((i - 1, j))
        torsion = incoming.torsion if incoming is not None else ()
        out[(i, j)] = AbelianGroupIso(n - rank[(i, j)] - rank.get((i - 1, j), 0), torsion)
    return BigradedAbelianGroup(out, ring)


def lee_homology_ranks(c: BigradedComplex) -> dict[int, int]:
    """Rational ranks of the homology of a (possibly filtered) complex, by i."""
    blocks = c.blocks()
    sizes = c.group_sizes()
    rk = {key: rank_q(m) for key, m in blocks.items()}
    out: dict[int, int] = {}
    for (i, k), n in sizes.items():
        r = n - rk[(i, k)] - rk.get((i - 1, k), 0)
        if r:
            out[i] = out.get(i, 0) + r
    return dict(sorted(out.items()))


def shift_to_invariant(h: BigradedAbelianGroup, n_plus: int, n_minus: int
                       ) -> BigradedAbelianGroup:
    return h.shifted(-n_minus, n_plus - 2 * n_minus)


def poincare(h: BigradedAbelianGroup) -> LaurentPoly2:
    """Sum of free ranks times t^i q^j (torsion ignored)."""
    return LaurentPoly2({(i, j): g.free for (i, j), g in h.groups.items()})


def homology_euler(h: BigradedAbelianGroup) -> LaurentPoly2:
    return poincare(h).at_t(-1)


def complex_euler(c: BigradedComplex) -> LaurentPoly2:
    acc: dict = {}
    for (i, j), n in c.ranks().items():
        acc[(0, j)] = acc.get((0, j), 0) + (-1) ** i * n
    return LaurentPoly2(acc)


def skein_euler(d: LinkDiagram) -> LaurentPoly2:
    """Unshifted graded Euler characteristic from the recursion
    chi(D) = chi(D_0) - q chi(D_1), with a crossingless diagram of m circles
    giving (q + 1/q)^m.  Independent of the cube and of any matrix."""
    return _skein(d.canonical(), d)


@lru_cache(maxsize=4096)
def _skein_loops(m: int) -> LaurentPoly2:
    return LaurentPoly2({(0, 1): 1, (0, -1): 1}) ** m


def _skein(key: str, d: LinkDiagram) -> LaurentPoly2:
    if not d.crossings:
        return _skein_loops(len(d.loops))
    c = d.crossings[0].id
    d0, d1 = resolve(d, c, 0), resolve(d, c, 1)
    return _skein(d0.canonical(), d0) - _skein(d1.canonical(), d1).shift(0, 1)


def delta_width(h: BigradedAbelianGroup) -> int:
    """Number of occupied diagonals delta = j - 2i."""
    if not len(h):
        raise ValueError("empty homology has no width")
    ds = [j - 2 * i for (i, j) in h.groups]
    return (max(ds) - min(ds)) // 2 + 1


def complex_for(d: LinkDiagram, spec: str = "KHOVANOV", reduce: bool = False
                ) -> BigradedComplex:
    return reduced_complex(d, spec) if reduce else build_complex(d, spec)


def khovanov_homology(d: LinkDiagram, ring: str = "Z", reduce: bool = False,
                      shifted: bool = True) -> BigradedAbelianGroup:
    h = homology(complex_for(d, "KHOVANOV", reduce), ring)
    return shift_to_invariant(h, d.n_plus, d.n_minus) if shifted else h


def lee_degree_ranks(d: LinkDiagram, reduce: bool = False, shifted: bool = True
                     ) -> dict[int, int]:
    """Rational Lee homology ranks by homological degree."""
    ranks = lee_homology_ranks(complex_for(d, "LEE", reduce))
    s = d.n_minus if shifted else 0
    return {i - s: r for i, r in ranks.items()}


def cone_check(d: LinkDiagram, cid: int, reduce: bool = False) -> Report:
    """Euler characteristic and rank consequences of the resolution sequence
    at one crossing, in unshifted diagram gradings:

        chi(D) = chi(D_0) - q chi(D_1)
        rank H^{i,j}(D) <= rank H^{i,j}(D_0) + rank H^{i-1,j-1}(D_1)
    """
    d0, d1 = resolve(d, cid, 0), resolve(d, cid, 1)
    h, h0, h1 = (khovanov_homology(x, "Q", reduce, shifted=False) for x in (d, d0, d1))
    rep = Report(f"cone at crossing {cid}")
    lhs = homology_euler(h)
    rhs = homology_euler(h0) - homology_euler(h1).shift(0, 1)
    rep.check(lhs == rhs, f"chi(D) = {lhs}; chi(D0) - q chi(D1) = {rhs}")
    for (i, j) in sorted(set(h.groups) | set(h0.groups) | {(a + 1, b + 1) for a, b in h1.groups}):
        bound = h0.rank(i, j) + h1.rank(i - 1, j - 1)
        rep.check(h.rank(i, j) <= bound,
                  f"H^({i},{j}): rank {h.rank(i, j)} <= {h0.rank(i, j)} + {h1.rank(i - 1, j - 1)}")
    return rep
