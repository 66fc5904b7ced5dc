"""Closed-form answers and lattice-path combinatorics for torus links.

Everything here is pure arithmetic; nothing touches chain complexes.  The
formulas are the oracles that computed homology is compared against.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional

from .polynomial import LaurentPoly2, tq

__all__ = [
    "binom", "catalan", "ZigZag", "zigzag_count", "enumerate_zigzags", "reflect",
    "unreflect", "AdmissibleSubset", "is_admissible", "admissible_subsets",
    "subset_to_sequence", "RankProfile", "theorem1_bounds", "theorem2_rank",
    "theorem2_profile", "h0_profile", "center_profile", "theorem3_branch",
    "theorem3_poincare", "torus_prime_shift", "stable_P2", "stable_P3",
]


def binom(n: int, k: int) -> int:
    """n!/(k!(n-k)!) when 0 <= k <= n, and 0 for every other pair of integers."""
    if n < 0 or k < 0 or k > n:
        return 0
    out = 1
    for t in range(min(k, n - k)):
        out = out * (n - t) // (t + 1)
    return out


def catalan(k: int) -> int:
    return binom(2 * k, k) // (k + 1) if k >= 0 else 0


# ---------------------------------------------------------------------------
# zig-zag lines

@dataclass(frozen=True)
class ZigZag:
    values: tuple[int, ...]

    def __post_init__(self):
        if not self.values:
            raise ValueError("a zig-zag line needs at least one value")
        for a, b in zip(self.values, self.values[1:]):
            if abs(b - a) != 1:
                raise ValueError(f"steps must be +-1: {self.values}")

    @property
    def source(self) -> int:
        return self.values[0]

    @property
    def target(self) -> int:
        return self.values[-1]

    @property
    def length(self) -> int:
        return len(self.values) - 1

    def is_nonnegative(self) -> bool:
        return min(self.values) >= 0


def zigzag_count(source: int, target: int, length: int) -> int:
    """Number of +-1 step sequences of the given length from source to target."""
    if length < 0:
        raise ValueError("length must be nonnegative")
    diff = target - source
    if (length + diff) % 2:
        return 0
    return binom(length, (length + diff) // 2)


def enumerate_zigzags(source: int, length: int) -> Iterator[ZigZag]:
    for steps in itertools.product((1, -1), repeat=length):
        vals = [source]
        for s in steps:
            vals.append(vals[-1] + s)
        yield ZigZag(tuple(vals))


def _reflect_prefix(z: ZigZag, level: int) -> ZigZag:
    j = z.values.index(level)
    vals = tuple(2 * level - v for v in z.values[:j + 1]) + z.values[j + 1:]
    return ZigZag(vals)


def reflect(z: ZigZag) -> ZigZag:
    """Mirror the part up to the first visit of -1 in the line y = -1."""
    if -1 not in z.values:
        raise ValueError("the line never reaches -1")
    return _reflect_prefix(z, -1)


def unreflect(z: ZigZag) -> ZigZag:
    """Inverse of ``reflect`` on lines from a source below -1."""
    return reflect(z)


# ---------------------------------------------------------------------------
# admissible subsets

@dataclass(frozen=True)
class AdmissibleSubset:
    k: int
    elements: frozenset

    def __post_init__(self):
        if not is_admissible(self.elements, self.k):
            raise ValueError(f"{sorted(self.elements)} is not admissible for k={self.k}")

    def __len__(self):
        return len(self.elements)

    def __str__(self):
        return "{" + ",".join(map(str, sorted(self.elements))) + "}"


def is_admissible(X, k: int) -> bool:
    X = set(X)
    if not X <= set(range(1, 2 * k + 1)):
        return False
    count = 0
    for m in range(1, 2 * k + 1):
        count += m in X
        if 2 * count > m:
            return False
    return True


def admissible_subsets(k: int) -> list[AdmissibleSubset]:
    """All admissible subsets of {1..2k}, by size and then lexicographically."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    found = []

    def grow(m: int, count: int, chosen: list):
        if m > 2 * k:
            found.append(tuple(chosen))
            return
        grow(m + 1, count, chosen)
        if 2 * (count + 1) <= m:
            chosen.append(m)
            grow(m + 1, count + 1, chosen)
            chosen.pop()

    grow(1, 0, [])
    found.sort(key=lambda t: (len(t), t))
    return [AdmissibleSubset(k, frozenset(t)) for t in found]


def subset_to_sequence(X, k: int) -> ZigZag:
    X = set(X)
    vals, count = [0], 0
    for j in range(1, 2 * k + 1):
        count += j in X
        vals.append(j - 2 * count)
    return ZigZag(tuple(vals))


# ---------------------------------------------------------------------------
# rank formulas

@dataclass(frozen=True)
class RankProfile:
    """q-degree -> rank at one fixed homological degree."""
    degree: int
    ranks: dict

    @property
    def total(self) -> int:
        return sum(self.ranks.values())

    def nonzero(self) -> dict:
        return {q: r for q, r in sorted(self.ranks.items()) if r}


def theorem1_bounds(k: int, n: int) -> tuple[int, int]:
    """Largest homological and q-degree that can carry homology of T(2k, 2kn)."""
    if k < 1 or n < 1:
        raise ValueError("k and n must be positive")
    return 2 * k * k * n, 6 * k * k * n


def theorem2_rank(k: int, n: int, i: int) -> int:
    """Rank at bidegree (2k^2 n, 6k^2 n - 2i); zero for i outside 0..k."""
    if i < 0:
        return 0
    return binom(2 * k, k - i) - binom(2 * k, k - i - 1)


def theorem2_profile(k: int, n: int) -> RankProfile:
    i_max, j_max = theorem1_bounds(k, n)
    return RankProfile(i_max, {j_max - 2 * i: theorem2_rank(k, n, i) for i in range(k + 1)})


def h0_profile(k: int) -> RankProfile:
    """Ranks of degree-0 homology of the oppositely oriented link at q = -2i."""
    return RankProfile(0, {-2 * i: theorem2_rank(k, 1, i) for i in range(k + 1)})


def center_profile(k: int) -> dict[int, int]:
    """Expected ranks of the graded center of the arc ring: degree 2i -> rank."""
    return {2 * i: binom(2 * k, i) - binom(2 * k, i - 1) for i in range(k + 1)}


def torus_prime_shift(k: int, n: int) -> tuple[int, int]:
    """(di, dj) with H^{i,j}(T') = H^{i+di, j+dj}(T) for T(2k, 2kn)."""
    return 2 * k * k * n, 6 * k * k * n


# ---------------------------------------------------------------------------
# (3, q) torus links

_BRACKET = (tq(4, 3) + tq(4, 5) + tq(5, 7) + tq(5, 9) + tq(6, 7) + tq(7, 11))
_HEAD = tq(0, -3) + tq(0, -1) + tq(2, 1) + tq(3, 5)


def theorem3_branch(q: int) -> tuple[int, str]:
    """(n, branch) with q = 3n, 3n-1 or 3n-2."""
    if q < 1:
        raise ValueError("q must be at least 1")
    r = q % 3
    if r == 0:
        return q // 3, "3n"
    if r == 2:
        return (q + 1) // 3, "3n-1"
    return (q + 2) // 3, "3n-2"


def _series(n: int) -> LaurentPoly2:
    out = LaurentPoly2()
    for i in range(n - 1):
        out = out + tq(4 * i, 6 * i)
    return out


def theorem3_poincare(q: int) -> LaurentPoly2:
    """Rational Poincare polynomial of T(3, q) in invariant gradings."""
    n, branch = theorem3_branch(q)
    body = _HEAD + _BRACKET * _series(n)
    if branch == "3n":
        body = body + tq(4 * n, 6 * n - 3) + tq(4 * n, 6 * n - 1, 3) + tq(4 * n, 6 * n + 1, 2)
        return body.shift(0, 6 * n)
    if branch == "3n-1":
        return body.shift(0, 6 * n - 2)
    body = body - tq(4 * n - 2, 6 * n - 5) - tq(4 * n - 1, 6 * n - 1)
    return body.shift(0, 6 * n - 4)


def stable_P2(order: int) -> LaurentPoly2:
    """1 + q^-2 + t^-1 q^-2 (1 + t^-1 q^-4) sum_{i=0}^{order} t^-2i q^-4i."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    s = LaurentPoly2()
    for i in range(order + 1):
        s = s + tq(-2 * i, -4 * i)
    return tq(0, 0) + tq(0, -2) + tq(-1, -2) * (tq(0, 0) + tq(-1, -4)) * s


def stable_P3(order: int) -> LaurentPoly2:
    """2q + 3q^-1 + q^-3 + (t^-1 q^-1 + t^-3 q^-3 + t^-3 q^-5)(1 + t^-1 q^-4)
    sum_{i=0}^{order} t^-4i q^-6i."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    s = LaurentPoly2()
    for i in range(order + 1):
        s = s + tq(-4 * i, -6 * i)
    head = tq(0, 1, 2) + tq(0, -1, 3) + tq(0, -3)
    return head + (tq(-1, -1) + tq(-3, -3) + tq(-3, -5)) * (tq(0, 0) + tq(-1, -4)) * s


def stable_constant_part(p: LaurentPoly2) -> LaurentPoly2:
    """Terms of homological degree zero."""
    return p.filter(lambda t, q: t == 0)
