"""Braid words, their closures as oriented link diagrams, and crossing resolutions.

A diagram is stored PD-style.  Every crossing lists the four edges meeting it in
counterclockwise order ``(a, b, c, d)``, where ``a`` and ``c`` belong to the
under-strand and ``b``, ``d`` to the over-strand.  With this convention the
0-smoothing joins ``a-b`` and ``c-d`` and the 1-smoothing joins ``a-d`` and
``b-c``, independently of orientation.

Orientation is kept as a base orientation (``Crossing.incoming``) plus a set of
reversed components, so that crossing signs, and hence grading shifts, can be
recomputed for any choice of reversed components.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional

__all__ = [
    "BraidWord",
    "Crossing",
    "LinkDiagram",
    "parse_braid",
    "torus_braid",
    "close_braid",
    "reverse_orientation",
    "resolve",
    "torus_diagram",
    "torus_prime_diagram",
    "unknot",
]

# slot pairs joined by each smoothing
SMOOTHINGS = {0: ((0, 1), (2, 3)), 1: ((0, 3), (1, 2))}


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError(f"a braid needs at least one strand, got {self.strands}")
        for l in self.letters:
            if l == 0:
                raise ValueError("braid letters must be nonzero")
            if abs(l) >= self.strands:
                raise ValueError(
                    f"generator {l} out of range for a {self.strands}-strand braid")

    def __len__(self):
        return len(self.letters)

    def permutation(self) -> tuple[int, ...]:
        """Image of each strand position after traversing the word once."""
        perm = list(range(self.strands))
        for l in self.letters:
            i = abs(l) - 1
            perm[i], perm[i + 1] = perm[i + 1], perm[i]
        # perm[pos] = strand now at pos; invert to strand -> pos
        out = [0] * self.strands
        for pos, s in enumerate(perm):
            out[s] = pos
        return tuple(out)

    def cycle_count(self) -> int:
        perm = self.permutation()
        seen = [False] * self.strands
        count = 0
        for s in range(self.strands):
            if not seen[s]:
                count += 1
                while not seen[s]:
                    seen[s] = True
                    s = perm[s]
        return count

    def __str__(self):
        return " ".join(str(l) for l in self.letters)


def parse_braid(text: str, strands: int) -> BraidWord:
    """Parse whitespace-separated signed generator indices."""
    letters = []
    for tok in text.split():
        try:
            letters.append(int(tok))
        except ValueError:
            raise ValueError(f"not an integer braid letter: {tok!r}") from None
    return BraidWord(strands, tuple(letters))


def torus_braid(p: int, q: int) -> BraidWord:
    """The word (s_1 s_2 ... s_{p-1})^q."""
    if p < 1 or q < 0:
        raise ValueError(f"torus braid needs p >= 1 and q >= 0, got ({p}, {q})")
    return BraidWord(p, tuple(range(1, p)) * q)


@dataclass(frozen=True)
class Crossing:
    id: int
    slots: tuple[int, int, int, int]
    # base orientation: True where the edge at that slot points into the crossing
    incoming: tuple[bool, bool, bool, bool]
    # (generator index i, occurrence alpha) for braid-derived crossings
    position: Optional[tuple[int, int]] = None

    @property
    def base_sign(self) -> int:
        # under strand a->c agrees with over strand d->b  <=> positive
        return 1 if self.incoming[0] == self.incoming[3] else -1

    def record(self) -> list:
        return [self.id, list(self.slots), [int(b) for b in self.incoming],
                list(self.position) if self.position else None]


class _UnionFind:
    def __init__(self, items: Iterable[int] = ()):
        self.parent = {x: x for x in items}

    def find(self, x):
        parent = self.parent
        root = parent.setdefault(x, x)
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            if ry < rx:
                rx, ry = ry, rx
            self.parent[ry] = rx


@dataclass(frozen=True)
class LinkDiagram:
    crossings: tuple[Crossing, ...]
    loops: frozenset[int] = frozenset()
    reversed: frozenset[int] = frozenset()
    _check: bool = field(default=True, repr=False, compare=False)

    def __post_init__(self):
        if self._check:
            self._validate()

    def _validate(self):
        ends: dict[int, int] = {}
        for c in self.crossings:
            for e in c.slots:
                ends[e] = ends.get(e, 0) + 1
        for e, k in ends.items():
            if k != 2:
                raise ValueError(f"edge {e} has {k} crossing ends, expected 2")
            if e in self.loops:
                raise ValueError(f"free loop {e} also meets a crossing")
        heads: dict[int, int] = {}
        for c in self.crossings:
            if c.incoming[0] == c.incoming[2] or c.incoming[1] == c.incoming[3]:
                raise ValueError(f"crossing {c.id}: strand orientation not continuous")
            for e, inc in zip(c.slots, c.incoming):
                heads[e] = heads.get(e, 0) + int(inc)
        if any(v != 1 for v in heads.values()):
            raise ValueError("every edge needs exactly one head and one tail")
        bad = set(self.reversed) - set(self.component_ids)
        if bad:
            raise ValueError(f"unknown component ids {sorted(bad)}")

    # -- structure -------------------------------------------------------
    @property
    def n_crossings(self) -> int:
        return len(self.crossings)

    @cached_property
    def edges(self) -> tuple[int, ...]:
        es = set(self.loops)
        for c in self.crossings:
            es.update(c.slots)
        return tuple(sorted(es))

    @cached_property
    def _component_of(self) -> dict[int, int]:
        uf = _UnionFind(self.edges)
        for c in self.crossings:
            uf.union(c.slots[0], c.slots[2])
            uf.union(c.slots[1], c.slots[3])
        return {e: uf.find(e) for e in self.edges}

    def component_of(self, edge: int) -> int:
        return self._component_of[edge]

    @cached_property
    def components(self) -> dict[int, tuple[int, ...]]:
        comps: dict[int, list[int]] = {}
        for e, r in self._component_of.items():
            comps.setdefault(r, []).append(e)
        return {r: tuple(sorted(v)) for r, v in sorted(comps.items())}

    @property
    def component_ids(self) -> tuple[int, ...]:
        return tuple(self.components)

    @property
    def n_components(self) -> int:
        return len(self.components)

    def crossing(self, cid: int) -> Crossing:
        for c in self.crossings:
            if c.id == cid:
                return c
        raise KeyError(f"no crossing with id {cid}")

    def crossing_at(self, i: int, alpha: int) -> Crossing:
        for c in self.crossings:
            if c.position == (i, alpha):
                return c
        raise KeyError(f"no crossing at position ({i}, {alpha})")

    # -- signs -----------------------------------------------------------
    def sign(self, c: Crossing | int) -> int:
        if isinstance(c, int):
            c = self.crossing(c)
        flips = (self._component_of[c.slots[0]] in self.reversed) + \
                (self._component_of[c.slots[1]] in self.reversed)
        return c.base_sign * (-1) ** flips

    @cached_property
    def signs(self) -> tuple[int, ...]:
        return tuple(self.sign(c) for c in self.crossings)

    @property
    def n_plus(self) -> int:
        return sum(1 for s in self.signs if s > 0)

    @property
    def n_minus(self) -> int:
        return sum(1 for s in self.signs if s < 0)

    # -- serialization ---------------------------------------------------
    def canonical(self) -> str:
        """Stable text form; used as part of cache keys."""
        rec = {
            "crossings": [c.record() for c in sorted(self.crossings, key=lambda c: c.id)],
            "order": [c.id for c in self.crossings],
            "loops": sorted(self.loops),
            "reversed": sorted(self.reversed),
        }
        return json.dumps(rec, separators=(",", ":"), sort_keys=True)

    def edge_ends(self) -> dict[int, list[tuple[int, int]]]:
        """edge -> [(crossing index, slot), ...] with the head end listed second."""
        ends: dict[int, list] = {e: [None, None] for e in self.edges if e not in self.loops}
        for ci, c in enumerate(self.crossings):
            for s, (e, inc) in enumerate(zip(c.slots, c.incoming)):
                ends[e][1 if inc else 0] = (ci, s)
        return ends


def unknot(loops: int = 1) -> LinkDiagram:
    """Crossingless diagram of the ``loops``-component unlink."""
    return LinkDiagram((), frozenset(range(loops)))


def close_braid(b: BraidWord) -> LinkDiagram:
    """Closure of a braid, letters read top to bottom, strands oriented upward.

    Edges at the top level get ids ``0..strands-1``, so the component through
    top position ``s`` has id ``s`` whenever ``s`` is the smallest position on
    that component.
    """
    p = b.strands
    cur = list(range(p))            # edge ids at the current level
    next_id = p
    raw = []
    occurrence: dict[int, int] = {}
    for k, l in enumerate(b.letters):
        i = abs(l) - 1
        tl, tr = cur[i], cur[i + 1]
        bl, br = next_id, next_id + 1
        next_id += 2
        occurrence[abs(l)] = occurrence.get(abs(l), 0) + 1
        if l > 0:
            # over strand BL->TR, under strand BR->TL
            slots, inc = (br, tr, tl, bl), (True, False, False, True)
        else:
            # over strand BR->TL, under strand BL->TR
            slots, inc = (bl, br, tr, tl), (True, True, False, False)
        raw.append((k, slots, inc, (abs(l), occurrence[abs(l)])))
        cur[i], cur[i + 1] = bl, br
    uf = _UnionFind(range(next_id))
    for s in range(p):
        uf.union(s, cur[s])
    reps = sorted({uf.find(e) for e in range(next_id)})
    renum = {e: n for n, e in enumerate(reps)}

    def rn(e):
        return renum[uf.find(e)]

    crossings = tuple(Crossing(k, tuple(rn(e) for e in slots), inc, pos)
                      for k, slots, inc, pos in raw)
    used = {e for c in crossings for e in c.slots}
    loops = frozenset(e for e in renum.values() if e not in used)
    return LinkDiagram(crossings, loops)


def torus_diagram(p: int, q: int) -> LinkDiagram:
    return close_braid(torus_braid(p, q))


def torus_prime_diagram(p: int, q: int, strands: Optional[Iterable[int]] = None) -> LinkDiagram:
    """T(p, q) with the components through the given top positions reversed.

    The default reverses positions 0, 2, 4, ... (the odd-indexed strands when
    counting from 1), i.e. ``ceil(p/2)`` strands; for ``p = 2k`` this is ``k``
    alternating components, and for ``p = 3`` it reverses one component only if
    passed explicitly.
    """
    d = torus_diagram(p, q)
    if strands is None:
        strands = range(0, p, 2)
    comps = {d.component_of(s) for s in strands}
    return reverse_orientation(d, comps)


def reverse_orientation(d: LinkDiagram, comps: Iterable[int]) -> LinkDiagram:
    """Toggle the orientation of the given components."""
    comps = frozenset(comps)
    unknown = comps - set(d.component_ids)
    if unknown:
        raise ValueError(f"unknown component ids {sorted(unknown)}")
    return LinkDiagram(d.crossings, d.loops, d.reversed ^ comps, _check=False)


def _effective_heads(d: LinkDiagram) -> dict[int, tuple[int, int]]:
    """edge -> (crossing index, slot) of its head, after applying reversals."""
    heads = {}
    for e, (tail, head) in d.edge_ends().items():
        heads[e] = tail if d.component_of(e) in d.reversed else head
    return heads


def resolve(d: LinkDiagram, cid: int, r: int) -> LinkDiagram:
    """Smooth crossing ``cid`` (0- or 1-smoothing) and re-orient the result.

    Surviving crossings keep their ids, positions and relative order.  Each
    component of the result is oriented along its smallest edge, whose
    direction is inherited from ``d`` (reversals included); the result has no
    reversed components.
    """
    if r not in (0, 1):
        raise ValueError("resolution must be 0 or 1")
    try:
        x = next(i for i, c in enumerate(d.crossings) if c.id == cid)
    except StopIteration:
        raise ValueError(f"unknown crossing id {cid}") from None
    X = d.crossings[x]
    ends = d.edge_ends()
    heads = _effective_heads(d)
    partner = {}
    for s1, s2 in SMOOTHINGS[r]:
        partner[s1], partner[s2] = s2, s1

    def other_end(e, end):
        t, h = ends[e]
        return h if end == t else t

    new_edge_of_end: dict[tuple[int, int], int] = {}   # (ci, slot) -> new edge id
    new_heads: dict[int, tuple[int, int]] = {}
    visited: set[int] = set()
    for e, (t, h) in sorted(ends.items()):
        for start in (t, h):
            if start[0] == x or start in new_edge_of_end:
                continue
            # walk from start until a surviving end
            path = []
            cur_edge, cur_end = e, start
            while True:
                path.append((cur_edge, cur_end))
                far = other_end(cur_edge, cur_end)
                if far[0] != x:
                    break
                nxt_slot = partner[far[1]]
                cur_end = (x, nxt_slot)
                cur_edge = X.slots[nxt_slot]
            finish = far
            emin, from_end = min(path)
            visited.update(pe for pe, _ in path)
            # direction of the new edge follows its smallest old edge
            forward = heads[emin] != from_end
            new_edge_of_end[start] = emin
            new_edge_of_end[finish] = emin
            new_heads[emin] = finish if forward else start
    loops = set(d.loops)
    for e in sorted(ends):
        if e in visited:
            continue
        # closed up entirely inside the smoothed crossing
        cycle, cur_edge, cur_end = [], e, ends[e][0]
        while cur_edge not in cycle:
            cycle.append(cur_edge)
            far = other_end(cur_edge, cur_end)
            cur_end = (x, partner[far[1]])
            cur_edge = X.slots[cur_end[1]]
        visited.update(cycle)
        loops.add(min(cycle))

    survivors = [c for i, c in enumerate(d.crossings) if i != x]
    old_index = [i for i in range(len(d.crossings)) if i != x]
    slots = [tuple(new_edge_of_end[(oi, s)] for s in range(4)) for oi in old_index]
    # re-orient: each component follows its smallest edge
    uf = _UnionFind()
    for sl in slots:
        uf.union(sl[0], sl[2])
        uf.union(sl[1], sl[3])
    end_map: dict[int, list[tuple[int, int]]] = {}
    for k, sl in enumerate(slots):
        for s, e in enumerate(sl):
            end_map.setdefault(e, []).append((k, s))
    incoming = [[None] * 4 for _ in slots]
    done = set()
    oi_pos = {oi: k for k, oi in enumerate(old_index)}
    for e in sorted(end_map):
        root = uf.find(e)
        if root in done:
            continue
        done.add(root)
        # head of the component's smallest edge, in new crossing indices
        hk, hs = new_heads[root]
        head = (oi_pos[hk], hs)
        edge = root
        while True:
            a, b = end_map[edge]
            tail = a if b == head else b
            incoming[head[0]][head[1]] = True
            incoming[tail[0]][tail[1]] = False
            k, s = head
            out_slot = (s + 2) % 4
            edge = slots[k][out_slot]
            if edge == root:
                break
            a, b = end_map[edge]
            head = b if a == (k, out_slot) else a
    crossings = tuple(Crossing(c.id, sl, tuple(inc), c.position)
                      for c, sl, inc in zip(survivors, slots, incoming))
    return LinkDiagram(crossings, frozenset(loops))
