"""Verification routines comparing computed homology with the closed forms.

Each function returns a ``Report``; the command line only dispatches to these.
"""
from __future__ import annotations

import itertools
from typing import Optional

from .archring import center, compare_center_with_H0
from .diagram import (LinkDiagram, reverse_orientation, resolve, torus_diagram,
                      torus_prime_diagram)
from .homology import (BigradedAbelianGroup, cone_check, delta_width, khovanov_homology,
                       lee_degree_ranks, poincare, shift_to_invariant)
from .polynomial import LaurentPoly2, tq
from .report import Report
from .torusform import (admissible_subsets, binom, catalan, center_profile, h0_profile,
                        enumerate_zigzags, is_admissible, reflect, subset_to_sequence,
                        theorem1_bounds, theorem2_profile, theorem3_branch, theorem3_poincare,
                        stable_constant_part, stable_P2, stable_P3, torus_prime_shift,
                        zigzag_count)

def _unlink(m: int) -> LaurentPoly2:
    return (tq(0, 1) + tq(0, -1)) ** m


def check_theorem1(k: int, n: int, h: Optional[BigradedAbelianGroup] = None,
                   reduce: bool = False) -> Report:
    i_max, j_max = theorem1_bounds(k, n)
    rep = Report(f"cut-off for T({2 * k},{2 * k * n}): i <= {i_max}, j <= {j_max}")
    if h is None:
        h = khovanov_homology(torus_diagram(2 * k, 2 * k * n), "Z", reduce)
    for (i, j), g in h:
        rep.check(i <= i_max and j <= j_max, f"H^({i},{j}) = {g}")
    rep.check(any(i == i_max for i, _ in h.groups), f"degree {i_max} is nonzero")
    return rep


def check_theorem2(k: int, n: int, h: Optional[BigradedAbelianGroup] = None,
                   reduce: bool = False) -> Report:
    prof = theorem2_profile(k, n)
    rep = Report(f"top homology of T({2 * k},{2 * k * n}) at i = {prof.degree}")
    if h is None:
        h = khovanov_homology(torus_diagram(2 * k, 2 * k * n), "Z", reduce)
    top = h.degree(prof.degree)
    for j in sorted(set(top) | set(prof.ranks)):
        g = h[(prof.degree, j)]
        expected = prof.ranks.get(j, 0)
        rep.check(g.free == expected and not g.torsion,
                  f"q={j}: computed {g}, expected rank {expected}")
    total = sum(g.free for g in top.values())
    rep.check(total == binom(2 * k, k), f"total rank {total} = binom({2 * k},{k})")
    rep.check(prof.ranks.get(6 * k * k * n, 0) == catalan(k), f"top entry is Catalan({k})")
    return rep


def check_thickness(k: int, n: int, h: Optional[BigradedAbelianGroup] = None,
                    reduce: bool = False) -> Report:
    if h is None:
        h = khovanov_homology(torus_diagram(2 * k, 2 * k * n), "Z", reduce)
    w = delta_width(h)
    bound = k * (k - 1) * n + 2
    rep = Report(f"delta-width of T({2 * k},{2 * k * n})")
    rep.check(w >= bound, f"width {w} >= {bound}")
    return rep


def check_theorem3(q: int, reduce: bool = False,
                   h: Optional[BigradedAbelianGroup] = None) -> Report:
    n, branch = theorem3_branch(q)
    rep = Report(f"Poincare polynomial of T(3,{q}) (branch {branch}, n={n})")
    if h is None:
        h = khovanov_homology(torus_diagram(3, q), "Q", reduce)
    got, want = poincare(h), theorem3_poincare(q)
    diff = got - want
    rep.check(diff == 0, f"computed {got}" + ("" if diff == 0 else f"; differs by {diff}"))
    return rep


def theorem3_boundary_terms(n: int) -> dict[str, LaurentPoly2]:
    """Diagram-graded differences between consecutive (3, q) answers."""
    return {
        "3n+2 - 3n+1": tq(4 * n + 2, 6 * n + 1) + tq(4 * n + 3, 6 * n + 5),
        "3n+3 - 3n+2": tq(4 * n + 4, 6 * n + 3) + tq(4 * n + 4, 6 * n + 5, 3)
        + tq(4 * n + 4, 6 * n + 7, 2),
    }


def diagram_poincare_3(q: int) -> LaurentPoly2:
    """Closed form for the unshifted diagram of T(3, q) (2q positive crossings)."""
    return theorem3_poincare(q).shift(0, -2 * q)


def check_theorem3_boundaries(n_max: int = 6, computed: Optional[dict] = None) -> Report:
    """Consecutive branches differ only by the extra groups named in the
    induction, both for the formulas and (when given) for computed data."""
    rep = Report("branch boundaries of the (3, q) formulas")
    for n in range(0, n_max + 1):
        extra = theorem3_boundary_terms(n)
        for lo, key in ((3 * n + 1, "3n+2 - 3n+1"), (3 * n + 2, "3n+3 - 3n+2")):
            if lo < 1:
                continue
            d = diagram_poincare_3(lo + 1) - diagram_poincare_3(lo)
            rep.check(d == extra[key], f"n={n}: P(3,{lo + 1}) - P(3,{lo}) = {d}")
            if computed and lo in computed and lo + 1 in computed:
                dc = computed[lo + 1].shift(0, -2 * (lo + 1)) - computed[lo].shift(0, -2 * lo)
                rep.check(dc == extra[key], f"n={n}: computed difference {dc}")
    return rep


def check_tprime(k: int, n: int, reduce: bool = False) -> Report:
    """Recompute with k components reversed and compare with the shifted T."""
    rep = Report(f"T'({2 * k},{2 * k * n}) against shifted T({2 * k},{2 * k * n})")
    d = torus_diagram(2 * k, 2 * k * n)
    dp = torus_prime_diagram(2 * k, 2 * k * n)
    rep.check((dp.n_plus, dp.n_minus) == (2 * k * (k - 1) * n, 2 * k * k * n),
              f"(n+, n-) = ({dp.n_plus}, {dp.n_minus})")
    h = khovanov_homology(d, "Z", reduce)
    hp = khovanov_homology(dp, "Z", reduce)
    di, dj = torus_prime_shift(k, n)
    expect = h.shifted(-di, -dj)
    for key in sorted(set(hp.groups) | set(expect.groups)):
        rep.check(hp[key] == expect[key], f"H'^{key} = {hp[key]}, H^({key[0] + di},"
                                          f"{key[1] + dj}) = {expect[key]}")
    deg0 = {j: g.free for j, g in hp.degree(0).items()}
    for j, r in h0_profile(k).ranks.items():
        rep.check(deg0.get(j, 0) == r, f"H'^(0,{j}) rank {deg0.get(j, 0)} = {r}")
    rep.check(deg0.get(0, 0) == catalan(k), f"H'^(0,0) rank = Catalan({k}) = {catalan(k)}")
    return rep


def check_lee(d: LinkDiagram, label: str = "", top: Optional[tuple[int, int]] = None,
              reduce: bool = False) -> Report:
    """Total rational Lee rank is 2^(components); optionally a degree's rank."""
    ranks = lee_degree_ranks(d, reduce)
    rep = Report(f"Lee ranks {label or ''}".strip())
    total = sum(ranks.values())
    rep.check(total == 2 ** d.n_components,
              f"total {total} = 2^{d.n_components}; by degree {ranks}")
    if top is not None:
        i, r = top
        rep.check(ranks.get(i, 0) == r, f"degree {i}: rank {ranks.get(i, 0)} = {r}")
    return rep


def check_center(k: int) -> Report:
    rep = Report(f"graded center of H^{k}")
    res = center(k)
    want = center_profile(k)
    adm = {}
    for X in admissible_subsets(k):
        adm[2 * len(X)] = adm.get(2 * len(X), 0) + 1
    for deg in sorted(set(want) | set(res.ranks)):
        rep.check(res.ranks.get(deg, 0) == want.get(deg, 0) == adm.get(deg, 0),
                  f"degree {deg}: kernel rank {res.ranks.get(deg, 0)}, formula "
                  f"{want.get(deg, 0)}, admissible subsets {adm.get(deg, 0)}")
    rep.check(res.total == binom(2 * k, k), f"total {res.total} = binom({2 * k},{k})")
    rep.check(all(d % 2 == 0 and 0 <= d <= 2 * k for d in res.ranks), "degrees even in [0, 2k]")
    return rep


def check_admissible(k_max: int = 8, reflect_max: int = 6) -> Report:
    """Admissible subsets by brute force, and the reflection bijection."""
    rep = Report(f"admissible subsets (k <= {k_max}) and reflection (k <= {reflect_max})")
    for k in range(0, k_max + 1):
        gen = admissible_subsets(k)
        counts = {}
        for X in gen:
            counts[len(X)] = counts.get(len(X), 0) + 1
        brute = {}
        for bits in range(1 << (2 * k)):
            X = {m + 1 for m in range(2 * k) if bits >> m & 1}
            if is_admissible(X, k):
                brute[len(X)] = brute.get(len(X), 0) + 1
                if not subset_to_sequence(X, k).is_nonnegative():
                    rep.check(False, f"k={k}: admissible {sorted(X)} gives a negative sequence")
            elif subset_to_sequence(X, k).is_nonnegative():
                rep.check(False, f"k={k}: non-admissible {sorted(X)} gives a nonnegative sequence")
        want = {i: binom(2 * k, i) - binom(2 * k, i - 1) for i in range(k + 1)}
        rep.check(counts == brute == {i: c for i, c in want.items() if c},
                  f"k={k}: counts {dict(sorted(counts.items()))}")
        rep.check(len(gen) == binom(2 * k, k), f"k={k}: total {len(gen)} = binom({2 * k},{k})")
    for k in range(1, reflect_max + 1):
        for i in range(k + 1):
            target = 2 * k - 2 * i
            bad = [z for z in enumerate_zigzags(0, 2 * k)
                   if z.target == target and not z.is_nonnegative()]
            images = {reflect(z).values for z in bad}
            from_minus2 = {z.values for z in enumerate_zigzags(-2, 2 * k) if z.target == target}
            ok = (len(images) == len(bad) and images == from_minus2
                  and len(bad) == zigzag_count(-2, target, 2 * k) == binom(2 * k, i - 1))
            rep.check(ok, f"k={k}, i={i}: {len(bad)} negative lines <-> "
                          f"{len(from_minus2)} lines from -2 = binom({2 * k},{i - 1})")
    return rep


def check_binomial_grid(size: int = 50) -> Report:
    """Zero-extended binomials on [-size/2, size/2)^2: symmetry everywhere and
    Pascal's rule everywhere except (n, k) = (-1, -1)."""
    rep = Report(f"binomial conventions on a {size}x{size} grid")
    lo = -(size // 2)
    rng = range(lo, lo + size)
    fails = [(n, k) for n, k in itertools.product(rng, rng)
             if binom(n + 1, k + 1) != binom(n, k) + binom(n, k + 1)]
    rep.check(fails == [(-1, -1)], f"Pascal failures {fails}")
    sym = [(n, k) for n, k in itertools.product(rng, rng) if binom(n, k) != binom(n, n - k)]
    rep.check(not sym, f"symmetry failures {sym[:5]}")
    rep.check(all(binom(2 * k, k) == 2 * binom(2 * k - 1, k) for k in range(1, size)),
              "binom(2k,k) = 2 binom(2k-1,k)")
    return rep


def check_cone_all(d: LinkDiagram, label: str = "") -> Report:
    rep = Report(f"resolution sequences at every crossing {label}".strip())
    for c in d.crossings:
        sub = cone_check(d, c.id)
        rep.extend(sub, prefix=f"crossing {c.position or c.id}: ")
    return rep


def tower(k: int, n: int) -> list[tuple[LinkDiagram, LinkDiagram, int]]:
    """[(D^{l-1}, E^l, crossing id)] for l = 1..2k-1: resolve (2k-l, 1) of D^{l-1}."""
    d = torus_diagram(2 * k, 2 * k * n)
    out = []
    for l in range(1, 2 * k):
        c = d.crossing_at(2 * k - l, 1)
        out.append((d, resolve(d, c.id, 1), c.id))
        d = resolve(d, c.id, 0)
    out.append((d, None, None))
    return out


def check_tower(k: int, n: int) -> Report:
    rep = Report(f"resolution tower of T({2 * k},{2 * k * n})")
    steps = tower(k, n)
    for l, (d, _, cid) in enumerate(steps[:-1], start=1):
        rep.extend(cone_check(d, cid), prefix=f"D^{l - 1} at ({2 * k - l},1): ")
    last = steps[-1][0]
    h_last = khovanov_homology(last, "Z", shifted=False)
    h_ref = khovanov_homology(torus_diagram(2 * k, 2 * k * n - 1), "Z", shifted=False)
    rep.check(h_last == h_ref, f"D^{2 * k - 1} has the homology of D({2 * k},{2 * k * n - 1})")
    return rep


# the six identifications for the (3, q) family: (q offset, level, unlink size, n-, n+)
FIXTURES_3 = [
    (3, 1, 2, lambda n: 4 * n + 3, lambda n: 2 * n + 2),
    (3, 2, 1, lambda n: 4 * n + 3, lambda n: 2 * n + 1),
    (2, 1, 1, lambda n: 4 * n + 2, lambda n: 2 * n + 1),
    (2, 2, 1, lambda n: 4 * n + 1, lambda n: 2 * n + 1),
    (1, 1, 1, lambda n: 4 * n, lambda n: 2 * n + 1),
    (1, 2, 2, lambda n: 4 * n, lambda n: 2 * n),
]


def fixture_diagrams(q: int) -> dict[int, LinkDiagram]:
    """E^1 (1-resolve (2,1) of D(3,q)) and E^2 (1-resolve (1,1) of the 0-resolution)."""
    d = torus_diagram(3, q)
    c = d.crossing_at(2, 1)
    e1 = resolve(d, c.id, 1)
    d1 = resolve(d, c.id, 0)
    e2 = resolve(d1, d1.crossing_at(1, 1).id, 1)
    return {1: e1, 2: e2}


def _orientation_counts(d: LinkDiagram) -> set[tuple[int, int]]:
    comps = d.component_ids
    out = set()
    for r in range(len(comps) + 1):
        for sub in itertools.combinations(comps, r):
            dd = reverse_orientation(d, sub)
            out.add((dd.n_minus, dd.n_plus))
    return out


def check_fixtures(n: int = 1, reduce: bool = False) -> Report:
    rep = Report(f"E-diagram identifications for T(3, 3n+1..3n+3), n={n}")
    for off, level, m, nm, np_ in FIXTURES_3:
        q = 3 * n + off
        e = fixture_diagrams(q)[level]
        name = f"E^{level}(3,{q})"
        want = (nm(n), np_(n))
        rep.check(e.n_crossings == sum(want), f"{name}: {e.n_crossings} crossings = n- + n+")
        rep.check(want in _orientation_counts(e),
                  f"{name}: some orientation has (n-, n+) = {want}")
        rep.check(e.n_components == m, f"{name}: {e.n_components} component(s)")
        h = shift_to_invariant(khovanov_homology(e, "Z", reduce, shifted=False), want[1], want[0])
        got = poincare(h)
        rep.check(got == _unlink(m) and not h.has_torsion(),
                  f"{name}: shifted homology {got} = {_unlink(m)}")
    return rep


def _window(p: LaurentPoly2, t_min: int) -> LaurentPoly2:
    return p.filter(lambda t, q: t >= t_min)


def check_stable_P2(n: int, reduce: bool = False) -> Report:
    """Truncated P2 against T(2,2n) homology moved by the T' shift (k = 1)."""
    rep = Report(f"stable limit P2 against T(2,{2 * n})")
    di, dj = torus_prime_shift(1, n)
    got = poincare(khovanov_homology(torus_diagram(2, 2 * n), "Z", reduce)).shift(-di, -dj)
    t_min = -2 * (n - 1)
    a, b = _window(got, t_min), _window(stable_P2(n), t_min)
    rep.check(a == b, f"t >= {t_min}: computed {a}; series {b}")
    return rep


def check_stable_P3(n: int, reduce: bool = False) -> Report:
    """Truncated P3 against T(3,3n) homology with one component reversed."""
    rep = Report(f"stable limit P3 against T(3,{3 * n})")
    p = stable_P3(n)
    const = stable_constant_part(p)
    rep.check(const == tq(0, 1, 2) + tq(0, -1, 3) + tq(0, -3),
              f"constant part {const}")
    got = poincare(khovanov_homology(torus_diagram(3, 3 * n), "Q", reduce)).shift(-4 * n, -12 * n)
    t_min = -4 * (n - 1)
    a, b = _window(got, t_min), _window(p, t_min)
    rep.check(a == b, f"t >= {t_min}: computed {a}; series {b}")
    return rep
