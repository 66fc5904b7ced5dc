"""Command line: ``kh compute``, ``kh verify`` and ``kh hk``.

Exit codes: 0 success (or all checks passed), 1 a check failed, 2 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from . import checks
from .archring import ArcRing, center, compare_center_with_H0, enumerate_matchings
from .cache import ResultCache, cache_key
from .cube import CrossingCapError
from .diagram import LinkDiagram, close_braid, parse_braid, torus_diagram, torus_prime_diagram
from .homology import (BigradedAbelianGroup, delta_width, khovanov_homology,
                       lee_degree_ranks, poincare)
from .report import Report

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

log = logging.getLogger("khtorus")


@dataclass
class Job:
    command: str
    parameters: dict
    ring: str = "Z"
    reduce: bool = False
    spec: str = "KHOVANOV"
    fmt: str = "json"
    lee: bool = False
    extra: dict = field(default_factory=dict)


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# compute

def job_diagram(params: dict) -> tuple[str, LinkDiagram]:
    if params.get("braid") is not None:
        if params.get("strands") is None:
            raise UsageError("--braid needs --strands")
        w = parse_braid(params["braid"], params["strands"])
        return f"braid[{params['strands']}]({w})", close_braid(w)
    if params.get("torus") is not None:
        p, q = params["torus"]
        if p < 1 or q < 0:
            raise UsageError("--torus needs P >= 1 and Q >= 0")
        return f"T({p},{q})", torus_diagram(p, q)
    if params.get("torus_prime") is not None:
        k, n = params["torus_prime"]
        if k < 1 or n < 1:
            raise UsageError("--torus-prime needs K >= 1 and N >= 1")
        return f"T'({2 * k},{2 * k * n})", torus_prime_diagram(2 * k, 2 * k * n)
    raise UsageError("one of --braid, --torus, --torus-prime is required")


def cached_homology(d: LinkDiagram, ring: str, reduce: bool,
                    cache: Optional[ResultCache]) -> BigradedAbelianGroup:
    key = cache_key(d.canonical(), "KHOVANOV", ring)
    if cache is not None:
        hit = cache.get(key)
        if hit is not None:
            return BigradedAbelianGroup.from_json(hit.value)
    h = khovanov_homology(d, ring, reduce)
    if cache is not None:
        cache.put(key, h.dumps())
    return h


def cached_lee(d: LinkDiagram, reduce: bool, cache: Optional[ResultCache]) -> dict[int, int]:
    key = cache_key(d.canonical(), "LEE", "Q")
    if cache is not None:
        hit = cache.get(key)
        if hit is not None:
            return {int(i): r for i, r in json.loads(hit.value).items()}
    ranks = lee_degree_ranks(d, reduce)
    if cache is not None:
        cache.put(key, json.dumps({str(i): r for i, r in ranks.items()}, sort_keys=True))
    return ranks


def compute_result(job: Job, cache: Optional[ResultCache] = None) -> dict:
    name, d = job_diagram(job.parameters)
    out = {"link": name, "crossings": d.n_crossings, "components": d.n_components,
           "n_plus": d.n_plus, "n_minus": d.n_minus}
    if job.lee:
        ranks = cached_lee(d, job.reduce, cache)
        out["lee"] = [{"i": i, "rank": r} for i, r in sorted(ranks.items())]
        out["lee_total"] = sum(ranks.values())
        return out
    h = cached_homology(d, job.ring, job.reduce, cache)
    out["homology"] = h.to_json()
    out["poincare"] = poincare(h).to_json()
    out["delta_width"] = delta_width(h) if len(h) else 0
    return out


def render_compute(res: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(res, sort_keys=True, indent=1)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        if "lee" in res:
            w.writerow(["i", "rank"])
            for row in res["lee"]:
                w.writerow([row["i"], row["rank"]])
        else:
            w.writerow(["i", "j", "free", "torsion"])
            for g in res["homology"]["groups"]:
                w.writerow([g["i"], g["j"], g["free"], " ".join(map(str, g["torsion"]))])
        return buf.getvalue().rstrip("\n")
    lines = [f"{res['link']}: {res['crossings']} crossings, {res['components']} component(s), "
             f"n+ = {res['n_plus']}, n- = {res['n_minus']}"]
    if "lee" in res:
        lines.append("Lee ranks over Q: " + ", ".join(f"i={r['i']}: {r['rank']}" for r in res["lee"])
                     + f" (total {res['lee_total']})")
        return "\n".join(lines)
    h = BigradedAbelianGroup.from_json(res["homology"])
    lines.append(f"ring {h.ring}; delta-width {res['delta_width']}")
    for (i, j), g in h:
        lines.append(f"  H^({i},{j}) = " + (str(g).replace("Z", "Q") if h.ring == "Q" else str(g)))
    lines.append(f"Poincare polynomial: {poincare(h)}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# verify

def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.check} needs " + ", ".join("--" + m.replace("_", "-")
                                                            for m in missing))


def _verify_cone(a) -> Report:
    if a.tower is not None:
        return checks.check_tower(*a.tower)
    if a.torus is None:
        raise UsageError("cone needs --torus P Q or --tower K N")
    p, q = a.torus
    return checks.check_cone_all(torus_diagram(p, q), f"T({p},{q})")


def _verify_lee(a) -> Report:
    if a.torus is None:
        raise UsageError("lee needs --torus P Q")
    p, q = a.torus
    top = None
    if p == q and p % 2 == 0:
        k = p // 2
        top = (2 * k * k, checks.binom(2 * k, k))
    return checks.check_lee(torus_diagram(p, q), f"T({p},{q})", top, a.reduce)


def _verify_theorem3(a) -> Report:
    _need(a, "q")
    h = khovanov_homology(torus_diagram(3, a.q), "Q", a.reduce)
    rep = checks.check_theorem3(a.q, h=h)
    if a.q >= 3:
        prev = khovanov_homology(torus_diagram(3, a.q - 1), "Q", a.reduce)
        computed = {a.q - 1: poincare(prev), a.q: poincare(h)}
        rep.extend(checks.check_theorem3_boundaries(max((a.q - 2) // 3, 0), computed))
    return rep


def _verify_stable(a) -> Report:
    _need(a, "family", "n")
    if a.family == 2:
        return checks.check_stable_P2(a.n, a.reduce)
    if a.family == 3:
        return checks.check_stable_P3(a.n, a.reduce)
    raise UsageError("stable needs --family 2 or 3")


def _verify_fixtures(a) -> Report:
    _need(a, "n")
    if a.family not in (None, 3):
        raise UsageError("fixtures exist only for --family 3")
    return checks.check_fixtures(a.n, a.reduce)


def _with_kn(fn: Callable) -> Callable:
    def run(a):
        _need(a, "k", "n")
        return fn(a.k, a.n, reduce=a.reduce)
    return run


def _verify_center(a) -> Report:
    _need(a, "k")
    rep = checks.check_center(a.k)
    if a.k <= 2:
        rep.extend(compare_center_with_H0(a.k, 1, reduce=a.reduce))
    return rep


VERIFIERS: dict[str, Callable] = {
    "theorem1": _with_kn(checks.check_theorem1),
    "theorem2": _with_kn(checks.check_theorem2),
    "thickness": _with_kn(checks.check_thickness),
    "tprime": _with_kn(checks.check_tprime),
    "theorem3": _verify_theorem3,
    "center": _verify_center,
    "admissible": lambda a: checks.check_admissible(a.k_max, min(a.k_max, 6)),
    "binomial": lambda a: checks.check_binomial_grid(),
    "cone": _verify_cone,
    "lee": _verify_lee,
    "fixtures": _verify_fixtures,
    "stable": _verify_stable,
}


# ---------------------------------------------------------------------------
# parser

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="kh", description="Khovanov homology of torus links.")
    ap.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="homology of one link diagram")
    src = c.add_mutually_exclusive_group(required=True)
    src.add_argument("--braid", metavar="W", help='signed generator indices, e.g. "1 -2 1"')
    src.add_argument("--torus", nargs=2, type=int, metavar=("P", "Q"))
    src.add_argument("--torus-prime", nargs=2, type=int, metavar=("K", "N"),
                     help="T(2K, 2KN) with K components reversed")
    c.add_argument("--strands", type=int, metavar="S")
    c.add_argument("--ring", choices=["z", "q", "Z", "Q"], default="z")
    c.add_argument("--lee", action="store_true", help="rational Lee ranks instead")
    c.add_argument("--reduce", action="store_true",
                   help="cancel invertible entries before taking homology")
    c.add_argument("--format", choices=["json", "csv", "text"], default="json")
    c.add_argument("--no-cache", action="store_true")

    v = sub.add_parser("verify", help="compare computations with closed forms",
                       epilog="stable: the series P2, P3 are truncated after the summation "
                              "index reaches N (not by q-degree).")
    v.add_argument("check", choices=sorted(VERIFIERS))
    v.add_argument("--k", type=int)
    v.add_argument("--n", type=int)
    v.add_argument("--q", type=int)
    v.add_argument("--k-max", type=int, default=8)
    v.add_argument("--family", type=int)
    v.add_argument("--torus", nargs=2, type=int, metavar=("P", "Q"))
    v.add_argument("--tower", nargs=2, type=int, metavar=("K", "N"))
    v.add_argument("--reduce", action="store_true")
    v.add_argument("--format", choices=["json", "text"], default="text")

    h = sub.add_parser("hk", help="the arc ring H^k")
    g = h.add_mutually_exclusive_group(required=True)
    g.add_argument("--matchings", type=int, metavar="K")
    g.add_argument("--center", type=int, metavar="K")
    g.add_argument("--axioms", type=int, metavar="K")
    return ap


def _run(args, out) -> int:
    if args.command == "compute":
        job = Job("compute", {"braid": args.braid, "strands": args.strands,
                              "torus": args.torus, "torus_prime": args.torus_prime},
                  ring=args.ring.upper(), reduce=args.reduce,
                  spec="LEE" if args.lee else "KHOVANOV", fmt=args.format, lee=args.lee)
        cache = None if args.no_cache else ResultCache()
        print(render_compute(compute_result(job, cache), job.fmt), file=out)
        return EXIT_OK
    if args.command == "verify":
        rep = VERIFIERS[args.check](args)
        print(json.dumps(rep.to_json(), indent=1) if args.format == "json" else rep.render(),
              file=out)
        return EXIT_OK if rep.passed else EXIT_FAIL
    if args.matchings is not None:
        for m in enumerate_matchings(args.matchings):
            print(m.parens(), file=out)
        return EXIT_OK
    if args.center is not None:
        res = center(args.center)
        for deg, r in sorted(res.ranks.items()):
            print(f"degree {deg}: rank {r}", file=out)
        print(f"total {res.total}", file=out)
        return EXIT_OK
    fails = ArcRing(args.axioms).axiom_failures()
    for f in fails:
        print(f, file=out)
    print("axioms hold" if not fails else f"{len(fails)} axiom failures", file=out)
    return EXIT_FAIL if fails else EXIT_OK


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s")
    try:
        return _run(args, out)
    except (UsageError, CrossingCapError, ValueError) as exc:
        print(f"kh: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
