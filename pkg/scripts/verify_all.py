"""Run every verification driver at desk scale and print the reports."""
from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass

from khtorus import checks
from khtorus.archring import compare_center_with_H0
from khtorus.diagram import torus_diagram


@dataclass
class VerifyConfig:
    q_max_raw: int = 7
    q_max_reduced: int = 9
    admissible_k: int = 8
    center_k: int = 3
    quick: bool = False


def jobs(cfg: VerifyConfig):
    """Thunks, so each report can be timed separately."""
    yield lambda: checks.check_binomial_grid()
    yield lambda: checks.check_admissible(cfg.admissible_k, min(cfg.admissible_k, 6))
    for k in range(1, cfg.center_k + 1):
        yield lambda k=k: checks.check_center(k)
    for k in (1, 2):
        yield lambda k=k: compare_center_with_H0(k, 1)
    for n in range(1, 6):
        yield lambda n=n: checks.check_theorem2(1, n)
    yield lambda: checks.check_theorem1(2, 1)
    yield lambda: checks.check_theorem2(2, 1)
    yield lambda: checks.check_thickness(2, 1)
    yield lambda: checks.check_tprime(2, 1)
    q_top = cfg.q_max_raw if cfg.quick else cfg.q_max_reduced
    for q in range(2, q_top + 1):
        yield lambda q=q: checks.check_theorem3(q, reduce=q > cfg.q_max_raw)
    yield lambda: checks.check_theorem3_boundaries()
    yield lambda: checks.check_fixtures(1)
    for p, q in [(2, 4), (3, 3), (3, 4)]:
        yield lambda p=p, q=q: checks.check_cone_all(torus_diagram(p, q), f"T({p},{q})")
    yield lambda: checks.check_tower(2, 1)
    yield lambda: checks.check_lee(torus_diagram(4, 4), "T(4,4)", top=(8, 6))
    yield lambda: checks.check_stable_P2(5)
    yield lambda: checks.check_stable_P3(2)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--quick", action="store_true", help="skip the reduced q=8,9 runs")
    ap.add_argument("--verbose", action="store_true", help="print every compared line")
    args = ap.parse_args()
    cfg = VerifyConfig(quick=args.quick)
    failed = 0
    for job in jobs(cfg):
        t = time.perf_counter()
        rep = job()
        dt = time.perf_counter() - t
        print(rep.render() if args.verbose or not rep.passed else f"PASS {rep.name}",
              f"[{dt:.1f}s]", flush=True)
        failed += not rep.passed
    print(f"{failed} failing report(s)")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
