"""Graded center of the arc ring H^k next to the admissible-subset counts."""
from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from khtorus.archring import ArcRing, center
from khtorus.torusform import admissible_subsets, binom, center_profile


@dataclass
class CenterConfig:
    k_max: int = 4


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--k-max", type=int, default=CenterConfig.k_max)
    cfg = CenterConfig(ap.parse_args().k_max)
    print(f"{'k':>2} {'dim H^k':>8} {'kernel ranks':<28} {'formula':<28} {'admissible':<28} secs")
    for k in range(1, cfg.k_max + 1):
        t = time.perf_counter()
        res = center(k, max_k=cfg.k_max)
        dt = time.perf_counter() - t
        adm = {}
        for X in admissible_subsets(k):
            adm[2 * len(X)] = adm.get(2 * len(X), 0) + 1
        fmt = lambda d: str([d.get(2 * i, 0) for i in range(k + 1)])
        print(f"{k:>2} {ArcRing(k).dimension:>8} {fmt(res.ranks):<28} {fmt(center_profile(k)):<28} "
              f"{fmt(adm):<28} {dt:.1f}")
        assert res.total == binom(2 * k, k)


if __name__ == "__main__":
    main()
