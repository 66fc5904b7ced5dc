"""Raw cube complex against the reduced complex: sizes, timings, agreement."""
from __future__ import annotations

import argparse
import resource
import time
from dataclasses import dataclass, field

from khtorus.chain import build_complex
from khtorus.diagram import torus_diagram
from khtorus.homology import homology
from khtorus.reduction import reduced_complex


@dataclass
class BenchConfig:
    links: list = field(default_factory=lambda: [(3, 4), (3, 5), (3, 6), (4, 4), (3, 7)])
    ring: str = "Q"
    spec: str = "KHOVANOV"


def peak_mb() -> int:
    return resource.getrusage(resource.RUSAGE_SELF).ru_maxrss // 1024


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--ring", default="Q", choices=["Z", "Q"])
    ap.add_argument("--lee", action="store_true")
    a = ap.parse_args()
    cfg = BenchConfig(ring=a.ring, spec="LEE" if a.lee else "KHOVANOV")
    ring = "Q" if a.lee else cfg.ring
    for p, q in cfg.links:
        d = torus_diagram(p, q)
        t = time.perf_counter()
        red = reduced_complex(d, cfg.spec)
        h_red = homology(red, ring) if red.homogeneous else None
        t_red = time.perf_counter() - t
        t = time.perf_counter()
        raw = build_complex(d, cfg.spec)
        h_raw = homology(raw, ring) if raw.homogeneous else None
        t_raw = time.perf_counter() - t
        same = "n/a" if h_raw is None else h_raw == h_red
        print(f"T({p},{q}): raw {raw.n_generators:>7} gens {t_raw:6.1f}s | reduced "
              f"{red.n_generators:>5} gens {t_red:6.1f}s | equal {same} | peak {peak_mb()} MB",
              flush=True)


if __name__ == "__main__":
    main()
