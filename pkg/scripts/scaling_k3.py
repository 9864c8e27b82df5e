"""Wall-clock scaling of the linear three-label decider.

Times decide_k3_linear on distinct-label instances of growing size and
prints the per-size time next to n log n for comparison::

    python scripts/scaling_k3.py --sizes 1000 10000 100000 1000000
"""
from __future__ import annotations

import argparse
import math
import time
from dataclasses import dataclass, field

from starexp import verify_exploration
from starexp.randomlab import gen_local_k3
from starexp.solvers import decide_k3_linear


@dataclass
class ScalingConfig:
    sizes: list[int] = field(default_factory=lambda: [10**3, 10**4, 10**5, 10**6])
    spread: float = 2.0
    repeats: int = 3
    seed: int = 0


def time_one(n: int, cfg: ScalingConfig) -> tuple[float, bool]:
    star = gen_local_k3(n, cfg.spread, cfg.seed + n)
    best = math.inf
    witness = None
    for _ in range(cfg.repeats):
        t = time.perf_counter()
        witness = decide_k3_linear(star)
        best = min(best, time.perf_counter() - t)
    if witness is not None:
        verify_exploration(star, witness)
    return best, witness is not None


def main(argv=None) -> int:
    d = ScalingConfig()
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--sizes", type=int, nargs="+", default=d.sizes)
    p.add_argument("--spread", type=float, default=d.spread)
    p.add_argument("--repeats", type=int, default=d.repeats)
    p.add_argument("--seed", type=int, default=d.seed)
    a = p.parse_args(argv)
    cfg = ScalingConfig(a.sizes, a.spread, a.repeats, a.seed)

    print(f"{'n':>9} {'seconds':>10} {'us/(n log n)':>13} explorable")
    for n in cfg.sizes:
        seconds, yes = time_one(n, cfg)
        print(f"{n:>9} {seconds:>10.3f} {1e6 * seconds / (n * math.log(n)):>13.3f} {yes}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
