"""Explorable fraction of uniform random stars over a grid of (n, alpha, k).

Writes one CSV row per grid point, e.g.::

    python scripts/phase_sweep.py --n 11 21 41 --alpha 4 16 64 --k 2 --trials 200 --out sweep.csv
"""
from __future__ import annotations

import argparse
import itertools
import logging
import sys
from dataclasses import dataclass, field
from pathlib import Path

from starexp.randomlab import Method, RandomModel, reports_to_csv, run_experiment
from starexp.solvers import SolveBudget

log = logging.getLogger("phase_sweep")


@dataclass
class SweepConfig:
    n: list[int] = field(default_factory=lambda: [6, 11])
    alpha: list[int] = field(default_factory=lambda: [4, 8, 16, 32, 64, 128])
    k: list[int] = field(default_factory=lambda: [2, 8, 32])
    trials: int = 100
    seed: int = 0
    method: str = "auto"
    node_limit: int = 50_000
    out: str | None = None

    def method_for(self, k: int) -> Method:
        if self.method != "auto":
            return Method(self.method)
        return Method.EXACT_K2 if k == 2 else Method.ORACLE


def sweep(cfg: SweepConfig):
    reports = []
    for n, alpha, k in itertools.product(cfg.n, cfg.alpha, cfg.k):
        model = RandomModel(n, alpha, k, cfg.seed)
        report = run_experiment(model, cfg.trials, cfg.method_for(k), SolveBudget(cfg.node_limit))
        log.info(
            "n=%d alpha=%d k=%d explorable=%.3f certified=%.3f undecided=%d (%.1fs)",
            n, alpha, k, report.explorable_fraction, report.certified_fraction,
            report.undecided_count, report.elapsed,
        )
        reports.append(report)
    return reports


def parse_args(argv=None) -> SweepConfig:
    d = SweepConfig()
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n", type=int, nargs="+", default=d.n)
    p.add_argument("--alpha", type=int, nargs="+", default=d.alpha)
    p.add_argument("--k", type=int, nargs="+", default=d.k)
    p.add_argument("--trials", type=int, default=d.trials)
    p.add_argument("--seed", type=int, default=d.seed)
    p.add_argument("--method", default=d.method, choices=["auto"] + [m.value for m in Method])
    p.add_argument("--node-limit", type=int, default=d.node_limit)
    p.add_argument("--out")
    a = p.parse_args(argv)
    return SweepConfig(a.n, a.alpha, a.k, a.trials, a.seed, a.method, a.node_limit, a.out)


def main(argv=None) -> int:
    logging.basicConfig(level=logging.INFO, format="%(message)s", stream=sys.stderr)
    cfg = parse_args(argv)
    text = reports_to_csv(sweep(cfg))
    if cfg.out:
        Path(cfg.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
