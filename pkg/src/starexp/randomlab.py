"""Uniform random temporal stars and Monte-Carlo explorability experiments."""
from __future__ import annotations

import csv
import io
import time
from dataclasses import asdict, dataclass, field
from enum import Enum

import numpy as np

from .core import Exploration, TemporalStar, Window, verify_exploration
from .solvers import BudgetExceeded, SolveBudget, solve_exact, solve_max_k2


@dataclass(frozen=True)
class RandomModel:
    n: int
    alpha: int
    k: int
    seed: int = 0

    def __post_init__(self):
        if self.n < 2 or self.alpha < 1 or self.k < 1:
            raise ValueError(f"invalid model {self}: need n >= 2, alpha >= 1, k >= 1")


def _rng(seed: int, trial: int | None = None) -> np.random.Generator:
    entropy = [seed] if trial is None else [seed, trial]
    return np.random.default_rng(np.random.SeedSequence(entropy))


def _star_from_draws(draws: np.ndarray) -> TemporalStar:
    # rows are already integers >= 1, so np.unique does the canonicalization
    return TemporalStar(tuple(tuple(np.unique(row).tolist()) for row in draws))


def gen_uniform(m: RandomModel, trial: int | None = None) -> TemporalStar:
    """``n - 1`` edges, each with ``k`` independent uniform labels from 1..alpha.

    Repeated draws on one edge collapse, so an edge can end with fewer than
    ``k`` labels. ``trial`` selects an independent stream derived from the seed.
    """
    draws = _rng(m.seed, trial).integers(1, m.alpha + 1, size=(m.n - 1, m.k))
    return _star_from_draws(draws)


def gen_local_k3(n: int, spread: float, seed: int = 0) -> TemporalStar:
    """``n`` three-label edges with the distinct labels ``1..3n``.

    Edge ``i`` owns the jittered keys ``3i + j + U(0, spread)`` for ``j < 3``
    and takes their ranks as labels, so edges overlap only with near
    neighbours. Small spreads give explorable instances that still exercise
    every stage of the decision pipeline.
    """
    rng = np.random.default_rng(np.random.SeedSequence([seed]))
    keys = np.arange(3 * n) + rng.uniform(0.0, spread, 3 * n)
    ranks = np.empty(3 * n, dtype=np.int64)
    ranks[np.argsort(keys, kind="stable")] = np.arange(1, 3 * n + 1)
    return TemporalStar(tuple(tuple(sorted(row)) for row in ranks.reshape(n, 3).tolist()))


def boxes(alpha: int, n: int) -> list[tuple[int, int]]:
    """The ``2n`` boxes ``[floor((i-1) alpha / 2n) + 1, floor(i alpha / 2n)]``."""
    b = 2 * n
    return [((i - 1) * alpha // b + 1, i * alpha // b) for i in range(1, b + 1)]


def box_exploration(star: TemporalStar, n: int, alpha: int) -> Exploration | None:
    """Full exploration certified by the box condition, or ``None``.

    When every edge has a label in each of the ``2n`` boxes, edge ``j`` enters
    at its last label in box ``2j - 1`` and exits at the next label, which
    lies in box ``2j``.
    """
    bx = boxes(alpha, n)
    if any(lo > hi for lo, hi in bx):
        return None
    lows = np.array([lo for lo, _ in bx])
    highs = np.array([hi for _, hi in bx])
    steps = []
    for e, labels in enumerate(star.edges):
        if not labels:
            return None
        arr = np.asarray(labels)
        idx = np.searchsorted(arr, lows)  # first label >= box start
        if not ((idx < len(arr)) & (arr[np.minimum(idx, len(arr) - 1)] <= highs)).all():
            return None
        i = int(np.searchsorted(arr, highs[2 * e], side="right")) - 1
        steps.append(Window(e, labels[i], labels[i + 1]))
    return Exploration(tuple(steps))


def box_certificate(star: TemporalStar, n: int, alpha: int) -> bool:
    return box_exploration(star, n, alpha) is not None


def count_blocking_pairs(star: TemporalStar) -> int:
    """Blocking pairs among edges paired (0, 1), (2, 3), ...

    With labels ``a1 <= a2`` and ``b1 <= b2`` the conditions are the four
    non-strict interleavings and nestings. An edge with a single label cannot
    be explored, so its pair always counts.
    """
    count = 0
    for e in range(0, len(star) - 1, 2):
        x, y = star.edges[e], star.edges[e + 1]
        for which, labels in ((e, x), (e + 1, y)):
            if len(labels) > 2:
                raise ValueError(f"edge {which} has {len(labels)} labels; blocking pairs need k = 2")
        if len(x) < 2 or len(y) < 2:
            count += 1
            continue
        a1, a2 = x
        b1, b2 = y
        if (
            a1 <= b1 <= a2 <= b2
            or a1 <= b1 <= b2 <= a2
            or b1 <= a1 <= b2 <= a2
            or b1 <= a1 <= a2 <= b2
        ):
            count += 1
    return count


class Method(str, Enum):
    EXACT_K2 = "exact-k2"
    ORACLE = "oracle"
    CERTIFICATE = "certificate-only"


@dataclass
class ExperimentReport:
    """Counts for one (n, alpha, k) point.

    For ``certificate-only`` runs ``explorable_count`` equals the certified
    count and is only a lower bound.
    """

    n: int
    alpha: int
    k: int
    seed: int
    method: str
    trials: int = 0
    explorable_count: int = 0
    certified_count: int = 0
    undecided_count: int = 0
    decisions: list[str] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def explorable_fraction(self) -> float:
        return self.explorable_count / self.trials if self.trials else 0.0

    @property
    def certified_fraction(self) -> float:
        return self.certified_count / self.trials if self.trials else 0.0


CSV_FIELDS = ["n", "alpha", "k", "trials", "explorable_count", "certified_count", "undecided_count", "method", "seed"]


def run_experiment(
    m: RandomModel, trials: int, method: Method | str = Method.EXACT_K2, budget: SolveBudget | None = None
) -> ExperimentReport:
    """Generate ``trials`` instances and count the fully explorable ones.

    Trial ``i`` draws from the stream of ``(seed, i)``, so the report depends
    only on its arguments. Every certificate's exploration is verified.
    """
    method = Method(method)
    if method is Method.EXACT_K2 and m.k != 2:
        raise ValueError("exact-k2 needs k = 2")
    report = ExperimentReport(m.n, m.alpha, m.k, m.seed, method.value)
    started = time.perf_counter()
    edges = m.n - 1
    for i in range(trials):
        star = gen_uniform(m, trial=i)
        cert = box_exploration(star, m.n, m.alpha)
        if cert is not None:
            verify_exploration(star, cert)
            report.certified_count += 1
        if method is Method.CERTIFICATE:
            report.explorable_count += cert is not None
            report.decisions.append("certificate-only")
            continue
        if method is Method.EXACT_K2:
            size = len(solve_max_k2(star))
            report.decisions.append("exact-k2")
        else:
            try:
                size = len(solve_exact(star, budget))
            except BudgetExceeded:
                report.undecided_count += 1
                report.decisions.append("undecided")
                continue
            report.decisions.append("oracle")
        report.explorable_count += size == edges
    report.trials = trials
    report.elapsed = time.perf_counter() - started
    return report


def reports_to_csv(reports) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
    writer.writeheader()
    for r in reports:
        row = asdict(r)
        writer.writerow({k: row[k] for k in CSV_FIELDS})
    return buf.getvalue()
