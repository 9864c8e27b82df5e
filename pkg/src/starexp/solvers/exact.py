"""Exponential exact oracle: memoised branch and bound over windows in time order."""
from __future__ import annotations

import sys
from bisect import bisect_right
from dataclasses import dataclass

from ..core import Exploration, TemporalStar, Window, all_windows
from .greedy import greedy_k


@dataclass(frozen=True)
class SolveBudget:
    node_limit: int = 5_000_000

    def __post_init__(self):
        if self.node_limit <= 0:
            raise ValueError("node_limit must be positive")


class BudgetExceeded(RuntimeError):
    def __init__(self, best: Exploration, nodes: int):
        super().__init__(f"node limit reached after {nodes} search nodes; best so far has size {len(best)}")
        self.best = best
        self.nodes = nodes


def solve_exact(star: TemporalStar, budget: SolveBudget | None = None) -> Exploration:
    """Return a maximum exploration built from consecutive-label windows.

    The search state is (time frontier, set of already explored edges that
    still have a window after the frontier). From a state, let ``w*`` be the
    available window with the smallest exit. Some optimal continuation starts
    with a window whose entry is at most ``w*.exit`` (otherwise ``w*`` can be
    prepended, or swapped for a later use of its own edge), so only those
    windows are branched on. A branch stops early once it matches the count of
    distinct edges still available.
    """
    budget = budget or SolveBudget()
    windows = sorted(all_windows(star), key=lambda w: (w.entry, w.exit, w.edge))
    if not windows:
        return Exploration()
    entries = [w.entry for w in windows]
    exits = [w.exit for w in windows]
    bits = [1 << w.edge for w in windows]

    # alive[i]: edges owning some window at position >= i
    alive = [0] * (len(windows) + 1)
    for i in range(len(windows) - 1, -1, -1):
        alive[i] = alive[i + 1] | bits[i]

    memo: dict[tuple[int, int], tuple[int, int]] = {}
    nodes = 0
    limit = budget.node_limit

    def best_from(start: int, used: int) -> int:
        nonlocal nodes
        key = (start, used)
        hit = memo.get(key)
        if hit is not None:
            return hit[0]
        nodes += 1
        if nodes > limit:
            raise _Abort
        upper = bin(alive[start] & ~used).count("1")
        best, choice = 0, -1
        if upper:
            horizon = None
            for i in range(start, len(windows)):
                if horizon is not None and entries[i] > horizon:
                    break
                if used & bits[i]:
                    continue
                if horizon is None or exits[i] < horizon:
                    horizon = exits[i]
            cands = [i for i in range(start, len(windows)) if entries[i] <= horizon and not used & bits[i]]
            cands.sort(key=lambda i: (exits[i], windows[i].edge))
            for i in cands:
                nxt = bisect_right(entries, exits[i])
                used2 = (used | bits[i]) & alive[nxt]
                value = 1 + best_from(nxt, used2)
                if value > best:
                    best, choice = value, i
                    if best == upper:
                        break
        memo[key] = (best, choice)
        return best

    old_limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old_limit, 4 * len(star) + 1000))
    try:
        best_from(0, 0)
    except _Abort:
        raise BudgetExceeded(greedy_k(star), nodes) from None
    finally:
        sys.setrecursionlimit(old_limit)

    steps = []
    start, used = 0, 0
    while True:
        value, choice = memo[(start, used)]
        if choice < 0:
            break
        w = windows[choice]
        steps.append(Window(w.edge, w.entry, w.exit))
        start = bisect_right(entries, w.exit)
        used = (used | bits[choice]) & alive[start]
    return Exploration(tuple(steps))


class _Abort(Exception):
    pass
