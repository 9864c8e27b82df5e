"""Maximum exploration with at most two labels per edge (earliest finish first)."""
from __future__ import annotations

from ..core import Exploration, TemporalStar, Window


def solve_max_k2(star: TemporalStar) -> Exploration:
    """Interval scheduling by earliest exit; ties go to the smaller edge index.

    Edges with fewer than two labels are skipped. Because labels are integers
    and a shared endpoint is a conflict, "finishes before" is ``exit < entry``.
    """
    intervals = []
    for e, labels in enumerate(star.edges):
        if len(labels) > 2:
            raise ValueError(f"edge {e} has {len(labels)} labels; solve_max_k2 needs at most 2")
        if len(labels) == 2:
            intervals.append((labels[1], e, labels[0]))
    intervals.sort()
    chosen = []
    last_exit = 0
    for exit_, e, entry in intervals:
        if entry > last_exit:
            chosen.append(Window(e, entry, exit_))
            last_exit = exit_
    return Exploration(tuple(chosen))
