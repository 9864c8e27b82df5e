"""The greedy 2-approximation for any number of labels per edge."""
from __future__ import annotations

import heapq
from bisect import bisect_left

from ..core import Exploration, TemporalStar, Window


def _earliest_window(labels: tuple[int, ...], t: int) -> tuple[int, int] | None:
    i = bisect_left(labels, t)
    if i + 1 < len(labels):
        return labels[i], labels[i + 1]
    return None


def greedy_k(star: TemporalStar) -> Exploration:
    """Repeatedly take the window with entry >= t and the smallest exit.

    Ties on exit go to the smaller edge index. After committing a window the
    clock moves to ``exit + 1`` and the edge leaves the candidate set; the loop
    ends once no candidate has two labels >= t.

    Heap keys never overestimate an edge's current best exit (its exit only
    grows with t), so stale entries are refreshed lazily when popped.
    """
    heap = []
    for e, labels in enumerate(star.edges):
        w = _earliest_window(labels, 0)
        if w is not None:
            heap.append((w[1], e, w[0]))
    heapq.heapify(heap)
    t = 0
    chosen = []
    while heap:
        exit_, e, entry = heapq.heappop(heap)
        if entry < t:
            w = _earliest_window(star.edges[e], t)
            if w is not None:
                heapq.heappush(heap, (w[1], e, w[0]))
            continue
        chosen.append(Window(e, entry, exit_))
        t = exit_ + 1
    return Exploration(tuple(chosen))
