"""Deciding full explorability with at most three labels per edge.

Both deciders run the same pipeline: commit every two-label edge, break label
ties between edges, then reduce the remaining three-label edges to 2SAT with
one variable per edge (``False``: first window, ``True``: second window).
The quadratic variant emits a clause for every conflicting window pair; the
linear variant derives forced values and a linear number of clauses from
sweeps over the sorted labels.
"""
from __future__ import annotations

from bisect import bisect_left, bisect_right, insort
from dataclasses import dataclass
from enum import Enum

from .. import twosat
from ..core import Exploration, TemporalStar, Window, canonicalize, conflicts


class NotExplorable(Exception):
    """Proof that no full exploration exists; ``edges`` are original indices."""

    def __init__(self, reason: str, edges: tuple[int, ...] = ()):
        super().__init__(reason)
        self.reason = reason
        self.edges = edges


class ForcedState(Enum):
    UNFIXED = "unfixed"
    FIRST = "fixed-first-window"
    SECOND = "fixed-second-window"
    CONTRADICTION = "contradiction"


@dataclass(frozen=True)
class Reduction:
    """Residual three-label instance plus the windows already committed."""

    residual: TemporalStar
    original_ids: tuple[int, ...]
    committed: tuple[Window, ...]


def preprocess_two_label_edges(star: TemporalStar) -> Reduction:
    """Commit every two-label edge and delete the labels it rules out.

    A committed window ``[l1, l2]`` removes all labels of other edges lying in
    ``[l1, l2]``; that can create new two-label edges, so the process runs to a
    fixpoint. A three-label edge whose first (second) window strictly contains
    a committed window must use its other window, so it loses its first
    (last) label. Raises :class:`NotExplorable` when an edge drops below two
    labels or two committed windows collide.
    """
    labels: list[list[int]] = []
    for e, ls in enumerate(star.edges):
        if len(ls) > 3:
            raise ValueError(f"edge {e} has {len(ls)} labels; at most 3 are supported")
        if len(ls) < 2:
            raise NotExplorable(f"edge {e} has fewer than two labels", (e,))
        labels.append(list(ls))

    index = sorted((label, e) for e, ls in enumerate(labels) for label in ls)
    keys = [label for label, _ in index]
    alive = [True] * len(index)
    position = {item: pos for pos, item in enumerate(index)}
    committed: dict[int, tuple[int, int]] = {}
    starts: list[int] = []  # sorted committed window starts
    by_start: dict[int, tuple[int, int]] = {}

    def overlapping(l1: int, l2: int):
        """A committed window intersecting [l1, l2], if any (they are disjoint)."""
        i = bisect_right(starts, l2) - 1
        if i >= 0:
            s = starts[i]
            if by_start[s][1] >= l1:
                return by_start[s][0]
        return None

    def commit(e: int, queue: list[int]) -> None:
        l1, l2 = labels[e]
        other = overlapping(l1, l2)
        if other is not None:
            raise NotExplorable(f"edges {other} and {e} must both be explored during [{l1}, {l2}]", (other, e))
        committed[e] = (l1, l2)
        insort(starts, l1)
        by_start[l1] = (e, l2)
        for pos in range(bisect_left(keys, l1), bisect_right(keys, l2)):
            if not alive[pos]:
                continue
            label, f = index[pos]
            if f == e:
                continue
            alive[pos] = False
            if f in committed:
                raise NotExplorable(f"edges {f} and {e} must both be explored at time {label}", (f, e))
            labels[f].remove(label)
            if len(labels[f]) < 2:
                raise NotExplorable(f"edge {f} cannot be explored alongside edge {e}", (e, f))
            if len(labels[f]) == 2:
                queue.append(f)

    queue = [e for e, ls in enumerate(labels) if len(ls) == 2]
    while True:
        while queue:
            e = queue.pop()
            if e not in committed:
                commit(e, queue)
        # straddle pass: a window that contains a committed window is unusable
        for f, ls in enumerate(labels):
            if f in committed or len(ls) != 3:
                continue
            a, b, c = ls
            first = overlapping(a, b)
            second = overlapping(b, c)
            if first is not None and second is not None:
                raise NotExplorable(f"both windows of edge {f} enclose committed windows", (first, f))
            if first is not None or second is not None:
                dropped = a if first is not None else c
                labels[f].remove(dropped)
                alive[position[(dropped, f)]] = False
                queue.append(f)
        if not queue:
            break

    residual_ids = tuple(e for e in range(len(labels)) if e not in committed)
    residual = TemporalStar(tuple(tuple(labels[e]) for e in residual_ids))
    windows = tuple(sorted((Window(e, *w) for e, w in committed.items()), key=lambda w: w.entry))
    return Reduction(residual, residual_ids, windows)


# label roles within an edge; group order inside a tie is first < middle < last
_FIRST, _MIDDLE, _LAST = 0, 1, 2


def perturb_distinct(star: TemporalStar) -> TemporalStar:
    """Rank-relabel a three-label instance so all labels are distinct.

    Equal labels of different edges are ordered first-labels, then middle
    labels, then last labels; every window pair keeps its conflict status
    under that order. Two equal middle labels make any exploration
    impossible and raise :class:`NotExplorable`.
    """
    items = []
    for e, ls in enumerate(star.edges):
        if len(ls) != 3:
            raise ValueError(f"edge {e} has {len(ls)} labels; perturb_distinct needs exactly 3")
        for role, label in enumerate(ls):
            items.append((label, role, e))
    items.sort()
    for (l1, r1, e1), (l2, r2, e2) in zip(items, items[1:]):
        if l1 == l2 and r1 == r2 == _MIDDLE:
            raise NotExplorable(f"edges {e1} and {e2} share middle label {l1}", (e1, e2))
    ranked = [[0, 0, 0] for _ in star.edges]
    for rank, (_, role, e) in enumerate(items, start=1):
        ranked[e][role] = rank
    return TemporalStar(tuple(tuple(r) for r in ranked))


def _window(labels: tuple[int, ...], e: int, second: bool) -> Window:
    return Window(e, labels[1], labels[2]) if second else Window(e, labels[0], labels[1])


def quadratic_choices(star: TemporalStar, committed: tuple[Window, ...] = ()) -> list[bool] | None:
    """Window choices from the all-pairs 2SAT reduction, or ``None``."""
    n = len(star)
    f = twosat.TwoSatFormula(n)
    wins = [(_window(ls, e, False), _window(ls, e, True)) for e, ls in enumerate(star.edges)]
    for i in range(n):
        for p in (False, True):
            for w in committed:
                if conflicts(wins[i][p], w):
                    f.add((i, not p))
    for i in range(n):
        lo_i, hi_i = star.edges[i][0], star.edges[i][2]
        for j in range(i + 1, n):
            if star.edges[j][0] > hi_i or star.edges[j][2] < lo_i:
                continue
            for p in (False, True):
                for q in (False, True):
                    if conflicts(wins[i][p], wins[j][q]):
                        f.add((i, not p), (j, not q))
    return twosat.solve(f)


def linear_choices(star: TemporalStar) -> list[bool] | None:
    """Window choices from the sweep-based linear-size 2SAT reduction.

    ``star`` must have exactly three labels per edge, all labels distinct.
    """
    n = len(star)
    events = sorted((label, role, e) for e, ls in enumerate(star.edges) for role, label in enumerate(ls))
    for (l1, _, _), (l2, _, _) in zip(events, events[1:]):
        if l1 == l2:
            raise ValueError(f"label {l1} is not distinct; run perturb_distinct first")

    states = middle_label_sweep(star, events)
    if ForcedState.CONTRADICTION in states:
        return None
    forced: list[bool | None] = [_AS_BOOL[st] for st in states]

    # forced windows must be pairwise disjoint.
    fixed_windows = sorted(
        (_window(star.edges[e], e, forced[e]) for e in range(n) if forced[e] is not None),
        key=lambda w: w.entry,
    )
    for w1, w2 in zip(fixed_windows, fixed_windows[1:]):
        if conflicts(w1, w2):
            return None

    # among free edges, an edge whose last label falls in another's
    # first window yields (not x_e or x_other).
    formula = twosat.TwoSatFormula(n)
    free_events = [ev for ev in events if forced[ev[2]] is None]
    open_a: set[int] = set()
    open_b: set[int] = set()
    for _, role, e in free_events:
        if role == _FIRST:
            open_a.add(e)
        elif role == _MIDDLE:
            open_a.discard(e)
            open_b.add(e)
        else:
            open_b.discard(e)
            for other in open_a:
                formula.add((e, False), (other, True))

    # free edges against forced windows, in two scans.
    _START, _END = 3, 4
    mixed = free_events + [(w.entry, _START, w.edge) for w in fixed_windows] + [
        (w.exit, _END, w.edge) for w in fixed_windows
    ]
    mixed.sort()
    set_by_scan: dict[int, bool] = {}
    inside_fixed = 0
    for _, role, e in mixed:
        if role == _START:
            inside_fixed += 1
        elif role == _END:
            inside_fixed -= 1
        elif role == _FIRST and inside_fixed:
            set_by_scan[e] = True
    open_free: set[int] = set()
    for _, role, e in mixed:
        if role == _FIRST:
            open_free.add(e)
        elif role == _LAST:
            open_free.discard(e)
        elif role == _START:
            for other in open_free:
                if set_by_scan.get(other) is True:
                    return None
                set_by_scan[other] = False

    # unit clauses for every forced value, then solve.
    for e in range(n):
        if forced[e] is not None:
            formula.add((e, forced[e]))
    for e, value in set_by_scan.items():
        formula.add((e, value))
    return twosat.solve(formula)


_AS_BOOL = {ForcedState.UNFIXED: None, ForcedState.FIRST: False, ForcedState.SECOND: True}


def middle_label_sweep(star: TemporalStar, events=None) -> list[ForcedState]:
    """A middle label inside another edge's span fixes that edge.

    Sweeping labels left to right, open edges whose middle label is still
    ahead (set A) must take their second window, open edges past their middle
    label (set B) their first. Only not-yet-forced members are kept pending,
    which keeps the sweep linear. Stops at the first contradiction.
    """
    if events is None:
        events = sorted((label, role, e) for e, ls in enumerate(star.edges) for role, label in enumerate(ls))
    state = [ForcedState.UNFIXED] * len(star)
    a_pending: set[int] = set()
    b_pending: set[int] = set()
    for _, role, e in events:
        if role == _FIRST:
            a_pending.add(e)
        elif role == _MIDDLE:
            a_pending.discard(e)
            for target, pending in ((ForcedState.SECOND, a_pending), (ForcedState.FIRST, b_pending)):
                for other in pending:
                    if state[other] is ForcedState.UNFIXED:
                        state[other] = target
                    elif state[other] is not target:
                        state[other] = ForcedState.CONTRADICTION
                        return state
                pending.clear()
            b_pending.add(e)
        else:
            b_pending.discard(e)
    return state


def _decide(star: TemporalStar, core) -> Exploration | None:
    star = canonicalize(star.edges)
    try:
        red = preprocess_two_label_edges(star)
        perturbed = perturb_distinct(red.residual)
    except NotExplorable:
        return None
    choices = core(red, perturbed)
    if choices is None:
        return None
    steps = list(red.committed)
    for local, orig in enumerate(red.original_ids):
        w = _window(red.residual.edges[local], orig, choices[local])
        steps.append(w)
    return Exploration.from_windows(steps)


def decide_k3_linear(star: TemporalStar) -> Exploration | None:
    """Full exploration of a star with at most three labels per edge, or ``None``."""
    return _decide(star, lambda red, perturbed: linear_choices(perturbed))


def decide_k3_quadratic(star: TemporalStar) -> Exploration | None:
    """Reference decider using the all-pairs 2SAT reduction.

    Runs on the residual's original labels (ties included) together with the
    committed windows, so it does not depend on the tie-breaking relabel; the
    relabel still runs first to reject shared middle labels.
    """
    return _decide(star, lambda red, perturbed: quadratic_choices(red.residual, red.committed))
