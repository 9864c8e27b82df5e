"""Temporal stars, exploration windows and the exploration verifier.

A temporal star is stored as a tuple of per-edge label tuples. The centre and
the leaves are never materialised: edge ``i`` is simply the ``i``-th entry.
"""
from __future__ import annotations

import numbers
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence


class InvalidInstance(ValueError):
    """Raised when raw label data cannot form a temporal star."""

    def __init__(self, message: str, edge: int | None = None):
        super().__init__(message)
        self.edge = edge


class ExplorationRejected(ValueError):
    """Raised by :func:`verify_exploration`; ``reason`` names the violated rule."""

    def __init__(self, reason: str, message: str, steps: tuple[int, ...] = ()):
        super().__init__(message)
        self.reason = reason
        self.steps = steps


class Window(NamedTuple):
    edge: int
    entry: int
    exit: int


@dataclass(frozen=True)
class TemporalStar:
    edges: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.edges)

    @property
    def vertex_count(self) -> int:
        return len(self.edges) + 1

    @property
    def max_labels(self) -> int:
        return max((len(e) for e in self.edges), default=0)

    def labels(self, edge: int) -> tuple[int, ...]:
        return self.edges[edge]

    def as_lists(self) -> list[list[int]]:
        return [list(e) for e in self.edges]


@dataclass(frozen=True)
class Exploration:
    """Windows in visiting order; ``len()`` is the number of explored edges."""

    steps: tuple[Window, ...] = ()

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    @property
    def edges(self) -> frozenset[int]:
        return frozenset(w.edge for w in self.steps)

    @classmethod
    def from_windows(cls, windows: Iterable[Window]) -> Exploration:
        return cls(tuple(sorted(windows, key=lambda w: (w.entry, w.exit, w.edge))))


def canonicalize(raw: Sequence[Sequence[int]]) -> TemporalStar:
    """Sort each edge's labels and drop within-edge duplicates.

    Labels must be integers >= 1; ``bool`` is rejected even though it is an
    ``int`` subclass.
    """
    edges = []
    for i, labels in enumerate(raw):
        for label in labels:
            if isinstance(label, bool) or not isinstance(label, numbers.Integral):
                raise InvalidInstance(f"edge {i}: label {label!r} is not an integer", edge=i)
            if label < 1:
                raise InvalidInstance(f"edge {i}: label {label} is not positive", edge=i)
        edges.append(tuple(sorted({int(x) for x in labels})))
    return TemporalStar(tuple(edges))


def windows_of(star: TemporalStar, edge: int) -> list[Window]:
    """Consecutive-label windows of one edge (empty for fewer than two labels)."""
    labels = star.edges[edge]
    return [Window(edge, labels[i], labels[i + 1]) for i in range(len(labels) - 1)]


def all_windows(star: TemporalStar) -> list[Window]:
    return [w for e in range(len(star)) for w in windows_of(star, e)]


def conflicts(w1: Window, w2: Window) -> bool:
    """Closed-interval intersection; a shared endpoint counts as a conflict."""
    return not (w1.exit < w2.entry or w2.exit < w1.entry)


def verify_exploration(star: TemporalStar, expl: Exploration | Iterable[Window]) -> int:
    """Check ``expl`` against ``star`` and return its size.

    Raises :class:`ExplorationRejected` on the first violated rule. Windows may
    use any two labels of their edge (not necessarily consecutive).
    """
    steps = list(expl.steps if isinstance(expl, Exploration) else expl)
    seen: dict[int, int] = {}
    label_sets = {}
    for pos, w in enumerate(steps):
        if not 0 <= w.edge < len(star):
            raise ExplorationRejected("unknown-edge", f"step {pos}: no edge {w.edge}", (pos,))
        labels = label_sets.get(w.edge)
        if labels is None:
            labels = label_sets[w.edge] = frozenset(star.edges[w.edge])
        for which, value in (("entry", w.entry), ("exit", w.exit)):
            if value not in labels:
                raise ExplorationRejected(
                    "unknown-label", f"step {pos}: {which} {value} is not a label of edge {w.edge}", (pos,)
                )
        if not w.entry < w.exit:
            raise ExplorationRejected("order", f"step {pos}: entry {w.entry} is not before exit {w.exit}", (pos,))
        if w.edge in seen:
            raise ExplorationRejected(
                "duplicate-edge", f"steps {seen[w.edge]} and {pos} both explore edge {w.edge}", (seen[w.edge], pos)
            )
        seen[w.edge] = pos
    order = sorted(range(len(steps)), key=lambda p: (steps[p].entry, steps[p].exit))
    for p, q in zip(order, order[1:]):
        if not steps[p].exit < steps[q].entry:
            raise ExplorationRejected(
                "conflict",
                f"steps {p} (edge {steps[p].edge}) and {q} (edge {steps[q].edge}) overlap in time",
                (p, q),
            )
    return len(steps)


def is_consecutive(star: TemporalStar, w: Window) -> bool:
    labels = star.edges[w.edge]
    try:
        i = labels.index(w.entry)
    except ValueError:
        return False
    return i + 1 < len(labels) and labels[i + 1] == w.exit
