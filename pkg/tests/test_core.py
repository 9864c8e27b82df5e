import pytest
from hypothesis import given, strategies as st

from starexp import (
    Exploration,
    ExplorationRejected,
    InvalidInstance,
    TemporalStar,
    Window,
    all_windows,
    canonicalize,
    conflicts,
    verify_exploration,
    windows_of,
)
from starexp.core import is_consecutive

from strategies import stars, windows


def test_canonicalize_sorts_and_dedupes():
    assert canonicalize([[3, 1, 3], [2]]).edges == ((1, 3), (2,))


def test_canonicalize_empty():
    s = canonicalize([])
    assert len(s) == 0
    assert s.vertex_count == 1


def test_canonicalize_gadget_labels():
    assert canonicalize([[50 - 10, 50 - 7, 50 + 10, 50 + 13]]).edges == ((40, 43, 60, 63),)


@pytest.mark.parametrize("bad", [[[0]], [[-3, 2]], [[1.5]], [[True]], [["2"]]])
def test_canonicalize_rejects(bad):
    with pytest.raises(InvalidInstance) as info:
        canonicalize(bad)
    assert info.value.edge == 0


@given(stars())
def test_canonicalize_idempotent(s):
    assert canonicalize(canonicalize(s.edges).edges) == canonicalize(s.edges)


def test_windows_of():
    s = canonicalize([[1, 4, 7], [5], [40, 43, 60, 63]])
    assert windows_of(s, 0) == [(0, 1, 4), (0, 4, 7)]
    assert windows_of(s, 1) == []
    assert [(w.entry, w.exit) for w in windows_of(s, 2)] == [(40, 43), (43, 60), (60, 63)]
    assert len(all_windows(s)) == 5


def test_conflicts_examples():
    assert conflicts(Window(0, 1, 4), Window(1, 4, 7))
    assert not conflicts(Window(0, 1, 3), Window(1, 4, 7))
    assert conflicts(Window(0, 2, 5), Window(1, 3, 4))


@given(windows(), windows())
def test_conflicts_symmetric(w1, w2):
    assert conflicts(w1, w2) == conflicts(w2, w1)


@given(windows())
def test_conflicts_reflexive(w):
    assert conflicts(w, w)


@given(windows(), windows())
def test_conflicts_is_closed_interval_intersection(w1, w2):
    overlap = set(range(w1.entry, w1.exit + 1)) & set(range(w2.entry, w2.exit + 1))
    assert conflicts(w1, w2) == bool(overlap)


def test_verify_accepts_disjoint():
    s = canonicalize([[1, 3], [6, 8]])
    assert verify_exploration(s, Exploration((Window(0, 1, 3), Window(1, 6, 8)))) == 2


def test_verify_rejects_shared_endpoint():
    s = canonicalize([[1, 4], [4, 7]])
    with pytest.raises(ExplorationRejected) as info:
        verify_exploration(s, [Window(0, 1, 4), Window(1, 4, 7)])
    assert info.value.reason == "conflict"
    assert info.value.steps == (0, 1)


def test_verify_accepts_non_consecutive_exit():
    s = canonicalize([[1, 4, 7]])
    w = Window(0, 1, 7)
    assert verify_exploration(s, [w]) == 1
    assert not is_consecutive(s, w)
    assert is_consecutive(s, Window(0, 4, 7))


@pytest.mark.parametrize(
    "steps, reason",
    [
        ([Window(2, 1, 3)], "unknown-edge"),
        ([Window(0, 1, 5)], "unknown-label"),
        ([Window(0, 3, 1)], "order"),
        ([Window(0, 1, 3), Window(0, 6, 8)], "duplicate-edge"),
    ],
)
def test_verify_rejection_reasons(steps, reason):
    s = canonicalize([[1, 3, 6, 8], [2, 5]])
    with pytest.raises(ExplorationRejected) as info:
        verify_exploration(s, steps)
    assert info.value.reason == reason


def test_empty_exploration():
    assert verify_exploration(TemporalStar(()), Exploration(())) == 0


@given(stars(), st.data())
def test_earliest_exit_normalization(s, data):
    # shortening a window to the next label after its entry keeps it valid
    chosen = []
    for e in range(len(s)):
        ws = windows_of(s, e)
        if ws and data.draw(st.booleans()):
            w = data.draw(st.sampled_from(ws))
            if all(not conflicts(w, c) for c in chosen):
                chosen.append(w)
    expl = Exploration.from_windows(chosen)
    assert verify_exploration(s, expl) == len(chosen)
    for w in chosen:
        labels = s.edges[w.edge]
        if labels[-1] > w.exit:
            wider = Window(w.edge, w.entry, labels[labels.index(w.exit) + 1])
            others = [c for c in chosen if c != w]
            if all(not conflicts(wider, c) for c in others):
                # the wide window is valid, and narrowing it back is too
                verify_exploration(s, others + [wider])
                verify_exploration(s, others + [w])
