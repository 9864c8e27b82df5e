import random

import pytest
from hypothesis import given

from starexp import canonicalize, verify_exploration
from starexp.core import is_consecutive
from starexp.solvers import solve_exact, solve_max_k2

from oracles import brute_max_exploration
from strategies import stars


@pytest.mark.parametrize(
    "edges, size",
    [([[1, 2], [3, 4]], 2), ([[1, 4], [4, 7]], 1), ([[1, 3], [2, 5], [6, 8]], 2), ([], 0), ([[5]], 0)],
)
def test_examples(edges, size):
    s = canonicalize(edges)
    expl = solve_max_k2(s)
    assert len(expl) == size
    assert verify_exploration(s, expl) == size


def test_picks_e0_and_e2():
    expl = solve_max_k2(canonicalize([[1, 3], [2, 5], [6, 8]]))
    assert expl.edges == frozenset({0, 2})


def test_rejects_three_labels():
    with pytest.raises(ValueError):
        solve_max_k2(canonicalize([[1, 2, 3]]))


@given(stars(max_edges=7, max_label=14, max_labels=2))
def test_matches_brute_force(s):
    expl = solve_max_k2(s)
    assert verify_exploration(s, expl) == len(expl)
    assert all(is_consecutive(s, w) for w in expl)
    assert len(expl) == brute_max_exploration(s.edges)


def test_random_ten_edges_against_exact():
    rng = random.Random(2)
    for _ in range(200):
        edges = [rng.sample(range(1, 25), 2) for _ in range(rng.randint(1, 10))]
        s = canonicalize(edges)
        assert len(solve_max_k2(s)) == len(solve_exact(s))
