"""Brute-force reference implementations used by the test suite.

Nothing here imports a solver from the package; the only shared pieces are the
plain data types, so every comparison is against an independent computation.
"""
from __future__ import annotations

import itertools
import random

from starexp.core import TemporalStar


def windows(labels):
    return [(labels[i], labels[i + 1]) for i in range(len(labels) - 1)]


def brute_max_exploration(edges) -> int:
    """Largest set of pairwise strictly separated windows, one per edge.

    Tries every combination of (skip | one window) per edge.
    """
    options = [[None] + windows(sorted(set(ls))) for ls in edges]
    best = 0
    for choice in itertools.product(*options):
        chosen = sorted(w for w in choice if w is not None)
        if all(a[1] < b[0] for a, b in zip(chosen, chosen[1:])):
            best = max(best, len(chosen))
    return best


def brute_explorable(edges) -> bool:
    """Full explorability by depth-first search over window choices."""
    opts = [windows(sorted(set(ls))) for ls in edges]
    if any(not o for o in opts):
        return False
    chosen: list[tuple[int, int]] = []

    def go(i):
        if i == len(opts):
            return True
        for w in opts[i]:
            if all(w[1] < c[0] or c[1] < w[0] for c in chosen):
                chosen.append(w)
                if go(i + 1):
                    return True
                chosen.pop()
        return False

    return go(0)


def truth_table_2sat(var_count, clauses):
    """First satisfying assignment in lexicographic order, or ``None``.

    Clauses are pairs of ``(var, positive)`` literals.
    """
    for bits in itertools.product((False, True), repeat=var_count):
        if all(any(bits[v] == pos for v, pos in c) for c in clauses):
            return list(bits)
    return None


def brute_max_sat(var_count, clauses) -> int:
    """Max number of satisfied clauses; literals are ``(var, negated)``."""
    best = 0
    for bits in itertools.product((False, True), repeat=var_count):
        best = max(best, sum(any(bits[v] != neg for v, neg in c) for c in clauses))
    return best


def random_normalized_formula(rng: random.Random, p: int, max_tries: int = 1000):
    """Random clause list meeting the gadget normal form.

    Every variable gets one negated and one or two unnegated occurrences; the
    occurrences are shuffled into clauses of one to three literals with no
    variable repeated in a clause.
    """
    for _ in range(max_tries):
        occ = []
        for v in range(p):
            occ.append((v, True))
            occ.extend((v, False) for _ in range(rng.choice((1, 2))))
        rng.shuffle(occ)
        clauses = []
        i = 0
        ok = True
        while i < len(occ):
            size = min(rng.randint(1, 3), len(occ) - i)
            clause = occ[i : i + size]
            if len({v for v, _ in clause}) != size:
                ok = False
                break
            clauses.append(tuple(sorted(clause)))
            i += size
        if ok:
            return p, tuple(clauses)
    raise RuntimeError("could not place occurrences")


def order_types(m: int, r_max: int):
    """Every multiset of ``m`` pairs ``a < b`` over ``1..r`` that uses each of
    ``1..r``, for all ``r <= r_max``, as a sorted list of pairs.

    These are the rank-compressed forms of all ``m``-edge two-label instances
    with labels in ``1..r_max``.
    """
    for r in range(1, r_max + 1):
        if r > 2 * m:
            break
        pairs = [(a, b) for a in range(1, r + 1) for b in range(a + 1, r + 1)]
        yield from _covering(pairs, m, r)


def _covering(pairs, m, r):
    out: list[tuple[int, int]] = []
    covered = [0] * (r + 2)

    def go(start, remaining, uncovered_from):
        # smallest uncovered value must be reachable by a later pair
        low = uncovered_from
        while low <= r and covered[low]:
            low += 1
        missing = sum(1 for v in range(low, r + 1) if not covered[v])
        if missing > 2 * remaining:
            return
        if remaining == 0:
            if missing == 0:
                yield list(out)
            return
        for idx in range(start, len(pairs)):
            a, b = pairs[idx]
            if low <= r and a > low:
                break
            out.append((a, b))
            covered[a] += 1
            covered[b] += 1
            yield from go(idx, remaining - 1, low)
            covered[a] -= 1
            covered[b] -= 1
            out.pop()

    yield from go(0, m, 1)


def star(edges) -> TemporalStar:
    return TemporalStar(tuple(tuple(sorted(set(e))) for e in edges))
