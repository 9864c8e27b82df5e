"""3SAT(3) formulas and the gadget reduction to temporal-star exploration.

Variable ``i`` (0-based) owns the time block around ``50 * (i + 1)``. Its
primary edge carries a "false" pair and a "true" pair, two auxiliary edges
separate the pairs and the variable blocks, and every clause gets one edge
holding one (entry, exit) pair per literal occurrence.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .core import Exploration, TemporalStar, Window, canonicalize, verify_exploration

# a literal is (variable index, negated)
Literal = tuple[int, bool]

SPACING = 50
PRIMARY_FALSE = (-10, -7)
PRIMARY_TRUE = (10, 13)
AUX_MIDDLE = (0, 1)
AUX_TAIL = (15, 16)
POS_FIRST = (-12, -9)
POS_SECOND = (-8, -5)
NEG = (8, 11)
PAD_OFFSET = 100


class FormulaError(ValueError):
    pass


@dataclass(frozen=True)
class Cnf3:
    """A formula with at most three literals per clause, no variable twice in
    one clause, and every variable occurring once negated and once or twice
    unnegated."""

    var_count: int
    clauses: tuple[tuple[Literal, ...], ...]

    def __post_init__(self):
        pos = [0] * self.var_count
        neg = [0] * self.var_count
        for j, clause in enumerate(self.clauses):
            if not 1 <= len(clause) <= 3:
                raise FormulaError(f"clause {j} has {len(clause)} literals")
            vars_ = [v for v, _ in clause]
            if len(set(vars_)) != len(vars_):
                raise FormulaError(f"clause {j} mentions a variable twice")
            for v, negated in clause:
                if not 0 <= v < self.var_count:
                    raise FormulaError(f"clause {j} refers to unknown variable {v}")
                (neg if negated else pos)[v] += 1
        for v in range(self.var_count):
            if neg[v] != 1 or pos[v] not in (1, 2):
                raise FormulaError(
                    f"variable {v} occurs {pos[v]} times unnegated and {neg[v]} times negated"
                )

    def satisfied(self, tau) -> int:
        return sum(any(tau[v] != negated for v, negated in clause) for clause in self.clauses)


@dataclass(frozen=True)
class Normalized:
    """Result of :func:`normalize_3sat3` with the bookkeeping to lift assignments.

    ``origin[v] = (original variable, flipped)``: normalized variable ``v``
    equals the original variable, negated when ``flipped``. ``fixed`` holds
    values chosen for eliminated pure variables; ``removed`` counts original
    clauses dropped as satisfied (pure or tautological). For any normalized
    assignment, ``lift`` satisfies exactly ``removed`` more original clauses.
    """

    formula: Cnf3
    origin: tuple[tuple[int, bool], ...]
    fixed: dict[int, bool]
    removed: int
    original_var_count: int

    def lift(self, tau) -> list[bool]:
        out = [True] * self.original_var_count
        for v, value in self.fixed.items():
            out[v] = value
        for v, (orig, flipped) in enumerate(self.origin):
            out[orig] = tau[v] != flipped
        return out


def normalize_3sat3(var_count: int, clauses) -> Normalized:
    """Bring a 3SAT(3) formula into the gadget's normal form.

    ``clauses`` use DIMACS literals (``+v`` / ``-v``, 1-based). Repeated
    literals merge, tautologies drop, pure variables are fixed and their
    clauses removed until none remain, and a variable left with two negated
    and one unnegated occurrence is replaced by its negation.
    """
    work: list[set[int]] = []
    counts = [0] * (var_count + 1)
    for j, clause in enumerate(clauses):
        if len(clause) == 0:
            raise FormulaError(f"clause {j} is empty")
        if len(clause) > 3:
            raise FormulaError(f"clause {j} has {len(clause)} literals")
        for lit in clause:
            if lit == 0 or abs(lit) > var_count:
                raise FormulaError(f"clause {j}: literal {lit} out of range 1..{var_count}")
            counts[abs(lit)] += 1
        work.append(set(clause))
    for v in range(1, var_count + 1):
        if counts[v] > 3:
            raise FormulaError(f"variable {v} occurs {counts[v]} times")

    removed = sum(1 for c in work if any(-lit in c for lit in c))
    work = [c for c in work if not any(-lit in c for lit in c)]

    fixed: dict[int, bool] = {}
    while True:
        polarity: dict[int, set[bool]] = {}
        for c in work:
            for lit in c:
                polarity.setdefault(abs(lit), set()).add(lit > 0)
        pure = {v: next(iter(p)) for v, p in polarity.items() if len(p) == 1}
        if not pure:
            break
        fixed.update({v - 1: value for v, value in pure.items()})
        keep = [c for c in work if not any(abs(lit) in pure for lit in c)]
        removed += len(work) - len(keep)
        work = keep

    present = sorted({abs(lit) for c in work for lit in c})
    neg_count = {v: 0 for v in present}
    for c in work:
        for lit in c:
            if lit < 0:
                neg_count[-lit] += 1
    flipped = {v: neg_count[v] == 2 for v in present}
    new_index = {v: i for i, v in enumerate(present)}
    out_clauses = tuple(
        tuple(sorted((new_index[abs(lit)], (lit < 0) != flipped[abs(lit)]) for lit in c)) for c in work
    )
    formula = Cnf3(len(present), out_clauses)
    origin = tuple((v - 1, flipped[v]) for v in present)
    return Normalized(formula, origin, fixed, removed, var_count)


class EdgeKind(Enum):
    PRIMARY = "primary"
    AUX_MIDDLE = "aux-middle"
    AUX_TAIL = "aux-tail"
    CLAUSE = "clause"
    PADDING = "padding"


class Occurrence(Enum):
    POS_FIRST = "positive-first"
    POS_SECOND = "positive-second"
    NEG = "negative"


@dataclass(frozen=True)
class GadgetMap:
    """What each edge of a built instance stands for.

    ``owner[e]`` is the variable (primary and auxiliary edges) or the clause
    (clause edges) behind edge ``e``; ``pairs[e]`` maps every (entry, exit)
    pair of a clause edge to the (variable, occurrence) it encodes.
    """

    var_count: int
    clause_count: int
    kinds: tuple[EdgeKind, ...]
    owner: tuple[int, ...]
    pairs: tuple[dict[tuple[int, int], tuple[int, Occurrence]], ...] = field(repr=False)

    def primary(self, v: int) -> int:
        return v

    def aux_middle(self, v: int) -> int:
        return self.var_count + v

    def aux_tail(self, v: int) -> int:
        return 2 * self.var_count + v

    def clause_edge(self, j: int) -> int:
        return 3 * self.var_count + j


def _at(v: int, offsets: tuple[int, int]) -> tuple[int, int]:
    base = SPACING * (v + 1)
    return base + offsets[0], base + offsets[1]


def occurrence_kinds(f: Cnf3) -> list[list[Occurrence]]:
    """Occurrence type of each literal, clauses taken in order."""
    seen_pos = [0] * f.var_count
    out = []
    for clause in f.clauses:
        kinds = []
        for v, negated in clause:
            if negated:
                kinds.append(Occurrence.NEG)
            else:
                kinds.append(Occurrence.POS_FIRST if seen_pos[v] == 0 else Occurrence.POS_SECOND)
                seen_pos[v] += 1
        out.append(kinds)
    return out


_OFFSETS = {Occurrence.POS_FIRST: POS_FIRST, Occurrence.POS_SECOND: POS_SECOND, Occurrence.NEG: NEG}


def build_instance(f: Cnf3, pad_to_k: int | None = None) -> tuple[TemporalStar, GadgetMap]:
    """Build the temporal star for ``f``.

    Edge order: primaries, middle auxiliaries, tail auxiliaries, clause edges,
    then one padding edge when ``pad_to_k`` exceeds 6. The padding edge has
    ``pad_to_k`` labels past every gadget label, two apart.
    """
    if pad_to_k is not None and pad_to_k < 6:
        raise ValueError("pad_to_k must be at least 6")
    p, q = f.var_count, len(f.clauses)
    raw: list[list[int]] = []
    kinds: list[EdgeKind] = []
    owner: list[int] = []
    pairs: list[dict] = []
    for kind, offsets in ((EdgeKind.PRIMARY, None), (EdgeKind.AUX_MIDDLE, AUX_MIDDLE), (EdgeKind.AUX_TAIL, AUX_TAIL)):
        for v in range(p):
            if offsets is None:
                raw.append([*_at(v, PRIMARY_FALSE), *_at(v, PRIMARY_TRUE)])
            else:
                raw.append(list(_at(v, offsets)))
            kinds.append(kind)
            owner.append(v)
            pairs.append({})
    for j, (clause, occ) in enumerate(zip(f.clauses, occurrence_kinds(f))):
        labels = []
        encoded = {}
        for (v, _), kind in zip(clause, occ):
            pair = _at(v, _OFFSETS[kind])
            labels.extend(pair)
            encoded[pair] = (v, kind)
        raw.append(labels)
        kinds.append(EdgeKind.CLAUSE)
        owner.append(j)
        pairs.append(encoded)
    if pad_to_k is not None and pad_to_k > 6:
        start = SPACING * p + PAD_OFFSET
        raw.append([start + 2 * i for i in range(pad_to_k)])
        kinds.append(EdgeKind.PADDING)
        owner.append(-1)
        pairs.append({})
    gmap = GadgetMap(p, q, tuple(kinds), tuple(owner), tuple(pairs))
    return canonicalize(raw), gmap


def assignment_to_exploration(f: Cnf3, gmap: GadgetMap, tau) -> Exploration:
    """Exploration of size ``3p + |tau(f)|`` for a total assignment ``tau``.

    Each satisfied clause is explored through its true literal with the
    smallest variable index.
    """
    steps = []
    occ = occurrence_kinds(f)
    for v in range(f.var_count):
        steps.append(Window(gmap.primary(v), *_at(v, PRIMARY_TRUE if tau[v] else PRIMARY_FALSE)))
        steps.append(Window(gmap.aux_middle(v), *_at(v, AUX_MIDDLE)))
        steps.append(Window(gmap.aux_tail(v), *_at(v, AUX_TAIL)))
    for j, clause in enumerate(f.clauses):
        true_lits = [(v, kind) for (v, negated), kind in zip(clause, occ[j]) if tau[v] != negated]
        if true_lits:
            v, kind = min(true_lits, key=lambda t: t[0])
            steps.append(Window(gmap.clause_edge(j), *_at(v, _OFFSETS[kind])))
    return Exploration.from_windows(steps)


def exploration_to_assignment(f: Cnf3, gmap: GadgetMap, star: TemporalStar, expl: Exploration) -> list[bool]:
    """Truth assignment satisfying at least ``|expl| - 3p`` clauses.

    Clause edges explored through a single literal's pair vote for that
    literal. A variable voted both ways is set true: the negated vote's clause
    is given up, which is paid for by the primary edge that such an
    exploration cannot contain. Unvoted variables default to true.
    """
    verify_exploration(star, expl)
    votes: list[set[bool]] = [set() for _ in range(f.var_count)]
    for w in expl:
        if gmap.kinds[w.edge] is not EdgeKind.CLAUSE:
            continue
        hit = gmap.pairs[w.edge].get((w.entry, w.exit))
        if hit is not None:
            v, kind = hit
            votes[v].add(kind is not Occurrence.NEG)
    return [True if len(vs) != 1 else next(iter(vs)) for vs in votes]

