"""Linear-time 2SAT via strongly connected components of the implication graph."""
from __future__ import annotations

from dataclasses import dataclass, field

# A literal is (variable index, polarity); polarity True means the plain variable.
Literal = tuple[int, bool]
Clause = tuple[Literal, Literal]


@dataclass
class TwoSatFormula:
    var_count: int
    clauses: list[Clause] = field(default_factory=list)

    def add(self, a: Literal, b: Literal | None = None) -> None:
        """Append ``(a or b)``; a unit clause is stored as ``(a, a)``."""
        self.clauses.append((a, a if b is None else b))

    def evaluate(self, assignment: list[bool]) -> bool:
        return all(assignment[u] == pu or assignment[v] == pv for (u, pu), (v, pv) in self.clauses)


def _node(lit: Literal) -> int:
    var, pol = lit
    return 2 * var if pol else 2 * var + 1


def solve(f: TwoSatFormula) -> list[bool] | None:
    """Return a satisfying assignment, or ``None`` when ``f`` is unsatisfiable.

    The result is deterministic for a fixed clause order: variable ``v`` is
    true iff the component of ``v`` is found by Tarjan before that of ``not v``
    (components come out in reverse topological order).
    """
    n = 2 * f.var_count
    for (u, _), (v, _) in f.clauses:
        if not (0 <= u < f.var_count and 0 <= v < f.var_count):
            raise ValueError(f"clause refers to a variable outside 0..{f.var_count - 1}")
    adj: list[list[int]] = [[] for _ in range(n)]
    for a, b in f.clauses:
        x, y = _node(a), _node(b)
        adj[x ^ 1].append(y)
        adj[y ^ 1].append(x)

    comp = _tarjan(adj)
    assignment = []
    for var in range(f.var_count):
        cp, cn = comp[2 * var], comp[2 * var + 1]
        if cp == cn:
            return None
        assignment.append(cp < cn)
    return assignment


def _tarjan(adj: list[list[int]]) -> list[int]:
    n = len(adj)
    index = [-1] * n
    low = [0] * n
    comp = [-1] * n
    on_stack = [False] * n
    stack: list[int] = []
    counter = 0
    n_comp = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, i = work[-1]
            edges = adj[v]
            if i < len(edges):
                work[-1] = (v, i + 1)
                w = edges[i]
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, 0))
                elif on_stack[w] and index[w] < low[v]:
                    low[v] = index[w]
                continue
            work.pop()
            if work:
                u = work[-1][0]
                if low[v] < low[u]:
                    low[u] = low[v]
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp[w] = n_comp
                    if w == v:
                        break
                n_comp += 1
    return comp

