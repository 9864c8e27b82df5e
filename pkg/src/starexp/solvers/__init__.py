from .exact import BudgetExceeded, SolveBudget, solve_exact
from .greedy import greedy_k
from .k2 import solve_max_k2
from .k3 import (
    ForcedState,
    NotExplorable,
    Reduction,
    decide_k3_linear,
    decide_k3_quadratic,
    linear_choices,
    middle_label_sweep,
    perturb_distinct,
    preprocess_two_label_edges,
    quadratic_choices,
)

__all__ = [
    "BudgetExceeded",
    "ForcedState",
    "NotExplorable",
    "Reduction",
    "SolveBudget",
    "decide_k3_linear",
    "decide_k3_quadratic",
    "greedy_k",
    "linear_choices",
    "middle_label_sweep",
    "perturb_distinct",
    "preprocess_two_label_edges",
    "quadratic_choices",
    "solve_exact",
    "solve_max_k2",
]
