"""Command-line front end.

Exit status: 0 success / YES, 1 NO or rejected, 2 usage or input error,
3 search budget exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import formats
from .core import Exploration, ExplorationRejected, InvalidInstance, TemporalStar, verify_exploration
from .hardness import FormulaError, build_instance, exploration_to_assignment, normalize_3sat3
from .randomlab import Method, RandomModel, gen_uniform, reports_to_csv, run_experiment
from .solvers import (
    BudgetExceeded,
    SolveBudget,
    decide_k3_linear,
    decide_k3_quadratic,
    greedy_k,
    solve_exact,
    solve_max_k2,
)

OK, NO, USAGE, BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    else:
        Path(path).write_text(text if text.endswith("\n") else text + "\n", encoding="utf-8")


def _load_star(args) -> TemporalStar:
    if not args.instance:
        raise UsageError("--in is required")
    return formats.parse_instance(_read(args.instance))


def _budget(args) -> SolveBudget:
    return SolveBudget(args.budget) if args.budget else SolveBudget()


def _emit(args, report: dict, summary: str) -> None:
    """Print the human summary, or the JSON report with ``--json``."""
    if getattr(args, "json", False):
        print(json.dumps(report, indent=2))
    else:
        print(summary)


def _exploration_report(star: TemporalStar, expl: Exploration) -> dict:
    # re-verified here so no report ever carries an unchecked exploration
    size = verify_exploration(star, expl)
    return {"size": size, **formats.exploration_to_json(expl)}


def _fmt_steps(expl: Exploration) -> str:
    return " ".join(f"e{w.edge}:({w.entry},{w.exit})" for w in expl)


def _solve_oracle(star, args, command):
    try:
        return solve_exact(star, _budget(args)), None
    except BudgetExceeded as exc:
        report = {
            "command": command,
            "status": "budget-exceeded",
            "nodes": exc.nodes,
            "incumbent": _exploration_report(star, exc.best),
        }
        _emit(args, report, f"budget exceeded after {exc.nodes} nodes; best found {len(exc.best)}")
        return None, BUDGET


def cmd_decide(args) -> int:
    star = _load_star(args)
    method = args.method
    if method == "auto":
        k = star.max_labels
        method = "k2" if k <= 2 else "k3-linear" if k == 3 else "oracle"
    if method == "k2":
        if star.max_labels > 2:
            raise UsageError("method k2 needs at most 2 labels per edge")
        expl = solve_max_k2(star)
        witness = expl if len(expl) == len(star) else None
    elif method in ("k3-linear", "k3-quadratic"):
        if star.max_labels > 3:
            raise UsageError(f"method {method} needs at most 3 labels per edge")
        witness = (decide_k3_linear if method == "k3-linear" else decide_k3_quadratic)(star)
    elif method == "oracle":
        expl, code = _solve_oracle(star, args, "decide")
        if expl is None:
            return code
        witness = expl if len(expl) == len(star) else None
    else:
        raise UsageError(f"unknown method {method}")
    report = {"command": "decide", "method": method, "edges": len(star), "explorable": witness is not None}
    if witness is not None:
        report["exploration"] = _exploration_report(star, witness)
        _emit(args, report, f"YES ({method}): {_fmt_steps(witness)}")
        return OK
    _emit(args, report, f"NO ({method}): no exploration of all {len(star)} edges")
    return NO


def _size_command(args, command, expl) -> int:
    report = {"command": command, "edges": len(args.star), "exploration": _exploration_report(args.star, expl)}
    _emit(args, report, f"size {len(expl)} of {len(args.star)}: {_fmt_steps(expl)}")
    if args.out:
        _write(args.out, json.dumps(formats.exploration_to_json(expl)))
    return OK


def cmd_max(args) -> int:
    args.star = star = _load_star(args)
    method = args.method
    if method == "auto":
        method = "k2" if star.max_labels <= 2 else "oracle"
    if method == "k2":
        if star.max_labels > 2:
            raise UsageError("method k2 needs at most 2 labels per edge")
        return _size_command(args, "max", solve_max_k2(star))
    if method != "oracle":
        raise UsageError(f"unknown method {method}")
    expl, code = _solve_oracle(star, args, "max")
    return code if expl is None else _size_command(args, "max", expl)


def cmd_greedy(args) -> int:
    args.star = _load_star(args)
    return _size_command(args, "greedy", greedy_k(args.star))


def cmd_exact(args) -> int:
    args.star = _load_star(args)
    expl, code = _solve_oracle(args.star, args, "exact")
    return code if expl is None else _size_command(args, "exact", expl)


def cmd_verify(args) -> int:
    star = _load_star(args)
    if not args.solution:
        raise UsageError("--solution is required")
    expl = formats.parse_solution(_read(args.solution))
    try:
        size = verify_exploration(star, expl)
    except ExplorationRejected as exc:
        _emit(args, {"command": "verify", "valid": False, "reason": exc.reason, "message": str(exc)}, f"REJECTED: {exc}")
        return NO
    _emit(args, {"command": "verify", "valid": True, "size": size}, f"valid exploration of size {size}")
    return OK


def cmd_reduce(args) -> int:
    if not args.cnf:
        raise UsageError("--cnf is required")
    var_count, clauses = formats.parse_dimacs(_read(args.cnf))
    norm = normalize_3sat3(var_count, clauses)
    f = norm.formula
    star, gmap = build_instance(f, args.pad_k)
    if args.out:
        _write(args.out, formats.serialize_instance(star))
    report = {
        "command": "reduce",
        "variables": f.var_count,
        "clauses": len(f.clauses),
        "removed_clauses": norm.removed,
        "edges": len(star),
    }
    if not args.solve:
        if not args.out:
            report["instance"] = {"edges": star.as_lists()}
        _emit(args, report, f"built {len(star)} edges from {f.var_count} variables and {len(f.clauses)} clauses"
              + ("" if args.out else "\n" + formats.serialize_instance(star)))
        return OK
    expl, code = _solve_oracle(star, args, "reduce")
    if expl is None:
        return code
    required = len(star)
    full = len(expl) == required
    tau_norm = exploration_to_assignment(f, gmap, star, expl)
    tau = norm.lift(tau_norm)
    report.update(
        {
            "explorable": full,
            "exploration": _exploration_report(star, expl),
            "assignment": {str(v + 1): value for v, value in enumerate(tau)},
            "satisfied_clauses": f.satisfied(tau_norm) + norm.removed,
            "total_clauses": len(clauses),
        }
    )
    shown = " ".join(f"x{v + 1}={'T' if value else 'F'}" for v, value in enumerate(tau))
    _emit(args, report, f"{'YES' if full else 'NO'}: exploration size {len(expl)} of {required}; assignment {shown}")
    return OK if full else NO


def cmd_gen_random(args) -> int:
    model = RandomModel(args.n, args.alpha, args.k, args.seed)
    star = gen_uniform(model)
    _write(args.out, formats.serialize_instance(star))
    return OK


def cmd_experiment(args) -> int:
    runs = []
    if args.config:
        try:
            cfg = json.loads(_read(args.config))
        except json.JSONDecodeError as exc:
            raise formats.ParseError(exc.msg, exc.lineno, exc.colno) from None
        seed = cfg.get("seed", args.seed)
        for run in cfg.get("runs", []):
            runs.append(
                (
                    RandomModel(run["n"], run["alpha"], run["k"], run.get("seed", seed)),
                    run.get("trials", args.trials),
                    run.get("method", args.method),
                    run.get("budget", args.budget),
                )
            )
    else:
        if None in (args.n, args.alpha, args.k):
            raise UsageError("give --config or all of --n, --alpha, --k")
        runs.append((RandomModel(args.n, args.alpha, args.k, args.seed), args.trials, args.method, args.budget))
    reports = []
    for model, trials, method, budget in runs:
        if method == "auto":
            method = Method.EXACT_K2 if model.k == 2 else Method.ORACLE
        reports.append(run_experiment(model, trials, method, SolveBudget(budget) if budget else None))
    _write(args.out, reports_to_csv(reports))
    return OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="starexp", description="Temporal star exploration tools.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, instance=True):
        if instance:
            p.add_argument("--in", dest="instance", help="instance document ('-' for stdin)")
        p.add_argument("--json", action="store_true", help="print a JSON report instead of a summary")
        p.add_argument("--budget", type=int, default=None, help="node limit for the exact search")

    p = sub.add_parser("decide", help="is every edge explorable?")
    common(p)
    p.add_argument("--method", default="auto", choices=["auto", "k2", "k3-linear", "k3-quadratic", "oracle"])
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("max", help="maximum exploration (exact)")
    common(p)
    p.add_argument("--method", default="auto", choices=["auto", "k2", "oracle"])
    p.add_argument("--out", help="write the solution document here")
    p.set_defaults(func=cmd_max)

    p = sub.add_parser("greedy", help="greedy 2-approximation")
    common(p)
    p.add_argument("--out", help="write the solution document here")
    p.set_defaults(func=cmd_greedy)

    p = sub.add_parser("exact", help="branch-and-bound exact search")
    common(p)
    p.add_argument("--out", help="write the solution document here")
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("verify", help="check a solution document against an instance")
    common(p)
    p.add_argument("--solution", help="solution document")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("reduce", help="build the exploration instance of a 3SAT(3) formula")
    common(p, instance=False)
    p.add_argument("--cnf", help="DIMACS CNF file")
    p.add_argument("--out", help="write the instance document here")
    p.add_argument("--solve", action="store_true", help="solve the instance and decode an assignment")
    p.add_argument("--pad-k", dest="pad_k", type=int, default=None, help="add a padding edge with K labels")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("gen-random", help="sample a uniform random temporal star")
    p.add_argument("--n", type=int, required=True, help="vertex count (n - 1 edges)")
    p.add_argument("--alpha", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen_random)

    p = sub.add_parser("experiment", help="Monte-Carlo sweep, CSV output")
    p.add_argument("--config", help="JSON: {\"seed\": S, \"runs\": [{\"n\", \"alpha\", \"k\", \"trials\", \"method\"}]}")
    p.add_argument("--n", type=int)
    p.add_argument("--alpha", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--method", default="auto", choices=["auto"] + [m.value for m in Method])
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_experiment)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        return args.func(args)
    except (UsageError, formats.ParseError, InvalidInstance, FormulaError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
