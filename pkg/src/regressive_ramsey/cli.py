"""Command line front end: certificates, thresholds, CNF export, tables.

Commands write a machine-readable certificate file (stable key order, no
floating point, timing excluded) alongside a rendered stdout report; the
process exits 0 exactly when every check passed and no mandatory evaluation
ran out of budget.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import __version__
from .coloring import (
    BudgetExhausted,
    Construction,
    ConstructionParams,
    build_ladder,
    construction_interval,
    verify_regressive,
    verify_sqrt_bound,
)
from .hierarchy import EvalBudget, ackermann_value, hierarchy_value
from .search import (
    DEFAULT_NODE_LIMIT,
    PairColoring,
    SearchLimitExceeded,
    brute_force_max,
    export_cnf,
    max_min_homog,
    nu_decision,
)

THREADS_ENV = "REGRAMSEY_THREADS"


def _default_threads() -> int:
    raw = os.environ.get(THREADS_ENV)
    if raw is None:
        return 1
    value = int(raw)
    if value < 1:
        raise ValueError(f"{THREADS_ENV} must be >= 1, got {value}")
    return value


def _machine(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _table(title: str, payload: dict) -> str:
    lines = ["=" * 64, title, "=" * 64]

    def emit(prefix: str, value) -> None:
        if isinstance(value, dict):
            for key in value:
                emit(f"{prefix}{key}.", value[key])
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            for i, item in enumerate(value):
                emit(f"{prefix}{i}.", item)
        else:
            lines.append(f"{prefix[:-1]:<40} {value}")

    for key in payload:
        emit(f"{key}.", payload[key])
    return "\n".join(lines) + "\n"


def _witness_payload(outcome) -> dict:
    return {
        "max_size": outcome.max_size,
        "witness": list(outcome.witness.elements),
        "row_colors": [[x, c] for x, c in outcome.witness.row_colors.items()],
        "nodes": outcome.nodes,
        "method": outcome.method,
    }


def cmd_certify(
    k: int,
    cap: int | None = None,
    budget: int | None = None,
    node_limit: int = DEFAULT_NODE_LIMIT,
    threads: int = 1,
) -> tuple[int, dict]:
    """Full verification certificate for the construction at parameter k."""
    eval_budget = EvalBudget(budget) if budget else None
    payload: dict = {"kind": "construction-certificate", "k": k, "version": __version__}
    try:
        construction = Construction.build(k, cap=cap, budget=eval_budget)
    except BudgetExhausted as exc:
        payload.update(
            status="budget_exceeded",
            base=ConstructionParams(k).base,
            interval_lower_bound=exc.lower_bound,
            steps=exc.steps,
            detail=str(exc),
        )
        return 1, payload

    interval = construction.interval
    regressive = verify_regressive(construction)
    sqrt_bound = verify_sqrt_bound(construction)
    coloring = PairColoring.from_callable(construction.elements(), construction.color)
    bound = max_min_homog(coloring, cap=k + 1, node_limit=node_limit)
    brute = brute_force_max(coloring, cap=k + 1, jobs=threads)
    agree = (
        bound.max_size == brute.max_size
        and bound.witness.elements == brute.witness.elements
    )
    ok = (
        regressive.ok
        and sqrt_bound.ok
        and agree
        and brute.max_size <= k
    )
    payload.update(
        status="complete",
        interval={"lo": interval.lo, "hi": interval.hi},
        ladders=[
            {
                "level": ladder.level,
                "rungs": len(ladder.rungs),
                "last": ladder.rungs[-1],
                "complete": ladder.complete,
            }
            for _level, ladder in sorted(construction.ladders.items())
        ],
        pairs_checked=regressive.pairs_checked,
        regressive_violations=len(regressive.violations),
        max_color=regressive.max_color,
        sqrt_violations=len(sqrt_bound.violations),
        max_distance=sqrt_bound.max_distance,
        search=_witness_payload(bound),
        exhaustive=_witness_payload(brute),
        search_agreement=agree,
        no_forced_excess=brute.max_size <= k,
        ok=ok,
    )
    return (0 if ok else 1), payload


def cmd_nu(
    k: int, n_cap: int, node_limit: int = DEFAULT_NODE_LIMIT
) -> tuple[int, dict]:
    """Sweep N upward, reporting the least forced N below the cap."""
    verdicts = []
    value = None
    code = 0
    for n in range(k, n_cap + 1):
        try:
            cert = nu_decision(n, k, node_limit)
        except SearchLimitExceeded as exc:
            verdicts.append({"n": n, "verdict": "unknown", "nodes": exc.nodes})
            code = 1
            break
        entry = {"n": n, "verdict": cert.verdict, "nodes": cert.nodes}
        if cert.avoider_rows is not None:
            entry["avoider_rows"] = [[x, list(r)] for x, r in sorted(cert.avoider_rows.items())]
        verdicts.append(entry)
        if cert.forced:
            value = n
            break
    payload = {
        "kind": "threshold-certificate",
        "k": k,
        "n_cap": n_cap,
        "value": value,
        "verdicts": verdicts,
        "version": __version__,
    }
    return code, payload


def cmd_cnf(n: int, k: int) -> tuple[int, dict, str]:
    """Export the avoidance CNF and self-check it against the backtracker."""
    document = export_cnf(n, k)
    cert = nu_decision(n, k)
    if cert.forced:
        self_check = "forced: no satisfying injection expected"
        ok = True
    else:
        assignment = document.assignment_from_coloring(cert.avoider())
        ok = document.check_assignment(assignment)
        self_check = "avoider injection satisfies all clauses" if ok else "INJECTION FAILED"
    payload = {
        "kind": "cnf-certificate",
        "n": n,
        "k": k,
        "vars": document.num_vars,
        "clauses": len(document.clauses),
        "backtracker_verdict": cert.verdict,
        "self_check": self_check,
        "ok": ok,
        "version": __version__,
    }
    return (0 if ok else 1), payload, document.to_dimacs()


def cmd_hierarchy(level: int, n: int, budget: int | None = None) -> tuple[int, dict]:
    """Evaluate the square-root-paced hierarchy and the Ackermann approximation."""
    eval_budget = EvalBudget(budget) if budget else None
    fast = hierarchy_value(level, n, eval_budget)
    ack = ackermann_value(level, n, eval_budget)
    payload = {
        "kind": "hierarchy-table",
        "level": level,
        "n": n,
        "hierarchy": {"kind": fast.kind, "value": fast.value, "steps": fast.steps},
        "ackermann": {"kind": ack.kind, "value": ack.value, "steps": ack.steps},
        "version": __version__,
    }
    return (0 if fast.exact and ack.exact else 1), payload


def cmd_ladder(
    k: int, level: int, cap: int, budget: int | None = None
) -> tuple[int, dict]:
    """Materialize one orbit ladder of the construction base."""
    eval_budget = EvalBudget(budget) if budget else None
    base = ConstructionParams(k).base
    ladder = build_ladder(level, base, cap, eval_budget)
    payload = {
        "kind": "ladder",
        "k": k,
        "level": level,
        "base": base,
        "cap": cap,
        "rungs": list(ladder.rungs),
        "complete": ladder.complete,
        "version": __version__,
    }
    return (0 if ladder.complete else 1), payload


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="regramsey",
        description="Regressive pair colorings, min-homogeneous search, exact thresholds.",
    )
    parser.add_argument("--format", choices=("table", "machine"), default="table")
    parser.add_argument("--out", metavar="FILE", default=None,
                        help="certificate file path (defaults per command)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("certify", help="verify the coloring construction for one k")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--cap", type=int, default=None,
                   help="verify only [4k^2, cap] (needed for k >= 5)")
    p.add_argument("--budget", type=int, default=None, help="step budget per evaluation")
    p.add_argument("--node-limit", type=int, default=DEFAULT_NODE_LIMIT)
    p.add_argument("--threads", type=int, default=None,
                   help=f"processes for the exhaustive scan (default ${THREADS_ENV} or 1)")

    p = sub.add_parser("nu", help="exact least forced domain size for one k")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n-cap", type=int, required=True)
    p.add_argument("--node-limit", type=int, default=DEFAULT_NODE_LIMIT)

    p = sub.add_parser("cnf", help="export the avoidance problem as DIMACS CNF")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("hierarchy", help="evaluate one hierarchy level at one argument")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--budget", type=int, default=None)

    p = sub.add_parser("ladder", help="materialize one orbit ladder")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--cap", type=int, required=True)
    p.add_argument("--budget", type=int, default=None)
    return parser


def _default_out(args: argparse.Namespace) -> str | None:
    if args.command == "certify":
        return f"certify-k{args.k}.json"
    if args.command == "nu":
        return f"nu-k{args.k}.json"
    if args.command == "cnf":
        return f"avoid-n{args.n}-k{args.k}.cnf"
    return None


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    started = time.monotonic()

    extra_text: str | None = None
    try:
        if args.command == "certify":
            threads = args.threads if args.threads is not None else _default_threads()
            code, payload = cmd_certify(
                args.k,
                cap=args.cap,
                budget=args.budget,
                node_limit=args.node_limit,
                threads=threads,
            )
        elif args.command == "nu":
            code, payload = cmd_nu(args.k, args.n_cap, args.node_limit)
        elif args.command == "cnf":
            code, payload, extra_text = cmd_cnf(args.n, args.k)
        elif args.command == "hierarchy":
            code, payload = cmd_hierarchy(args.level, args.n, args.budget)
        else:
            code, payload = cmd_ladder(args.k, args.level, args.cap, args.budget)
    except (ValueError, SearchLimitExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    out_path = args.out if args.out is not None else _default_out(args)
    if out_path is not None:
        with open(out_path, "w", encoding="ascii") as handle:
            handle.write(extra_text if extra_text is not None else _machine(payload))

    if args.format == "machine":
        sys.stdout.write(_machine(payload))
    else:
        elapsed_ms = int((time.monotonic() - started) * 1000)
        rendered = dict(payload)
        rendered["elapsed_ms"] = elapsed_ms
        sys.stdout.write(_table(f"regramsey {args.command}", rendered))
    return code


if __name__ == "__main__":
    sys.exit(main())
