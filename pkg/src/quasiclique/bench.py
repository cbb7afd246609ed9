"""Batch benchmark harness.

Runs the solver over (graph, gamma, variant, scale) combinations and emits
one CSV row each, with TIMEOUT/ERROR markers in the s_star column for runs
that exceeded the budget or graphs that failed to load.  Rows are written in
deterministic task order regardless of --jobs; a summary of solved-within-
budget counts per variant follows, and optimal rows for the same instance
are cross-checked for agreement across variants.
"""

from __future__ import annotations

import csv
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from .cli import EXIT_ERROR, EXIT_OK, env_time_limit
from .generate import sample_vertices
from .graph import load_graph
from .solver import solve

CSV_COLUMNS = [
    "graph", "n", "m", "gamma", "variant", "scale", "s_star", "optimal",
    "lb", "ub", "red_v_pct", "red_e_pct", "iters", "elapsed_ms",
]

VARIANTS = {
    "iterqc": {"mode": "improved", "use_pp": True, "use_plb": True},
    "no-pp": {"mode": "improved", "use_pp": False, "use_plb": True},
    "no-plb": {"mode": "improved", "use_pp": True, "use_plb": False},
    "basic": {"mode": "basic", "use_pp": False, "use_plb": True},
}

DEFAULT_TIMEOUT = 10800.0


def _expand_paths(paths: list[str]) -> list[str]:
    out: list[str] = []
    for p in paths:
        if os.path.isdir(p):
            out.extend(
                os.path.join(p, name)
                for name in sorted(os.listdir(p))
                if os.path.isfile(os.path.join(p, name))
            )
        else:
            out.append(p)
    return out


def _error_row(path: str) -> dict:
    row = {col: "" for col in CSV_COLUMNS}
    row["graph"] = path
    row["s_star"] = "ERROR"
    return row


def run_task(task: dict) -> dict:
    """Solve one (graph, gamma, variant, scale) combination; returns a CSV row."""
    row = {col: "" for col in CSV_COLUMNS}
    row.update(graph=task["path"], gamma=task["gamma"], variant=task["variant"], scale=task["scale"])
    try:
        g = load_graph(task["path"])
        if float(task["scale"]) < 1.0:
            g, _ = sample_vertices(g, float(task["scale"]), task["scale_seed"])
        res = solve(g, task["gamma"], time_limit=task["timeout"], **VARIANTS[task["variant"]])
    except Exception as exc:  # noqa: BLE001 - a bad instance must not kill the batch
        print(f"bench: {task['path']}: {exc}", file=sys.stderr)
        row["s_star"] = "ERROR"
        return row
    row.update(
        n=g.n,
        m=g.m,
        s_star=res.s_star if res.optimal else "TIMEOUT",
        optimal="true" if res.optimal else "false",
        lb="" if res.lb is None else res.lb,
        ub="" if res.ub is None else res.ub,
        red_v_pct=f"{res.red_v_pct:.2f}",
        red_e_pct=f"{res.red_e_pct:.2f}",
        iters=len(res.trace),
        elapsed_ms=f"{res.total_ms:.1f}",
    )
    return row


def run_bench(args) -> int:
    timeout = args.timeout
    if timeout is None:
        timeout = env_time_limit() or DEFAULT_TIMEOUT
    gammas = [s.strip() for s in args.gammas.split(",") if s.strip()]
    variants = [s.strip() for s in args.variants.split(",") if s.strip()]
    unknown = [v for v in variants if v not in VARIANTS]
    if unknown:
        print(f"error: unknown variant(s): {', '.join(unknown)}", file=sys.stderr)
        return EXIT_ERROR
    scales = [1.0]
    if args.scale:
        scales = [float(s) for s in args.scale.split(",") if s.strip()]

    paths = _expand_paths(args.paths)
    tasks: list[dict] = []
    error_rows: list[tuple[int, dict]] = []
    order = 0
    for path in paths:
        try:
            load_graph(path)
        except Exception as exc:  # noqa: BLE001 - log, emit ERROR row, move on
            print(f"bench: skipping {path}: {exc}", file=sys.stderr)
            error_rows.append((order, _error_row(path)))
            order += 1
            continue
        for gamma in gammas:
            for scale in scales:
                for variant in variants:
                    tasks.append(
                        {
                            "path": path,
                            "gamma": gamma,
                            "variant": variant,
                            "scale": scale,
                            "scale_seed": args.scale_seed,
                            "timeout": timeout,
                        }
                    )
                    order += 1

    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(run_task, tasks))
    else:
        results = [run_task(t) for t in tasks]

    rows: list[dict] = []
    ti = 0
    err = dict(error_rows)
    for i in range(len(tasks) + len(error_rows)):
        if i in err:
            rows.append(err[i])
        else:
            rows.append(results[ti])
            ti += 1

    out = open(args.csv, "w", newline="", encoding="utf-8") if args.csv else sys.stdout
    try:
        writer = csv.DictWriter(out, fieldnames=CSV_COLUMNS)
        writer.writeheader()
        writer.writerows(rows)
    finally:
        if args.csv:
            out.close()

    report = sys.stdout if args.csv else sys.stderr
    mismatch = False
    answers: dict[tuple, set] = {}
    for row in rows:
        if row["optimal"] == "true":
            key = (row["graph"], row["gamma"], row["scale"])
            answers.setdefault(key, set()).add(row["s_star"])
    for key, vals in answers.items():
        if len(vals) > 1:
            mismatch = True
            print(f"MISMATCH {key}: {sorted(vals)}", file=report)
    for variant in variants:
        vrows = [r for r in rows if r["variant"] == variant]
        solved = sum(1 for r in vrows if r["optimal"] == "true")
        print(f"variant {variant}: {solved}/{len(vrows)} solved within {timeout:g}s", file=report)
    return EXIT_ERROR if mismatch else EXIT_OK


def configure_bench_parser(p) -> None:
    p.add_argument("paths", nargs="+", help="graph files or directories of graph files")
    p.add_argument("--gammas", default="0.75", help="comma-separated gamma values")
    p.add_argument(
        "--variants",
        default="iterqc,no-pp,no-plb",
        help=f"comma-separated subset of {{{','.join(VARIANTS)}}}",
    )
    p.add_argument("--timeout", type=float, default=None, help="per-run seconds (default: QC_TIME_LIMIT or 10800)")
    p.add_argument("--jobs", type=int, default=1, help="concurrent solver processes")
    p.add_argument("--csv", default=None, help="output file (default: stdout)")
    p.add_argument("--scale", default=None, help="comma-separated vertex-sample ratios, e.g. 0.2,0.6,1.0")
    p.add_argument("--scale-seed", type=int, default=0)
    p.set_defaults(func=run_bench)
