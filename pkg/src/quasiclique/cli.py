"""Command-line front end.

Subcommands: solve, bounds, kplex, oracle, gen, bench, backends.  Exit codes
are 0 for a successful (optimal) run, 1 for usage or input errors, and 2
when a time limit stopped the search first.  QC_TIME_LIMIT provides the
default time budget in seconds; QC_BACKEND=python|native pins the kernel
implementation.
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys
import time

from ._kernels import BACKEND
from .bounds import get_bounds
from .generate import gen_sf, gen_sw
from .graph import Graph, GraphFormatError, load_graph, write_graph
from .kplex import SearchTimeout, plex_brb
from .oracle import OracleLimitError, brute_max_kplex, brute_max_qc
from .rational import parse_gamma
from .solver import solve

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_TIMEOUT = 2


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on usage errors; 2 is reserved for timeouts here."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def env_time_limit() -> float | None:
    raw = os.environ.get("QC_TIME_LIMIT", "").strip()
    if not raw:
        return None
    try:
        value = float(raw)
    except ValueError as exc:
        raise ValueError(f"QC_TIME_LIMIT must be a number, got {raw!r}") from exc
    return value if value > 0 else None


def _labels(g: Graph, vertices) -> list:
    return sorted(g.label_of(v) for v in vertices)


def _load(args) -> Graph:
    return load_graph(args.path, format=args.format)


def cmd_solve(args) -> int:
    g = _load(args)
    time_limit = args.time_limit if args.time_limit is not None else env_time_limit()
    res = solve(
        g,
        args.gamma,
        mode=args.mode,
        use_pp=not args.no_preprocess,
        use_plb=not args.no_pseudo_lb,
        time_limit=time_limit,
    )
    if args.json:
        print(json.dumps(res.to_dict()))
    else:
        status = "optimal" if res.optimal else "best known (TIMEOUT)"
        print(f"s*={res.s_star} ({status}) gamma={res.gamma} mode={res.mode}")
        lb = "-" if res.lb is None else res.lb
        ub = "-" if res.ub is None else res.ub
        print(
            f"lb={lb} ub={ub} Red-V={res.red_v_pct:.2f}% Red-E={res.red_e_pct:.2f}% "
            f"iters={len(res.trace)} time={res.total_ms:.1f}ms"
        )
        if args.print_vertices:
            print("witness:", " ".join(str(x) for x in res.witness_labels))
    return EXIT_OK if res.optimal else EXIT_TIMEOUT


def cmd_bounds(args) -> int:
    g = _load(args)
    b = get_bounds(g, args.gamma)
    if args.json:
        print(json.dumps({"lb": b.lb, "ub": b.ub, "witness": _labels(g, b.lb_witness)}))
    else:
        print(f"lb={b.lb} ub={b.ub}")
    return EXIT_OK


def cmd_kplex(args) -> int:
    g = _load(args)
    time_limit = args.time_limit if args.time_limit is not None else env_time_limit()
    deadline = time.monotonic() + time_limit if time_limit else 0.0
    try:
        witness = plex_brb(g, args.k, floor_bound=args.floor, deadline=deadline)
    except SearchTimeout as exc:
        print(f"TIMEOUT best_known={len(exc.best)}", file=sys.stderr)
        return EXIT_TIMEOUT
    labels = _labels(g, witness)
    if args.json:
        print(json.dumps({"k": args.k, "floor": args.floor, "size": len(witness), "witness": labels}))
    else:
        print(f"size={len(witness)}")
        if labels:
            print("witness:", " ".join(str(x) for x in labels))
    return EXIT_OK


def cmd_oracle(args) -> int:
    g = _load(args)
    if args.gamma is not None:
        size, witness = brute_max_qc(g, args.gamma, max_n=args.max_n)
        payload = {"gamma": str(parse_gamma(args.gamma)), "s_star": size}
    else:
        size, witness = brute_max_kplex(g, args.k, max_n=args.max_n)
        payload = {"k": args.k, "s_star": size}
    payload.update({"witness": _labels(g, witness), "optimal": True, "method": "brute"})
    if args.json:
        print(json.dumps(payload))
    else:
        print(f"s*={size}")
    return EXIT_OK


def cmd_gen(args) -> int:
    if args.model == "sf":
        g = gen_sf(args.n, args.w, args.seed)
        manifest = f"gen model=sf n={args.n} w={args.w} seed={args.seed}"
    else:
        g = gen_sw(args.n, args.d, args.p, args.seed)
        manifest = f"gen model=sw n={args.n} d={args.d} p={args.p} seed={args.seed}"
    write_graph(g, args.out, header=manifest)
    print(f"wrote {args.out}: n={g.n} m={g.m}")
    return EXIT_OK


_BACKEND_PROBE = """
import json, time
from quasiclique._kernels import BACKEND
from quasiclique.generate import gen_sf, gen_sw
from quasiclique.solver import solve
rows = []
for name, g in (("sf", gen_sf({n}, 10, {seed})), ("sw", gen_sw({n}, 10, 0.2, {seed}))):
    t0 = time.monotonic()
    res = solve(g, "3/4")
    rows.append((name, res.s_star, round((time.monotonic() - t0) * 1e3, 1)))
print(json.dumps({{"backend": BACKEND, "rows": rows}}))
"""


def cmd_backends(args) -> int:
    """Run the same synthetic workload under each kernel backend and compare."""
    results = {}
    for backend in ("python", "native"):
        env = dict(os.environ, QC_BACKEND=backend)
        proc = subprocess.run(
            [sys.executable, "-c", _BACKEND_PROBE.format(n=args.n, seed=args.seed)],
            capture_output=True,
            text=True,
            env=env,
        )
        if proc.returncode != 0:
            if backend == "native":
                print("native backend unavailable; skipping comparison", file=sys.stderr)
                continue
            print(proc.stderr, file=sys.stderr)
            return EXIT_ERROR
        results[backend] = json.loads(proc.stdout)
    for backend, data in results.items():
        for name, s_star, ms in data["rows"]:
            print(f"{backend:>7} {name} n={args.n}: s*={s_star} {ms}ms")
    if len(results) == 2:
        a = [(r[0], r[1]) for r in results["python"]["rows"]]
        b = [(r[0], r[1]) for r in results["native"]["rows"]]
        if a != b:
            print("backend MISMATCH", file=sys.stderr)
            return EXIT_ERROR
        print("backends agree")
    return EXIT_OK


def build_parser() -> _Parser:
    parser = _Parser(prog="quasiclique", description=__doc__)
    parser.add_argument("--version", action="version", version=f"quasiclique (backend={BACKEND})")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_input(p):
        p.add_argument("path", help="graph file (edge list or METIS)")
        p.add_argument("--format", choices=("auto", "edgelist", "metis"), default="auto")

    p = sub.add_parser("solve", help="exact maximum gamma-quasi-clique")
    add_input(p)
    p.add_argument("--gamma", required=True, help="density threshold in [0.5, 1] (decimal or p/q)")
    p.add_argument("--mode", choices=("improved", "basic"), default="improved")
    p.add_argument("--no-preprocess", action="store_true", help="skip bounds and reduction")
    p.add_argument("--no-pseudo-lb", action="store_true", help="disable the midpoint pseudo lower bound")
    p.add_argument("--time-limit", type=float, default=None, help="seconds (default: QC_TIME_LIMIT)")
    p.add_argument("--json", action="store_true")
    p.add_argument("--print-vertices", action="store_true")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("bounds", help="peeling lower/upper bounds")
    add_input(p)
    p.add_argument("--gamma", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("kplex", help="exact maximum k-plex (debugging)")
    add_input(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--floor", type=int, default=1, help="smallest size worth reporting")
    p.add_argument("--time-limit", type=float, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_kplex)

    p = sub.add_parser("oracle", help="brute-force reference answers (small graphs)")
    add_input(p)
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--gamma", default=None)
    grp.add_argument("--k", type=int, default=None)
    p.add_argument("--max-n", type=int, default=20, help="size guard for the exhaustive sweep")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gen", help="synthetic graph generators")
    gsub = p.add_subparsers(dest="model", required=True, parser_class=_Parser)
    sf = gsub.add_parser("sf", help="scale-free (preferential attachment)")
    sf.add_argument("--n", type=int, required=True)
    sf.add_argument("--w", type=int, required=True, help="edges added per vertex")
    sf.add_argument("--seed", type=int, default=0)
    sf.add_argument("-o", "--out", required=True)
    sf.set_defaults(func=cmd_gen)
    sw = gsub.add_parser("sw", help="small-world (rewired ring lattice)")
    sw.add_argument("--n", type=int, required=True)
    sw.add_argument("--d", type=int, required=True, help="lattice degree")
    sw.add_argument("--p", type=float, required=True, help="rewiring probability")
    sw.add_argument("--seed", type=int, default=0)
    sw.add_argument("-o", "--out", required=True)
    sw.set_defaults(func=cmd_gen)

    from .bench import configure_bench_parser

    p = sub.add_parser("bench", help="batch benchmark harness (CSV output)")
    configure_bench_parser(p)

    p = sub.add_parser("backends", help="compare pure-Python and compiled kernels")
    p.add_argument("--n", type=int, default=20000, help="synthetic instance size")
    p.add_argument("--seed", type=int, default=1)
    p.set_defaults(func=cmd_backends)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (OSError, GraphFormatError, OracleLimitError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
