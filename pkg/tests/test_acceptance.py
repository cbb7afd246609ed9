"""Acceptance suite: nine criteria, one pass/fail line each.

Criteria 1-6 are oracle- and property-based on small random instances plus
constructed graphs; 7 checks generator identities; 8 is a desk-scale
performance smoke on 100k-vertex synthetic graphs; 9 runs only when a
directory of DIMACS-collection files is supplied via QC_DIMACS_DIR.
"""

import functools
import os
import time
from fractions import Fraction

import pytest

from conftest import complete, disjoint_union, er_corpus, path_graph, star_graph
from quasiclique.bounds import get_bounds
from quasiclique.generate import gen_sf, gen_sw
from quasiclique.graph import core_decompose, is_quasi_clique, load_graph
from quasiclique.kplex import (
    brb_call_count,
    plex_brb,
    pseudo_lower_bound,
    reset_brb_call_count,
)
from quasiclique.oracle import brute_max_kplex, brute_max_qc
from quasiclique.rational import core_size_bound
from quasiclique.solver import basic_iterate, get_k, solve

GAMMAS = ("0.5", "0.55", "0.6", "0.75", "0.9", "1.0")
OPTION_GRID = [
    (mode, pp, plb) for mode in ("improved", "basic") for pp in (True, False) for plb in (True, False)
]


# one line per criterion; conftest echoes these after the run so they stay
# visible under default output capture
REPORT_LINES = []


def _record(line):
    REPORT_LINES.append(line)
    print(f"\n{line}")


def report(name):
    def deco(fn):
        @functools.wraps(fn)
        def wrapper(*args, **kwargs):
            try:
                fn(*args, **kwargs)
            except pytest.skip.Exception:
                _record(f"[ACCEPTANCE] {name}: SKIP")
                raise
            except BaseException:
                _record(f"[ACCEPTANCE] {name}: FAIL")
                raise
            _record(f"[ACCEPTANCE] {name}: PASS")

        return wrapper

    return deco


@functools.lru_cache(maxsize=1)
def corpus():
    return er_corpus(504, seed=7771)


@functools.lru_cache(maxsize=None)
def qc_truth(idx: int, gamma: str) -> int:
    return brute_max_qc(corpus()[idx], gamma)[0]


@functools.lru_cache(maxsize=None)
def plex_truth(idx: int, k: int) -> int:
    return brute_max_kplex(corpus()[idx], k)[0]


@report("criterion 1: solver matches the quasi-clique oracle on 504 graphs x 6 gammas")
def test_criterion_1_oracle_equivalence_maxqc():
    t0 = time.monotonic()
    graphs = corpus()
    assert len(graphs) >= 500
    for idx, g in enumerate(graphs):
        for gamma in GAMMAS:
            res = solve(g, gamma, mode="improved")
            assert res.optimal
            assert res.s_star == qc_truth(idx, gamma), (idx, gamma)
            assert len(res.witness) == res.s_star
            assert is_quasi_clique(g, res.witness, gamma)
    assert time.monotonic() - t0 < 60


@report("criterion 2: exact search matches the k-plex oracle, with floor semantics")
def test_criterion_2_oracle_equivalence_kplex():
    t0 = time.monotonic()
    for idx, g in enumerate(corpus()):
        for k in (1, 2, 3, 4):
            best = plex_truth(idx, k)
            assert len(plex_brb(g, k, floor_bound=1)) == best
            for f in range(1, best + 3):
                got = plex_brb(g, k, floor_bound=f)
                if f <= best:
                    assert len(got) == best
                else:
                    assert got == frozenset()
    assert time.monotonic() - t0 < 60


@report("criterion 3: all mode/ablation variants report the same optimum")
def test_criterion_3_ablation_agreement():
    t0 = time.monotonic()
    for idx, g in enumerate(corpus()):
        for gamma in GAMMAS:
            sizes = {solve(g, gamma, mode=m, use_pp=pp, use_plb=plb).s_star for m, pp, plb in OPTION_GRID}
            assert len(sizes) == 1, (idx, gamma, sizes)
    for i in range(10):
        for g in (gen_sf(2000, 10, seed=1000 + i), gen_sw(2000, 10, 0.2, seed=2000 + i)):
            for gamma in ("1", "999/1000"):
                sizes = {
                    solve(g, gamma, mode=m, use_pp=pp, use_plb=plb).s_star for m, pp, plb in OPTION_GRID
                }
                assert len(sizes) == 1, (i, gamma, sizes)
    assert time.monotonic() - t0 < 300


@report("criterion 4: iteration traces and peeling bounds obey their guarantees")
def test_criterion_4_trace_guarantees():
    for idx, g in enumerate(corpus()):
        if g.n == 0:
            continue
        info = core_decompose(g)
        for gamma in GAMMAS:
            frac = Fraction(gamma)
            s_star = qc_truth(idx, gamma)

            b = get_bounds(g, gamma)
            assert b.lb <= s_star <= b.ub
            assert b.ub <= core_size_bound(info.max_core, frac)

            s, _, trace = basic_iterate(g, gamma)
            assert s == s_star
            assert 1 <= len(trace) <= g.n
            assert trace[0].k == get_k(g.n, frac)
            for a, c in zip(trace, trace[1:]):
                assert c.k == get_k(a.s, frac)
            svals = [t.s for t in trace]
            assert all(v >= s_star for v in svals)
            # strictly decreasing until termination; only the terminal
            # fixpoint step may repeat the previous value
            for a, c in zip(svals, svals[1:]):
                assert a >= c
            for a, c in zip(svals, svals[2:]):
                assert a > c

            res = solve(g, gamma, mode="improved", use_pp=False)
            for a, c in zip(res.trace, res.trace[1:]):
                assert c.k == get_k(a.s, frac)
            assert all(t.s >= s_star for t in res.trace)


@report("criterion 5: arithmetic anchors for get_k and the midpoint bound")
def test_criterion_5_arithmetic_anchors():
    gamma = Fraction(55, 100)
    assert get_k(8, gamma) == 4
    assert get_k(7, gamma) == 3
    assert get_k(6, gamma) == 3
    assert pseudo_lower_bound(3, 7) == 5
    assert pseudo_lower_bound(5, 3) == 4


@report("criterion 6: lb=ub preprocessing answers without any exact search call")
def test_criterion_6_short_circuit():
    g = disjoint_union(complete(6), path_graph(5), star_graph(4))
    b = get_bounds(g, "0.75")
    assert (b.lb, b.ub) == (6, 6)
    reset_brb_call_count()
    res = solve(g, "0.75")
    assert brb_call_count() == 0
    assert res.s_star == 6
    assert res.optimal
    assert res.witness == frozenset(range(6))
    assert (res.red_v_pct, res.red_e_pct) == (100.0, 100.0)


@report("criterion 7: generator edge-count identities and seed determinism")
def test_criterion_7_generator_identities():
    t0 = time.monotonic()
    sf = gen_sf(1000, 10, seed=42)
    assert sf.m == 9909
    for p in (0.0, 0.2):
        assert gen_sw(1000, 10, p, seed=7).m == 5000
    a, b = gen_sf(1000, 10, seed=3), gen_sf(1000, 10, seed=3)
    assert (a.offsets == b.offsets).all() and (a.neighbors == b.neighbors).all()
    c, d = gen_sw(1000, 10, 0.2, seed=3), gen_sw(1000, 10, 0.2, seed=3)
    assert (c.offsets == d.offsets).all() and (c.neighbors == d.neighbors).all()
    assert time.monotonic() - t0 < 5


@report("criterion 8: 100k-vertex instances solve optimally in budget; preprocessing helps")
def test_criterion_8_performance_smoke():
    sf = gen_sf(100_000, 10, seed=8)
    sw = gen_sw(100_000, 10, 0.2, seed=9)

    t0 = time.monotonic()
    res_sf = solve(sf, "0.75")
    t_sf = time.monotonic() - t0
    assert res_sf.optimal and t_sf < 60
    assert is_quasi_clique(sf, res_sf.witness, "0.75")

    t0 = time.monotonic()
    res_sw = solve(sw, "0.75")
    t_sw = time.monotonic() - t0
    assert res_sw.optimal and t_sw < 60
    assert is_quasi_clique(sw, res_sw.witness, "0.75")

    t0 = time.monotonic()
    res_nopp = solve(sf, "0.75", use_pp=False)
    t_nopp = time.monotonic() - t0
    assert res_nopp.s_star == res_sf.s_star
    assert t_sf <= t_nopp * 1.1


@report("criterion 9: optional DIMACS-collection smoke")
def test_criterion_9_dimacs_optional():
    root = os.environ.get("QC_DIMACS_DIR")
    if not root:
        pytest.skip("set QC_DIMACS_DIR to a directory of graph files to run")
    files = sorted(
        os.path.join(root, f) for f in os.listdir(root) if os.path.isfile(os.path.join(root, f))
    )[:5]
    assert files, f"no files in {root}"
    known = {"G17": 5, "G20": 5, "G29": 5}
    for path in files:
        g = load_graph(path)
        answers = set()
        for pp, plb in ((True, True), (False, True), (True, False)):
            res = solve(g, "0.75", use_pp=pp, use_plb=plb, time_limit=600)
            assert res.optimal, f"{path} timed out"
            assert is_quasi_clique(g, res.witness, "0.75")
            answers.add(res.s_star)
        assert len(answers) == 1, (path, answers)
        stem = os.path.splitext(os.path.basename(path))[0]
        if stem in known:
            assert answers == {known[stem]}
