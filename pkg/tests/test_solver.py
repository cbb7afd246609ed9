"""Iterative-reduction solver: traces, mode agreement, and the driver contract."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import (
    complete,
    disjoint_union,
    er_graph,
    k4_minus_edge,
    k4_plus_triangle,
    two_step_instance,
)
from quasiclique.graph import Graph, is_quasi_clique
from quasiclique.oracle import brute_max_qc
from quasiclique.rational import qc_threshold
from quasiclique.solver import basic_iterate, get_k, improved_iter_search, solve


class TestGetK:
    def test_anchor_values(self):
        g = Fraction(55, 100)
        assert get_k(8, g) == 4
        assert get_k(7, g) == 3
        assert get_k(6, g) == 3

    def test_gamma_one_collapses_to_clique(self):
        for x in (1, 2, 5, 100):
            assert get_k(x, Fraction(1)) == 1

    def test_domain(self):
        with pytest.raises(ValueError):
            get_k(0, Fraction(3, 4))

    @settings(max_examples=150, deadline=None)
    @given(
        st.integers(1, 300),
        st.fractions(min_value=Fraction(1, 2), max_value=1, max_denominator=50),
    )
    def test_non_decreasing_and_complements_threshold(self, x, gamma):
        assert get_k(x + 1, gamma) >= get_k(x, gamma)
        assert x - get_k(x, gamma) == qc_threshold(x, gamma)


class TestBasicMode:
    def test_clique_single_iteration(self):
        for gamma in ("0.5", "0.75", "1"):
            s, wit, trace = basic_iterate(complete(6), gamma)
            assert s == 6
            assert len(trace) == 1
            assert wit == frozenset(range(6))

    def test_k4_minus_edge(self):
        s, wit, _ = basic_iterate(k4_minus_edge(), "0.75")
        assert s == 3
        assert is_quasi_clique(k4_minus_edge(), wit, "0.75")

    def test_two_step_trace(self):
        # max 4-plex has 7 vertices, max 3-plex 6; at gamma=0.55 the walk is
        # s0=8 -> (k=4, s=7) -> (k=3, s=6), and get_k(6)=3 stops it
        s, wit, trace = basic_iterate(two_step_instance(), "0.55")
        assert [(t.i, t.k, t.s) for t in trace] == [(1, 4, 7), (2, 3, 6)]
        assert s == 6
        assert is_quasi_clique(two_step_instance(), wit, "0.55")

    def test_terminal_repeat_is_allowed(self):
        # K4 plus isolates: s stays at 4 while k drops from 3 to 1, so the
        # last two s values tie; everything before the tail must decrease
        g = disjoint_union(complete(4), Graph.from_edges([], n=8))
        s, _, trace = basic_iterate(g, "0.8")
        assert [t.s for t in trace] == [4, 4]
        assert s == 4

    def test_trace_shape_on_random_graphs(self):
        rng = random.Random(67)
        for _ in range(40):
            g = er_graph(rng.randint(1, 14), rng.uniform(0.1, 0.9), rng)
            gamma = rng.choice(["0.5", "0.55", "0.75", "0.9", "1"])
            s, _, trace = basic_iterate(g, gamma)
            assert 1 <= len(trace) <= g.n
            frac = Fraction(gamma)
            assert trace[0].k == get_k(g.n, frac)
            for a, b in zip(trace, trace[1:]):
                assert b.k == get_k(a.s, frac)
            svals = [t.s for t in trace]
            for a, b in zip(svals, svals[2:]):
                assert a > b  # equality is possible only between neighbors
            for a, b in zip(svals, svals[1:]):
                assert a >= b
            s_star, _ = brute_max_qc(g, gamma)
            assert all(v >= s_star for v in svals)
            assert s == s_star


class TestImprovedMode:
    def test_midpoint_walkthrough(self):
        # disjoint K4 + K3: probe floor (4+7)//2=5 refutes, then the second
        # round finds the K4 at floor (4+5)//2=4 and the fixpoint test stops
        g = k4_plus_triangle()
        s, wit, trace = improved_iter_search(g, Fraction(55, 100), ub=7, use_plb=True, deadline=0.0)
        assert [(t.i, t.k, t.s, t.pseudo_lb, t.pseudo_size) for t in trace] == [
            (1, 3, 5, 5, 0),
            (2, 2, 4, 4, 4),
        ]
        assert s == 4
        assert wit == frozenset(range(4))

    def test_ub_equal_to_optimum_on_clique(self):
        s, wit, trace = improved_iter_search(complete(5), Fraction(3, 4), ub=5, use_plb=True, deadline=0.0)
        assert s == 5
        assert len(trace) == 1

    def test_k4_minus_edge_with_tight_ub(self):
        g = k4_minus_edge()
        s, wit, _ = improved_iter_search(g, Fraction(3, 4), ub=4, use_plb=True, deadline=0.0)
        assert s == 3
        assert is_quasi_clique(g, wit, "0.75")

    def test_empty_graph(self):
        s, wit, trace = improved_iter_search(Graph.from_edges([], n=0), Fraction(1, 2), ub=0, use_plb=True, deadline=0.0)
        assert (s, wit) == (0, frozenset())


class TestSolveDriver:
    def test_option_grid_on_k4_minus_edge(self):
        g = k4_minus_edge()
        for mode in ("improved", "basic"):
            for pp in (True, False):
                for plb in (True, False):
                    res = solve(g, "0.75", mode=mode, use_pp=pp, use_plb=plb)
                    assert res.s_star == 3, (mode, pp, plb)
                    assert res.optimal
                    assert is_quasi_clique(g, res.witness, "0.75")

    def test_single_vertex(self):
        res = solve(complete(1), "0.75")
        assert (res.s_star, res.optimal) == (1, True)

    def test_empty_graph(self):
        res = solve(Graph.from_edges([], n=0), "0.75")
        assert (res.s_star, res.optimal) == (0, True)

    def test_gamma_below_half_rejected(self):
        with pytest.raises(ValueError):
            solve(complete(3), "0.3")

    def test_result_dominates_bounds(self):
        rng = random.Random(71)
        for _ in range(30):
            g = er_graph(rng.randint(1, 14), rng.uniform(0.2, 0.9), rng)
            res = solve(g, "0.6")
            assert res.lb is not None and res.ub is not None
            assert res.lb <= res.s_star <= res.ub
            assert is_quasi_clique(g, res.witness, "0.6")

    def test_witness_in_original_labels(self, tmp_path):
        f = tmp_path / "shifted.txt"
        f.write_text("100 200\n200 300\n100 300\n")
        from quasiclique.graph import load_graph

        g = load_graph(f)
        res = solve(g, "0.75")
        assert res.s_star == 3
        assert sorted(res.witness_labels) == [100, 200, 300]

    def test_timeout_returns_nonoptimal_with_bound_witness(self):
        # near-ring lattice forces a huge relaxation parameter in basic mode
        from quasiclique.generate import gen_sw

        g = gen_sw(300, 10, 0.2, seed=3)
        res = solve(g, "0.75", mode="basic", use_pp=False, time_limit=0.3)
        assert not res.optimal
        assert res.s_star >= 1
        assert is_quasi_clique(g, res.witness, "0.75")
        assert res.total_ms <= 3000

    def test_to_dict_schema(self):
        res = solve(two_step_instance(), "0.55", mode="basic", use_pp=False)
        d = res.to_dict()
        assert set(d) == {
            "gamma", "s_star", "witness", "optimal", "trace",
            "lb", "ub", "red_v_pct", "red_e_pct", "total_ms",
        }
        assert d["gamma"] == "11/20"
        assert d["s_star"] == 6
        for entry in d["trace"]:
            assert set(entry) == {"i", "k", "s", "pseudo_lb", "pseudo_size", "ms"}

    def test_solve_agrees_with_oracle_across_gammas(self):
        rng = random.Random(73)
        for _ in range(40):
            g = er_graph(rng.randint(1, 13), rng.uniform(0.1, 0.9), rng)
            for gamma in ("0.5", "0.75", "1"):
                s_star, _ = brute_max_qc(g, gamma)
                assert solve(g, gamma).s_star == s_star
