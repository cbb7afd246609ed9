"""Exact-arithmetic gamma handling: parsing and the four threshold formulas."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quasiclique.rational import (
    core_size_bound,
    parse_gamma,
    qc_threshold,
    reduction_threshold,
    relaxation_k,
)

gammas = st.fractions(min_value=Fraction(1, 2), max_value=1, max_denominator=64)


class TestParse:
    def test_decimal_string(self):
        assert parse_gamma("0.75") == Fraction(3, 4)
        assert parse_gamma("0.55") == Fraction(11, 20)

    def test_ratio_string(self):
        assert parse_gamma("3/4") == Fraction(3, 4)
        assert parse_gamma("999/1000") == Fraction(999, 1000)

    def test_float_uses_decimal_repr(self):
        # 0.75 must become 3/4, not the 53-bit binary expansion
        assert parse_gamma(0.75) == Fraction(3, 4)
        assert parse_gamma(0.1) == Fraction(1, 10)

    def test_int_and_fraction(self):
        assert parse_gamma(1) == Fraction(1)
        assert parse_gamma(Fraction(1, 2)) == Fraction(1, 2)

    @pytest.mark.parametrize("bad", ["0", "-0.5", "1.5", "abc", "1/0"])
    def test_out_of_range_or_garbage(self, bad):
        with pytest.raises(ValueError):
            parse_gamma(bad)

    def test_unsupported_type(self):
        with pytest.raises(TypeError):
            parse_gamma([0.5])


class TestThresholds:
    def test_qc_threshold_examples(self):
        g = Fraction(3, 4)
        assert qc_threshold(1, g) == 0
        assert qc_threshold(4, g) == 3  # 0.75*3 = 2.25 -> 3
        assert qc_threshold(5, g) == 3  # exact boundary 0.75*4 = 3

    def test_relaxation_k_examples(self):
        g = Fraction(55, 100)
        assert relaxation_k(8, g) == 4
        assert relaxation_k(7, g) == 3
        assert relaxation_k(6, g) == 3
        assert relaxation_k(1, Fraction(1)) == 1

    def test_reduction_threshold_examples(self):
        g = Fraction(3, 4)
        assert reduction_threshold(3, g) == 1  # floor(2*0.75)
        assert reduction_threshold(4, g) == 2  # floor(3*0.75)
        assert reduction_threshold(1, g) == 0

    def test_core_size_bound_examples(self):
        assert core_size_bound(3, Fraction(3, 4)) == 5
        assert core_size_bound(2, Fraction(3, 4)) == 4
        assert core_size_bound(0, Fraction(1, 2)) == 1

    @pytest.mark.parametrize(
        "fn,arg", [(qc_threshold, 0), (relaxation_k, 0), (reduction_threshold, 0), (core_size_bound, -1)]
    )
    def test_domain_checks(self, fn, arg):
        with pytest.raises(ValueError):
            fn(arg, Fraction(3, 4))

    @settings(max_examples=200, deadline=None)
    @given(st.integers(1, 500), gammas)
    def test_matches_fraction_arithmetic(self, size, gamma):
        assert qc_threshold(size, gamma) == math.ceil(gamma * (size - 1))
        assert relaxation_k(size, gamma) == math.floor((1 - gamma) * (size - 1)) + 1
        assert reduction_threshold(size, gamma) == math.floor((size - 1) * gamma)
        assert core_size_bound(size, gamma) == 1 + math.ceil(size / gamma)

    @settings(max_examples=200, deadline=None)
    @given(st.integers(1, 500), gammas)
    def test_plex_slack_complements_degree_floor(self, q, gamma):
        # q - (floor((1-gamma)(q-1)) + 1) = ceil(gamma*(q-1)): a quasi-clique
        # of size q is a relaxation_k(q)-plex and vice versa at that size
        assert q - relaxation_k(q, gamma) == qc_threshold(q, gamma)

    @settings(max_examples=200, deadline=None)
    @given(st.integers(1, 500), gammas)
    def test_relaxation_monotone_in_size(self, size, gamma):
        assert relaxation_k(size + 1, gamma) >= relaxation_k(size, gamma)
