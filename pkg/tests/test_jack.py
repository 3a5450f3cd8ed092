"""Jack-polynomial machinery: partitions, generalized Pochhammer symbols,
principal specialization, pFq^(alpha) series, duality ratio."""
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from specsing import (NonConvergenceError, Partition, duality_ratio_2f1,
                      gen_pochhammer, hyp2f1_terminating, hyper_pfq_alpha,
                      jack_principal, partitions_up_to, pochhammer)


class TestPartitions:
    def test_small_enumeration(self):
        parts = {p.parts for p in partitions_up_to(2, 2)}
        assert parts == {(), (1,), (2,), (1, 1)}

    def test_count(self):
        # partitions of weight <= 4 into <= 3 parts, brute-force count:
        # w=0:1, w=1:1, w=2:2, w=3:3, w=4:4 (4, 31, 22, 211) => 12 with empty
        assert len(partitions_up_to(3, 4)) == 12

    def test_single_row(self):
        parts = [p.parts for p in partitions_up_to(1, 3)]
        assert parts == [(), (1,), (2,), (3,)]

    @given(st.integers(1, 4), st.integers(0, 6))
    @settings(max_examples=40, deadline=None)
    def test_properties(self, m, w):
        ps = partitions_up_to(m, w)
        assert len({p.parts for p in ps}) == len(ps)
        for p in ps:
            assert len(p) <= m and p.weight <= w
            assert all(p.parts[i] >= p.parts[i + 1]
                       for i in range(len(p.parts) - 1))

    def test_validation(self):
        with pytest.raises(ValueError):
            Partition((1, 2))

    def test_conjugate(self):
        assert Partition((3, 1)).conjugate() == (2, 1, 1)


class TestGenPochhammer:
    def test_empty(self):
        assert gen_pochhammer(2.5, Partition(()), 1.0) == 1

    def test_single_row_classical(self):
        a = 1.3 - 0.4j
        assert gen_pochhammer(a, Partition((4,)), 0.7) == pochhammer(a, 4)

    def test_two_rows(self):
        # alpha = 1, a = 3, k = (2,1): (3)_2 (2)_1 = 24
        assert gen_pochhammer(3.0, Partition((2, 1)), 1.0) == pytest.approx(24.0)


class TestJackPrincipal:
    def test_empty(self):
        assert jack_principal(Partition(()), 1.0, 3, 0.7 + 0.1j) == 1

    def test_single_variable(self):
        for n in range(1, 5):
            val = jack_principal(Partition((n,)), 1.7, 1, 0.5 + 0.5j)
            assert abs(val - (0.5 + 0.5j) ** n) < 1e-13

    @pytest.mark.parametrize("alpha", [0.5, 1.0, 2.0])
    @pytest.mark.parametrize("m", [2, 3, 4])
    def test_sum_rule(self, alpha, m):
        # sum over |k| = n of C_k(x 1_m) = (m x)^n
        x = 0.8 - 0.3j
        for n in range(1, 6):
            tot = sum(jack_principal(k, alpha, m, x)
                      for k in partitions_up_to(m, n) if k.weight == n)
            assert abs(tot - (m * x) ** n) < 1e-10 * abs((m * x) ** n)

    def test_explicit_cube(self):
        # (m, alpha) = (2, 2), weight three: sum is m^3 = 8
        tot = sum(jack_principal(k, 2.0, 2, 1.0)
                  for k in partitions_up_to(2, 3) if k.weight == 3)
        assert tot == pytest.approx(8.0)


class TestHyperPfq:
    def test_at_zero(self):
        assert hyper_pfq_alpha([1.5], [2.5], 1.0, 3, 0.0) == 1

    def test_m1_reduces_to_classical(self):
        a, b, c, z = -3.0, 2.0, 4.0, 0.3
        for alpha in (0.5, 1.0, 2.0):
            val = hyper_pfq_alpha([a, b], [c], alpha, 1, z, max_weight=10)
            ref = hyp2f1_terminating(3, b, c, z)
            assert abs(val - ref) < 1e-13

    def test_kummer_m1(self):
        val = hyper_pfq_alpha([1.5 - 0.7j], [3.0], 2.0, 1, 0.4j, max_weight=40)
        ref = 1.0
        # compare against the classical series oracle
        from specsing import hyp1f1
        assert abs(val - hyp1f1(1.5 - 0.7j, 3.0, 0.4j)) < 1e-12

    def test_truncation_error_raised(self):
        with pytest.raises(NonConvergenceError):
            hyper_pfq_alpha([1.5], [2.5], 1.0, 2, 30.0, max_weight=8)

    def test_denominator_pole(self):
        with pytest.raises(ZeroDivisionError):
            hyper_pfq_alpha([1.5], [-1.0], 1.0, 2, 0.3, max_weight=6)


class TestDualityRatio:
    def test_t_one(self):
        assert duality_ratio_2f1(3, 1.2, 2.2, 1.0, 2, 1.0) == pytest.approx(1.0)

    def test_n_zero(self):
        assert duality_ratio_2f1(0, 1.2, 2.2, 0.5, 3, 0.4) == pytest.approx(1.0)

    def test_m1_classical(self):
        # m = 1 reduces to the classical transformation of 2F1
        n, b, c, t = 2, 1.3, 2.6, 0.35
        val = duality_ratio_2f1(n, b, c, 1.0, 1, t)
        ref = hyp2f1_terminating(n, b, c, t)
        assert abs(val - ref) < 1e-12

    def test_beta2_against_direct(self):
        # the ratio form equals the direct 2F1^(1) at two equal arguments
        # (density-style lower parameter, nonterminating rows allowed)
        n, b, alpha, m, t = 2, complex(2.5, -0.7), 1.0, 2, 0.9 + 0.05j
        c = complex(-0.5, -0.2)
        val = duality_ratio_2f1(n, b, c, alpha, m, t)
        ref = hyper_pfq_alpha([complex(-n), b], [c], 1 / alpha, m, t,
                              max_weight=2 * (n + 2))
        assert abs(val - ref) < 1e-10 * abs(ref)
