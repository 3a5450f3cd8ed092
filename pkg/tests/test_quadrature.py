"""Quadrature utilities: tanh-sinh rules, complex adaptive wrappers, and
the ordered-sector multidimensional scheme."""
import math

import numpy as np
import pytest

from specsing import QuadratureRule, tanh_sinh_rule
from specsing.quadrature import (complex_quad, complex_quad_segments,
                                 sector_integrate, sector_integrate_adaptive,
                                 tanh_sinh_integrate)


class TestTanhSinh:
    def test_rule_invariants(self):
        rule = tanh_sinh_rule(0.0, 1.0, 6)
        assert np.all(rule.weights > 0)
        assert np.all((rule.nodes > 0) & (rule.nodes < 1))

    def test_smooth(self):
        val = tanh_sinh_integrate(np.sin, 0.0, math.pi, 6)
        assert abs(val - 2.0) < 1e-13

    def test_endpoint_singularity(self):
        # int_0^1 x^(-1/2) dx = 2
        val = tanh_sinh_integrate(lambda x: x ** -0.5, 0.0, 1.0, 7)
        assert abs(val - 2.0) < 1e-12

    def test_both_endpoints(self):
        # int_-1^1 (1-x^2)^(-1/2) = pi
        val = tanh_sinh_integrate(lambda x: (1 - x * x) ** -0.5, -1.0, 1.0, 7)
        assert abs(val - math.pi) < 1e-11

    def test_validation(self):
        with pytest.raises(ValueError):
            QuadratureRule(nodes=np.array([0.5]), weights=np.array([-1.0]),
                           domain=(0, 1))
        with pytest.raises(ValueError):
            QuadratureRule(nodes=np.array([1.5]), weights=np.array([1.0]),
                           domain=(0, 1))


class TestComplexQuad:
    def test_oscillatory(self):
        val = complex_quad(lambda t: np.exp(1j * t), 0.0, math.pi)
        assert abs(val - 2j) < 1e-10

    def test_segments(self):
        val = complex_quad_segments(lambda t: np.exp(1j * t) + 0j,
                                    [0, math.pi, 2 * math.pi])
        assert abs(val) < 1e-10


class TestSector:
    def test_one_dim(self):
        val = sector_integrate(lambda ts: np.sin(ts[0]) + 0j, 1, 0.0, math.pi,
                               level=6)
        assert abs(val - 2.0) < 1e-12

    def test_two_dim_symmetric(self):
        # int (x+y) over (0,1)^2 = 1
        val = sector_integrate(lambda ts: ts[0] + ts[1] + 0j, 2, 0.0, 1.0,
                               level=6)
        assert abs(val - 1.0) < 1e-11

    def test_three_dim_kink(self):
        # int |x-y||y-z||x-z| over (0,1)^3 = 1/30 (gap-variable beta integrals)
        def f(ts):
            x, y, z = ts
            return abs(x - y) * abs(y - z) * abs(x - z) + 0j

        val = sector_integrate(f, 3, 0.0, 1.0, level=5)
        assert abs(val - 1.0 / 30) < 1e-9

    def test_adaptive_escalation(self):
        val, err = sector_integrate_adaptive(
            lambda ts: np.exp(ts[0] + ts[1]) + 0j, 2, 0.0, 1.0,
            start_level=3, max_level=6)
        exact = (math.e - 1) ** 2
        assert abs(val - exact) < 1e-9
        assert err < 1e-8
