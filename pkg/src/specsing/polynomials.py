"""Routh-Romanovski orthogonal polynomials, the Cauchy and circle weights,
and the line <-> circle coordinate maps.

Weight convention: omega2(x) = (1 - ix)^c (1 + ix)^cbar with c = -P + iQ,
equivalently (1 + x^2)^(-P) exp(2 Q arctan x).  For the ensemble-derived
weights, P and Q carry the beta-specific identifications:

    beta = 2:  P = N + p,       Q = q
    beta = 1:  P = N + p,       Q = 2q
    beta = 4:  P = 2N + 2p,     Q = q
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .series import (PoleError, SeriesControl, default_control, hyp2f1_terminating,
                     log_gamma, pochhammer)

_ALLOWED_BETA = (1, 2, 4)


@dataclass(frozen=True)
class EnsembleParams:
    """Dyson index, matrix size, singularity exponent, Fisher-Hartwig phase."""
    beta: int
    size: int
    p: float
    q: float = 0.0

    def __post_init__(self):
        if self.beta not in _ALLOWED_BETA and not (self.beta > 0 and self.beta % 2 == 0):
            raise ValueError("beta must be 1, 2, 4, or a positive even integer")
        if self.size < 1:
            raise ValueError("size N must be >= 1")
        if self.p < 0:
            raise ValueError("singularity exponent p must be > 0 (p = 0 only with q = 0)")
        if self.p == 0 and self.q != 0:
            # p = 0 is supported only as the circular-ensemble limit q = 0
            raise ValueError("p = 0 requires q = 0 (circular ensemble limit)")

    @property
    def c_beta(self) -> complex:
        """c_beta = -beta (N + p - 1)/2 - 1 + iq."""
        return complex(-self.beta * (self.size + self.p - 1) / 2 - 1, self.q)

    def weight_params(self) -> tuple[float, float]:
        """(P, Q) of the auxiliary omega2 weight for this beta."""
        if self.beta == 1:
            return self.size + self.p, 2 * self.q
        if self.beta == 4:
            return 2 * self.size + 2 * self.p, self.q
        return self.size + self.p, self.q

    def limit_params(self) -> tuple[float, float]:
        """(p_eff, q_eff) entering the scaled-limit kernel formulas."""
        if self.beta == 1:
            return self.p, 2 * self.q
        if self.beta == 4:
            return 2 * self.p, self.q
        return self.p, self.q


@dataclass(frozen=True)
class CauchyWeightParams:
    """Weight exponent c of omega(x) = (1-ix)^c (1+ix)^cbar."""
    c: complex

    def __post_init__(self):
        if self.c.real >= -0.5:
            raise ValueError("need Re c < -1/2 for an integrable weight")

    @property
    def P(self) -> float:
        return -self.c.real

    @property
    def Q(self) -> float:
        return self.c.imag

    @classmethod
    def from_ensemble(cls, params: EnsembleParams) -> "CauchyWeightParams":
        P, Q = params.weight_params()
        return cls(complex(-P, Q))


# --- coordinate maps ---------------------------------------------------------

def cayley_to_circle(x: float) -> float:
    """theta in (0, 2 pi) with x = i (1 + e^{i theta}) / (1 - e^{i theta}) = -cot(theta/2)."""
    return math.pi + 2 * math.atan(x)


def circle_to_cayley(theta: float) -> float:
    if not 0 < theta < 2 * math.pi:
        raise ValueError("theta must lie in (0, 2 pi)")
    return -1.0 / math.tan(theta / 2)


def scaled_point_map(X: float, N: int) -> tuple[float, float]:
    """z(X) = -cot(X/N) and its derivative dz/dX = csc^2(X/N)/N for X/N in (0, pi)."""
    u = X / N
    if not 0 < u < math.pi:
        raise ValueError("X/N must lie in (0, pi)")
    s = math.sin(u)
    return -math.cos(u) / s, 1.0 / (N * s * s)


# --- weights -----------------------------------------------------------------

def weight_cauchy(x: float, w: CauchyWeightParams) -> float:
    """omega2(x) = (1 + x^2)^(-P) exp(2 Q arctan x)."""
    return float(np.exp(-w.P * np.log1p(x * x) + 2 * w.Q * np.arctan(x)))


def log_weight_cauchy(x: float, w: CauchyWeightParams) -> float:
    return float(-w.P * np.log1p(x * x) + 2 * w.Q * np.arctan(x))


def weight_circle_scaled(X: float, params: EnsembleParams) -> float:
    """omega2(z(X))^(1/2) = (sin(X/N))^(N+p) exp(q~ (X/N - pi/2)) for beta = 2,
    and the analogous form with the substituted (P, Q) otherwise; log-space."""
    N = params.size
    u = X / N
    if not 0 < u < math.pi:
        raise ValueError("X/N must lie in (0, pi)")
    P, Q = params.weight_params()
    return float(np.exp(P * np.log(np.sin(u)) + Q * (u - math.pi / 2)))


# --- polynomials -------------------------------------------------------------

def rr_poly(n: int, c: complex, x) -> complex:
    """Monic Routh-Romanovski polynomial I_n^{(c, cbar)}(x).

    Hypergeometric form with the gamma-ratio prefactor reduced to
    Pochhammer products (finite even when c + cbar hits integers):

        (-2i)^n (c+1)_n / (c+cbar+n+1)_n * 2F1(-n, n+1+c+cbar; c+1; (1-ix)/2)
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    cc = 2 * c.real
    denom = pochhammer(cc + n + 1, n)
    if denom == 0:
        raise PoleError("rr_poly prefactor pole: (c+cbar+n+1)_n vanished")
    pref = (-2j) ** n * pochhammer(c + 1, n) / denom
    x = np.asarray(x, dtype=complex)
    z = (1 - 1j * x) / 2
    # terminating series, vectorized over x
    total = np.ones_like(z)
    term = np.ones_like(z)
    a = -n
    b = n + 1 + cc
    for alpha in range(n):
        low = (c + 1 + alpha) * (alpha + 1)
        if low == 0:
            raise PoleError("rr_poly series pole in (c+1)_alpha")
        term = term * ((a + alpha) * (b + alpha) / low) * z
        total = total + term
    out = pref * total
    return complex(out) if out.ndim == 0 else out


def rr_poly_deriv(n: int, c: complex, x) -> complex:
    """d/dx of rr_poly, term-by-term from the hypergeometric series."""
    if n == 0:
        return 0.0 + 0.0j if np.isscalar(x) else np.zeros_like(np.asarray(x, complex))
    cc = 2 * c.real
    pref = (-2j) ** n * pochhammer(c + 1, n) / pochhammer(cc + n + 1, n)
    x = np.asarray(x, dtype=complex)
    z = (1 - 1j * x) / 2
    a, b = -n, n + 1 + cc
    # d/dx z^alpha = alpha z^(alpha-1) * (-i/2)
    coeff = 1.0 + 0.0j
    total = np.zeros_like(z)
    zpow = np.ones_like(z)
    for alpha in range(1, n + 1):
        coeff = coeff * (a + alpha - 1) * (b + alpha - 1) / ((c + alpha) * alpha)
        total = total + coeff * alpha * zpow
        zpow = zpow * z
    out = pref * total * (-0.5j)
    return complex(out) if out.ndim == 0 else out


def rr_scaled_raw(N: int, k: int, X: float, P: float, Q: float,
                  ctrl: SeriesControl | None = None) -> complex:
    """Prefactored scaled polynomial ((1-e^{2iX/N})/(2i))^{N-k} I_{N-k}(z(X))
    = 2F1(-N+k, p+k-iQ; 2p+2k; 1-e^{2iX/N}) with p = P - N.

    The confluent limit of this quantity (N -> infinity) is C0^{(p,Q,k)}(X).
    """
    p = P - N
    if p + k <= 0:
        raise ValueError("need p + k > 0")
    z = 1 - np.exp(2j * X / N)
    return hyp2f1_terminating(N - k, complex(p + k, -Q), complex(2 * p + 2 * k), z,
                              ctrl or default_control(N))


def rr_scaled(n_minus_k: int, k: int, X: float, params: EnsembleParams) -> complex:
    """Spec-shaped wrapper: prefactored Routh-Romanovski value for the
    degree-(N-k) polynomial of the params' weight system."""
    N = params.size
    if n_minus_k + k != N:
        raise ValueError("n_minus_k + k must equal the ensemble size")
    P, Q = params.weight_params()
    return rr_scaled_raw(N, k, X, P, Q)


def rr_norm(n: int, c: complex) -> float:
    """Squared norm h_n = int omega2 I_n^2 dx, via log-gamma.

    h_n = 2^(2n+2-2P) pi G(n+1) G(2P-2n) G(2P-2n-1)
          / (G(2P-n) G(P-n-iQ) G(P-n+iQ)),  c = -P + iQ.
    """
    P, Q = -c.real, c.imag
    lg = (log_gamma(n + 1) + log_gamma(2 * P - 2 * n) + log_gamma(2 * P - 2 * n - 1)
          - log_gamma(2 * P - n) - log_gamma(complex(P - n, -Q))
          - log_gamma(complex(P - n, Q)))
    val = (2 * n + 2 - 2 * P) * math.log(2) + math.log(math.pi) + lg
    out = complex(np.exp(val))
    return float(out.real)


def orthogonality_check(n: int, m: int, params: EnsembleParams, rule=None) -> float:
    """Relative residual | int omega2 I_n I_m dx - h_n delta_nm | / h_n.

    The line integral is mapped to theta in (0, 2 pi) via x = -cot(theta/2)
    and evaluated with a tanh-sinh rule (handles the algebraic endpoint
    behaviour of the weight).
    """
    from .quadrature import tanh_sinh_rule

    P, Q = params.weight_params()
    c = complex(-P, Q)
    rule = rule or tanh_sinh_rule(0.0, 2 * math.pi, level=11)
    theta = rule.nodes
    x = -1.0 / np.tan(theta / 2)
    logw = -P * np.log1p(x * x) + 2 * Q * np.arctan(x)
    jac = 0.5 / np.sin(theta / 2) ** 2
    vals = rr_poly(n, c, x) * rr_poly(m, c, x) * np.exp(logw) * jac
    integral = np.sum(vals * rule.weights)
    hn = rr_norm(n, c)
    target = hn if n == m else 0.0
    return float(abs(integral - target) / hn)
