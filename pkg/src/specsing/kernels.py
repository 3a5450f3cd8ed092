"""Finite-N correlation kernels of the circular Jacobi ensembles.

The computational core works in the scaled variable X (z(X) = -cot(X/N));
all weight/polynomial products are assembled from log-safe factors so that
matrix sizes in the thousands remain stable.  Unscaled line kernels are
obtained from the scaled ones through the coordinate map.

beta = 1 (N even and odd) and beta = 4 kernels follow the skew-orthogonal
reduction to the beta = 2 Christoffel-Darboux kernel plus one-dimensional
integral terms; the integral terms are evaluated by adaptive quadrature on
the circle side.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .polynomials import EnsembleParams, rr_norm, rr_poly, rr_poly_deriv
from .quadrature import QuadratureRule, complex_quad, complex_quad_segments
from .series import default_control, hyp2f1_terminating, log_gamma

_DIAG_SWITCH = 1e-6


def _phi(N: int, k: int, P: float, Q: float, X: float) -> complex:
    """omega2(z(X))^{1/2} I_{N-k}(z(X)) in stable pieces:

    (-1)^(N-k) (sin(X/N))^(p+k) e^{-iX} e^{(ik+Q)X/N} e^{-Q pi/2} F_k(X),
    F_k(X) = 2F1(-N+k, p+k-iQ; 2p+2k; 1-e^{2iX/N}),   p = P - N.
    """
    p = P - N
    u = X / N
    F = hyp2f1_terminating(N - k, complex(p + k, -Q), complex(2 * p + 2 * k),
                           1 - np.exp(2j * u), default_control(N))
    amp = (p + k) * math.log(math.sin(u)) + Q * (u - math.pi / 2)
    phase = -X + k * u
    sign = -1.0 if (N - k) % 2 else 1.0
    return sign * math.exp(amp) * complex(math.cos(phase), math.sin(phase)) * F


def _phi_deriv(N: int, k: int, P: float, Q: float, X: float) -> complex:
    """d/dX of _phi, with the 2F1 differentiated in closed form."""
    p = P - N
    u = X / N
    z = 1 - np.exp(2j * u)
    a, b, c = -(N - k), complex(p + k, -Q), complex(2 * p + 2 * k)
    F = hyp2f1_terminating(N - k, b, c, z, default_control(N))
    if N - k >= 1:
        dF_dz = a * b / c * hyp2f1_terminating(N - k - 1, b + 1, c + 1, z,
                                               default_control(N))
    else:
        dF_dz = 0.0 + 0.0j
    dz_dX = -2j / N * np.exp(2j * u)
    logamp_prime = (p + k) / (N * math.tan(u)) + complex(0, -1 + k / N) + Q / N
    phi = _phi(N, k, P, Q, X)
    amp = (p + k) * math.log(math.sin(u)) + Q * (u - math.pi / 2)
    phase = -X + k * u
    sign = -1.0 if (N - k) % 2 else 1.0
    pref = sign * math.exp(amp) * complex(math.cos(phase), math.sin(phase))
    return logamp_prime * phi + pref * dF_dz * dz_dX


@lru_cache(maxsize=4096)
def _h_sub(n: int, P: float, Q: float) -> float:
    return rr_norm(n, complex(-P, Q))


def _cd_scaled(N: int, k: int, P: float, Q: float, X: float, Y: float) -> complex:
    """S_{N-k,2}(z(X), z(Y)) dz/dX with z scaled by N and weight (P, Q)."""
    uX, uY = X / N, Y / N
    if not (0 < uX < math.pi and 0 < uY < math.pi):
        raise ValueError("X/N and Y/N must lie in (0, pi)")
    h = _h_sub(N - k - 1, P, Q)
    if abs(X - Y) < _DIAG_SWITCH * (1 + abs(X)):
        # num(X,Y) ~ (Y-X) dnum while z(X)-z(Y) ~ -(Y-X) dz/dX: sign flips
        M = 0.5 * (X + Y)
        num = (_phi(N, k, P, Q, M) * _phi_deriv(N, k + 1, P, Q, M)
               - _phi_deriv(N, k, P, Q, M) * _phi(N, k + 1, P, Q, M))
        return -num / h
    num = (_phi(N, k, P, Q, X) * _phi(N, k + 1, P, Q, Y)
           - _phi(N, k, P, Q, Y) * _phi(N, k + 1, P, Q, X))
    dx = math.sin((X - Y) / N) / (math.sin(uX) * math.sin(uY))  # z(X) - z(Y)
    dz = 1.0 / (N * math.sin(uX) ** 2)
    return num / dx / h * dz


def _to_scaled(x: float, N: int) -> float:
    """Inverse of z(X) = -cot(X/N): X = N (pi/2 + arctan x)."""
    return N * (math.pi / 2 + math.atan(x))


def _dz_dX(X: float, N: int) -> float:
    return 1.0 / (N * math.sin(X / N) ** 2)


# --- beta = 2 ---------------------------------------------------------------

def kernel_s2_scaled(X: float, Y: float, params: EnsembleParams) -> float:
    """S_{N,2}(z(X), z(Y)) dz/dX; real for real arguments."""
    if params.beta != 2:
        raise ValueError("kernel_s2_scaled requires beta=2 params")
    P, Q = params.weight_params()
    val = _cd_scaled(params.size, 0, P, Q, X, Y)
    return float(val.real)


def kernel_s2(x: float, y: float, params: EnsembleParams) -> float:
    """Christoffel-Darboux kernel S_{N,2}(x, y) on the real line."""
    N = params.size
    X, Y = _to_scaled(x, N), _to_scaled(y, N)
    return kernel_s2_scaled(X, Y, params) / _dz_dX(X, N)


def correlation_det(points, params: EnsembleParams) -> float:
    """k-point correlation det[S_{N,2}(x_m, x_n)]."""
    pts = list(points)
    if len(set(pts)) != len(pts):
        raise ValueError("correlation points must be distinct")
    mat = np.array([[kernel_s2(a, b, params) for b in pts] for a in pts])
    return float(np.linalg.det(mat))


# --- skew constants ----------------------------------------------------------

@dataclass(frozen=True)
class SkewConstants:
    """Scalar constants entering the beta = 1, 4 kernels.

    gamma_j = (P - 1 - j)/h_j with the beta-specific weight parameters;
    eta1, eta2 are the beta = 1 limit constants; s_tilde_k = (1/2) int w1 I_k
    (filled only when needed, i.e. for odd N at beta = 1).
    """
    gamma: dict = field(default_factory=dict)
    eta1: float = 0.0
    eta2: float = 0.0
    s_tilde: dict = field(default_factory=dict)


def eta_constants(p: float, q: float) -> tuple[float, float]:
    """(eta1, eta2) for the beta = 1 scaled-limit kernel.

    eta1 = 2 sqrt(pi) G(p+2) G(p+5/2) / |G((p+3)/2 + iq)|^2
    eta2 = -(p+1) e^{-q pi} 2^(2p+2) |G(p+2-2iq)|^2 / (pi G(2p+4) G(2p+3))
    (the last gamma validated against the finite-N kernel).
    """
    g = log_gamma(complex((p + 3) / 2, q))
    eta1 = 2 * math.sqrt(math.pi) * math.exp(
        (log_gamma(p + 2) + log_gamma(p + 2.5) - 2 * g.real).real)
    g2 = log_gamma(complex(p + 2, -2 * q))
    eta2 = -(p + 1) * math.exp(
        -q * math.pi + (2 * p + 2) * math.log(2) + 2 * g2.real
        - math.log(math.pi) - log_gamma(2 * p + 4).real - log_gamma(2 * p + 3).real)
    return eta1, eta2


def _s_tilde(N: int, k_shift: int, P: float, Q: float) -> float:
    """(1/2) int_{-inf}^{inf} w1(t) I_{N-k_shift}(t) dt by segmented quadrature."""
    def f(s):
        return _phi(N, k_shift, P, Q, s) / (N * math.sin(s / N))
    pts = [j * math.pi for j in range(N + 1)]
    pts[0] = 1e-9
    val = complex_quad_segments(f, [0.0] + pts[1:], epsabs=1e-13, epsrel=1e-13)
    return 0.5 * float(val.real)


def skew_constants(params: EnsembleParams, parity: str = "even") -> SkewConstants:
    P, Q = params.weight_params()
    N, p = params.size, params.p
    if params.beta == 1:
        gam = {j: (P - 1 - j) / _h_sub(j, P, Q) for j in (N - 2, N - 3) if j >= 0}
        eta1, eta2 = eta_constants(p, params.q)
        st = {}
        if parity == "odd":
            st = {N - 1 - j: _s_tilde(N, 1 + j, P, Q) for j in range(3)}
        return SkewConstants(gamma=gam, eta1=eta1, eta2=eta2, s_tilde=st)
    if params.beta == 4:
        M = 2 * N
        gam = {M - 1: (P - 1 - (M - 1)) / _h_sub(M - 1, P, Q)}
        return SkewConstants(gamma=gam)
    raise ValueError("skew constants exist for beta in {1, 4}")


# --- integral terms ----------------------------------------------------------

def tail_integral(degree: int, upper_X: float, params: EnsembleParams,
                  weight_kind: str = "w1", rule: QuadratureRule | None = None) -> complex:
    """int_{-inf}^{z(upper_X)} I_degree(t) w1(t) dt via the circle substitution.

    w1 is the beta-specific square-root weight; degrees are taken in the
    polynomial system of the params (size N for beta=1, 2N for beta=4).
    """
    if weight_kind != "w1":
        raise ValueError("only the w1 weight kind is supported")
    N = params.size
    P, Q = params.weight_params()
    M = 2 * N if params.beta == 4 else N
    shift = M - degree
    if shift < 0:
        raise ValueError("degree exceeds the polynomial system size")
    if upper_X <= 0:
        return 0.0 + 0.0j
    scale = 2.0 if params.beta == 4 else 1.0

    def f(s):
        return _phi(M, shift, P, Q, scale * s) / (N * math.sin(s / N))

    mid = min(upper_X / 2, upper_X)
    return complex_quad_segments(f, [0.0, mid, upper_X])


def _w1_full_line_even(N: int, p: float, q: float) -> float:
    """Closed form of int_{-inf}^{inf} I_{N-2} w1 dt for beta = 1, N even."""
    num = (log_gamma((p + 2) / 2) + log_gamma((2 * p + 5) / 2) + log_gamma((p + 3) / 2)
           - 2 * log_gamma(complex((p + 3) / 2, q)).real
           + log_gamma((N - 1) / 2) - log_gamma((N + 2 * p + 3) / 2))
    return math.exp(num.real)


def w1_integral_closed(P: float, Q: float) -> float:
    """int_{-inf}^{inf} w1(t) dt = 2^(1-P1) pi G(P1...)/|G((P1+1)/2 + i Q1)|^2
    for the weight w1(t) = (1+t^2)^(-P1) exp(2 Q1 arctan t) with
    P1 = (P+1)/2, Q1 = Q/2 (Cauchy beta integral)."""
    P1, Q1 = (P + 1) / 2, Q / 2
    lg = (log_gamma(2 * P1 - 1) - 2 * log_gamma(complex(P1, Q1)).real)
    return math.exp((2 - 2 * P1) * math.log(2) + math.log(math.pi) + lg.real)


# --- beta = 1 ----------------------------------------------------------------

def kernel_s1_scaled(X: float, Y: float, params: EnsembleParams,
                     parity: str = "even") -> float:
    """S_{N,1}(z(X), z(Y)) dz/dX."""
    if params.beta != 1:
        raise ValueError("kernel_s1_scaled requires beta=1 params")
    N = params.size
    if parity not in ("even", "odd"):
        raise ValueError("parity must be 'even' or 'odd'")
    if (N % 2 == 0) != (parity == "even"):
        raise ValueError("N parity does not match the requested formula")
    if parity == "even":
        return _s1_even_scaled(N, params, X, Y)
    return _s1_odd_scaled(N, params, X, Y)


def _s1_even_scaled(N: int, params: EnsembleParams, X: float, Y: float) -> float:
    p, q = params.p, params.q
    P, Q = N + p, 2 * q
    uX, uY = X / N, Y / N
    t1 = math.sin(uY) / math.sin(uX) * _cd_scaled(N, 1, P, Q, X, Y)
    gam = (p + 1) / _h_sub(N - 2, P, Q)
    sgn_int = 2 * tail_integral(N - 2, X, params) - _w1_full_line_even(N, p, q)
    w1poly_y = math.sin(uY) * _phi(N, 1, P, Q, Y)
    dz = _dz_dX(X, N)
    t2 = 0.5 * gam * w1poly_y * sgn_int * dz
    return float((t1 + t2).real)


def _s1_odd_scaled(N: int, params: EnsembleParams, X: float, Y: float) -> float:
    """Odd-N kernel: the even formula at N-1 (same weight) plus the
    rank-one and paired sgn-integral corrections with s~ constants."""
    p = params.p
    P, Q = N + p, 2 * params.q
    uY = Y / N
    dz = _dz_dX(X, N)

    # part 1: even-form with N -> N-1 but the same weight parameters
    t1 = math.sin(uY) / math.sin(X / N) * _cd_scaled(N, 2, P, Q, X, Y)
    gam_n3 = (P - 1 - (N - 3)) / _h_sub(N - 3, P, Q)
    sgn_int_n3 = 2 * tail_integral(N - 3, X, params) - 2 * _s_tilde_cached(N, 3, P, Q)
    w1poly_y2 = math.sin(uY) * _phi(N, 2, P, Q, Y)
    part1 = t1 + 0.5 * gam_n3 * w1poly_y2 * sgn_int_n3 * dz

    # part 2: rank-one term
    st1 = _s_tilde_cached(N, 1, P, Q)
    w1poly_y1 = math.sin(uY) * _phi(N, 1, P, Q, Y)
    part2 = w1poly_y1 / (2 * st1) * dz

    # part 3: paired sgn-integral correction
    st3 = _s_tilde_cached(N, 3, P, Q)
    sgn1 = 2 * tail_integral(N - 1, X, params) - 2 * st1
    sgn2 = 2 * tail_integral(N - 2, X, params) - 2 * _s_tilde_cached(N, 2, P, Q)
    pair = sgn1 * w1poly_y2 - sgn2 * w1poly_y1
    part3 = -0.5 * gam_n3 * st3 / st1 * pair * dz
    return float((part1 + part2 + part3).real)


@lru_cache(maxsize=256)
def _s_tilde_cached(N: int, shift: int, P: float, Q: float) -> float:
    return _s_tilde(N, shift, P, Q)


def kernel_s1(x: float, y: float, params: EnsembleParams,
              parity: str = "even") -> float:
    """S_{N,1}(x, y) on the real line (N even or odd per parity)."""
    N = params.size
    X, Y = _to_scaled(x, N), _to_scaled(y, N)
    return kernel_s1_scaled(X, Y, params, parity) / _dz_dX(X, N)


# --- beta = 4 ----------------------------------------------------------------

def kernel_s4_scaled(X: float, Y: float, params: EnsembleParams) -> float:
    """S_{N,4}(z(X), z(Y)) dz/dX."""
    if params.beta != 4:
        raise ValueError("kernel_s4_scaled requires beta=4 params")
    N = params.size
    p = params.p
    P, Q = params.weight_params()
    M = 2 * N
    uX, uY = X / N, Y / N
    # first term: (1/2) sqrt((1+x^2)/(1+y^2)) S_{2N,2}(x,y) dz/dX, polynomials
    # living in the M = 2N system with scaled argument 2X
    h = _h_sub(M - 1, P, Q)
    if abs(X - Y) < _DIAG_SWITCH * (1 + abs(X)):
        Mm = 0.5 * (X + Y)
        num = 2 * (_phi(M, 0, P, Q, 2 * Mm) * _phi_deriv(M, 1, P, Q, 2 * Mm)
                   - _phi_deriv(M, 0, P, Q, 2 * Mm) * _phi(M, 1, P, Q, 2 * Mm))
        s2_dz = -num / h
    else:
        num = (_phi(M, 0, P, Q, 2 * X) * _phi(M, 1, P, Q, 2 * Y)
               - _phi(M, 0, P, Q, 2 * Y) * _phi(M, 1, P, Q, 2 * X))
        dx = math.sin((X - Y) / N) / (math.sin(uX) * math.sin(uY))
        s2_dz = num / dx / h * _dz_dX(X, N)
    t1 = 0.5 * math.sin(uY) / math.sin(uX) * s2_dz

    # second term: the tail integral over (z(X), inf) equals minus the lower
    # tail (the full-line integral of I_{2N-1} w1 vanishes)
    gam = 2 * p / h
    w1poly_y = math.sin(uY) * _phi(M, 0, P, Q, 2 * Y)
    tail_up = -tail_integral(M - 1, X, params)
    t2 = -0.5 * gam * w1poly_y * tail_up * _dz_dX(X, N)
    return float((t1 + t2).real)


def kernel_s4(x: float, y: float, params: EnsembleParams) -> float:
    """S_{N,4}(x, y) on the real line."""
    N = params.size
    X, Y = _to_scaled(x, N), _to_scaled(y, N)
    return kernel_s4_scaled(X, Y, params) / _dz_dX(X, N)


def kernel_scaled(beta: int, X: float, Y: float, params: EnsembleParams) -> float:
    """Dispatch: S_{N,beta}(z(X), z(Y)) dz/dX."""
    if beta == 2:
        return kernel_s2_scaled(X, Y, params)
    if beta == 1:
        parity = "even" if params.size % 2 == 0 else "odd"
        return kernel_s1_scaled(X, Y, params, parity)
    if beta == 4:
        return kernel_s4_scaled(X, Y, params)
    raise ValueError("beta must be 1, 2 or 4")
