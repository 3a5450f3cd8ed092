"""Generalized hypergeometric functions based on Jack polynomials at equal
arguments: partition enumeration, generalized Pochhammer symbols, the
principal specialization C_k^(alpha)(1^m), truncated pFq^(alpha) series,
and the duality/ratio transformation.

The C-normalization is pinned by the sum rule
    sum_{|k| = n} C_k^(alpha)(x 1_m) = (m x)^n,
which the principal-specialization product below satisfies identically.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .series import NonConvergenceError, pochhammer


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing nonnegative integer tuple (trailing zeros dropped)."""
    parts: tuple

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts if x > 0)
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError("parts must be weakly decreasing")
        if any(x < 0 for x in self.parts):
            raise ValueError("parts must be nonnegative")
        object.__setattr__(self, "parts", parts)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def conjugate(self) -> tuple:
        if not self.parts:
            return ()
        return tuple(sum(1 for p in self.parts if p > j) for j in range(self.parts[0]))


@lru_cache(maxsize=64)
def partitions_up_to(m: int, max_weight: int) -> tuple:
    """All partitions with at most m parts and weight <= max_weight."""
    if m < 1:
        raise ValueError("need m >= 1")
    if max_weight < 0:
        raise ValueError("need max_weight >= 0")
    out = [Partition(())]

    def rec(prefix, remaining, cap):
        for part in range(min(remaining, cap), 0, -1):
            cur = prefix + (part,)
            out.append(Partition(cur))
            if len(cur) < m:
                rec(cur, remaining - part, part)

    rec((), max_weight, max_weight)
    return tuple(out)


def gen_pochhammer(a: complex, k: Partition, alpha: float) -> complex:
    """[a]_k^(alpha) = prod_j (a - (j-1)/alpha)_{k_j} (rising factorials)."""
    out = 1.0 + 0.0j
    for j, kj in enumerate(k.parts, start=1):
        out *= pochhammer(a - (j - 1) / alpha, kj)
    return out


@lru_cache(maxsize=200000)
def _jack_one_cached(parts: tuple, alpha: float, m: int) -> float:
    kc = Partition(parts).conjugate()
    w = sum(parts)
    num = 1.0
    den = 1.0
    for i, ki in enumerate(parts, start=1):
        for j in range(1, ki + 1):
            arm = ki - j
            leg = kc[j - 1] - i
            num *= m + alpha * (j - 1) - (i - 1)
            den *= (alpha * arm + leg + 1) * (alpha * (arm + 1) + leg)
    return alpha ** w * math.factorial(w) * num / den


def jack_principal(k: Partition, alpha: float, m: int, x: complex) -> complex:
    """C_k^(alpha)(x, ..., x) with m arguments, via homogeneity."""
    if len(k) > m:
        raise ValueError("partition has more parts than arguments")
    return _jack_one_cached(k.parts, float(alpha), int(m)) * x ** k.weight


def hyper_pfq_alpha(a_list, b_list, alpha: float, m: int, x: complex,
                    max_weight: int = 40, rel_tol: float = 1e-14) -> complex:
    """pFq^(alpha)(a_1..a_p; b_1..b_q; x 1_m), summed shell-by-shell in the
    partition weight with a three-shell geometric tail test.

    Terminating series (a nonpositive-integer numerator parameter) are summed
    exactly when max_weight covers the termination range.
    """
    shells = np.zeros(max_weight + 1, dtype=complex)
    for k in partitions_up_to(m, max_weight):
        t = 1.0 + 0.0j
        for a in a_list:
            t *= gen_pochhammer(a, k, alpha)
        if t == 0:
            continue
        for b in b_list:
            d = gen_pochhammer(b, k, alpha)
            if d == 0:
                raise ZeroDivisionError("pole in denominator parameter")
            t /= d
        w = k.weight
        shells[w] += t * _jack_one_cached(k.parts, float(alpha), int(m)) \
            * x ** w / math.factorial(w)
    total = np.sum(shells)
    scale = max(abs(total), 1e-300)
    tail = np.abs(shells[-3:])
    if np.all(tail < rel_tol * scale):
        return complex(total)
    raise NonConvergenceError(
        f"pFq^(alpha) truncation at weight {max_weight} not converged "
        f"(last shells {tail / scale})")


def duality_ratio_2f1(n: int, b: complex, c: complex, alpha: float, m: int,
                      t: complex, max_weight: int = 60) -> complex:
    """2F1^(1/alpha)(-n, b; c; (t)^m) computed through the transformed ratio

        2F1^(1/alpha)(-n, b; c'; ((1-t))^m) / 2F1^(1/alpha)(-n, b; c'; (1)^m),
        c' = -n + b + 1 + alpha (m - 1) - c.
    """
    cprime = -n + b + 1 + alpha * (m - 1) - c
    inv = 1.0 / alpha
    num = hyper_pfq_alpha([complex(-n), b], [cprime], inv, m, 1 - t,
                          max_weight=max(max_weight, m * (n + 1)))
    den = hyper_pfq_alpha([complex(-n), b], [cprime], inv, m, 1.0 + 0.0j,
                          max_weight=max(max_weight, m * (n + 1)))
    return num / den
