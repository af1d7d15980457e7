"""Tuple sets and coefficient sums for composite / inverse derivatives.

S(n): nonnegative integer tuples (m_1, ..., m_n) with sum_j j*m_j = n.
T(n): tuples (s_1, ..., s_n) with sum_j s_j = n-1 and sum_j j*s_j = 2(n-1).

S(n) indexes the chain-rule expansion of (f o g)^(n); T(n) indexes the
inverse-function derivative formula.  Enumeration order is deterministic
(lexicographic in the tuple, descending index filled first).
"""

from __future__ import annotations

import math
from functools import lru_cache


@lru_cache(maxsize=None)
def s_tuples(n: int) -> tuple[tuple[int, ...], ...]:
    """All (m_1, ..., m_n) in N^n with sum j*m_j = n, sorted."""
    if n < 1:
        raise ValueError("n must be >= 1")
    out: list[tuple[int, ...]] = []

    def rec(j: int, remaining: int, acc: list[int]):
        if j == n + 1:
            if remaining == 0:
                out.append(tuple(acc))
            return
        for m in range(remaining // j + 1):
            rec(j + 1, remaining - j * m, acc + [m])

    rec(1, n, [])
    out.sort()
    return tuple(out)


@lru_cache(maxsize=None)
def t_tuples(n: int) -> tuple[tuple[int, ...], ...]:
    """All (s_1, ..., s_n) with sum s_j = n-1 and sum j*s_j = 2(n-1), sorted.

    For n = 1 this is the single zero tuple; the associated empty product is 1.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    out: list[tuple[int, ...]] = []

    def rec(j: int, rem_count: int, rem_weight: int, acc: list[int]):
        if j == n + 1:
            if rem_count == 0 and rem_weight == 0:
                out.append(tuple(acc))
            return
        for s in range(min(rem_count, rem_weight // j) + 1):
            rec(j + 1, rem_count - s, rem_weight - j * s, acc + [s])

    rec(1, n - 1, 2 * (n - 1), [])
    out.sort()
    return tuple(out)


def faa_di_bruno_sum(n: int, outer, inner) -> float:
    """(f o g)^(n) from outer[k] = f^(k)(g(x)) and inner[j] = g^(j)(x), j >= 1.

    ``outer`` must cover k = 0..n, ``inner`` must cover j = 1..n (index j-1).
    """
    total = 0.0
    for m in s_tuples(n):
        order = sum(m)
        coef = math.factorial(n)
        term = 1.0
        for j, mj in enumerate(m, start=1):
            coef //= math.factorial(mj)
            if mj:
                term *= (inner[j - 1] / math.factorial(j)) ** mj
        total += coef * outer[order] * term
    return total


def inverse_derivative_sum(n: int, f_derivs) -> float:
    """(f^{-1})^(n) evaluated at f(t), from f_derivs[j-1] = f^(j)(t), j = 1..n."""
    fp = f_derivs[0]
    if fp == 0:
        raise ZeroDivisionError("f'(t) must be nonzero")
    total = 0.0
    for s in t_tuples(n):
        coef = (-1.0) ** s[0] * math.factorial(2 * n - s[0] - 2)
        for sj in s[1:]:
            coef /= math.factorial(sj)
        term = 1.0
        for j, sj in enumerate(s, start=1):
            if sj:
                term *= (f_derivs[j - 1] / math.factorial(j)) ** sj
        total += coef * term
    return (-1.0) ** (n - 1) / fp ** (2 * n - 1) * total


@lru_cache(maxsize=None)
def exp_inv_weights(k: int) -> tuple[tuple[int, float], ...]:
    """Weights for d^k/dt^k exp(-a/t).

    Returns pairs (p, w_{k,p}) such that

        d^k/dt^k exp(-a/t) = exp(-a/t) * sum_p w_{k,p} (-1)^{k+p} a^p t^{-(k+p)}.

    Derived from the chain-rule expansion with g(t) = -a/t, whose normalized
    derivatives are g^(j)/j! = a (-1)^{j+1} t^{-j-1}.
    """
    if k == 0:
        return ((0, 1.0),)
    acc: dict[int, float] = {}
    for m in s_tuples(k):
        p = sum(m)
        coef = math.factorial(k)
        for mj in m:
            coef //= math.factorial(mj)
        acc[p] = acc.get(p, 0.0) + float(coef)
    return tuple(sorted(acc.items()))
