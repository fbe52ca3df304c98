"""Maximal dominant weights of the level-k modules, with closed-form counts.

The weight list comes from sweeping the five plateau families over all
admissible boundary pairs and converting each tuple to its alpha-expansion.
For s = 0 the count is conjectured to equal a cyclic-binomial formula; the
level-3 specialization u_n also has a quadratic closed form and a three-term
recursion, both provided here so the routes can be cross-checked.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .affine_core import AlphaExpansion, weight_from_x
from .tuple_sets import enumerate_M

__all__ = [
    "MaxWeightReport",
    "maximal_dominant_weights",
    "count_formula",
    "u_closed_form",
    "u_recursive",
    "level2_explicit_weights",
    "verify_count_conjecture",
]


@dataclass(frozen=True)
class MaxWeightReport:
    n: int
    k: int
    s: int
    weights: tuple[AlphaExpansion, ...]
    count: int
    formula_count: int | None  # populated only when s == 0
    agree: bool | None


def _boundary_pairs(k: int, s: int):
    # x1 + x_{n-1} <= k - 1 + [s == 0], both entries >= [s == 0]; the zero
    # pair is always admissible (it carries the highest weight itself)
    lo = 1 if s == 0 else 0
    cap = k - 1 + (1 if s == 0 else 0)
    pairs = {(a, b) for a in range(lo, cap + 1) for b in range(lo, cap - a + 1)}
    pairs.add((0, 0))
    return sorted(pairs)


def maximal_dominant_weights(n: int, k: int, s: int = 0) -> MaxWeightReport:
    """All maximal dominant weights for parameters (n, k, s).

    k = 1 gives just the highest weight.  For s = 0 the report also carries
    the conjectured closed-form count and whether the enumeration matches it.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    if not 0 <= s <= n - 1:
        raise ValueError(f"s must lie in 0..{n - 1}, got {s}")
    weights = {weight_from_x(n, k, s, (0,) * (n - 1))}
    if k >= 2:
        for a, b in _boundary_pairs(k, s):
            for family in (1, 2, 3, 4, 5):
                for x in enumerate_M(family, s, n, a, b):
                    weights.add(weight_from_x(n, k, s, x))
    ws = tuple(sorted(weights))
    formula = count_formula(n, k) if s == 0 else None
    agree = (len(ws) == formula) if s == 0 else None
    return MaxWeightReport(n, k, s, ws, len(ws), formula, agree)


def _totient(d: int) -> int:
    result, m, p = d, d, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def count_formula(n: int, k: int) -> int:
    """Conjectured count for s = 0: a cyclic average of binomials,
    (1/(n+k)) * sum over d | gcd(n,k) of phi(d) * C((n+k)/d, k/d)."""
    if n < 2 or k < 1:
        raise ValueError(f"need n >= 2 and k >= 1, got n={n}, k={k}")
    g = math.gcd(n, k)
    total = sum(
        _totient(d) * math.comb((n + k) // d, k // d)
        for d in range(1, g + 1)
        if g % d == 0
    )
    q, r = divmod(total, n + k)
    assert r == 0, f"cyclic average is not an integer at n={n}, k={k}"
    return q


def u_closed_form(n: int) -> int:
    """Level-3, s = 0 count as a quadratic in n (with a shift when 3 | n)."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    num = (n + 1) * (n + 2) + (4 if n % 3 == 0 else 0)
    q, r = divmod(num, 6)
    assert r == 0, n
    return q


def u_recursive(n: int) -> int:
    """Level-3, s = 0 count via the three-term recursion
    u_m = 2*u_{m-1} - u_{m-2} + e_m with e_m = -1 iff m = 1 (mod 3)."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    u_prev, u_cur = 2, 4  # u_2, u_3
    if n == 2:
        return u_prev
    for m in range(4, n + 1):
        bump = -1 if m % 3 == 1 else 1
        u_prev, u_cur = u_cur, 2 * u_cur - u_prev + bump
    return u_cur


def level2_explicit_weights(n: int, s: int) -> tuple[AlphaExpansion, ...]:
    """The level-2 maximal dominant weights in closed form: the highest
    weight plus one staircase family when s = 0, or two when s > 0."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    if not 0 <= s <= n - 1:
        raise ValueError(f"s must lie in 0..{n - 1}, got {s}")
    xs = {(0,) * (n - 1)}
    if s == 0:
        for ell in range(1, n // 2 + 1):
            xs.add(tuple(min(i, ell, n - i) for i in range(1, n)))
    else:
        for ell in range(1, s // 2 + 1):
            xs.add(tuple(min(i, ell, max(s - i, 0)) for i in range(1, n)))
        for ell in range(1, (n - s) // 2 + 1):
            xs.add(tuple(0 if i <= s else min(i - s, ell, n - i) for i in range(1, n)))
    return tuple(sorted(weight_from_x(n, 2, s, x) for x in xs))


def verify_count_conjecture(n_max: int, k_max: int):
    """Rows (n, k, enumerated, formula, agree) over the requested grid."""
    rows = []
    for n in range(2, n_max + 1):
        for k in range(1, k_max + 1):
            rep = maximal_dominant_weights(n, k, 0)
            rows.append((n, k, rep.count, rep.formula_count, rep.agree))
    return rows
