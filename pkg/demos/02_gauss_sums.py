"""Quadratic Gauss sums three ways: closed form, exact counting, brute force.

Run:  python3 demos/02_gauss_sums.py
"""

import math
from fractions import Fraction

from padic_mub import (
    simplified_norm,
    integral_norm_closed,
    integral_numeric,
    ring_sum_norm_closed,
    ring_sum_normsq_exact,
    ring_sum_numeric,
    threshold_t,
)

print("== sums over Z/p^k with w = exp(2*pi*i/p^l) ==")
cases = [(3, 1, 1, 1, 0), (3, 1, 1, 0, 1), (3, 2, 2, 3, 1), (5, 2, 2, 5, 10), (3, 2, 1, 0, 0)]
print(f"{'p k l a b':<12} {'closed':>8} {'case':>6} {'|sum|^2 exact':>14} {'brute force':>12}")
for p, k, l, a, b in cases:
    closed, case = ring_sum_norm_closed(p, k, l, a, b)
    exact_sq = ring_sum_normsq_exact(p, k, l, a, b)
    numeric = abs(ring_sum_numeric(p, k, l, a, b))
    print(f"{p} {k} {l} {a} {b:<4} {str(closed):>8} {case:>6} {exact_sq:>14} {numeric:>12.8f}")
    assert closed.normsq == exact_sq
    assert abs(numeric - closed.value) < 1e-9

print()
print("== Gauss integrals over the ball p^(-r)Z_p ==")
icases = [
    (3, 1, Fraction(1), Fraction(0)),
    (3, 1, Fraction(0), Fraction(1, 3)),
    (3, 2, Fraction(0), Fraction(0)),
    (3, 0, Fraction(9), Fraction(0)),
    (3, 2, Fraction(1, 9), Fraction(1)),
]
print(f"{'p r a b':<16} {'closed':>8} {'case':>6} {'brute force':>12}")
for p, r, a, b in icases:
    closed, case = integral_norm_closed(p, r, a, b)
    numeric = abs(integral_numeric(p, r, a, b))
    print(f"{p} {r} {str(a):>5} {str(b):<5} {str(closed):>8} {case:>6} {numeric:>12.8f}")
    assert abs(numeric - closed.value) < 1e-9

print()
print("== the truncation threshold: above it, only v(a) matters ==")
a, b = Fraction(9), Fraction(0)
t = threshold_t(3, a, b)
print(f"a = {a}, b = {b}: threshold t = {t}")
for r in range(-1, 4):
    closed, _ = integral_norm_closed(3, r, a, b)
    simplified, _, certified = simplified_norm(3, r, a, b)
    marker = "certified" if certified else "NOT certified (r <= t)"
    agree = "agrees" if simplified.normsq == closed.normsq else "DIFFERS"
    print(f"  r = {r:>2}: closed {str(closed):>6}  simplified {str(simplified):>6}  {agree:>7}  [{marker}]")
print("below the threshold the simplified three-case table is only informational.")
