"""Tour of exact truncated p-adic arithmetic and the additive character.

Run:  python3 demos/01_padic_arithmetic.py
"""

from fractions import Fraction

from padic_mub import char_e, from_rational, norm_p, phase_mul, phase_to_complex, valuation, zero

p = 3

print("== digit expansions in Q_3 ==")
for num, den in ((45, 1), (-1, 1), (5, 9), (-1, 3), (1, 2)):
    x = from_rational(num, den, p, 8)
    print(f"{num}/{den:<3} = {x}   v_p = {valuation(x)}   |x|_p = {norm_p(x)}")

print()
print("== the ultrametric world ==")
a = from_rational(1, 1, p, 8)
b = from_rational(8, 1, p, 8)
print(f"|1|_3 = {norm_p(a)}, |8|_3 = {norm_p(b)}, |1+8|_3 = {norm_p(a + b)}  (strictly smaller!)")
print(f"1 + (-1) = {a + (-a)}  (exact cancellation to zero)")
print(f"zero has valuation {valuation(zero(p))}")

print()
print("== fractional parts and the character e(x) = exp(2*pi*i*{x}) ==")
for num, den in ((5, 9), (7, 1), (-1, 3), (-1, 9), (1, 2)):
    x = from_rational(num, den, p, 8)
    q = char_e(x)
    z = phase_to_complex(q)
    print(f"{{ {num}/{den} }} = {x.fractional_part()}   e(x) = {q}  ~ {z:.6f}")

print()
print("== e is a homomorphism: phases add exactly mod 1 ==")
x = from_rational(-1, 9, p, 8)
y = from_rational(5, 9, p, 8)
lhs = char_e(x + y)
rhs = phase_mul(char_e(x), char_e(y))
print(f"e(x+y) phase  = {lhs}")
print(f"e(x)e(y) phase = {rhs}   equal: {lhs == rhs}")

print()
print("== and e is trivial on the p-adic integers ==")
for n in (1, 2, 45, -7):
    print(f"e({n}) trivial: {char_e(from_rational(n, 1, p, 8)).is_trivial}")
