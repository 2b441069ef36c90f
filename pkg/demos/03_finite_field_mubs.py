"""The p^r + 1 mutually unbiased bases of C^(p^r) from quadratic phases.

Run:  python3 demos/03_finite_field_mubs.py
"""

import numpy as np

from padic_mub import build_field, build_mub_set, ff_char, trace, verify_mub

print("== the field F_9 = F_3[x]/(x^2+1) ==")
f9 = build_field(3, 2)
print(f"modulus (low to high): {f9.modulus}")
print(f"traces: {[trace(x) for x in f9.elements()]}")
print(f"character of x: {ff_char(f9.element(3))}")

print()
print("== ten mutually unbiased bases in C^9 ==")
bases = build_mub_set(f9)
print(f"built {len(bases)} bases, labels: {[b.label for b in bases[:3]]} ... {bases[-1].label}")
report = verify_mub(bases)
print(f"target cross modulus 1/sqrt(9) = {report.target:.6f}")
print(f"max deviation over all {len(report.pairs)} basis pairs: {report.max_deviation:.3e}")
print(f"orthonormality deviation: {report.ortho_deviation:.3e}")
print(f"verdict: {'PASS' if report.passed else 'FAIL'}")

print()
print("== a cross-Gram block: every modulus is exactly 1/3 ==")
cross = np.abs(bases[1].matrix.conj().T @ bases[4].matrix)
print(np.round(cross[:4, :4], 6))

print()
print("== the same verdict with a different irreducible modulus ==")
f9b = build_field(3, 2, modulus=(2, 1, 1))
print(f"modulus {f9b.modulus}: passed = {verify_mub(build_mub_set(f9b)).passed}")
print("(the matrices differ; unbiasedness does not care which modulus you pick)")

print()
print("== small prime dimensions ==")
for p in (3, 5, 7):
    bs = build_mub_set(build_field(p, 1))
    print(f"p = {p}: {len(bs)} bases in C^{p}, passed = {verify_mub(bs).passed}")
