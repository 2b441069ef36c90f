"""Fourier analysis on the grid and the shift/modulation/chirp unitaries.

Run:  python3 demos/05_fourier_and_operators.py
"""

from fractions import Fraction

import numpy as np

from padic_mub import (
    StateVector,
    ball_fourier_closed,
    ball_state,
    eigen_check,
    fourier,
    frac_part,
    inverse_fourier,
    make_grid,
    op_P,
    op_X,
    op_Z,
    phase_to_complex,
    vector_v,
)

print("== the transform of a ball indicator is a modulated ball indicator ==")
grid = make_grid(3, 1, 2)
psi = ball_state(Fraction(1, 3), 1, grid)
print(f"||psi||^2 = {psi.norm_sq():.6f}")
phat = fourier(psi)
closed = ball_fourier_closed(Fraction(1, 3), 1, phat.grid)
print(f"output grid: (r={phat.grid.r}, k={phat.grid.k}): the roles of r and k swap")
print(f"max pointwise deviation from e(y*z) p^(-r/2): {np.abs(phat.amplitudes - closed).max():.3e}")

print()
print("== the transform is an isometry; applying it twice reflects ==")
rng = np.random.default_rng(1)
state = StateVector(grid, rng.normal(size=grid.n) + 1j * rng.normal(size=grid.n))
print(f"Plancherel deviation: {abs(fourier(state).norm_sq() - state.norm_sq()):.3e}")
twice = fourier(fourier(state))
reflected = state.amplitudes[(-np.arange(grid.n)) % grid.n]
print(f"double-transform vs reflection: {np.abs(twice.amplitudes - reflected).max():.3e}")
back = inverse_fourier(fourier(state))
print(f"inverse round trip: {np.abs(back.amplitudes - state.amplitudes).max():.3e}")

print()
print("== shift X_c, modulation Z_d, chirp P_d ==")
c, d = Fraction(1, 3), Fraction(1, 9)
lhs = op_Z(op_X(state, c), d)
rhs = op_X(op_Z(state, d), c)
phase = frac_part(c * d, 3)
dev = np.abs(lhs.amplitudes - phase_to_complex(phase) * rhs.amplitudes).max()
print(f"Z_d X_c = e(cd) X_c Z_d with e(cd) phase {phase}: deviation {dev:.3e}")

v = vector_v(1, 1, grid)
moved = op_P(v, 1)
target = vector_v(2, 1, grid)
print(f"P_1 maps the (a=1,b=1) state onto (a=2,b=1): "
      f"deviation {np.abs(moved.amplitudes - target.amplitudes).max():.3e}")

print()
print("== each quadratic state is an eigenfunction of its composite ==")
for a, b, cc in ((0, 1, Fraction(1, 3)), (1, 0, Fraction(1, 3)), (2, 1, 1)):
    rep = eigen_check(a, b, cc, p=3)
    print(f"a={a} b={b} c={cc}: expected phase {rep.expected_phase}, "
          f"residual {rep.residual:.3e}, grid {rep.grid}")
