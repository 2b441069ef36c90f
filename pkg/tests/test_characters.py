"""Exact additive-character evaluation and phase algebra."""

import cmath
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from padic_mub import UnitPhase, char_e, char_of_rational, from_rational, phase_mul, phase_to_complex
from padic_mub.padic import frac_part


def test_trivial_on_padic_integers():
    for num in (1, 2, 7, -5, 45, -1):
        z = from_rational(num, 1, 3, 6)
        assert char_e(z).is_trivial
    # p-adic units with non-p denominators are integers too
    assert char_e(from_rational(1, 2, 3, 6)).is_trivial


def test_char_one_third():
    q = char_e(from_rational(1, 3, 3, 6))
    assert q.phase.value == Fraction(1, 3)


def test_char_minus_one_ninth():
    q = char_e(from_rational(-1, 9, 3, 6))
    assert q.phase.value == Fraction(8, 9)
    # oracle: e(-1/9) * e(1/9) must be the trivial character
    other = char_e(from_rational(1, 9, 3, 6))
    assert phase_mul(q, other).is_trivial


def test_phase_mul_examples():
    p13 = UnitPhase.of(Fraction(1, 3), 3)
    p23 = UnitPhase.of(Fraction(2, 3), 3)
    p19 = UnitPhase.of(Fraction(1, 9), 3)
    p89 = UnitPhase.of(Fraction(8, 9), 3)
    assert phase_mul(p13, p23).is_trivial
    assert phase_mul(p19, p13).phase.value == Fraction(4, 9)
    assert phase_mul(p89, p89).phase.value == Fraction(7, 9)


def test_phase_mul_rejects_mixed_primes():
    with pytest.raises(ValueError):
        phase_mul(UnitPhase.of(Fraction(1, 3), 3), UnitPhase.of(Fraction(1, 5), 5))


def test_phase_to_complex_values():
    assert phase_to_complex(UnitPhase.trivial(3)) == 1 + 0j
    assert abs(phase_to_complex(UnitPhase.of(Fraction(1, 2), 2)) - (-1)) < 1e-15
    w = phase_to_complex(UnitPhase.of(Fraction(1, 3), 3))
    assert abs(w - complex(-0.5, 0.8660254037844387)) < 1e-15


def test_phase_to_complex_unit_modulus():
    for m in range(27):
        q = UnitPhase.of(Fraction(m, 27), 3)
        assert abs(abs(phase_to_complex(q)) - 1.0) < 1e-15
        assert abs(phase_to_complex(q) - cmath.exp(2j * cmath.pi * m / 27)) < 1e-14


def test_homomorphism_exact_exhaustive():
    values = [Fraction(n, d) for n in range(-8, 9) for d in (1, 3, 9, 27)]
    for qx in values[::3]:
        for qy in values[::4]:
            x = from_rational(qx.numerator, qx.denominator, 3, 12)
            y = from_rational(qy.numerator, qy.denominator, 3, 12)
            assert char_e(x + y) == phase_mul(char_e(x), char_e(y))


@settings(max_examples=80, deadline=None)
@given(
    nx=st.integers(-200, 200),
    ny=st.integers(-200, 200),
    dx=st.sampled_from([1, 3, 9, 27, 81]),
    dy=st.sampled_from([1, 3, 9, 27, 81]),
)
def test_homomorphism_exact_random(nx, ny, dx, dy):
    x = from_rational(nx, dx, 3, 14)
    y = from_rational(ny, dy, 3, 14)
    assert char_e(x + y) == phase_mul(char_e(x), char_e(y))


def test_only_fractional_part_of_alpha_matters_on_integers():
    # x in Z_p: e(alpha*x) = e((alpha+1)*x)
    for alpha_num, alpha_den in ((1, 3), (2, 9), (5, 27), (1, 1)):
        alpha = Fraction(alpha_num, alpha_den)
        for x in range(-6, 7):
            lhs = char_of_rational(alpha * x, 3)
            rhs = char_of_rational((alpha + 1) * x, 3)
            assert lhs == rhs


def test_conjugate_inverts():
    q = UnitPhase.of(Fraction(5, 27), 3)
    assert phase_mul(q, q.conjugate()).is_trivial


def test_char_of_rational_agrees_with_digit_route():
    for num in range(-12, 13):
        for den in (1, 3, 9, 2):
            via_rational = char_of_rational(Fraction(num, den), 3)
            via_digits = char_e(from_rational(num, den, 3, 12))
            assert via_rational == via_digits


def test_phase_prints_as_exact_fraction():
    assert str(UnitPhase.of(Fraction(8, 9), 3)) == "8/3^2"
    assert str(UnitPhase.of(Fraction(1, 3), 3)) == "1/3"
    assert str(UnitPhase.trivial(3)) == "0"
    assert str(frac_part(Fraction(-1, 9), 3)) == "8/3^2"
