"""Gauss sums and integrals: closed forms against both brute-force oracles."""

import cmath
import math
from fractions import Fraction

import numpy as np
import pytest

from padic_mub import (
    CapError,
    IntegralParams,
    OddPrimeError,
    RingSumParams,
    build_field,
    simplified_norm,
    field_sum_norm_closed,
    field_sum_numeric,
    from_rational,
    integral_norm_closed,
    integral_numeric,
    integral_report,
    ring_report,
    ring_sum_norm_closed,
    ring_sum_normsq_exact,
    ring_sum_numeric,
    threshold_t,
)
from padic_mub.gauss import (
    NEG_INF,
    ExactNorm,
    ring_sum_normsq_table,
    ring_sum_numeric_table,
)


def _hand_ring_sum(p, k, l, a, b):
    """Oracle: the definition, summed term by term with library-free phases."""
    w = cmath.exp(2j * cmath.pi / p**l)
    return sum(w ** ((a * x * x + b * x) % p**l) for x in range(p**k))


def test_ring_sum_p3_quadratic():
    s = ring_sum_numeric(3, 1, 1, 1, 0)
    # 1 + 2w with w = e^(2pi*i/3), i.e. i*sqrt(3)
    assert abs(s - complex(0, math.sqrt(3))) < 1e-12
    assert abs(s - _hand_ring_sum(3, 1, 1, 1, 0)) < 1e-12


def test_ring_sum_pure_character_vanishes():
    assert abs(ring_sum_numeric(3, 1, 1, 0, 1)) < 1e-12


def test_ring_sum_all_ones():
    assert abs(ring_sum_numeric(3, 1, 1, 0, 0) - 3) < 1e-12


def test_ring_sum_matches_hand_oracle_grid():
    for p, k, l in ((3, 1, 1), (3, 2, 1), (3, 2, 2), (5, 2, 1), (5, 2, 2)):
        for a in range(p**l):
            for b in range(p**l):
                got = ring_sum_numeric(p, k, l, a, b)
                want = _hand_ring_sum(p, k, l, a, b)
                assert abs(got - want) < 1e-9


def test_ring_normsq_exact_examples():
    assert ring_sum_normsq_exact(3, 1, 1, 1, 0) == 3
    assert ring_sum_normsq_exact(3, 1, 1, 0, 1) == 0
    assert ring_sum_normsq_exact(3, 2, 1, 0, 0) == 81


def test_ring_closed_examples():
    norm, case = ring_sum_norm_closed(3, 1, 1, 1, 0)
    assert (str(norm), case) == ("3^{1/2}", "case1")
    norm, case = ring_sum_norm_closed(3, 2, 2, 3, 1)
    assert norm.is_zero and case == "case2"
    norm, case = ring_sum_norm_closed(5, 2, 2, 5, 10)
    assert (str(norm), case) == ("5^{3/2}", "case1")
    assert norm.normsq == ring_sum_normsq_exact(5, 2, 2, 5, 10) == 125
    norm, case = ring_sum_norm_closed(3, 2, 1, 0, 0)
    assert (norm.normsq, case) == (81, "case3")


def test_ring_closed_rejects_p2():
    with pytest.raises(OddPrimeError):
        ring_sum_norm_closed(2, 1, 1, 1, 0)


def test_ring_numeric_accepts_p2():
    # brute force stays available for exploration at p = 2
    s = ring_sum_numeric(2, 1, 1, 1, 1)
    assert abs(s - _hand_ring_sum(2, 1, 1, 1, 1)) < 1e-12


def test_ring_term_cap():
    with pytest.raises(CapError):
        ring_sum_numeric(3, 13, 1, 1, 0, term_cap=10**5)


def test_scale_invariance_exact_at_phase_level():
    # the exponent histogram at (k, l) is exactly p^(k-l) copies of (l, l)
    for p, k, l in ((3, 3, 1), (3, 3, 2), (5, 2, 1)):
        mod = p**l
        for a, b in ((1, 0), (2, 3), (0, 1), (p, 1), (p, p)):
            big = np.bincount(
                [(a * x * x + b * x) % mod for x in range(p**k)], minlength=mod
            )
            small = np.bincount(
                [(a * x * x + b * x) % mod for x in range(mod)], minlength=mod
            )
            assert (big == p ** (k - l) * small).all()


def test_bulk_tables_match_scalar_paths():
    for p, k, l in ((3, 2, 1), (3, 2, 2), (5, 2, 2), (7, 2, 1)):
        table = ring_sum_numeric_table(p, k, l)
        sqtable = ring_sum_normsq_table(p, k, l)
        mod = p**l
        for a in range(0, mod, max(1, mod // 6)):
            for b in range(0, mod, max(1, mod // 6)):
                assert abs(table[a, b] - ring_sum_numeric(p, k, l, a, b)) < 1e-10
                assert sqtable[a, b] == ring_sum_normsq_exact(p, k, l, a, b)


def test_field_sum_cases_f9():
    f = build_field(3, 2)
    zero, one = f.zero, f.one
    assert abs(field_sum_numeric(zero, zero) - 9) < 1e-12
    for b in f.elements():
        if b.is_zero:
            continue
        assert abs(field_sum_numeric(zero, b)) < 1e-12
    for a in f.elements():
        if a.is_zero:
            continue
        for b in (zero, one):
            assert abs(abs(field_sum_numeric(a, b)) - 3) < 1e-12
    norm, case = field_sum_norm_closed(one, zero)
    assert norm.value == 3 and case == "case1"


def test_integral_closed_examples():
    norm, case = integral_norm_closed(3, 1, 1, 0)
    assert (norm.normsq, case) == (1, "case1")
    norm, case = integral_norm_closed(3, 1, 0, Fraction(1, 3))
    assert norm.is_zero and case == "case2"
    norm, case = integral_norm_closed(3, 2, 0, 0)
    assert (norm.value, case) == (9.0, "case3")


def test_integral_numeric_examples():
    assert abs(abs(integral_numeric(3, 1, 1, 0)) - 1) < 1e-9
    assert abs(integral_numeric(3, 1, 0, Fraction(1, 3))) < 1e-9
    assert abs(integral_numeric(3, 0, 0, 0) - 1) < 1e-12  # measure of Z_p
    assert abs(integral_numeric(3, 2, 0, 0) - 9) < 1e-12


def test_integral_accepts_padic_coefficients():
    a = from_rational(1, 1, 3, 8)
    b = from_rational(0, 1, 3, 8)
    assert abs(abs(integral_numeric(3, 1, a, b)) - 1) < 1e-9


def test_integral_rejects_p2():
    with pytest.raises(OddPrimeError):
        integral_norm_closed(2, 1, 1, 0)
    with pytest.raises(OddPrimeError):
        integral_numeric(2, 1, 1, 0)


def test_integral_closed_cases_partition():
    # the three conditions cover every valuation combination exactly once
    for va in list(range(-3, 4)) + [None]:
        for vb in list(range(-3, 4)) + [None]:
            a = 0 if va is None else Fraction(3) ** va
            b = 0 if vb is None else Fraction(3) ** vb
            for r in range(-2, 4):
                norm, case = integral_norm_closed(3, r, a, b)
                assert case in ("case1", "case2", "case3")


def test_threshold_examples():
    assert threshold_t(3, 0, 0) == NEG_INF
    assert threshold_t(3, 0, 9) == 2
    assert threshold_t(3, 1, 1) == 0
    # odd valuation of a: t floors v(a)/2 so that integer r > t iff r > v(a)/2
    assert threshold_t(3, 3, 0) == 0
    assert threshold_t(3, 27, 0) == 1
    assert threshold_t(3, Fraction(1, 27), 1) == -2


def test_threshold_certifies_simplified_table():
    grid = [Fraction(u) * Fraction(3) ** v for u in (1, 2) for v in range(-2, 3)]
    for a in grid + [Fraction(0)]:
        for b in grid + [Fraction(0)]:
            t = threshold_t(3, a, b)
            rs = range(-1, 4) if t == NEG_INF else range(int(t) + 1, int(t) + 4)
            for r in rs:
                closed, _ = integral_norm_closed(3, r, a, b)
                simplified, _, certified = simplified_norm(3, r, a, b)
                assert certified
                assert simplified.normsq == closed.normsq


def test_threshold_not_vacuous():
    # below the threshold the simplified table must fail somewhere
    mismatches = 0
    for a in (Fraction(9), Fraction(27)):
        t = threshold_t(3, a, Fraction(0))
        for r in range(-2, int(t) + 1):
            closed, _ = integral_norm_closed(3, r, a, 0)
            simplified, _, certified = simplified_norm(3, r, a, 0)
            assert not certified
            if simplified.normsq != closed.normsq:
                mismatches += 1
    assert mismatches > 0


def test_integral_oracle_equivalence_small_grid():
    coeffs = [Fraction(0)] + [Fraction(u) * Fraction(3) ** v for u in (1, 2) for v in (-2, 0, 2)]
    for a in coeffs:
        for b in coeffs:
            for r in range(-1, 3):
                closed, _ = integral_norm_closed(3, r, a, b)
                numeric = abs(integral_numeric(3, r, a, b))
                assert abs(numeric - closed.value) < 1e-9


def test_exact_norm_formatting():
    assert str(ExactNorm(3, 1)) == "3^{1/2}"
    assert str(ExactNorm(3, 4)) == "3^{2}"
    assert str(ExactNorm(3, -2)) == "3^{-1}"
    assert str(ExactNorm(3, -3)) == "3^{-3/2}"
    assert str(ExactNorm(3, 0)) == "1"
    assert str(ExactNorm(3, None)) == "0"
    assert ExactNorm(3, -2).normsq == Fraction(1, 9)


def test_ring_report_roundtrip():
    rep = ring_report(RingSumParams(3, 1, 1, 1, 0), oracle=True)
    assert rep.passed
    d = rep.to_json_dict()
    assert d["schema"] == 1
    assert d["closed_exact"] == "3^{1/2}"
    assert d["normsq_exact"] == 3
    assert d["counting_matches_closed"] is True


def test_ring_report_p2_marks_closed_unavailable():
    rep = ring_report(RingSumParams(2, 2, 1, 1, 1), oracle=True)
    assert rep.closed is None
    assert rep.to_json_dict()["closed_exact"] == "unavailable"
    assert rep.numeric is not None  # brute force still runs for exploration


def test_integral_report_flags_uncertified():
    rep = integral_report(IntegralParams(3, 0, Fraction(9), Fraction(0)), oracle=True)
    assert rep.extras["threshold"] == 1
    assert rep.extras["simplified_certified"] is False
    assert rep.passed  # the full closed form still matches the oracle


def test_params_validation():
    with pytest.raises(ValueError):
        RingSumParams(3, 1, 2, 0, 0)  # k < l
    with pytest.raises(ValueError):
        RingSumParams(4, 1, 1, 0, 0)
    with pytest.raises(ValueError):
        IntegralParams(6, 1, Fraction(0), Fraction(0))
