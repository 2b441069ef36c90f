"""The additive character e(x) = exp(2*pi*i*{x}) of Q_p, with exact phases.

Phases stay exact fractions (elements of Q/Z with p-power denominator)
through all algebra; conversion to a complex double happens once, at the
outermost summation, so the only numeric error is final rounding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .padic import PadicNumber, PFraction, frac_part

_TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class UnitPhase:
    """The root of unity exp(2*pi*i*phase) for an exact phase in [0, 1)."""

    phase: PFraction

    @classmethod
    def trivial(cls, p: int) -> "UnitPhase":
        return cls(PFraction.zero(p))

    @classmethod
    def of(cls, q: Fraction | int, p: int) -> "UnitPhase":
        return cls(PFraction.from_fraction(q, p))

    @property
    def is_trivial(self) -> bool:
        return not self.phase

    def __mul__(self, other: "UnitPhase") -> "UnitPhase":
        return phase_mul(self, other)

    def conjugate(self) -> "UnitPhase":
        return UnitPhase.of(-self.phase.value, self.phase.prime)

    def to_complex(self) -> complex:
        return phase_to_complex(self)

    def __str__(self) -> str:
        return str(self.phase)


def char_e(x: PadicNumber) -> UnitPhase:
    """e(x) for a truncated p-adic value; exact whenever {x} is readable."""
    return UnitPhase(x.fractional_part())


def char_of_rational(q: Fraction | int, p: int) -> UnitPhase:
    """e(q) for an exactly-known rational argument."""
    return UnitPhase(frac_part(q, p))


def phase_mul(q1: UnitPhase, q2: UnitPhase) -> UnitPhase:
    """Exact product of two roots of unity: phases add modulo 1."""
    p = q1.phase.prime
    if q2.phase.prime != p:
        raise ValueError(f"mixed primes {p} and {q2.phase.prime}")
    return UnitPhase(PFraction.from_fraction(q1.phase.value + q2.phase.value, p))


def phase_to_complex(q: UnitPhase | PFraction) -> complex:
    """cos/sin evaluation of a unit phase; modulus 1 up to double rounding."""
    frac = q.phase if isinstance(q, UnitPhase) else q
    t = _TWO_PI * float(frac.value)
    return complex(math.cos(t), math.sin(t))
