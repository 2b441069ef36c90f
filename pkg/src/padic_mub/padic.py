"""Exact truncated-precision arithmetic for the field Q_p of p-adic numbers.

A nonzero value is a unit digit expansion scaled by a power of the prime,

    x = p**v * (d0 + d1*p + ... + d_{N-1}*p**(N-1)),   d0 != 0,

so x is known exactly modulo p**(v + N).  The digit count N is chosen by the
caller per computation; arithmetic propagates min(N_x, N_y) significant
digits (additive cancellation shrinks the count further) and operations that
would need digits outside the retained window raise PrecisionError instead
of silently padding zeros.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import PrecisionError

INF = math.inf


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def int_valuation(n: int, p: int) -> int | float:
    """Exponent of the largest power of p dividing n; +inf for n = 0."""
    if n == 0:
        return INF
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def frac_valuation(q: Fraction | int, p: int) -> int | float:
    q = Fraction(q)
    if q == 0:
        return INF
    return int_valuation(q.numerator, p) - int_valuation(q.denominator, p)


def rational_mod(q: Fraction | int, modulus: int) -> int:
    """Residue of a rational whose reduced denominator is coprime to modulus."""
    if modulus == 1:
        return 0
    q = Fraction(q)
    if math.gcd(q.denominator, modulus) != 1:
        raise ValueError(f"{q} has no residue modulo {modulus}")
    return q.numerator * pow(q.denominator, -1, modulus) % modulus


@dataclass(frozen=True)
class PFraction:
    """A rational m / p**n in [0, 1) with p-power denominator, fully reduced.

    This is the value set of the fractional-part map on Q_p: the sum of the
    negative-power digits of a p-adic number.
    """

    prime: int
    num: int
    exp: int

    def __post_init__(self):
        p, m, n = self.prime, self.num, self.exp
        if p < 2 or n < 0 or not 0 <= m < p**n or (m == 0 and n != 0):
            raise ValueError(f"invalid p-fraction {m}/{p}^{n}")
        if m != 0 and m % p == 0:
            raise ValueError(f"p-fraction {m}/{p}^{n} is not reduced")

    @classmethod
    def zero(cls, p: int) -> "PFraction":
        return cls(p, 0, 0)

    @classmethod
    def from_fraction(cls, q: Fraction | int, p: int) -> "PFraction":
        """Reduce a rational with p-power denominator into [0, 1)."""
        q = Fraction(q) % 1
        den, n = q.denominator, 0
        while den % p == 0:
            den //= p
            n += 1
        if den != 1:
            raise ValueError(f"denominator of {q} is not a power of {p}")
        return cls(p, q.numerator, n) if q else cls(p, 0, 0)

    @property
    def value(self) -> Fraction:
        return Fraction(self.num, self.prime**self.exp)

    def __bool__(self) -> bool:
        return self.num != 0

    def __str__(self) -> str:
        if self.num == 0:
            return "0"
        if self.exp == 1:
            return f"{self.num}/{self.prime}"
        return f"{self.num}/{self.prime}^{self.exp}"


def frac_part(q: Fraction | int, p: int) -> PFraction:
    """Fractional part {q} of an exactly-known rational, viewed in Q_p.

    {q} is the unique m/p**n in [0, 1) with q - m/p**n in Z_p, i.e. q mod Z_p.
    """
    q = Fraction(q)
    if q == 0:
        return PFraction.zero(p)
    num, den = q.numerator, q.denominator
    n = int_valuation(den, p)
    if n == 0:  # v_p(q) >= 0: nothing below the units digit
        return PFraction.zero(p)
    mod = p**n
    c = num * pow(den // mod, -1, mod) % mod
    return PFraction(p, c, n)


@dataclass(frozen=True)
class PadicNumber:
    """A truncated p-adic expansion: digits[j] is the coefficient of p**(valuation+j).

    The zero element has valuation +inf and an empty digit tuple; any nonzero
    value has a nonzero leading digit.  Instances are immutable.
    """

    prime: int
    valuation: int | float
    digits: tuple[int, ...]

    def __post_init__(self):
        p = self.prime
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if self.valuation == INF:
            if self.digits:
                raise ValueError("zero must carry an empty digit tuple")
            return
        if not self.digits:
            raise ValueError("a nonzero value needs at least one digit")
        if self.digits[0] == 0:
            raise ValueError("leading digit must be nonzero")
        if any(not 0 <= d < p for d in self.digits):
            raise ValueError(f"digits must lie in [0, {p})")

    # -- structure ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.valuation == INF

    @property
    def precision(self) -> int:
        """Count of significant digits retained (0 for the exact zero)."""
        return len(self.digits)

    @property
    def abs_precision(self) -> int | float:
        """The value is known exactly modulo p**abs_precision."""
        return INF if self.is_zero else self.valuation + len(self.digits)

    def unit(self) -> int:
        """The digit expansion evaluated as an integer (x = unit * p**valuation)."""
        u = 0
        for d in reversed(self.digits):
            u = u * self.prime + d
        return u

    def to_fraction(self) -> Fraction:
        """Canonical rational representative: the truncated series itself."""
        if self.is_zero:
            return Fraction(0)
        return Fraction(self.unit()) * Fraction(self.prime) ** self.valuation

    def norm(self) -> Fraction:
        """The p-adic norm p**(-valuation), exactly; 0 for the zero element."""
        if self.is_zero:
            return Fraction(0)
        return Fraction(self.prime) ** (-self.valuation)

    # -- arithmetic ---------------------------------------------------------

    def _check_same_field(self, other: "PadicNumber") -> None:
        if not isinstance(other, PadicNumber):
            raise TypeError(f"expected a p-adic number, got {type(other).__name__}")
        if other.prime != self.prime:
            raise ValueError(f"mixed primes {self.prime} and {other.prime}")

    def __add__(self, other: "PadicNumber") -> "PadicNumber":
        """Sum carrying min(N_x, N_y) digits; cancellation shrinks the count."""
        self._check_same_field(other)
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        p = self.prime
        v = min(self.valuation, other.valuation)
        abs_prec = min(self.abs_precision, other.abs_precision)
        window = abs_prec - v  # digits determined at level v
        mod = p**window
        total = (
            self.unit() * p ** (self.valuation - v)
            + other.unit() * p ** (other.valuation - v)
        ) % mod
        if total == 0:
            return zero(p)
        shift = int_valuation(total, p)
        return _from_unit(p, v + shift, total // p**shift, window - shift)

    def __neg__(self) -> "PadicNumber":
        if self.is_zero:
            return self
        mod = self.prime ** len(self.digits)
        return _from_unit(self.prime, self.valuation, mod - self.unit(), len(self.digits))

    def __sub__(self, other: "PadicNumber") -> "PadicNumber":
        return self + (-other)

    def __mul__(self, other: "PadicNumber") -> "PadicNumber":
        self._check_same_field(other)
        if self.is_zero or other.is_zero:
            return zero(self.prime)
        n = min(len(self.digits), len(other.digits))
        u = self.unit() * other.unit() % self.prime**n
        return _from_unit(self.prime, self.valuation + other.valuation, u, n)

    def inv(self) -> "PadicNumber":
        """Multiplicative inverse at the same digit count."""
        if self.is_zero:
            raise ZeroDivisionError("the zero element has no inverse")
        n = len(self.digits)
        u = pow(self.unit(), -1, self.prime**n)
        return _from_unit(self.prime, -self.valuation, u, n)

    def fractional_part(self) -> PFraction:
        """Sum of the negative-power digits, as an exact reduced fraction.

        Requires every negative-power digit to sit inside the retained window
        (precision >= -valuation when the valuation is negative).
        """
        p = self.prime
        if self.is_zero or self.valuation >= 0:
            return PFraction.zero(p)
        depth = -self.valuation
        if len(self.digits) < depth:
            raise PrecisionError(
                f"need {depth} digits to read the fractional part, have {len(self.digits)}"
            )
        return PFraction(p, self.unit() % p**depth, depth)

    # -- text forms ----------------------------------------------------------

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        body = " ".join(str(d) for d in self.digits)
        return f"{body} *{self.prime}^{self.valuation}"


def _from_unit(p: int, v: int, u: int, n: int) -> PadicNumber:
    """Build from a unit integer (u % p != 0) known modulo p**n."""
    if n < 1:
        raise PrecisionError("no significant digits survive this operation")
    u %= p**n
    digits = []
    for _ in range(n):
        u, d = divmod(u, p)
        digits.append(d)
    return PadicNumber(p, v, tuple(digits))


def zero(p: int) -> PadicNumber:
    return PadicNumber(p, INF, ())


def from_rational(num: int, den: int, p: int, precision: int) -> PadicNumber:
    """The p-adic expansion of num/den truncated to `precision` digits."""
    if den == 0:
        raise ZeroDivisionError("denominator must be nonzero")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if precision < 1:
        raise ValueError("precision must be at least 1")
    if num == 0:
        return zero(p)
    vn, vd = int_valuation(num, p), int_valuation(den, p)
    mod = p**precision
    u = (num // p**vn) * pow(den // p**vd, -1, mod) % mod
    return _from_unit(p, vn - vd, u, precision)


def valuation(x: PadicNumber) -> int | float:
    """v_p(x); +inf for the zero element."""
    return x.valuation


def norm_p(x: PadicNumber) -> Fraction:
    return x.norm()


def fractional_part(x: PadicNumber) -> PFraction:
    return x.fractional_part()


def as_fraction(
    x: "PadicNumber | Fraction | int", p: int, need_abs_precision: int | None = None
) -> Fraction:
    """Coerce a coefficient to an exact rational.

    Rationals pass through unchanged.  A truncated p-adic value is replaced by
    its canonical representative, but only if its retained window reaches
    `need_abs_precision`: beyond that level the two differ by something the
    consumer was going to ignore anyway.
    """
    if isinstance(x, PadicNumber):
        if x.prime != p:
            raise ValueError(f"coefficient lives in Q_{x.prime}, expected Q_{p}")
        if need_abs_precision is not None and x.abs_precision < need_abs_precision:
            raise PrecisionError(
                f"coefficient known only modulo {p}^{x.abs_precision}, "
                f"need {p}^{need_abs_precision}"
            )
        return x.to_fraction()
    return Fraction(x)


def parse_padic(text: str, p: int, precision: int = 12) -> PadicNumber:
    """Parse `num/den` or an explicit digit string `d0 d1 ... *p^v`."""
    text = text.strip()
    if "*" in text:
        body, _, tail = text.partition("*")
        digits = tuple(int(t) for t in body.split())
        base, _, exp = tail.partition("^")
        if int(base) != p:
            raise ValueError(f"digit string is base {base}, expected {p}")
        v = int(exp) if exp else 0
        if not any(digits):
            return zero(p)
        # leading zeros only shift the valuation; trailing zeros stay significant
        shift = next(i for i, d in enumerate(digits) if d != 0)
        return PadicNumber(p, v + shift, digits[shift:])
    if "/" in text:
        num, _, den = text.partition("/")
        return from_rational(int(num), int(den), p, precision)
    return from_rational(int(text), 1, p, precision)
