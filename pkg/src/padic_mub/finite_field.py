"""Arithmetic in F_{p^r} with the absolute trace map down to F_p.

Elements are polynomials over F_p reduced modulo a fixed monic irreducible
modulus of degree r.  The default modulus is the lexicographically smallest
irreducible (coefficients compared low degree first), so field construction
is reproducible with no external polynomial tables.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence

from .characters import UnitPhase
from .errors import CapError
from .padic import PFraction, is_prime

DEFAULT_FIELD_CAP = 625


def _poly_trim(coeffs: Sequence[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _poly_mod(num: Sequence[int], den: Sequence[int], p: int) -> tuple[int, ...]:
    """Remainder of num by den over F_p; den must be monic."""
    num = list(num)
    dd = len(den) - 1
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i] % p
        if c:
            for j, dj in enumerate(den):
                num[i - dd + j] = (num[i - dd + j] - c * dj) % p
    return _poly_trim(n % p for n in num[:dd])


def _is_irreducible(coeffs: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    deg = len(coeffs) - 1
    if deg < 1:
        return False
    if any(sum(c * pow(x, i, p) for i, c in enumerate(coeffs)) % p == 0 for x in range(p)):
        return False  # a root is a linear factor
    for d in range(2, deg // 2 + 1):
        for tail in product(range(p), repeat=d):
            if not _poly_mod(coeffs, (*tail, 1), p):
                return False
    return True


def irreducible_polynomials(p: int, r: int) -> Iterator[tuple[int, ...]]:
    """All monic irreducibles of degree r, ascending in low-to-high lex order."""
    for tail in product(range(p), repeat=r):
        cand = (*tail, 1)
        if r == 1 or _is_irreducible(cand, p):
            yield cand


@dataclass(frozen=True)
class FieldCtx:
    """The field F_{p^r} presented as F_p[x] modulo a monic irreducible."""

    p: int
    r: int
    modulus: tuple[int, ...]

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.r < 1:
            raise ValueError("extension degree must be positive")
        if len(self.modulus) != self.r + 1 or self.modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree r")
        if self.r > 1 and not _is_irreducible(self.modulus, self.p):
            raise ValueError(f"modulus {self.modulus} is reducible over F_{self.p}")

    @property
    def size(self) -> int:
        return self.p**self.r

    def element(self, value: int | Sequence[int]) -> "FieldElem":
        """Element from an integer label (base-p digits) or a coefficient list."""
        if isinstance(value, int):
            if not 0 <= value < self.size:
                raise ValueError(f"label {value} outside [0, {self.size})")
            coeffs, n = [], value
            for _ in range(self.r):
                n, d = divmod(n, self.p)
                coeffs.append(d)
            return FieldElem(self, tuple(coeffs))
        coeffs = tuple(c % self.p for c in value)
        if len(coeffs) != self.r:
            raise ValueError(f"need {self.r} coefficients, got {len(coeffs)}")
        return FieldElem(self, coeffs)

    @property
    def zero(self) -> "FieldElem":
        return self.element(0)

    @property
    def one(self) -> "FieldElem":
        return self.element(1)

    def elements(self) -> Iterator["FieldElem"]:
        """All elements, in lexicographic coefficient order."""
        for n in range(self.size):
            yield self.element(n)

    def __str__(self) -> str:
        return f"F_{self.p}^{self.r} mod {self.modulus}"


def build_field(
    p: int, r: int, modulus: Sequence[int] | None = None, size_cap: int = DEFAULT_FIELD_CAP
) -> FieldCtx:
    """Construct F_{p^r}; the default modulus is the lex-smallest irreducible."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if r < 1:
        raise ValueError("extension degree must be positive")
    if p**r > size_cap:
        raise CapError(f"field size {p**r} exceeds cap {size_cap}")
    if modulus is None:
        modulus = next(irreducible_polynomials(p, r))
    return FieldCtx(p, r, tuple(int(c) % p for c in modulus))


@dataclass(frozen=True)
class FieldElem:
    ctx: FieldCtx
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.ctx.r:
            raise ValueError("coefficient vector has wrong length")
        if any(not 0 <= c < self.ctx.p for c in self.coeffs):
            raise ValueError("coefficients must be reduced mod p")

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def label(self) -> int:
        n = 0
        for c in reversed(self.coeffs):
            n = n * self.ctx.p + c
        return n

    def _same_field(self, other: "FieldElem") -> None:
        if not isinstance(other, FieldElem):
            raise TypeError(f"expected a field element, got {type(other).__name__}")
        if other.ctx != self.ctx:
            raise ValueError("elements from different field contexts")

    def __add__(self, other: "FieldElem") -> "FieldElem":
        self._same_field(other)
        p = self.ctx.p
        return FieldElem(self.ctx, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "FieldElem":
        p = self.ctx.p
        return FieldElem(self.ctx, tuple(-c % p for c in self.coeffs))

    def __sub__(self, other: "FieldElem") -> "FieldElem":
        return self + (-other)

    def __mul__(self, other: "FieldElem") -> "FieldElem":
        self._same_field(other)
        p, r = self.ctx.p, self.ctx.r
        prod = [0] * (2 * r - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    prod[i + j] = (prod[i + j] + a * b) % p
        rem = _poly_mod(prod, self.ctx.modulus, p)
        return FieldElem(self.ctx, rem + (0,) * (r - len(rem)))

    def __pow__(self, n: int) -> "FieldElem":
        if n < 0:
            return self.inv() ** (-n)
        out, base = self.ctx.one, self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def inv(self) -> "FieldElem":
        if self.is_zero:
            raise ZeroDivisionError("zero has no inverse in a field")
        return self ** (self.ctx.size - 2)

    def __truediv__(self, other: "FieldElem") -> "FieldElem":
        return self * other.inv()

    def trace(self) -> int:
        """Absolute trace x + x^p + ... + x^(p^(r-1)), returned in {0,...,p-1}."""
        acc, frob = self.ctx.zero, self
        for _ in range(self.ctx.r):
            acc = acc + frob
            frob = frob**self.ctx.p
        if any(acc.coeffs[1:]):
            raise AssertionError("trace landed outside the prime subfield")
        return acc.coeffs[0]

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.coeffs) + ")"


def trace(x: FieldElem) -> int:
    return x.trace()


def ff_char(x: FieldElem) -> UnitPhase:
    """The additive character exp(2*pi*i*trace(x)/p) as an exact phase."""
    p = x.ctx.p
    t = x.trace()
    if t == 0:
        return UnitPhase(PFraction.zero(p))
    return UnitPhase(PFraction(p, t, 1))
