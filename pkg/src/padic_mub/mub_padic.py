"""Finite models of L^2(Q_p) carrying the p+1 mutually unbiased families.

A Grid(p, r, k) models functions on the ball p^(-r)Z_p that are constant on
cosets of p^k Z_p: cell i has representative i*p^(-r) (digit-lexicographic
order) and Haar measure p^(-k).  Everything the continuum statements assert
"for large enough r" becomes a threshold-indexed family of exact finite
checks here: quadratic-character vectors, scaled ball indicators, the
Fourier transform (which swaps r and k), and the shift/modulation/chirp
unitaries, all with exact rational phase bookkeeping.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .characters import phase_to_complex
from .errors import CapError, ResolutionError
from .gauss import NEG_INF, roots_of_unity, threshold_t
from .padic import (
    INF,
    PadicNumber,
    PFraction,
    as_fraction,
    frac_part,
    frac_valuation,
    is_prime,
    rational_mod,
)

DEFAULT_CELL_CAP = 100_000

Coefficient = PadicNumber | Fraction | int
FamilyLabel = Coefficient | None  # None labels the delta-function family


@dataclass(frozen=True)
class Grid:
    """Cosets of p^k Z_p inside p^(-r) Z_p, in digit-lexicographic order."""

    p: int
    r: int
    k: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.r + self.k < 1:
            raise ValueError("need r + k >= 1 for a nontrivial grid")

    @property
    def n(self) -> int:
        return self.p ** (self.r + self.k)

    @property
    def measure(self) -> Fraction:
        """Haar measure of one cell."""
        return Fraction(self.p) ** (-self.k)

    def rep(self, i: int) -> Fraction:
        """Canonical representative of cell i."""
        return Fraction(i) * Fraction(self.p) ** (-self.r)

    def index_of(self, x: Coefficient) -> int:
        """Cell index of a point of the domain (v_p(x) >= -r required)."""
        xf = as_fraction(x, self.p, need_abs_precision=self.k)
        if frac_valuation(xf, self.p) < -self.r:
            raise ValueError(f"{xf} lies outside p^(-{self.r})Z_p")
        return rational_mod(xf * Fraction(self.p) ** self.r, self.n)


def make_grid(p: int, r: int, k: int, cell_cap: int = DEFAULT_CELL_CAP) -> Grid:
    grid = Grid(p, r, k)
    if grid.n > cell_cap:
        raise CapError(f"{grid.n} cells exceed the cap {cell_cap}")
    return grid


@dataclass
class StateVector:
    """One complex amplitude per grid cell (the value at the representative)."""

    grid: Grid
    amplitudes: np.ndarray

    def __post_init__(self):
        self.amplitudes = np.asarray(self.amplitudes, dtype=complex)
        if self.amplitudes.shape != (self.grid.n,):
            raise ValueError("amplitude count does not match the grid")

    def norm_sq(self) -> float:
        return float(np.vdot(self.amplitudes, self.amplitudes).real) * float(
            self.grid.measure
        )

    def norm(self) -> float:
        return math.sqrt(self.norm_sq())

    def to_json_dict(self) -> dict:
        return {
            "grid": {"p": self.grid.p, "r": self.grid.r, "k": self.grid.k},
            "amplitudes": [[z.real, z.imag] for z in self.amplitudes],
        }


def inner(u: StateVector, w: StateVector) -> complex:
    """Haar-weighted pairing sum(conj(u) * w) * p^(-k)."""
    if u.grid != w.grid:
        raise ValueError("states live on different grids")
    return complex(np.vdot(u.amplitudes, w.amplitudes)) * float(u.grid.measure)


# ---------------------------------------------------------------------------
# exact phase profiles of e(a*x^2 + b*x) on a grid
# ---------------------------------------------------------------------------


def required_resolution(
    a: Coefficient, b: Coefficient, r: int, p: int, c: Coefficient | None = None
) -> int:
    """Smallest k making e(a*x^2 + b*x) constant on every cell of Grid(p, r, k).

    With a recentering shift c, the integrand on x + c has the same quadratic
    coefficient and linear coefficient 2ac + b, so the same rule applies to
    that pair.  Zero coefficients impose no constraint.
    """
    af = as_fraction(a, p)
    bf = as_fraction(b, p)
    if c is not None:
        bf = 2 * af * as_fraction(c, p) + bf
    bounds = [0]
    va, vb = frac_valuation(af, p), frac_valuation(bf, p)
    if va != INF:
        bounds += [2 * r - int(va), r - int(va), math.ceil(Fraction(-int(va), 2))]
    if vb != INF:
        bounds += [r - int(vb), -int(vb)]
    return max(bounds)


def _phase_term(grid: Grid, coeff: Fraction, degree: int) -> tuple[int, int]:
    """(M, c) with {coeff * rep(i)^degree} = ((i^degree mod p^M)*c mod p^M)/p^M."""
    p = grid.p
    if coeff == 0:
        return 0, 0
    v = int(frac_valuation(coeff, p))
    depth = degree * grid.r - v
    if depth <= 0:
        return 0, 0
    unit = coeff * Fraction(p) ** (-v)
    return depth, rational_mod(unit, p**depth)


def _quad_phase_indices(grid: Grid, a: Fraction, b: Fraction) -> tuple[np.ndarray, int]:
    """Exact phase numerators of e(a*x^2 + b*x) per cell, over denominator p^M."""
    p = grid.p
    ma, ca = _phase_term(grid, a, 2)
    mb, cb = _phase_term(grid, b, 1)
    depth = max(ma, mb)
    i = np.arange(grid.n, dtype=np.int64)
    idx = np.zeros(grid.n, dtype=np.int64)
    if ma:
        mod = p**ma
        idx += ((i % mod) ** 2 % mod) * ca % mod * p ** (depth - ma)
    if mb:
        mod = p**mb
        idx += (i % mod) * cb % mod * p ** (depth - mb)
    return (idx % p**depth if depth else idx), depth


def quadratic_phase_profile(
    a: Coefficient, b: Coefficient, grid: Grid
) -> tuple[PFraction, ...]:
    """The exact phase of e(a*x^2 + b*x) at every cell representative."""
    p = grid.p
    af = as_fraction(a, p, need_abs_precision=2 * grid.r)
    bf = as_fraction(b, p, need_abs_precision=grid.r)
    idx, depth = _quad_phase_indices(grid, af, bf)
    den = p**depth
    return tuple(PFraction.from_fraction(Fraction(int(m), den), p) for m in idx)


# ---------------------------------------------------------------------------
# the basis families
# ---------------------------------------------------------------------------


def vector_v(a: Coefficient, b: Coefficient, grid: Grid) -> StateVector:
    """The quadratic-character state with amplitude e(a*x^2 + b*x) per cell."""
    p = grid.p
    af = as_fraction(a, p, need_abs_precision=2 * grid.r)
    bf = as_fraction(b, p, need_abs_precision=grid.r)
    needed = required_resolution(af, bf, grid.r, p)
    if grid.k < needed:
        raise ResolutionError(
            f"e(a*x^2+b*x) is not cell-constant at k={grid.k}; need k >= {needed}"
        )
    idx, depth = _quad_phase_indices(grid, af, bf)
    return StateVector(grid, roots_of_unity(p**depth)[idx])


def vector_v_inf(b: Coefficient, grid: Grid) -> StateVector:
    """The scaled near-delta state: amplitude p^r on the ball -b + p^r Z_p."""
    p, r = grid.p, grid.r
    if grid.k < r:
        raise ResolutionError(f"need k >= r = {r} to resolve the ball p^{r}Z_p")
    bf = as_fraction(b, p, need_abs_precision=grid.k)
    if frac_valuation(bf, p) < -r:
        raise ValueError(f"center -({bf}) lies outside the grid domain")
    i0 = grid.index_of(-bf)
    amps = np.zeros(grid.n, dtype=complex)
    # the support -b + p^r Z_p collects the cells with index = i0 mod p^(2r)
    step = p ** (2 * r) if r > 0 else 1
    hits = (i0 + np.arange(0, grid.n, step, dtype=np.int64)) % grid.n
    amps[hits] = float(p) ** r
    return StateVector(grid, amps)


def ball_state(z: Coefficient, scale: int, grid: Grid, normalized: bool = True) -> StateVector:
    """Indicator of z + p^scale Z_p, scaled to unit norm when normalized."""
    p = grid.p
    if not -grid.r <= scale <= grid.k:
        raise ResolutionError(
            f"ball exponent {scale} must lie in [{-grid.r}, {grid.k}] for this grid"
        )
    i0 = grid.index_of(z)
    amps = np.zeros(grid.n, dtype=complex)
    step = p ** (grid.r + scale)
    hits = (i0 + np.arange(0, grid.n, step, dtype=np.int64)) % grid.n
    amps[hits] = float(p) ** (scale / 2.0) if normalized else 1.0
    return StateVector(grid, amps)


# ---------------------------------------------------------------------------
# Fourier transform: Grid(p, r, k) <-> Grid(p, k, r)
# ---------------------------------------------------------------------------


def fourier(psi: StateVector) -> StateVector:
    """psi_hat(y) = integral of psi(x) e(+x*y) dx, on the swapped grid.

    The pairing e(x*y) on cell representatives is exactly the DFT kernel of
    order n = p^(r+k), so the transform is the scaled inverse FFT; it is an
    exact isometry of the finite model up to double rounding.
    """
    g = psi.grid
    dual = Grid(g.p, g.k, g.r)
    return StateVector(dual, float(g.p) ** g.r * np.fft.ifft(psi.amplitudes))


def inverse_fourier(phi: StateVector) -> StateVector:
    """Inverse transform with the conjugate kernel e(-x*y)."""
    g = phi.grid
    dual = Grid(g.p, g.k, g.r)
    return StateVector(dual, float(g.p) ** (-g.k) * np.fft.fft(phi.amplitudes))


def ball_fourier_closed(z: Coefficient, scale: int, dual: Grid) -> np.ndarray:
    """Expected transform of the normalized ball indicator: e(y*z)*p^(-scale/2)
    on p^(-scale)Z_p and 0 outside, evaluated on the dual grid's cells."""
    p = dual.p
    zf = as_fraction(z, p)
    out = np.zeros(dual.n, dtype=complex)
    amp = float(p) ** (-scale / 2.0)
    for j in range(dual.n):
        y = dual.rep(j)
        if frac_valuation(y, p) >= -scale:
            out[j] = amp * phase_to_complex(frac_part(y * zf, p))
    return out


# ---------------------------------------------------------------------------
# the unitaries: shift X_c, modulation Z_d, chirp P_d
# ---------------------------------------------------------------------------


def op_X(psi: StateVector, c: Coefficient) -> StateVector:
    """Shift |y> -> |y+c>: an exact permutation of the cells."""
    g = psi.grid
    cf = as_fraction(c, g.p, need_abs_precision=g.k)
    if frac_valuation(cf, g.p) < -g.r:
        raise ValueError(f"shift {cf} leaves the domain p^(-{g.r})Z_p")
    s = rational_mod(cf * Fraction(g.p) ** g.r, g.n)
    return StateVector(g, np.roll(psi.amplitudes, s))


def op_Z(psi: StateVector, d: Coefficient) -> StateVector:
    """Modulation |y> -> e(y*d)|y>; needs v(d) >= -k so the phase is cell-constant."""
    g = psi.grid
    df = as_fraction(d, g.p, need_abs_precision=g.r)
    if df != 0 and frac_valuation(df, g.p) < -g.k:
        raise ResolutionError(f"modulation e(y*d) with v(d) < {-g.k} is not cell-constant")
    depth, cu = _phase_term(g, df, 1)
    if depth == 0:
        return StateVector(g, psi.amplitudes.copy())
    i = np.arange(g.n, dtype=np.int64)
    idx = i % g.p**depth * cu % g.p**depth
    return StateVector(g, psi.amplitudes * roots_of_unity(g.p**depth)[idx])


def op_P(psi: StateVector, d: Coefficient) -> StateVector:
    """Chirp |x> -> e(d*x^2)|x>; shifts the quadratic family label by d."""
    g = psi.grid
    df = as_fraction(d, g.p, need_abs_precision=2 * g.r)
    needed = required_resolution(df, 0, g.r, g.p)
    if g.k < needed:
        raise ResolutionError(f"chirp e(d*x^2) needs k >= {needed}, grid has {g.k}")
    depth, cu = _phase_term(g, df, 2)
    if depth == 0:
        return StateVector(g, psi.amplitudes.copy())
    i = np.arange(g.n, dtype=np.int64)
    idx = (i % g.p**depth) ** 2 % g.p**depth * cu % g.p**depth
    return StateVector(g, psi.amplitudes * roots_of_unity(g.p**depth)[idx])


@dataclass
class EigenReport:
    """How exactly X_c Z_{2ac} fixes the state for quadratic label a."""

    p: int
    a: str
    b: str
    c: str
    grid: dict
    expected_phase: str
    expected_value: complex
    measured_value: complex
    residual: float
    tol: float
    passed: bool

    def to_json_dict(self) -> dict:
        return {
            "schema": 1,
            "kind": "eigen",
            "p": self.p,
            "a": self.a,
            "b": self.b,
            "c": self.c,
            "grid": self.grid,
            "expected_phase": self.expected_phase,
            "expected_value": [self.expected_value.real, self.expected_value.imag],
            "measured_value": [self.measured_value.real, self.measured_value.imag],
            "residual": self.residual,
            "tol": self.tol,
            "passed": self.passed,
        }


def eigen_check(
    a: Coefficient,
    b: Coefficient,
    c: Coefficient,
    grid: Grid | None = None,
    *,
    p: int | None = None,
    tol: float = 1e-9,
    cell_cap: int = DEFAULT_CELL_CAP,
) -> EigenReport:
    """Apply X_c Z_{2ac} to the (a, b) state and compare with e(-bc-ac^2) times it."""
    if grid is None:
        if p is None:
            raise ValueError("pass a grid or a prime to build one from")
        af, bf, cf = (as_fraction(x, p) for x in (a, b, c))
        vc = frac_valuation(cf, p)
        r = max(1, -int(vc) if vc != INF else 0)
        k_mod = required_resolution(0, 2 * af * cf, r, p)
        k = max(required_resolution(af, bf, r, p), k_mod, 1 - r)
        grid = make_grid(p, r, k, cell_cap)
    p = grid.p
    af = as_fraction(a, p)
    bf = as_fraction(b, p)
    cf = as_fraction(c, p)
    state = vector_v(af, bf, grid)
    moved = op_X(op_Z(state, 2 * af * cf), cf)
    phase = frac_part(-(bf * cf + af * cf * cf), p)
    expected = phase_to_complex(phase)
    residual = float(
        np.linalg.norm(moved.amplitudes - expected * state.amplitudes)
        / np.linalg.norm(state.amplitudes)
    )
    pivot = int(np.argmax(np.abs(state.amplitudes)))
    measured = complex(moved.amplitudes[pivot] / state.amplitudes[pivot])
    return EigenReport(
        p=p,
        a=str(af),
        b=str(bf),
        c=str(cf),
        grid={"p": grid.p, "r": grid.r, "k": grid.k},
        expected_phase=str(phase),
        expected_value=expected,
        measured_value=measured,
        residual=residual,
        tol=tol,
        passed=residual <= tol,
    )


# ---------------------------------------------------------------------------
# Gram tables for finite samples of the p+1 families
# ---------------------------------------------------------------------------


def _normalize_family(a: FamilyLabel):
    if a is None or a == INF or (isinstance(a, str) and a.lower() in {"inf", "infinity"}):
        return None
    return a


def _pair_closed(p: int, r: int, ai, bi: Fraction, aj, bj: Fraction) -> float:
    """Large-r modulus of the pair's inner product (ai/aj None for deltas)."""
    if ai is None and aj is None:
        return float(p) ** r if bi == bj else 0.0
    if ai is None or aj is None:
        return 1.0
    if ai == aj:
        return float(p) ** r if bi == bj else 0.0
    v = frac_valuation(ai - aj, p)
    return float(p) ** (int(v) / 2.0)


def _pair_min_r(p: int, ai, bi: Fraction, aj, bj: Fraction) -> int | float:
    """Smallest r at which the closed modulus above is certified."""
    if ai is None and aj is None:
        if bi == bj:
            return NEG_INF
        return int(frac_valuation(bi - bj, p)) + 1
    if ai is None or aj is None:
        a, b, binf = (aj, bj, bi) if ai is None else (ai, bi, bj)
        bounds = []
        lin = 2 * a * (-binf) + b
        if lin != 0:
            bounds.append(-int(frac_valuation(lin, p)))
        if a != 0:
            bounds.append(math.ceil(Fraction(-int(frac_valuation(a, p)), 2)))
        return max(bounds) if bounds else NEG_INF
    t = threshold_t(p, ai - aj, bi - bj)
    return NEG_INF if t == NEG_INF else int(t) + 1


@dataclass
class GramEntry:
    i: int
    j: int
    numeric: float
    closed: float
    certified: bool
    deviation: float


@dataclass
class GramReport:
    """Cross table of |<v_i|v_j>| against the closed three-case values."""

    p: int
    r_requested: int
    r_used: int
    k_used: int
    labels: list[str]
    moduli: np.ndarray
    entries: list[GramEntry]
    family_ranks: dict[str, int]
    tol: float
    max_certified_deviation: float
    uncertified_pairs: int
    passed: bool
    config: dict = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        return {
            "schema": 1,
            "kind": "gram",
            "p": self.p,
            "r_requested": self.r_requested,
            "r_used": self.r_used,
            "k_used": self.k_used,
            "labels": self.labels,
            "tol": self.tol,
            "max_certified_deviation": self.max_certified_deviation,
            "uncertified_pairs": self.uncertified_pairs,
            "family_ranks": self.family_ranks,
            "passed": self.passed,
            "entries": [
                {
                    "i": e.i,
                    "j": e.j,
                    "numeric": e.numeric,
                    "closed": e.closed,
                    "certified": e.certified,
                    "deviation": e.deviation,
                }
                for e in self.entries
            ],
            **({"config": self.config} if self.config else {}),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)

    def to_csv(self) -> str:
        lines = ["i,j,label_i,label_j,numeric,closed_exact,certified,deviation"]
        for e in self.entries:
            lines.append(
                f"{e.i},{e.j},{self.labels[e.i]},{self.labels[e.j]},"
                f"{e.numeric!r},{e.closed!r},{int(e.certified)},{e.deviation!r}"
            )
        return "\n".join(lines) + "\n"


def gram_report(
    params: list[tuple[FamilyLabel, Coefficient]],
    r: int,
    p: int,
    *,
    auto_raise: bool = True,
    tol: float = 1e-9,
    cell_cap: int = DEFAULT_CELL_CAP,
) -> GramReport:
    """Verify the full cross table of a finite sample of the basis families.

    Family label None (or "inf") selects the delta family.  The grid is
    auto-sized; with auto_raise the truncation exponent is raised until every
    pair's closed value is certified, otherwise under-threshold pairs are
    computed but flagged uncertified and excluded from the pass criterion.
    """
    raw = [(_normalize_family(a), a, b) for a, b in params]
    # representatives are enough for thresholds and grid sizing (they only
    # need valuations); the state constructors re-check precision themselves
    entries_ab = [
        (
            lab,
            as_fraction(a_raw, p) if lab is not None else None,
            as_fraction(b_raw, p),
        )
        for lab, a_raw, b_raw in raw
    ]
    pairs_min_r = [
        _pair_min_r(p, ai, bi, aj, bj)
        for _, ai, bi in entries_ab
        for _, aj, bj in entries_ab
    ]
    r_used = r
    if auto_raise:
        needed = max((m for m in pairs_min_r if m != NEG_INF), default=r)
        r_used = max(r, int(needed))
    k = 1 - r_used
    has_inf = any(ai is None for _, ai, _ in entries_ab)
    if has_inf:
        k = max(k, r_used)
    for _, ai, bi in entries_ab:
        if ai is not None:
            k = max(k, required_resolution(ai, bi, r_used, p))
        for _, aj, bj in entries_ab:
            if ai is not None and aj is not None:
                k = max(k, required_resolution(ai - aj, bi - bj, r_used, p))
    grid = make_grid(p, r_used, k, cell_cap)
    states, labels = [], []
    for (lab, a_raw, b_raw), (_, ai, bi) in zip(raw, entries_ab):
        if lab is None:
            states.append(vector_v_inf(b_raw, grid))
            labels.append(f"a=inf b={bi}")
        else:
            states.append(vector_v(a_raw, b_raw, grid))
            labels.append(f"a={ai} b={bi}")
    stack = np.stack([s.amplitudes for s in states])
    gram = stack.conj() @ stack.T * float(grid.measure)
    moduli = np.abs(gram)
    entries: list[GramEntry] = []
    max_dev = 0.0
    uncert = 0
    for i, (_, ai, bi) in enumerate(entries_ab):
        for j in range(i, len(entries_ab)):
            _, aj, bj = entries_ab[j]
            closed = _pair_closed(p, r_used, ai, bi, aj, bj)
            certified = r_used >= _pair_min_r(p, ai, bi, aj, bj)
            dev = float(abs(moduli[i, j] - closed))
            entries.append(GramEntry(i, j, float(moduli[i, j]), closed, certified, dev))
            if certified:
                max_dev = max(max_dev, dev)
            else:
                uncert += 1
    # each family sample should stay linearly independent on its grid
    family_ranks: dict[str, int] = {}
    for fam in sorted({str(lab) if lab is not None else "inf" for lab, _, _ in entries_ab}):
        idxs = [
            i
            for i, (lab, _, _) in enumerate(entries_ab)
            if (str(lab) if lab is not None else "inf") == fam
        ]
        sub = gram[np.ix_(idxs, idxs)]
        family_ranks[fam] = int(np.linalg.matrix_rank(sub))
    passed = max_dev <= tol and (uncert == 0 or not auto_raise)
    return GramReport(
        p=p,
        r_requested=r,
        r_used=r_used,
        k_used=k,
        labels=labels,
        moduli=moduli,
        entries=entries,
        family_ranks=family_ranks,
        tol=tol,
        max_certified_deviation=max_dev,
        uncertified_pairs=uncert,
        passed=passed,
    )


def canonical_family_params(
    p: int, b_samples: list[Coefficient] | None = None
) -> list[tuple[FamilyLabel, Coefficient]]:
    """The p+1 family labels {0,...,p-1,inf} crossed with a b sample set."""
    if b_samples is None:
        b_samples = list(range(p))
    out: list[tuple[FamilyLabel, Coefficient]] = []
    for a in [*range(p), None]:
        for b in b_samples:
            out.append((a, b))
    return out
