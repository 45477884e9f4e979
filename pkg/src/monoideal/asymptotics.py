"""Sequences attached to the powers of a monomial ideal and their polynomial fits.

``ir(I^n)`` and ``mu(I^n)`` (number of minimal generators) agree with
polynomials in ``n`` for large ``n``.  The fits below are exact: forward
differences over rationals, accepted only when the top difference is constant
over at least three consecutive windows.  The analytic spread is one more than
the degree of the ``mu`` polynomial, which is the Hilbert polynomial of the
fiber cone.  The polynomial ring with its homogeneous maximal ideal stands in
for the local ring throughout; monomial computations do not see the difference.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Sequence

from .core import IdealError, MonomialIdeal, is_subideal, intersect, multiply, power, saturate
from .decomposition import PrimeSupport, bight, minimal_primes
from .socle import associated_primes_socle, ir, socle_profile

DEFAULT_CAP = 200_000
DEFAULT_N_MAX = 8


class NotStabilized(ValueError):
    """No polynomial (or stable set) could be certified inside the window."""


class ResourceCapExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class RationalPolynomial:
    """Dense polynomial in one variable, constant term first."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        c = [Fraction(x) for x in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __call__(self, n) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * n + c
        return acc

    def __add__(self, other: RationalPolynomial) -> RationalPolynomial:
        a, b = self.coeffs, other.coeffs
        k = max(len(a), len(b))
        a = a + (Fraction(0),) * (k - len(a))
        b = b + (Fraction(0),) * (k - len(b))
        return RationalPolynomial(tuple(x + y for x, y in zip(a, b)))

    def __mul__(self, other: RationalPolynomial) -> RationalPolynomial:
        if not self.coeffs or not other.coeffs:
            return RationalPolynomial(())
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            for j, y in enumerate(other.coeffs):
                out[i + j] += x * y
        return RationalPolynomial(tuple(out))

    def scale(self, c) -> RationalPolynomial:
        return RationalPolynomial(tuple(Fraction(c) * x for x in self.coeffs))

    def to_json(self) -> dict:
        return {"coeffs": [f"{c.numerator}/{c.denominator}" for c in self.coeffs],
                "degree": self.degree}

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else ("n" if k == 1 else f"n^{k}")
            if mono and abs(c) == 1:
                coef = "-" if c < 0 else ""
            else:
                coef = str(c) + ("*" if mono else "")
            terms.append(coef + mono)
        return " + ".join(terms).replace("+ -", "- ")


def binomial_poly(shift: int, k: int) -> RationalPolynomial:
    """``C(n - shift, k)`` as a polynomial in ``n``."""
    out = RationalPolynomial((Fraction(1),))
    for j in range(k):
        out = out * RationalPolynomial((Fraction(-shift - j), Fraction(1)))
    return out.scale(Fraction(1, _factorial(k)))


def _factorial(k: int) -> int:
    out = 1
    for j in range(2, k + 1):
        out *= j
    return out


def difference_table(values: Sequence[int]) -> list[list[int]]:
    rows = [list(values)]
    while len(rows[-1]) > 1:
        prev = rows[-1]
        rows.append([b - a for a, b in zip(prev, prev[1:])])
    return rows


@dataclass(frozen=True)
class Fit:
    poly: RationalPolynomial
    tail_start: int  # first n of the certified tail


def fit_tail(values: Sequence[int], n_start: int = 1) -> Fit:
    """Certify an eventual polynomial for ``values`` (``values[0]`` sits at ``n_start``).

    The degree is the smallest ``d`` for which some tail of at least ``d + 3``
    values has all ``(d+1)``-st differences zero; the earliest such tail is used.
    """
    values = list(values)
    if len(values) < 4:
        raise NotStabilized("need at least 4 values to fit")
    for d in range(len(values) - 2):
        for t in range(len(values) - (d + 3) + 1):
            tail = values[t:]
            top = difference_table(tail)[d + 1] if len(tail) > d + 1 else []
            if all(x == 0 for x in top):
                return Fit(_newton(tail, n_start + t, d), n_start + t)
    raise NotStabilized(f"no polynomial certified over {len(values)} values")


def _newton(tail: Sequence[int], t: int, d: int) -> RationalPolynomial:
    table = difference_table(tail)
    out = RationalPolynomial(())
    for k in range(d + 1):
        out = out + binomial_poly(t, k).scale(table[k][0])
    return out


def fit_polynomial(values: Sequence[int], n_start: int = 1) -> RationalPolynomial:
    return fit_tail(values, n_start).poly


class PowerTower:
    """Powers ``I, I^2, ...`` computed incrementally, with a generator cap."""

    def __init__(self, I: MonomialIdeal, cap: int = DEFAULT_CAP):
        self.base = I
        self.cap = cap
        self.powers = [I]

    def __getitem__(self, n: int) -> MonomialIdeal:
        if n < 1:
            raise IndexError("powers start at 1")
        while len(self.powers) < n:
            if len(self.powers[-1]) * len(self.base) > self.cap * 50 or len(self.powers[-1]) > self.cap:
                raise ResourceCapExceeded(f"I^{len(self.powers)} already has {len(self.powers[-1])} generators")
            nxt = multiply(self.powers[-1], self.base)
            if len(nxt) > self.cap:
                raise ResourceCapExceeded(f"I^{len(self.powers) + 1} has {len(nxt)} generators (cap {self.cap})")
            self.powers.append(nxt)
        return self.powers[n - 1]


def _require(I: MonomialIdeal):
    if I.is_unit or I.is_zero:
        raise IdealError("need a proper nonzero ideal")


def ir_sequence(I: MonomialIdeal, n_max: int, cap: int = DEFAULT_CAP,
                tower: PowerTower | None = None) -> list[int]:
    _require(I)
    tower = tower or PowerTower(I, cap)
    return [ir(tower[n]) for n in range(1, n_max + 1)]


def mu_sequence(I: MonomialIdeal, n_max: int, cap: int = DEFAULT_CAP,
                tower: PowerTower | None = None) -> list[int]:
    _require(I)
    tower = tower or PowerTower(I, cap)
    return [len(tower[n]) for n in range(1, n_max + 1)]


def ass_sequence(I: MonomialIdeal, n_max: int, cap: int = DEFAULT_CAP,
                 tower: PowerTower | None = None) -> list[list[PrimeSupport]]:
    _require(I)
    tower = tower or PowerTower(I, cap)
    return [associated_primes_socle(tower[n]) for n in range(1, n_max + 1)]


def _stable_from(sets: Sequence) -> int | None:
    """Index (0-based) where the last run of equal entries starts, if it has >= 3 entries."""
    n0 = len(sets) - 1
    while n0 > 0 and sets[n0 - 1] == sets[-1]:
        n0 -= 1
    return n0 if len(sets) - 1 - n0 >= 2 else None


def ass_stabilization(I: MonomialIdeal, n_max: int, cap: int = DEFAULT_CAP,
                      tower: PowerTower | None = None):
    """``(stable primes, n0)`` with ``Ass(I^n)`` constant on ``[n0, n_max]``, or None.

    Requires ``n_max - n0 >= 2``; a heuristic, since no effective bound exists.
    """
    seq = ass_sequence(I, n_max, cap, tower)
    i = _stable_from(seq)
    if i is None:
        return None
    return seq[-1], i + 1


def analytic_spread(I: MonomialIdeal, n_max: int = DEFAULT_N_MAX, cap: int = DEFAULT_CAP,
                    tower: PowerTower | None = None) -> int:
    """``1 + deg`` of the polynomial eventually equal to ``mu(I^n)``."""
    mus = mu_sequence(I, n_max, cap, tower)
    try:
        return 1 + fit_polynomial(mus).degree
    except NotStabilized:
        raise NotStabilized(f"mu(I^n) not stabilized within n_max={n_max}") from None


@dataclass
class ScanReport:
    ideal: MonomialIdeal
    n_range: tuple[int, int]
    ir_values: list[int]
    mu_values: list[int]
    ass_stable_at: int | None
    fitted_ir: RationalPolynomial | None
    fitted_mu: RationalPolynomial | None
    bight: int
    analytic_spread: int | None
    bounds_ok: bool
    ass_values: list[list[PrimeSupport]] = field(default_factory=list, repr=False)
    kind: str = "powers"

    @property
    def ir_degree(self) -> int | None:
        return None if self.fitted_ir is None else self.fitted_ir.degree

    def to_json(self) -> dict:
        ns = "not stabilized"
        amb = self.ideal.ambient
        return {
            "kind": self.kind,
            "vars": list(amb.names),
            "ideal": str(self.ideal),
            "n_range": [str(v) for v in self.n_range],
            "ir_values": [str(v) for v in self.ir_values],
            "mu_values": [str(v) for v in self.mu_values],
            "ass": [[p.names(amb) for p in primes] for primes in self.ass_values],
            "ass_stable_at": ns if self.ass_stable_at is None else str(self.ass_stable_at),
            "fitted_ir": ns if self.fitted_ir is None else self.fitted_ir.to_json(),
            "fitted_mu": ns if self.fitted_mu is None else self.fitted_mu.to_json(),
            "bight": str(self.bight),
            "analytic_spread": ns if self.analytic_spread is None else str(self.analytic_spread),
            "bounds_ok": self.bounds_ok,
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "ir", "mu"])
        lo = self.n_range[0]
        for k, (a, b) in enumerate(zip(self.ir_values, self.mu_values)):
            w.writerow([lo + k, a, b])
        return buf.getvalue()


def _tail_fit(values: Sequence[int], n0: int | None) -> RationalPolynomial | None:
    if n0 is None:
        return None
    try:
        return fit_polynomial(values[n0 - 1:], n_start=n0)
    except NotStabilized:
        return None


def ir_polynomial(I: MonomialIdeal, n_max: int = DEFAULT_N_MAX, cap: int = DEFAULT_CAP) -> ScanReport:
    """Scan ``n = 1..n_max`` and check ``bight - 1 <= deg Ir <= analytic spread - 1``.

    Fits only use the tail where ``Ass(I^n)`` has stabilized.  Anything that
    cannot be certified is reported as None rather than guessed.
    """
    _require(I)
    tower = PowerTower(I, cap)
    profiles = [socle_profile(tower[n]) for n in range(1, n_max + 1)]
    irs = [sum(prof.values()) for prof in profiles]
    ass = [sorted(prof, key=PrimeSupport.sort_key) for prof in profiles]
    mus = mu_sequence(I, n_max, tower=tower)
    i = _stable_from(ass)
    n0 = None if i is None else i + 1
    f_ir = _tail_fit(irs, n0)
    f_mu = _tail_fit(mus, n0)
    b = bight(I)
    ell = None if f_mu is None else f_mu.degree + 1
    ok = f_ir is not None and ell is not None and b - 1 <= f_ir.degree <= ell - 1
    return ScanReport(I, (1, n_max), irs, mus, n0, f_ir, f_mu, b, ell, ok, ass)


def symbolic_power(I: MonomialIdeal, n: int) -> MonomialIdeal:
    """``I^(n)``: intersection over minimal primes ``p`` of ``I^n R_p`` contracted to ``R``.

    For monomial ideals the contraction is the saturation of ``I^n`` by the
    product of the variables outside ``p``.
    """
    _require(I)
    if n < 1:
        raise IdealError("symbolic powers start at n = 1")
    amb = I.ambient
    In = power(I, n)
    parts = []
    for p in minimal_primes(I):
        outside = tuple(0 if i in p.vars else 1 for i in range(amb.arity))
        parts.append(saturate(In, MonomialIdeal(amb, (outside,))))
    return intersect(*parts)


def symbolic_ir_polynomial(I: MonomialIdeal, n_max: int = DEFAULT_N_MAX) -> ScanReport:
    """Fit ``ir(I^(n))`` and check its degree equals ``bight(I) - 1``.

    ``bounds_ok`` carries that equality; Ass of a symbolic power is Min(I) for
    every ``n``, so the whole range is used for the fit.
    """
    _require(I)
    sym = [symbolic_power(I, n) for n in range(1, n_max + 1)]
    irs = [ir(J) for J in sym]
    mus = [len(J) for J in sym]
    b = bight(I)
    try:
        f_ir = fit_polynomial(irs)
    except NotStabilized:
        f_ir = None
    try:
        f_mu = fit_polynomial(mus)
    except NotStabilized:
        f_mu = None
    ok = f_ir is not None and f_ir.degree == b - 1
    return ScanReport(I, (1, n_max), irs, mus, 1, f_ir, f_mu, b, None, ok, kind="symbolic")


def powers_in_symbolic(I: MonomialIdeal, n: int) -> bool:
    return is_subideal(power(I, n), symbolic_power(I, n))


def binomial(n: int, k: int) -> int:
    return comb(n, k)
