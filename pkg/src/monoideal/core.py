"""Monomials and monomial ideals over a fixed, named set of variables.

A monomial is a tuple of non-negative exponents, one per variable.  A
:class:`MonomialIdeal` always stores its minimal generating set, so two ideals
are equal exactly when their generator tuples are equal.  The coefficient
field never appears: everything here is combinatorics on exponent vectors.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import reduce
from itertools import combinations_with_replacement
from typing import Iterable, Sequence

import numpy as np

Monomial = tuple[int, ...]

# exponents are plain ints; this only catches runaway powers
MAX_EXPONENT = 2**31 - 1

_VARNAME = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")
_FACTOR = re.compile(r"\s*([A-Za-z][A-Za-z0-9_]*)\s*(?:\^\s*([0-9]+)\s*)?\Z")


class IdealError(ValueError):
    """Raised for malformed input or incompatible operands."""


class ParseError(IdealError):
    pass


@dataclass(frozen=True)
class VariableSet:
    names: tuple[str, ...]

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if not names:
            raise IdealError("a variable set needs at least one variable")
        for name in names:
            if not isinstance(name, str) or not _VARNAME.match(name):
                raise IdealError(f"bad variable name {name!r}")
        if len(set(names)) != len(names):
            raise IdealError(f"duplicate variable names in {names}")

    @classmethod
    def parse(cls, text: str) -> VariableSet:
        """Build from a comma separated list such as ``"x,y,z"``."""
        return cls(tuple(part.strip() for part in text.split(",") if part.strip()))

    @property
    def arity(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise IdealError(f"unknown variable {name!r}; declared: {', '.join(self.names)}") from None

    def unit(self) -> Monomial:
        return (0,) * self.arity

    def variable(self, i: int, power: int = 1) -> Monomial:
        e = [0] * self.arity
        e[i] = power
        return tuple(e)

    def sub(self, indices: Iterable[int]) -> VariableSet:
        """The variable set restricted to ``indices`` (kept in ambient order)."""
        return VariableSet(tuple(self.names[i] for i in sorted(indices)))

    def __str__(self):
        return ",".join(self.names)


# -- monomial arithmetic ----------------------------------------------------

def divides(a: Monomial, b: Monomial) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    out = tuple(x + y for x, y in zip(a, b))
    if out and max(out) > MAX_EXPONENT:
        raise OverflowError("exponent overflow")
    return out


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x if x > y else y for x, y in zip(a, b))


def mono_gcd(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x if x < y else y for x, y in zip(a, b))


def mono_quotient(a: Monomial, b: Monomial) -> Monomial:
    """``a / gcd(a, b)``, i.e. the generator of ``<a> : <b>``."""
    return tuple(x - y if x > y else 0 for x, y in zip(a, b))


def support(a: Monomial) -> frozenset[int]:
    return frozenset(i for i, x in enumerate(a) if x)


def degree(a: Monomial) -> int:
    return sum(a)


def canonical_key(a: Monomial):
    # lex, largest first: x^2 > x*y > y^2 > y
    return tuple(-x for x in a)


def format_monomial(a: Monomial, ambient: VariableSet) -> str:
    factors = []
    for name, e in zip(ambient.names, a):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append(f"{name}^{e}")
    return "*".join(factors) if factors else "1"


def parse_monomial(text: str, ambient: VariableSet) -> Monomial:
    text = text.strip()
    if not text:
        raise ParseError("empty monomial")
    if text == "1":
        return ambient.unit()
    exps = [0] * ambient.arity
    for token in text.split("*"):
        if "^" in token and re.search(r"\^\s*-", token):
            raise ParseError(f"negative exponent in {token.strip()!r}")
        m = _FACTOR.match(token)
        if m is None:
            raise ParseError(f"malformed factor {token.strip()!r}")
        name, power = m.group(1), m.group(2)
        p = 1 if power is None else int(power)
        if p == 0:
            raise ParseError(f"exponent must be positive in {token.strip()!r}")
        exps[ambient.index(name)] += p
    return tuple(exps)


# -- ideals -----------------------------------------------------------------

# above this many candidates minimalization switches to numpy
_VECTOR_THRESHOLD = 4000
_CHUNK = 1 << 22


def _unique_rows(arr: np.ndarray) -> np.ndarray:
    base = arr.max(axis=0) + 1
    if float(np.prod(base.astype(float))) >= 2.0**62:
        return np.unique(arr, axis=0)
    weights = np.cumprod(np.concatenate([[1], base[:0:-1]]))[::-1]
    _, first = np.unique(arr @ weights, return_index=True)
    return arr[first]


def _minimal_array(arr: np.ndarray) -> tuple[Monomial, ...]:
    arr = _unique_rows(arr)
    deg = arr.sum(axis=1)
    order = np.argsort(deg, kind="stable")
    arr, deg = arr[order], deg[order]
    kept = np.empty((0, arr.shape[1]), dtype=arr.dtype)
    bounds = np.flatnonzero(np.diff(deg)) + 1
    for block in np.split(arr, bounds):
        # distinct monomials of one degree never divide each other
        if len(kept):
            step = max(1, _CHUNK // (len(kept) * arr.shape[1]))
            hit = np.zeros(len(block), dtype=bool)
            for lo in range(0, len(block), step):
                b = block[lo:lo + step]
                hit[lo:lo + step] = (kept[None, :, :] <= b[:, None, :]).all(axis=2).any(axis=1)
            block = block[~hit]
        kept = np.concatenate([kept, block])
    out = [tuple(int(e) for e in row) for row in kept]
    out.sort(key=canonical_key)
    return tuple(out)


def _minimal(gens: Iterable[Monomial]) -> tuple[Monomial, ...]:
    if isinstance(gens, np.ndarray):
        return _minimal_array(gens)
    cands = set(gens)
    if len(cands) > _VECTOR_THRESHOLD:
        return _minimal_array(np.array(sorted(cands), dtype=np.int64))
    cands = sorted(cands, key=sum)
    kept: list[Monomial] = []
    for m in cands:
        for g in kept:
            if divides(g, m):
                break
        else:
            kept.append(m)
    kept.sort(key=canonical_key)
    return tuple(kept)


@dataclass(frozen=True)
class MonomialIdeal:
    """An ideal generated by monomials, stored by its minimal generators.

    The zero ideal has no generators; the unit ideal has the single generator
    ``(0, ..., 0)``.  Construct through :func:`minimalize` (or the
    classmethods) unless ``gens`` is already a canonical antichain.
    """

    ambient: VariableSet
    gens: tuple[Monomial, ...]

    @classmethod
    def of(cls, ambient: VariableSet, gens: Iterable[Sequence[int]]) -> MonomialIdeal:
        return minimalize([tuple(g) for g in gens], ambient)

    @classmethod
    def zero(cls, ambient: VariableSet) -> MonomialIdeal:
        return cls(ambient, ())

    @classmethod
    def unit(cls, ambient: VariableSet) -> MonomialIdeal:
        return cls(ambient, (ambient.unit(),))

    @classmethod
    def variables(cls, ambient: VariableSet, indices: Iterable[int]) -> MonomialIdeal:
        """The monomial prime generated by the variables at ``indices``."""
        return cls.of(ambient, [ambient.variable(i) for i in indices])

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return len(self.gens) == 1 and not any(self.gens[0])

    @property
    def max_degree(self) -> int:
        return max((sum(g) for g in self.gens), default=0)

    def max_exponents(self) -> tuple[int, ...]:
        return tuple(max((g[i] for g in self.gens), default=0) for i in range(self.ambient.arity))

    def __len__(self):
        return len(self.gens)

    def __contains__(self, m: Monomial) -> bool:
        return contains(self, m)

    def __str__(self):
        if self.is_zero:
            return "0"
        return ", ".join(format_monomial(g, self.ambient) for g in self.gens)

    def __repr__(self):
        return f"MonomialIdeal<{self}>"

    def __add__(self, other):
        return sum_ideals(self, other)

    def __mul__(self, other):
        return multiply(self, other)

    def __and__(self, other):
        return intersect(self, other)

    def __pow__(self, n):
        return power(self, n)


def _check_same(*ideals: MonomialIdeal) -> VariableSet:
    ambient = ideals[0].ambient
    for J in ideals[1:]:
        if J.ambient != ambient:
            raise IdealError(f"incompatible ambients {ambient} and {J.ambient}")
    return ambient


def minimalize(gens: Iterable[Monomial], ambient: VariableSet) -> MonomialIdeal:
    """The ideal generated by ``gens``, reduced to its divisibility antichain."""
    gens = list(gens)
    for g in gens:
        if len(g) != ambient.arity:
            raise IdealError(f"monomial {g} does not live over {ambient}")
        if any(e < 0 for e in g):
            raise IdealError(f"negative exponent in {g}")
    return MonomialIdeal(ambient, _minimal(gens))


def parse_ideal(text: str, ambient: VariableSet) -> MonomialIdeal:
    """Parse ``"x^2, x*y"``-style text over ``ambient``.

    ``"0"`` (or an empty string) is accepted as the zero ideal.
    """
    text = text.strip()
    if text in ("", "0"):
        return MonomialIdeal.zero(ambient)
    monos = [parse_monomial(tok, ambient) for tok in text.split(",")]
    return minimalize(monos, ambient)


def contains(I: MonomialIdeal, m: Monomial) -> bool:
    for g in I.gens:
        if divides(g, m):
            return True
    return False


def is_subideal(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    """True when ``I`` is contained in ``J``."""
    return all(contains(J, g) for g in I.gens)


def sum_ideals(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    ambient = _check_same(I, J)
    return MonomialIdeal(ambient, _minimal(I.gens + J.gens))


def multiply(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    ambient = _check_same(I, J)
    return MonomialIdeal(ambient, _minimal(mono_mul(g, h) for g in I.gens for h in J.gens))


def power(I: MonomialIdeal, n: int) -> MonomialIdeal:
    if n < 0:
        raise IdealError("negative power")
    out = MonomialIdeal.unit(I.ambient)
    for _ in range(n):
        out = multiply(out, I)
    return out


def intersect(*ideals: MonomialIdeal) -> MonomialIdeal:
    """Intersection of one or more ideals (lcms of generator pairs)."""
    if not ideals:
        raise IdealError("intersect needs at least one ideal")
    _check_same(*ideals)
    return reduce(_intersect2, ideals)


def _intersect2(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    if I.is_unit:
        return J
    if J.is_unit:
        return I
    if len(I.gens) * len(J.gens) > _VECTOR_THRESHOLD:
        a = np.array(I.gens, dtype=np.int64)
        b = np.array(J.gens, dtype=np.int64)
        lcms = np.maximum(a[:, None, :], b[None, :, :]).reshape(-1, a.shape[1])
        return MonomialIdeal(I.ambient, _minimal(lcms))
    return MonomialIdeal(I.ambient, _minimal(mono_lcm(g, h) for g in I.gens for h in J.gens))


def colon_monomial(I: MonomialIdeal, m: Monomial) -> MonomialIdeal:
    return MonomialIdeal(I.ambient, _minimal(mono_quotient(g, m) for g in I.gens))


def colon(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """``I : J``; ``J`` must be nonzero."""
    _check_same(I, J)
    if J.is_zero:
        raise IdealError("colon by the zero ideal")
    return intersect(*(colon_monomial(I, h) for h in J.gens))


def saturate(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """``I : J^infinity``, the stable value of repeated colons by ``J``."""
    _check_same(I, J)
    if J.is_zero:
        raise IdealError("saturation by the zero ideal")
    if len(J.gens) == 1:
        # principal: kill every variable dividing the generator
        supp = support(J.gens[0])
        return MonomialIdeal(I.ambient, _minimal(
            tuple(0 if i in supp else e for i, e in enumerate(g)) for g in I.gens))
    cur = I
    while True:
        nxt = colon(cur, J)
        if nxt == cur:
            return cur
        cur = nxt


def radical(I: MonomialIdeal) -> MonomialIdeal:
    return MonomialIdeal(I.ambient, _minimal(tuple(1 if e else 0 for e in g) for g in I.gens))


def standard_monomials_below(I: MonomialIdeal, bound: int) -> list[Monomial]:
    """Monomials of total degree at most ``bound`` outside ``I``.

    Ordered by degree, then lexicographically (largest first) within a degree.
    """
    if bound < 0:
        raise IdealError("degree bound must be non-negative")
    k = I.ambient.arity
    out = []
    for d in range(bound + 1):
        layer = []
        for combo in combinations_with_replacement(range(k), d):
            e = [0] * k
            for i in combo:
                e[i] += 1
            m = tuple(e)
            if not contains(I, m):
                layer.append(m)
        layer.sort(key=canonical_key)
        out.extend(layer)
    return out
