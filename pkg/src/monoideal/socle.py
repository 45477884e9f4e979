"""Localization at monomial primes and socle dimensions.

Localizing a monomial ideal at the prime generated by a set of variables
amounts to setting every other variable to 1.  The socle of the localized
quotient is spanned by monomials, so its dimension over the residue field is
a monomial count.  Summing those counts over all primes gives the index of
reducibility without ever building a decomposition.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import prod

import numpy as np

from .core import (
    IdealError,
    MonomialIdeal,
    colon,
    contains,
    intersect,
    minimalize,
    saturate,
    support,
)
from .decomposition import PrimeSupport, UnitIdealError, ir_at_prime, ir_components


class SocleGuardError(AssertionError):
    """A socle monomial fell outside the region where socle elements must lie."""


class RouteMismatch(AssertionError):
    """The two routes to the index of reducibility disagreed."""


@dataclass(frozen=True)
class LocalizedIdeal:
    """``I`` localized at ``prime``, living in the polynomial ring on ``prime``'s variables."""

    prime: PrimeSupport
    restricted: MonomialIdeal

    @property
    def is_unit(self) -> bool:
        return self.restricted.is_unit


def localize_at(I: MonomialIdeal, p: PrimeSupport) -> LocalizedIdeal:
    if I.is_unit:
        raise UnitIdealError("cannot localize the unit ideal")
    if not p.vars:
        raise IdealError("localizing at the zero prime leaves no variables")
    idx = sorted(p.vars)
    sub = I.ambient.sub(idx)
    return LocalizedIdeal(p, minimalize([tuple(g[i] for i in idx) for g in I.gens], sub))


def relocalize(L: LocalizedIdeal) -> LocalizedIdeal:
    """Localize a localized ideal at its own (full) prime again."""
    full = PrimeSupport(range(L.restricted.ambient.arity))
    again = localize_at(L.restricted, full) if not L.restricted.is_unit else L
    return LocalizedIdeal(L.prime, again.restricted)


# largest exponent box the grid method will allocate
GRID_LIMIT = 20_000_000


def socle_monomials_grid(J: MonomialIdeal) -> list[tuple[int, ...]]:
    """Monomials ``u`` outside ``J`` with ``x_i * u`` in ``J`` for every variable.

    Such ``u`` satisfy ``u_i < max exponent of x_i``, so membership on the box
    ``[0, max_i]`` decides everything.  Membership is a prefix-OR of the
    generator indicator along each axis.
    """
    caps = J.max_exponents()
    if not all(caps):
        return []
    shape = tuple(c + 1 for c in caps)
    member = np.zeros(shape, dtype=bool)
    member[tuple(np.array(J.gens).T)] = True
    for axis in range(len(shape)):
        member = np.logical_or.accumulate(member, axis=axis)
    inner = tuple(slice(0, c) for c in caps)
    sock = ~member[inner]
    for axis in range(len(shape)):
        shifted = tuple(slice(1, c + 1) if a == axis else slice(0, c) for a, c in enumerate(caps))
        sock &= member[shifted]
    return [tuple(int(e) for e in u) for u in np.argwhere(sock)]


def socle_monomials_colon(J: MonomialIdeal) -> list[tuple[int, ...]]:
    """Same set as :func:`socle_monomials_grid`, read off ``(J : m) & (J : m^inf)``."""
    m = MonomialIdeal.variables(J.ambient, range(J.ambient.arity))
    torsion = intersect(colon(J, m), saturate(J, m))
    # every monomial of torsion outside J is killed by m, so it is a minimal
    # generator of torsion; those are all there is to count
    socle = [g for g in torsion.gens if not contains(J, g)]
    caps = J.max_exponents()
    for u in socle:
        if any(e >= c for e, c in zip(u, caps)):
            raise SocleGuardError(f"socle monomial {u} escapes the box {caps} for {J}")
    return socle


def socle_dimension_at(I: MonomialIdeal, p: PrimeSupport, method: str = "auto") -> int:
    """Dimension of the socle of ``(R/I)_p`` over the residue field at ``p``.

    ``method`` is ``"grid"``, ``"colon"`` or ``"auto"`` (grid unless the
    exponent box is huge).
    """
    if I.is_unit:
        raise UnitIdealError("socle of the zero module")
    if not p.vars:
        # only the zero ideal has the zero prime associated: R_(0) is a field
        return 1 if I.is_zero else 0
    J = localize_at(I, p).restricted
    if J.is_unit or J.is_zero:
        return 0
    if method == "auto":
        method = "grid" if prod(c + 1 for c in J.max_exponents()) <= GRID_LIMIT else "colon"
    if method == "grid":
        return len(socle_monomials_grid(J))
    if method == "colon":
        return len(socle_monomials_colon(J))
    raise ValueError(f"unknown socle method {method!r}")


def candidate_primes(I: MonomialIdeal) -> list[PrimeSupport]:
    """Every monomial prime at which ``R/I`` can have nonzero socle.

    Associated primes only involve variables that occur in some generator,
    and must meet every generator's support.
    """
    if I.is_zero:
        return [PrimeSupport(())]
    used = sorted(set().union(*(support(g) for g in I.gens)))
    supports = [support(g) for g in I.gens]
    out = []
    for r in range(1, len(used) + 1):
        for combo in combinations(used, r):
            s = frozenset(combo)
            if all(s & sp for sp in supports):
                out.append(PrimeSupport(s))
    return out


def socle_profile(I: MonomialIdeal) -> dict[PrimeSupport, int]:
    """Nonzero socle dimensions, keyed by prime; the keys are exactly Ass(R/I)."""
    if I.is_unit:
        raise UnitIdealError("the unit ideal has no associated primes")
    out = {}
    for p in candidate_primes(I):
        s = socle_dimension_at(I, p)
        if s:
            out[p] = s
    return out


def associated_primes_socle(I: MonomialIdeal) -> list[PrimeSupport]:
    return sorted(socle_profile(I), key=PrimeSupport.sort_key)


def ir_socle(I: MonomialIdeal) -> int:
    """Index of reducibility as the sum of socle dimensions over associated primes."""
    return sum(socle_profile(I).values())


def ir(I: MonomialIdeal, verify: bool = False) -> int:
    """Index of reducibility of a proper monomial ideal.

    With ``verify=True`` the count from the irreducible decomposition is
    computed as well and compared, prime by prime.
    """
    if I.is_unit:
        raise UnitIdealError("ir of the unit ideal")
    profile = socle_profile(I)
    total = sum(profile.values())
    if verify:
        if ir_components(I) != total:
            raise RouteMismatch(f"ir mismatch on {I}: components {ir_components(I)} vs socle {total}")
        for p, s in profile.items():
            if ir_at_prime(I, p) != s:
                raise RouteMismatch(f"per-prime mismatch on {I} at {sorted(p.vars)}")
    return total
