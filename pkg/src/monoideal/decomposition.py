"""Irreducible and primary decompositions of monomial ideals.

An irreducible monomial ideal is generated by pure powers of variables, so it
is stored as a map from variable index to exponent.  The irredundant
irreducible decomposition of a monomial ideal is unique; it is found by
splitting mixed generators and then discarding components that contain
another one.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .core import (
    IdealError,
    MonomialIdeal,
    VariableSet,
    format_monomial,
    intersect,
    is_subideal,
    minimalize,
    radical,
    support,
    sum_ideals,
)


class UnitIdealError(IdealError):
    """Decomposition-facing operations need a proper ideal."""


class NotEmbeddedError(IdealError):
    pass


class MembershipNotVerified(IdealError):
    """A candidate component could not be shown to occur in an irredundant
    primary decomposition of the ideal (the mix-in test failed)."""


@dataclass(frozen=True)
class PrimeSupport:
    """The monomial prime generated by the variables at ``vars``.

    The empty set stands for the zero prime, which only shows up as the
    associated prime of the zero ideal.
    """

    vars: frozenset[int]

    def __init__(self, vars: Iterable[int]):
        object.__setattr__(self, "vars", frozenset(vars))

    @property
    def height(self) -> int:
        return len(self.vars)

    def ideal(self, ambient: VariableSet) -> MonomialIdeal:
        return MonomialIdeal.variables(ambient, self.vars)

    def names(self, ambient: VariableSet) -> list[str]:
        return [ambient.names[i] for i in sorted(self.vars)]

    def sort_key(self):
        return (len(self.vars), sorted(self.vars))

    def __le__(self, other: PrimeSupport) -> bool:
        return self.vars <= other.vars

    def __lt__(self, other: PrimeSupport) -> bool:
        return self.vars < other.vars


@dataclass(frozen=True)
class IrreducibleComponent:
    """``<x_i^a_i : i in powers>``; empty ``powers`` is the zero ideal."""

    ambient: VariableSet
    powers: tuple[tuple[int, int], ...]

    @classmethod
    def from_map(cls, ambient: VariableSet, powers: dict[int, int]) -> IrreducibleComponent:
        for i, a in powers.items():
            if a < 1:
                raise IdealError("irreducible component exponents must be positive")
        return cls(ambient, tuple(sorted(powers.items())))

    @property
    def prime(self) -> PrimeSupport:
        return PrimeSupport(i for i, _ in self.powers)

    def ideal(self) -> MonomialIdeal:
        return minimalize([self.ambient.variable(i, a) for i, a in self.powers], self.ambient)

    def contains_component(self, other: IrreducibleComponent) -> bool:
        """True when ``other`` is a subideal of ``self``."""
        mine = dict(self.powers)
        theirs = dict(other.powers)
        return all(j in mine and mine[j] <= b for j, b in theirs.items())

    def __str__(self):
        return str(self.ideal())


@dataclass(frozen=True)
class PrimaryComponent:
    ideal: MonomialIdeal
    prime: PrimeSupport

    def to_json(self) -> dict:
        return {"prime": self.prime.names(self.ideal.ambient), "ideal": str(self.ideal)}


@dataclass(frozen=True)
class Decomposition:
    target: MonomialIdeal
    components: tuple[PrimaryComponent, ...] = field(default=())

    def to_json(self) -> dict:
        return {"target": str(self.target), "components": [c.to_json() for c in self.components]}


def _require_proper(I: MonomialIdeal):
    if I.is_unit:
        raise UnitIdealError("the unit ideal has no decomposition")


def _component_of(I: MonomialIdeal) -> IrreducibleComponent | None:
    powers = {}
    for g in I.gens:
        supp = support(g)
        if len(supp) != 1:
            return None
        (i,) = supp
        powers[i] = g[i]
    return IrreducibleComponent.from_map(I.ambient, powers)


def _split(I: MonomialIdeal, memo: dict) -> frozenset[IrreducibleComponent]:
    hit = memo.get(I)
    if hit is not None:
        return hit
    comp = _component_of(I)
    if comp is not None:
        out = frozenset([comp])
    else:
        m = next(g for g in I.gens if len(support(g)) >= 2)
        i = min(support(m))
        pure = I.ambient.variable(i, m[i])
        rest = tuple(0 if j == i else e for j, e in enumerate(m))
        left = sum_ideals(I, MonomialIdeal(I.ambient, (pure,)))
        right = sum_ideals(I, MonomialIdeal(I.ambient, (rest,)))
        out = _split(left, memo) | _split(right, memo)
    memo[I] = out
    return out


def _irredundant(comps: Iterable[IrreducibleComponent]) -> list[IrreducibleComponent]:
    comps = list(set(comps))
    keep = [c for c in comps
            if not any(d != c and c.contains_component(d) for d in comps)]
    return sorted(keep, key=_component_key)


def _component_key(c: IrreducibleComponent):
    return (c.prime.sort_key(), c.powers)


def irreducible_decomposition(I: MonomialIdeal) -> list[IrreducibleComponent]:
    """The unique irredundant irreducible decomposition of a proper ideal.

    Returned in a fixed order (by prime height, prime, then exponents).
    """
    _require_proper(I)
    return _irredundant(_split(I, {}))


def associated_primes(I: MonomialIdeal) -> list[PrimeSupport]:
    _require_proper(I)
    primes = {c.prime for c in irreducible_decomposition(I)}
    return sorted(primes, key=PrimeSupport.sort_key)


def minimal_primes(I: MonomialIdeal) -> list[PrimeSupport]:
    ass = associated_primes(I)
    return [p for p in ass if not any(q < p for q in ass)]


def embedded_primes(I: MonomialIdeal) -> list[PrimeSupport]:
    ass = associated_primes(I)
    return [p for p in ass if any(q < p for q in ass)]


def bight(I: MonomialIdeal) -> int:
    """Largest height of a minimal prime."""
    if I.is_zero:
        raise IdealError("bight of the zero ideal is not defined here")
    # minimal primes of I are those of its radical, which splits cheaply
    return max(p.height for p in minimal_primes(radical(I)))


def canonical_primary_decomposition(I: MonomialIdeal) -> Decomposition:
    """Group the irreducible components by prime; one component per prime."""
    comps = irreducible_decomposition(I)
    by_prime: dict[PrimeSupport, list[IrreducibleComponent]] = {}
    for c in comps:
        by_prime.setdefault(c.prime, []).append(c)
    primary = tuple(
        PrimaryComponent(intersect(*(c.ideal() for c in group)), p)
        for p, group in sorted(by_prime.items(), key=lambda kv: kv[0].sort_key()))
    return Decomposition(I, primary)


def canonical_component(I: MonomialIdeal, p: PrimeSupport) -> PrimaryComponent:
    for Q in canonical_primary_decomposition(I).components:
        if Q.prime == p:
            return Q
    raise IdealError(f"{sorted(p.vars)} is not an associated prime")


def is_primary_at(Q: MonomialIdeal, p: PrimeSupport) -> bool:
    """True when every irreducible component of ``Q`` has support ``p``."""
    if Q.is_unit:
        return False
    return all(c.prime == p for c in irreducible_decomposition(Q))


def is_irredundant_primary_decomposition(I: MonomialIdeal,
                                         comps: Sequence[PrimaryComponent]) -> bool:
    if not comps:
        return False
    primes = [c.prime for c in comps]
    if len(set(primes)) != len(primes):
        return False
    if not all(is_primary_at(c.ideal, c.prime) for c in comps):
        return False
    ideals = [c.ideal for c in comps]
    if intersect(*ideals) != I:
        return False
    for k in range(len(ideals)):
        others = ideals[:k] + ideals[k + 1:]
        if others and intersect(*others) == I:
            return False
    return True


def ir_components(I: MonomialIdeal) -> int:
    """Index of reducibility, counted from the irreducible decomposition."""
    return len(irreducible_decomposition(I))


def ir_at_prime(I: MonomialIdeal, p: PrimeSupport) -> int:
    return sum(1 for c in irreducible_decomposition(I) if c.prime == p)


def mix_in(I: MonomialIdeal, Q: PrimaryComponent) -> list[PrimaryComponent]:
    """The canonical decomposition of ``I`` with the ``Q.prime`` slot replaced by ``Q``."""
    canon = canonical_primary_decomposition(I).components
    return [Q if c.prime == Q.prime else c for c in canon]


def is_maximal_embedded_component(I: MonomialIdeal, Q: PrimaryComponent) -> bool:
    """Decide maximality of an embedded component by comparing its index of
    reducibility with the socle dimension of ``I`` at its prime.

    Raises :class:`NotEmbeddedError` if the prime is not embedded, and
    :class:`MembershipNotVerified` if ``Q`` cannot be mixed into the canonical
    decomposition irredundantly.
    """
    from .socle import socle_dimension_at

    if Q.prime not in embedded_primes(I):
        raise NotEmbeddedError(f"{Q.prime.names(I.ambient)} is not an embedded prime of {I}")
    if not is_subideal(I, Q.ideal) or not is_irredundant_primary_decomposition(I, mix_in(I, Q)):
        raise MembershipNotVerified(f"{Q.ideal} could not be verified as a component of {I}")
    return ir_components(Q.ideal) == socle_dimension_at(I, Q.prime)


def format_components(comps: Iterable[IrreducibleComponent]) -> list[str]:
    return [str(c) for c in comps]


def describe_prime(p: PrimeSupport, ambient: VariableSet) -> str:
    if not p.vars:
        return "(0)"
    return "(" + ", ".join(format_monomial(ambient.variable(i), ambient) for i in sorted(p.vars)) + ")"
