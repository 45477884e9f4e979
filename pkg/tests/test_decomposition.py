import pytest

from monoideal import (
    IdealError,
    MonomialIdeal,
    PrimaryComponent,
    PrimeSupport,
    associated_primes,
    bight,
    canonical_primary_decomposition,
    embedded_primes,
    intersect,
    ir_at_prime,
    ir_components,
    irreducible_decomposition,
    is_irredundant_primary_decomposition,
    is_maximal_embedded_component,
    minimal_primes,
    parse_ideal,
)
from monoideal.decomposition import MembershipNotVerified, NotEmbeddedError, UnitIdealError

from conftest import ideal
from oracles import intersection_members, member, monomials_upto

HEXAGON_PRIMES = [{0, 2, 4}, {1, 3, 5}, {0, 1, 3, 4}, {1, 2, 4, 5}, {2, 3, 5, 0}]


def comps(I):
    return {str(c) for c in irreducible_decomposition(I)}


def P(*vars):
    return PrimeSupport(vars)


class TestIrreducibleDecomposition:
    def test_example(self):
        I = ideal("x^2, x*y")
        assert comps(I) == {"x", "x^2, y"}
        parts = [c.ideal().gens for c in irreducible_decomposition(I)]
        assert intersection_members(parts, 2, 5) == {m for m in monomials_upto(2, 5) if member(I.gens, m)}

    def test_triangle(self, triangle):
        assert comps(triangle) == {"x, y", "y, z", "x, z"}
        parts = [c.ideal().gens for c in irreducible_decomposition(triangle)]
        assert intersection_members(parts, 3, 4) == \
            {m for m in monomials_upto(3, 4) if member(triangle.gens, m)}

    def test_hexagon(self, hexagon):
        got = [set(c.prime.vars) for c in irreducible_decomposition(hexagon)]
        assert sorted(map(sorted, got)) == sorted(map(sorted, HEXAGON_PRIMES))
        # every component is prime (all exponents 1)
        assert all(a == 1 for c in irreducible_decomposition(hexagon) for _, a in c.powers)

    def test_irreducible_input(self):
        assert comps(ideal("x^2, y^3")) == {"x^2, y^3"}

    def test_zero_ideal(self, xy):
        (c,) = irreducible_decomposition(MonomialIdeal.zero(xy))
        assert c.powers == () and c.ideal().is_zero

    def test_unit_rejected(self, xy):
        with pytest.raises(UnitIdealError):
            irreducible_decomposition(MonomialIdeal.unit(xy))

    def test_deterministic_order(self, xyz):
        a = parse_ideal("x^2*y, y^2*z, x*z^3", xyz)
        b = parse_ideal("x*z^3, x^2*y, y^2*z, x^2*y^2", xyz)
        assert irreducible_decomposition(a) == irreducible_decomposition(b)


class TestPrimes:
    def test_example(self):
        I = ideal("x^2, x*y")
        assert associated_primes(I) == [P(0), P(0, 1)]
        assert minimal_primes(I) == [P(0)]
        assert embedded_primes(I) == [P(0, 1)]

    def test_hexagon(self, hexagon):
        ass = associated_primes(hexagon)
        assert sorted(p.height for p in ass) == [3, 3, 4, 4, 4]
        assert embedded_primes(hexagon) == []

    def test_prime(self):
        assert associated_primes(ideal("x, y")) == [P(0, 1)]

    def test_triangle_all_minimal(self, triangle):
        assert len(minimal_primes(triangle)) == 3 and embedded_primes(triangle) == []

    def test_primary(self):
        I = ideal("x^2, y^2")
        assert minimal_primes(I) == [P(0, 1)] and embedded_primes(I) == []


class TestBight:
    def test_values(self, hexagon):
        assert bight(ideal("x^2, x*y")) == 1
        assert bight(hexagon) == 4
        assert bight(ideal("x, y", "x,y,z")) == 2

    def test_errors(self, xy):
        with pytest.raises(IdealError):
            bight(MonomialIdeal.unit(xy))
        with pytest.raises(IdealError):
            bight(MonomialIdeal.zero(xy))


class TestCanonicalPrimary:
    def test_example(self):
        dec = canonical_primary_decomposition(ideal("x^2, x*y"))
        assert [(str(Q.ideal), Q.prime) for Q in dec.components] == [("x", P(0)), ("x^2, y", P(0, 1))]
        assert dec.to_json() == {"target": "x^2, x*y", "components": [
            {"prime": ["x"], "ideal": "x"}, {"prime": ["x", "y"], "ideal": "x^2, y"}]}

    def test_hexagon(self, hexagon):
        dec = canonical_primary_decomposition(hexagon)
        assert len(dec.components) == 5
        assert all(Q.ideal == Q.prime.ideal(hexagon.ambient) for Q in dec.components)

    def test_irreducible(self):
        I = ideal("x^2, y^3")
        (Q,) = canonical_primary_decomposition(I).components
        assert Q.ideal == I

    def test_groups_components(self, xyz):
        # two irreducible components share the prime (x,y)
        I = parse_ideal("x^2, x*y^2, y^3, x*z", xyz)
        dec = canonical_primary_decomposition(I)
        assert is_irredundant_primary_decomposition(I, list(dec.components))
        assert sum(ir_components(Q.ideal) for Q in dec.components) == ir_components(I)


class TestIrredundantCheck:
    def test_canonical(self):
        I = ideal("x^2, x*y")
        assert is_irredundant_primary_decomposition(I, [
            PrimaryComponent(ideal("x"), P(0)), PrimaryComponent(ideal("x^2, y"), P(0, 1))])

    def test_duplicate_prime(self):
        I = ideal("x^2, x*y")
        assert not is_irredundant_primary_decomposition(I, [
            PrimaryComponent(ideal("x"), P(0)), PrimaryComponent(ideal("x^2, y"), P(0, 1)),
            PrimaryComponent(ideal("x^3, y^2"), P(0, 1))])

    def test_wrong_intersection(self):
        I = ideal("x^2, x*y")
        assert not is_irredundant_primary_decomposition(I, [
            PrimaryComponent(ideal("x"), P(0)), PrimaryComponent(ideal("x, y^2"), P(0, 1))])

    def test_non_maximal_component(self):
        I = ideal("x^2, x*y")
        assert is_irredundant_primary_decomposition(I, [
            PrimaryComponent(ideal("x"), P(0)), PrimaryComponent(ideal("x^2, x*y, y^2"), P(0, 1))])

    def test_redundant_component(self):
        I = ideal("x^2, y")
        assert not is_irredundant_primary_decomposition(I, [
            PrimaryComponent(ideal("x^2, y"), P(0, 1)), PrimaryComponent(ideal("y"), P(1))])


class TestIrCounts:
    def test_values(self, hexagon):
        assert ir_components(ideal("x^2, x*y")) == 2
        assert ir_components(hexagon) == 5
        assert ir_components(ideal("x^4, y^7")) == 1
        assert ir_components(MonomialIdeal.zero(hexagon.ambient)) == 1

    def test_at_prime(self):
        I = ideal("x^2, x*y")
        assert ir_at_prime(I, P(0, 1)) == 1
        assert ir_at_prime(I, P(0)) == 1
        assert ir_at_prime(I, P(1)) == 0


class TestMaximalEmbedded:
    def test_canonical_is_maximal(self):
        I = ideal("x^2, x*y")
        assert is_maximal_embedded_component(I, PrimaryComponent(ideal("x^2, y"), P(0, 1)))

    def test_smaller_is_not(self):
        I = ideal("x^2, x*y")
        assert not is_maximal_embedded_component(I, PrimaryComponent(ideal("x^2, x*y, y^2"), P(0, 1)))

    @pytest.mark.parametrize("k", [2, 3, 4, 5, 7])
    def test_family(self, k):
        I = ideal("x^2, x*y")
        Q = ideal(f"x^2, x*y, y^{k}")
        assert ir_components(Q) == 2
        assert not is_maximal_embedded_component(I, PrimaryComponent(Q, P(0, 1)))

    def test_not_embedded(self):
        with pytest.raises(NotEmbeddedError):
            is_maximal_embedded_component(ideal("x^2, x*y"), PrimaryComponent(ideal("x"), P(0)))

    def test_not_a_component(self):
        # x^3 ideal meets <x> in <x^3>, which is not I
        with pytest.raises(MembershipNotVerified):
            is_maximal_embedded_component(ideal("x^2, x*y"), PrimaryComponent(ideal("x^3, y"), P(0, 1)))


def test_canonical_decomposition_intersects_back(xyz):
    I = parse_ideal("x^3*y, x*y^2*z, z^2*y, x^2*z^3", xyz)
    dec = canonical_primary_decomposition(I)
    assert intersect(*(Q.ideal for Q in dec.components)) == I
