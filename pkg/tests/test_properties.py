"""Algebraic invariants on generated ideals, checked against brute-force oracles."""

import sympy
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from monoideal import (
    PrimeSupport,
    analytic_spread,
    associated_primes,
    colon,
    embedded_primes,
    intersect,
    ir_components,
    ir_socle,
    irreducible_decomposition,
    localize_at,
    minimalize,
    multiply,
    power,
    saturate,
    socle_dimension_at,
    standard_monomials_below,
    symbolic_power,
)
from monoideal.core import MonomialIdeal, VariableSet, contains, is_subideal
from monoideal.decomposition import (
    canonical_component,
    canonical_primary_decomposition,
    ir_at_prime,
    is_maximal_embedded_component,
    mix_in,
)
from monoideal.harness import perturb_embedded_component
from monoideal.socle import candidate_primes, relocalize, socle_dimension_at as sdim

from oracles import member, monomials_upto

SETTINGS = settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
AMBIENTS = {k: VariableSet(tuple("xyz"[:k])) for k in (2, 3)}


@st.composite
def gen_lists(draw, arity=None, max_exp=3, max_gens=4):
    k = arity or draw(st.sampled_from((2, 3)))
    mono = st.tuples(*[st.integers(0, max_exp)] * k).filter(any)
    return k, draw(st.lists(mono, min_size=1, max_size=max_gens))


@st.composite
def ideals(draw, arity=None, max_exp=3, max_gens=4):
    k, gens = draw(gen_lists(arity, max_exp, max_gens))
    return minimalize(gens, AMBIENTS[k])


@st.composite
def ideal_pairs(draw):
    k = draw(st.sampled_from((2, 3)))
    return draw(ideals(k)), draw(ideals(k))


def members(I, bound):
    return {m for m in monomials_upto(I.ambient.arity, bound) if member(I.gens, m)}


def bound_for(*Is):
    return max(I.max_degree for I in Is) + 2


@SETTINGS
@given(gen_lists())
def test_minimalize_is_canonical_antichain(data):
    k, gens = data
    I = minimalize(gens, AMBIENTS[k])
    for a in I.gens:
        for b in I.gens:
            assert a == b or not all(x <= y for x, y in zip(a, b))
    bound = max(sum(g) for g in gens) + 1
    assert all(member(gens, m) == contains(I, m) for m in monomials_upto(k, bound))
    assert minimalize(list(reversed(gens)) + gens[:1], AMBIENTS[k]) == I
    assert standard_monomials_below(I, bound) == \
        standard_monomials_below(MonomialIdeal(I.ambient, I.gens), bound)


@SETTINGS
@given(ideal_pairs(), st.data())
def test_colon_distributes_over_intersection(pair, data):
    I, J = pair
    m = data.draw(st.tuples(*[st.integers(0, 3)] * I.ambient.arity))
    M = MonomialIdeal(I.ambient, (m,))
    assert colon(intersect(I, J), M) == intersect(colon(I, M), colon(J, M))


@SETTINGS
@given(ideal_pairs())
def test_intersection_membership(pair):
    I, J = pair
    K = intersect(I, J)
    for m in monomials_upto(I.ambient.arity, bound_for(I, J)):
        assert contains(K, m) == (contains(I, m) and contains(J, m))


@SETTINGS
@given(ideals(max_gens=3), st.integers(0, 2), st.integers(0, 2))
def test_power_additive(I, a, b):
    assert power(I, a + b) == multiply(power(I, a), power(I, b))


@SETTINGS
@given(ideals())
def test_decomposition_sound_and_irredundant(I):
    comps = [c.ideal() for c in irreducible_decomposition(I)]
    assert members(intersect(*comps), bound_for(I)) == members(I, bound_for(I))
    assert intersect(*comps) == I
    for c in comps:
        for g in c.gens:
            assert sum(1 for e in g if e) == 1  # pure powers only
    if len(comps) > 1:
        for i in range(len(comps)):
            assert intersect(*(comps[:i] + comps[i + 1:])) != I


@SETTINGS
@given(gen_lists(), st.randoms(use_true_random=False))
def test_decomposition_canonical(data, rnd):
    k, gens = data
    I = minimalize(gens, AMBIENTS[k])
    shuffled = list(gens)
    rnd.shuffle(shuffled)
    redundant = [tuple(e + 1 for e in g) for g in gens]
    J = minimalize(shuffled + redundant, AMBIENTS[k])
    assert irreducible_decomposition(I) == irreducible_decomposition(J)


@SETTINGS
@given(ideal_pairs())
def test_ass_subadditive(pair):
    I, J = pair
    K = intersect(I, J)
    if K.is_unit:
        return
    assert set(associated_primes(K)) <= set(associated_primes(I)) | set(associated_primes(J))


@SETTINGS
@given(ideals())
def test_dual_route_and_per_prime(I):
    assert ir_socle(I) == ir_components(I)
    ass = set(associated_primes(I))
    for p in candidate_primes(I):
        d = socle_dimension_at(I, p)
        assert (d > 0) == (p in ass)
        if p in ass:
            assert d == ir_at_prime(I, p)


@SETTINGS
@given(ideals())
def test_grid_and_colon_socle_agree(I):
    for p in candidate_primes(I):
        assert sdim(I, p, "grid") == sdim(I, p, "colon")


@SETTINGS
@given(ideals())
def test_localization_idempotent(I):
    for p in candidate_primes(I):
        L = localize_at(I, p)
        assert relocalize(L) == L


@SETTINGS
@given(ideals())
def test_sufficiency_sum(I):
    comps = canonical_primary_decomposition(I).components
    assert sum(ir_components(Q.ideal) for Q in comps) == ir_components(I)


@SETTINGS
@given(ideals(max_gens=3), st.integers(1, 3))
def test_power_inside_symbolic(I, n):
    assert is_subideal(power(I, n), symbolic_power(I, n))


@SETTINGS
@given(ideals())
def test_symbolic_first_power(I):
    if not embedded_primes(I):
        assert symbolic_power(I, 1) == I


@SETTINGS
@given(ideals(max_gens=3))
def test_saturation_by_variable_product_kills_torsion(I):
    amb = I.ambient
    full = MonomialIdeal(amb, (tuple(1 for _ in range(amb.arity)),))
    S = saturate(I, full)
    assert is_subideal(I, S)
    assert colon(S, full) == S


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 3), st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3)),
                                    min_size=1, max_size=4))
def test_equigenerated_analytic_spread_is_lattice_rank(deg, raw):
    gens = sorted({(a, b, deg * 3 - a - b) for a, b, _ in raw if a + b <= deg * 3})
    if not gens:
        return
    I = minimalize(gens, AMBIENTS[3])
    assert analytic_spread(I, 8) == sympy.Matrix(list(I.gens)).rank()


def test_prime_support_order():
    assert PrimeSupport((0,)) < PrimeSupport((0, 1))


@settings(max_examples=30, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(ideals(arity=2))
def test_mixed_sum_exceeds_exactly_when_not_maximal(I):
    for p in embedded_primes(I):
        Q = perturb_embedded_component(I, p)
        if Q is None:
            continue
        total = sum(ir_components(c.ideal) for c in mix_in(I, Q))
        assert total >= ir_components(I)
        assert (total == ir_components(I)) == is_maximal_embedded_component(I, Q)
        canon = canonical_component(I, p)
        assert sum(ir_components(c.ideal) for c in mix_in(I, canon)) == ir_components(I)
