import random

import pytest
from hypothesis import given, settings

from flagforge.errors import AllZeroGenerators, CtxMismatch, EnumerationCapExceeded, ScaleByZero
from flagforge.ffield import ZERO, build_field
from flagforge.subspace import Subspace, intersect, subspace_distance, subspace_sum
from helpers import dim_of_count, element_set, random_subspace, subspace_pairs


def test_subfield_subspaces():
    K = build_field(2, 16)
    for m in (1, 2, 4, 8):
        S = Subspace.subfield(K, m)
        assert S.dim == m
        assert len(S.enumerate_elements()) == 2**m
        assert element_set(S) == {0} | {K.code_of(K.elem(K.subfield_exponent(m) * j)) for j in range(2**m - 1)}


def test_generator_order_does_not_matter():
    K = build_field(3, 4)
    gens = [K.elem(e) for e in (5, 17, 40)]
    a = Subspace.from_generators(K, gens)
    b = Subspace.from_generators(K, list(reversed(gens)) + [K.add(gens[0], gens[1])])
    assert a == b and hash(a) == hash(b)
    assert a.dim == 3


def test_errors():
    K = build_field(2, 4)
    with pytest.raises(AllZeroGenerators):
        Subspace.from_generators(K, [ZERO])
    assert Subspace.from_generators(K, [ZERO], allow_zero=True).dim == 0
    with pytest.raises(CtxMismatch):
        Subspace.whole(K) + Subspace.whole(build_field(2, 5))
    with pytest.raises(ScaleByZero):
        Subspace.whole(K).scale(ZERO)
    with pytest.raises(EnumerationCapExceeded):
        Subspace.whole(build_field(2, 16)).enumerate_elements(cap=2**10)


def test_distance_examples():
    K = build_field(3, 8)
    F9 = Subspace.subfield(K, 2)
    assert subspace_distance(F9, F9.scale_exp(82)) == 4  # trivial intersection of two planes
    assert subspace_distance(F9, Subspace.subfield(K, 4)) == 2
    assert subspace_distance(Subspace.zero(K), Subspace.whole(K)) == 8


def test_contains_and_enumeration_zero_first():
    K = build_field(5, 2)
    U = Subspace.from_generators(K, [K.elem(3)])
    elems = U.enumerate_elements()
    assert elems[0] == ZERO and len(elems) == 5
    assert all(U.contains(x) for x in elems)
    assert sum(U.contains(K.elem(e)) for e in range(K.order_star)) == 4


@settings(max_examples=1000)
@given(subspace_pairs())
def test_dimension_formula(pair):
    U, V = pair
    p = U.ctx.p
    S, I = subspace_sum(U, V), intersect(U, V)
    assert S.dim + I.dim == U.dim + V.dim
    # intersection against element sets
    if p ** max(U.dim, V.dim) <= 2**12:
        assert element_set(I) == element_set(U) & element_set(V)
        assert I.dim == dim_of_count(len(element_set(U) & element_set(V)), p)
    assert U.issubspace(S) and V.issubspace(S) and I.issubspace(U) and I.issubspace(V)


@settings(max_examples=1000)
@given(subspace_pairs())
def test_subspace_distance_is_invariant_under_scaling(pair):
    U, V = pair
    e = random.Random(U.dim * 131 + V.dim).randrange(U.ctx.order_star)
    d = subspace_distance(U, V)
    assert d == U.dim + V.dim - 2 * intersect(U, V).dim
    assert subspace_distance(U.scale_exp(e), V.scale_exp(e)) == d
    assert U.scale_exp(e).dim == U.dim
    assert (d == 0) == (U == V)


@settings(max_examples=200)
@given(subspace_pairs())
def test_scaling_matches_elementwise_multiplication(pair):
    U, _ = pair
    K = U.ctx
    if K.p**U.dim > 2**12:
        return
    e = 7 % K.order_star
    scaled = {K.code_of(K.mul(K.from_code(c), K.elem(e))) for c in element_set(U)}
    assert element_set(U.scale_exp(e)) == scaled


def test_random_subspace_canonical_rows_are_reduced():
    K = build_field(3, 5)
    U = random_subspace(K, random.Random(3), 3)
    # rebuilding from its own rows is a fixed point
    assert Subspace.from_codes(K, U.rows) == U
    assert Subspace.from_codes(K, U.rows).rows == U.rows
