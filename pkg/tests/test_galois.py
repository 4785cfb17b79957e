import csv
from math import lcm
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from flagforge.errors import EnumerationCapExceeded, NotADivisor, NotDivisorChain
from flagforge.ffield import build_field
from flagforge.flag import Flag
from flagforge.galois import galois_distance, galois_flag, galois_row, galois_table, galois_type, spread_structure_check
from flagforge.ntheory import divisors
from flagforge.orbit import best_friend, min_distance, orbit, subgroup
from flagforge.subspace import Subspace

GOLDEN = Path(__file__).parent / "golden"


def test_type_validation():
    g = galois_type(2, 16, (2, 4, 8))
    assert g.c == (21845, 4369, 257)
    assert all(a % b == 0 for a, b in zip(g.c, g.c[1:]))
    for bad in [(1, 3), (2, 3), (4, 2), (2, 16), ()]:
        with pytest.raises(NotDivisorChain):
            galois_type(2, 16 if bad != (1, 3) else 4, bad)


def test_galois_flag_is_the_subfield_tower():
    K = build_field(3, 8)
    F = galois_flag(K, galois_type(3, 8, (2, 4)))
    assert F == Flag([Subspace.subfield(K, 2), Subspace.subfield(K, 4)])
    K16 = build_field(2, 16)
    assert best_friend(galois_flag(K16, galois_type(2, 16, (2, 4, 8)))).m == 2


def test_closed_form_distances():
    g = galois_type(2, 16, (2, 4, 8))
    assert galois_distance(g, 5) == 12
    assert galois_distance(g, 85) == 28
    assert galois_distance(g, 21845) == 0
    assert galois_distance(g, 1) == 4
    with pytest.raises(NotADivisor):
        galois_distance(g, 7)


def test_table_matches_golden_transcription():
    rows = galois_table(galois_type(2, 16, (2, 4, 8)))
    with open(GOLDEN / "galois_p2_n16_t2-4-8.csv") as fh:
        expected = [{k: int(v) for k, v in r.items()} for r in csv.DictReader(fh)]
    assert [r.as_dict((2, 4, 8)) for r in rows] == expected
    assert rows[1] == galois_row(galois_type(2, 16, (2, 4, 8)), 3)
    assert (rows[1].beta_order, rows[1].stab_orders, rows[1].orbit_size, rows[1].distance) == (21845, (1, 5, 85), 21845, 4)


def test_table_3_8_first_row():
    row = galois_row(galois_type(3, 8, (2, 4)), 1)
    assert (row.orbit_size, row.distance) == (820, 4)


GALOIS_CASES = [(2, 8, (2, 4)), (2, 12, (2, 4)), (2, 12, (2, 6)), (3, 8, (2, 4)), (2, 12, (3, 6)), (3, 4, (1, 2)), (2, 6, (1, 2)), (2, 6, (1, 3)), (5, 4, (1, 2))]


@settings(max_examples=300)
@given(st.sampled_from(GALOIS_CASES).flatmap(lambda c: st.tuples(st.just(c), st.sampled_from(divisors(c[0] ** c[1] - 1)))))
def test_row_invariants(case):
    (p, n, tv), l = case
    g = galois_type(p, n, tv)
    row = galois_row(g, l)
    assert list(row.stab_orders) == sorted(row.stab_orders)
    assert row.orbit_size == lcm(l, g.c[0]) // l
    partial = [2 * sum(tv[:j]) for j in range(len(tv) + 1)]
    assert row.distance in partial
    # maximum distance exactly when Stab(F_1) = Stab(F_r) is a proper subgroup of <beta>
    assert (row.distance == 2 * sum(tv)) == (row.stab_orders[0] == row.stab_orders[-1] < g.order_star // l)


@pytest.mark.parametrize("p,n,tv", [(2, 8, (2, 4)), (2, 6, (1, 2)), (2, 6, (1, 3)), (3, 4, (1, 2)), (2, 12, (3, 6))])
def test_closed_form_agrees_with_enumeration_small(p, n, tv):
    K = build_field(p, n)
    g = galois_type(p, n, tv)
    F = galois_flag(K, g)
    for l in divisors(K.order_star):
        code = orbit(F, subgroup(K, l))
        row = galois_row(g, l)
        assert (row.orbit_size, row.stab_orders, row.distance) == (
            code.size, code.stab_orders_per_level, min_distance(code)
        )


def test_full_group_code_has_distance_2t1_and_size_c1():
    for p, n, tv in [(2, 12, (2, 4)), (3, 8, (2, 4))]:
        g = galois_type(p, n, tv)
        row = galois_row(g, 1)
        assert (row.distance, row.orbit_size) == (2 * tv[0], g.c[0])


def test_spread_structure():
    K = build_field(2, 8)
    g = galois_type(2, 8, (2, 4))
    v = spread_structure_check(K, g, 1, 2, exhaustive=True)
    assert v.ok and v.projected_size == 85
    assert len(v.sub_spreads) == 17 and all(size == 5 for _, _, size in v.sub_spreads)
    assert spread_structure_check(K, g, 1, 2, l_sample=3).ok
    K3 = build_field(3, 8)
    g3 = galois_type(3, 8, (2, 4))
    v3 = spread_structure_check(K3, g3, 1, 2)
    assert v3.ok and v3.projected_size == 820


def test_spread_structure_cap():
    K = build_field(2, 18)
    with pytest.raises(EnumerationCapExceeded):
        spread_structure_check(K, galois_type(2, 18, (2, 6)), 1, 2)
