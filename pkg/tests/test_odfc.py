import csv
import random
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from flagforge.errors import DegenerateCase, InvalidType, NotADivisor, NotAFriendDimension
from flagforge.ffield import build_field
from flagforge.galois import galois_flag, galois_type
from flagforge.ntheory import divisors
from flagforge.odfc import (
    allowed_dimensions,
    distance_bounds,
    max_flag_distance,
    odfc_characterization,
    odfc_cyclic_types,
    odfc_direct,
    odfc_scan,
    odfc_verify,
)
from flagforge.orbit import best_friend, orbit, subgroup
from helpers import friendly_flag

GOLDEN = Path(__file__).parent / "golden"


def _golden(name):
    with open(GOLDEN / name) as fh:
        return [
            {k: (v if k == "allowed_dims" else int(v)) for k, v in row.items()} for row in csv.DictReader(fh)
        ]


def test_max_flag_distance():
    assert max_flag_distance((1, 2), 3) == 4
    assert max_flag_distance((2, 4, 8), 16) == 28
    assert max_flag_distance((2, 4, 6, 8, 10), 12) == 36
    for bad in [(), (0, 1), (2, 2), (3, 1), (1, 16)]:
        with pytest.raises(InvalidType):
            max_flag_distance(bad, 16)


def test_distance_bounds():
    assert distance_bounds(2, (2, 4), 8, False) == (4, 12)
    assert distance_bounds(2, (2, 4), 8, True)[0] == 8
    assert distance_bounds(1, (1, 2), 3, False) == (2, 4)
    with pytest.raises(NotAFriendDimension):
        distance_bounds(2, (2, 3), 8, False)


def test_allowed_dimensions_examples():
    assert allowed_dimensions(3, 8, 1, 16) == [1, 2, 3, 5, 6, 7]
    assert allowed_dimensions(2, 12, 2, 5) == [2, 4, 8, 10]
    assert allowed_dimensions(2, 12, 2, 1) == [2, 10]
    with pytest.raises(NotADivisor):
        allowed_dimensions(2, 12, 5, 1)
    with pytest.raises(NotADivisor):
        allowed_dimensions(2, 12, 2, 8)


@pytest.mark.parametrize("q,n,m,name", [(3, 8, 1, "odfc_scan_p3_n8_m1.csv"), (2, 12, 2, "odfc_scan_p2_n12_m2.csv")])
def test_scan_matches_golden_transcription(q, n, m, name):
    assert [r.as_dict() for r in odfc_scan(q, n, m)] == _golden(name)


def test_scan_selected_rows():
    rows = {r.l: r for r in odfc_scan(3, 8, 1)}
    r = rows[32]
    assert (r.beta_order, r.intersection_order, r.orbit_size, r.allowed_dims, r.max_distance) == (
        205, 1, 205, (1, 2, 3, 5, 6, 7), 24
    )
    assert (rows[3280].orbit_size, rows[3280].max_distance) == (1, 0)
    r9 = {r.l: r for r in odfc_scan(2, 12, 2)}[9]
    assert (r9.beta_order, r9.intersection_order, r9.orbit_size, r9.allowed_dims, r9.max_distance) == (
        455, 1, 455, (2, 10), 8
    )
    with pytest.raises(NotADivisor):
        odfc_scan(2, 12, 5)


SCAN_CASES = [(q, n, m) for q, n in [(2, 6), (2, 8), (2, 12), (3, 4), (3, 6), (3, 8), (5, 4), (7, 4)] for m in divisors(n) if m < n]


@settings(max_examples=500)
@given(st.sampled_from(SCAN_CASES))
def test_scan_symmetry_and_endpoints(case):
    q, n, m = case
    for row in odfc_scan(q, n, m):
        dims = set(row.allowed_dims)
        assert dims == {n - t for t in dims}
        if row.orbit_size >= 2:
            assert m in dims and n - m in dims
        if n % 2 == 0 and (n // 2) % m == 0 and row.orbit_size > (q**n - 1) // (q ** (n // 2) - 1):
            assert n // 2 not in dims


def test_half_dimension_excluded_in_the_2_12_example():
    # orbit of size 91 under <a^15> with m = 2: 91 > 65 so dimension 6 cannot appear
    assert 6 not in allowed_dimensions(2, 12, 2, 15)
    assert (2**12 - 1) // (2**6 - 1) == 65


def test_cyclic_types():
    assert odfc_cyclic_types(2, 12, 2) == {(2,), (10,), (2, 10)}
    assert odfc_cyclic_types(3, 8, 1) == {(1,), (7,), (1, 7)}
    with pytest.raises(DegenerateCase):
        odfc_cyclic_types(2, 8, 4)


def test_verify_galois_examples():
    K = build_field(2, 16)
    F = galois_flag(K, galois_type(2, 16, (2, 4, 8)))
    assert odfc_verify(orbit(F, subgroup(K, 85)))
    assert not odfc_verify(orbit(F, subgroup(K, 1)))
    assert not odfc_verify(orbit(F, subgroup(K, 21845)))


@settings(max_examples=300)
@given(st.sampled_from([(2, 6), (2, 8), (3, 4), (2, 9), (3, 6)]), st.integers(0, 2**32 - 1))
def test_optimal_codes_have_allowed_types(pn, seed):
    K = build_field(*pn)
    rng = random.Random(seed)
    m = rng.choice([d for d in divisors(K.n) if d < K.n])
    f = friendly_flag(K, rng, m)
    l = rng.choice(divisors(K.order_star))
    code = orbit(f, subgroup(K, l))
    direct = odfc_direct(code)
    assert direct == odfc_characterization(code)
    if direct:
        bf = best_friend(f).m
        assert set(f.type_vector) <= set(allowed_dimensions(K.p, K.n, bf, l))
