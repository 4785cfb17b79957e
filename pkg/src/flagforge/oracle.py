"""Brute-force second opinions, sharing nothing with the fast paths but field arithmetic.

Each oracle works from a definition: closure under multiplication for the
best friend, a scan over all powers of beta for stabilizers, all pairs of
flags (distances from element-set intersections) for minimum distance, and
element coverage counts for spreads.
"""

from __future__ import annotations

import random
from collections import Counter
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any

from .errors import EnumerationCapExceeded
from .ffield import FieldCtx, build_field
from .flag import Flag
from .ntheory import divisors
from .orbit import (
    OrbitCode,
    SpreadKind,
    SubgroupSpec,
    best_friend,
    cardinality_formula,
    is_disjoint,
    is_partial_spread,
    min_distance,
    orbit,
    stabilizer,
    stabilizer_subfield,
    subgroup,
)
from .subspace import Subspace

PAIR_CAP = 10**8
SAMPLE_PAIRS = 20_000
SAMPLE_SEED = 0xF1A6
STAB_SCAN_CAP = 2**17
SPREAD_ELEMENT_CAP = 2**22


@dataclass(frozen=True)
class OracleReport:
    quantity: str
    fast_value: Any
    oracle_value: Any
    agree: bool
    witnesses: Any = None
    sampled: bool = False
    context: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "quantity": self.quantity,
            "context": self.context,
            "fast_value": self.fast_value,
            "oracle_value": self.oracle_value,
            "agree": self.agree,
            "sampled": self.sampled,
            "witnesses": self.witnesses,
        }


def compare(quantity: str, fast: Any, oracle: Any, *, witnesses: Any = None, context: dict | None = None) -> OracleReport:
    agree = fast == oracle
    return OracleReport(quantity, fast, oracle, agree, None if agree else witnesses, False, context or {})


# -- best friend ----------------------------------------------------------------


def best_friend_oracle(f: Flag) -> int:
    """Largest m dividing n such that every F_i is closed under multiplication by F_{p^m}."""
    ctx = f.ctx
    for m in sorted(divisors(ctx.n), reverse=True):
        g = ctx.subfield_generator(m)
        if all(s.contains(ctx.mul(g, u)) for s in f.subspaces for u in s.basis()):
            return m
    raise AssertionError("F_p is always a friend")


# -- stabilizer -------------------------------------------------------------------


def _multiply_flag(f: Flag, b) -> tuple[tuple[int, ...], ...]:
    ctx = f.ctx
    return tuple(Subspace.from_generators(ctx, [ctx.mul(u, b) for u in s.basis()]).rows for s in f.subspaces)


def stabilizer_elements(f: Flag, sub: SubgroupSpec, cap: int = STAB_SCAN_CAP) -> list[int]:
    """All j in [0, |beta|) with F beta^j = F, by direct comparison."""
    if sub.order > cap:
        raise EnumerationCapExceeded(f"subgroup of order {sub.order} exceeds the scan cap {cap}")
    ctx = f.ctx
    beta = ctx.elem(sub.l)
    target = tuple(s.rows for s in f.subspaces)
    out = []
    b = ctx.one
    for j in range(sub.order):
        if _multiply_flag(f, b) == target:
            out.append(j)
        b = ctx.mul(b, beta)
    return out


def stabilizer_oracle(f: Flag, sub: SubgroupSpec, cap: int = STAB_SCAN_CAP) -> int:
    return len(stabilizer_elements(f, sub, cap))


# -- minimum distance -----------------------------------------------------------------


def _log_p(count: int, p: int) -> int:
    k = 0
    while count > 1:
        count //= p
        k += 1
    return k


@dataclass(frozen=True)
class DistanceOracleResult:
    value: int
    pair: tuple[int, int] | None
    pairs_checked: int
    sampled: bool


def min_distance_oracle(
    code: OrbitCode,
    *,
    pair_cap: int = PAIR_CAP,
    sample_pairs: int = SAMPLE_PAIRS,
    seed: int = SAMPLE_SEED,
) -> DistanceOracleResult:
    """Minimum flag distance over all unordered pairs of distinct flags.

    Subspace distances come from element sets: dim U + dim V - 2 dim(U cap V).
    When |orbit| choose 2 times r exceeds ``pair_cap``, a seeded random sample
    of pairs is used instead and the result is marked as sampled (it is then
    only an upper bound on the true minimum).
    """
    flags = code.orbit
    size = len(flags)
    if size < 2:
        return DistanceOracleResult(0, None, 0, False)
    p = code.ctx.p
    r = len(code.type_vector)

    # per level: index of each flag's subspace among the distinct ones, and their element sets
    level_ids: list[list[int]] = []
    level_sets: list[list[frozenset[int]]] = []
    for i in range(r):
        index: dict[Subspace, int] = {}
        ids = []
        for g in flags:
            ids.append(index.setdefault(g.subspaces[i], len(index)))
        level_ids.append(ids)
        level_sets.append([frozenset(s.element_codes()) for s in index])
    dims = code.type_vector
    caches: list[dict[tuple[int, int], int]] = [{} for _ in range(r)]

    def level_distance(i: int, a: int, b: int) -> int:
        if a == b:
            return 0
        key = (a, b) if a < b else (b, a)
        cache = caches[i]
        d = cache.get(key)
        if d is None:
            common = len(level_sets[i][a] & level_sets[i][b])
            d = cache[key] = 2 * dims[i] - 2 * _log_p(common, p)
        return d

    total_pairs = size * (size - 1) // 2
    sampled = total_pairs * r > pair_cap
    if sampled:
        rng = random.Random(seed)
        pairs: Iterable[tuple[int, int]] = (tuple(rng.sample(range(size), 2)) for _ in range(sample_pairs))
        checked = sample_pairs
    else:
        pairs = combinations(range(size), 2)
        checked = total_pairs

    best, best_pair = None, None
    for x, y in pairs:
        d = 0
        for i in range(r):
            ids = level_ids[i]
            d += level_distance(i, ids[x], ids[y])
        if best is None or d < best:
            best, best_pair = d, (x, y)
    return DistanceOracleResult(best, best_pair, checked, sampled)


# -- spreads ------------------------------------------------------------------------


def spread_oracle(subspaces: Sequence[Subspace], cap: int = SPREAD_ELEMENT_CAP) -> SpreadKind:
    """Classify by counting how often each nonzero element is covered."""
    ctx = subspaces[0].ctx
    total = sum(ctx.p**s.dim for s in subspaces)
    if total > cap:
        raise EnumerationCapExceeded(f"{total} elements exceed the cap {cap}")
    cover = Counter(c for s in subspaces for c in s.element_codes() if c)
    if any(v > 1 for v in cover.values()):
        return SpreadKind.NEITHER
    if len(cover) == ctx.order_star:
        return SpreadKind.SPREAD
    return SpreadKind.PARTIAL_SPREAD


# -- verification runs ----------------------------------------------------------------


def check_code(code: OrbitCode, *, label: str, pair_cap: int = PAIR_CAP, corrupt: int = 0) -> list[OracleReport]:
    """Fast path against oracles for one orbit code.

    ``corrupt`` is added to the fast minimum distance; a nonzero value must
    make the distance report disagree (self-test of the oracle harness).
    """
    f, sub = code.generator, code.subgroup
    ctx_info = {"code": label, "l": sub.l}
    reports = []

    bf = best_friend(f).m
    reports.append(compare("best_friend_m", bf, best_friend_oracle(f), context=ctx_info))

    if sub.order <= STAB_SCAN_CAP:
        fast = stabilizer(f, sub).order
        elems = stabilizer_elements(f, sub)
        reports.append(compare("stab_order", fast, len(elems), witnesses={"stabilizing_j": elems[:16]}, context=ctx_info))

    reports.append(compare("orbit_size", code.size, cardinality_formula(f, sub), context=ctx_info))

    fast_d = min_distance(code) + corrupt
    res = min_distance_oracle(code, pair_cap=pair_cap)
    if res.sampled:
        agree = fast_d <= res.value
        reports.append(
            OracleReport("min_distance", fast_d, res.value, agree, None if agree else {"pair": res.pair}, True, ctx_info)
        )
    else:
        witness = {"pair": list(res.pair) if res.pair else None, "pair_distance": res.value}
        reports.append(compare("min_distance", fast_d, res.value, witnesses=witness, context=ctx_info))

    proj_sizes = [len(set(g.subspaces[i] for g in code.orbit)) for i in range(len(code.type_vector))]
    reports.append(
        compare("disjoint", is_disjoint(code), all(s == code.size for s in proj_sizes), witnesses={"projected_sizes": proj_sizes}, context=ctx_info)
    )
    return reports


def _example_codes() -> list[tuple[str, OrbitCode]]:
    out = []
    k38 = build_field(3, 8)
    f = Flag([Subspace.subfield(k38, 2), Subspace.subfield(k38, 4)])
    out.append(("(F_9, F_81) on F_3^8", orbit(f, subgroup(k38, 1))))
    out.append(("(F_9, F_81) on F_3^8", orbit(f, subgroup(k38, 1312))))
    k26 = build_field(2, 6)
    f4 = Subspace.subfield(k26, 2)
    g = Flag([Subspace.subfield(k26, 1), f4 + f4.scale_exp(1)])
    out.append(("(F_2, F_4 + F_4 a) on F_2^6", orbit(g, subgroup(k26, 1))))
    out.append(("(F_2, F_4 + F_4 a) on F_2^6", orbit(g, subgroup(k26, 9))))
    k24 = build_field(2, 4)
    f4 = Subspace.subfield(k24, 2)
    h = Flag([f4, f4 + Subspace.from_generators(k24, [k24.alpha])])
    out.append(("(F_4, F_4 + F_2 a) on F_2^4", orbit(h, subgroup(k24, 1))))
    return out


def run_examples(pair_cap: int = PAIR_CAP) -> list[OracleReport]:
    reports = []
    for label, code in _example_codes():
        reports += check_code(code, label=label, pair_cap=pair_cap)
        # Stab^+ against the smallest subfield whose group contains every stabilizing power
        f, sub = code.generator, code.subgroup
        ctx = f.ctx
        elems = stabilizer_elements(f, sub)
        exps = [(sub.l * j) % ctx.order_star for j in elems]
        m_oracle = next(m for m in divisors(ctx.n) if all(e % ctx.subfield_exponent(m) == 0 for e in exps))
        reports.append(
            compare("stabilizer_subfield_m", stabilizer_subfield(f, sub), m_oracle, context={"code": label, "l": sub.l})
        )
    return reports


def _galois_reports(ctx: FieldCtx, tv: tuple[int, ...], pair_cap: int) -> list[OracleReport]:
    from .galois import galois_flag, galois_row, galois_type

    gtype = galois_type(ctx.p, ctx.n, tv)
    f = galois_flag(ctx, gtype)
    label = f"Galois {tv} on F_{ctx.p}^{ctx.n}"
    reports = [compare("best_friend_m", tv[0], best_friend_oracle(f), context={"code": label})]
    for l in divisors(ctx.order_star):
        row = galois_row(gtype, l)
        code = orbit(f, subgroup(ctx, l))
        c = {"code": label, "l": l}
        reports.append(compare("galois_orbit_size", row.orbit_size, code.size, context=c))
        reports.append(compare("galois_stab_orders", list(row.stab_orders), list(code.stab_orders_per_level), context=c))
        reports.append(compare("galois_distance", row.distance, min_distance(code), context=c))
        if code.size * (code.size - 1) // 2 * len(tv) <= pair_cap:
            res = min_distance_oracle(code, pair_cap=pair_cap)
            reports.append(compare("min_distance", min_distance(code), res.value, witnesses={"pair": res.pair}, context=c))
    return reports


def _scan_reports(q: int, n: int, m: int) -> list[OracleReport]:
    """Orbit size and intersection columns against the subspace F_{q^m} itself."""
    from .odfc import odfc_scan

    ctx = build_field(q, n)
    gen = Flag([Subspace.subfield(ctx, m)])
    label = f"scan q={q} n={n} m={m}"
    reports = []
    for row in odfc_scan(q, n, m):
        sub = subgroup(ctx, row.l)
        c = {"code": label, "l": row.l}
        code = orbit(gen, sub)
        reports.append(compare("scan_orbit_size", row.orbit_size, code.size, context=c))
        reports.append(compare("scan_intersection_order", row.intersection_order, stabilizer_oracle(gen, sub), context=c))
    return reports


def run_tables(pair_cap: int = PAIR_CAP) -> list[OracleReport]:
    reports = _galois_reports(build_field(2, 16), (2, 4, 8), pair_cap)
    reports += _scan_reports(3, 8, 1)
    reports += _scan_reports(2, 12, 2)
    return reports


def run_selftest() -> list[OracleReport]:
    """A deliberately corrupted fast distance, which must be reported as a disagreement."""
    label, code = _example_codes()[2]
    return [r for r in check_code(code, label=label + " [corrupted]", corrupt=2) if r.quantity == "min_distance"]


def run_flag(f: Flag, l: int = 1, pair_cap: int = PAIR_CAP) -> list[OracleReport]:
    code = orbit(f, subgroup(f.ctx, l))
    return check_code(code, label="flagspec", pair_cap=pair_cap)
