"""beta-cyclic orbit flag codes: orbits, stabilizers, best friends, distances.

A cyclic subgroup <beta> of F_{p^n}^* is identified by the divisor l of
p^n - 1 with <beta> = <a^l>.  Every stabilizer is again such a subgroup, so
subgroups are carried around as :class:`SubgroupSpec` values and
intersected via ``lcm`` of their exponents.
"""

from __future__ import annotations

import enum
from collections.abc import Sequence
from dataclasses import dataclass, field
from functools import reduce

from .errors import (
    IndexOutOfRange,
    InconsistentResult,
    MixedDimensions,
    NotADivisor,
    NotAFriend,
)
from .ffield import FieldCtx, FieldElem
from .flag import Flag, flag_distance
from .ntheory import divisors, lcm, prime_divisors
from .subspace import Subspace, subspace_distance


@dataclass(frozen=True, order=True)
class SubgroupSpec:
    """The cyclic subgroup <a^l> of order (p^n - 1)/l."""

    l: int
    order: int

    @property
    def group_order(self) -> int:
        return self.l * self.order

    def intersect(self, other: SubgroupSpec) -> SubgroupSpec:
        L = lcm(self.l, other.l)
        return SubgroupSpec(L, self.group_order // L)

    def issubgroup(self, other: SubgroupSpec) -> bool:
        return self.l % other.l == 0

    def contains_exp(self, e: int) -> bool:
        return e % self.l == 0


def subgroup(ctx: FieldCtx, l: int) -> SubgroupSpec:
    N = ctx.order_star
    if l < 1 or N % l:
        raise NotADivisor(f"{l} does not divide p^n - 1 = {N}")
    return SubgroupSpec(l, N // l)


def subgroup_of(ctx: FieldCtx, beta: FieldElem) -> SubgroupSpec:
    """The SubgroupSpec with <a^l> = <beta>."""
    return subgroup(ctx, ctx.order_star // ctx.mult_order(beta))


def all_subgroups(ctx: FieldCtx) -> list[SubgroupSpec]:
    """One entry per subgroup of F_{p^n}^*, largest first."""
    return [subgroup(ctx, l) for l in divisors(ctx.order_star)]


# -- stabilizers ----------------------------------------------------------------


def _stab_exponent(spaces: Sequence[Subspace], l: int) -> int:
    """Smallest exponent L (multiple of l, divisor of p^n-1) with every space fixed by a^L.

    The exponents fixing all spaces form a subgroup of Z/(p^n - 1), so L is
    reached from p^n - 1 by stripping prime factors while the fixing persists.
    """
    N = spaces[0].ctx.order_star
    L = N
    for q in prime_divisors(N):
        while L % q == 0 and (L // q) % l == 0:
            e = L // q
            if all(s.scale_exp(e) == s for s in spaces):
                L = e
            else:
                break
    return L


def level_stabilizers(f: Flag, sub: SubgroupSpec) -> tuple[SubgroupSpec, ...]:
    N = f.ctx.order_star
    out = []
    for s in f.subspaces:
        L = _stab_exponent([s], sub.l)
        out.append(SubgroupSpec(L, N // L))
    return tuple(out)


def stabilizer(f: Flag, sub: SubgroupSpec) -> SubgroupSpec:
    """Stab_beta(F), as the intersection of level stabilizers, checked against a direct search."""
    levels = level_stabilizers(f, sub)
    stab = reduce(SubgroupSpec.intersect, levels)
    direct = _stab_exponent(f.subspaces, sub.l)
    if direct != stab.l:
        raise InconsistentResult(f"stabilizer exponent {direct} != intersection exponent {stab.l}")
    return stab


def subfield_index_of_order(ctx: FieldCtx, order: int) -> int:
    """m with p^m - 1 == order; the group must be the multiplicative group of a subfield."""
    for m in divisors(ctx.n):
        if ctx.p**m - 1 == order:
            return m
    raise InconsistentResult(f"a full-group stabilizer of order {order} is not a subfield group")


def stabilizer_subfield(f: Flag, sub: SubgroupSpec) -> int:
    """Smallest m dividing n with Stab_beta(F) inside F_{p^m}^*."""
    stab = stabilizer(f, sub)
    ctx = f.ctx
    return next(m for m in divisors(ctx.n) if (ctx.p**m - 1) % stab.order == 0)


@dataclass(frozen=True)
class BestFriend:
    m: int
    per_level: tuple[int, ...]


def best_friend(f: Flag) -> BestFriend:
    """Best friend index from the full-group stabilizer order p^m - 1."""
    ctx = f.ctx
    full = subgroup(ctx, 1)
    levels = level_stabilizers(f, full)
    stab = stabilizer(f, full)
    return BestFriend(
        m=subfield_index_of_order(ctx, stab.order),
        per_level=tuple(subfield_index_of_order(ctx, s.order) for s in levels),
    )


# -- orbit codes ----------------------------------------------------------------


@dataclass(frozen=True)
class OrbitCode:
    generator: Flag
    subgroup: SubgroupSpec
    orbit: tuple[Flag, ...]
    stab: SubgroupSpec
    level_stabs: tuple[SubgroupSpec, ...]
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def size(self) -> int:
        return len(self.orbit)

    @property
    def stab_order(self) -> int:
        return self.stab.order

    @property
    def stab_orders_per_level(self) -> tuple[int, ...]:
        return tuple(s.order for s in self.level_stabs)

    @property
    def ctx(self) -> FieldCtx:
        return self.generator.ctx

    @property
    def type_vector(self) -> tuple[int, ...]:
        return self.generator.type_vector

    def __len__(self) -> int:
        return len(self.orbit)


def orbit(f: Flag, sub: SubgroupSpec) -> OrbitCode:
    """Enumerate F, F beta, F beta^2, ... up to the first return to F."""
    levels = level_stabilizers(f, sub)
    stab = stabilizer(f, sub)
    flags = [f]
    cur = f.scale_exp(sub.l)
    while cur != f:
        flags.append(cur)
        if len(flags) > sub.order:
            raise InconsistentResult("orbit longer than the acting group")
        cur = cur.scale_exp(sub.l)
    if len(flags) * stab.order != sub.order:
        raise InconsistentResult(
            f"orbit period {len(flags)} disagrees with stabilizer order {stab.order} in a group of {sub.order}"
        )
    return OrbitCode(f, sub, tuple(flags), stab, levels)


def subspace_orbit(u: Subspace, sub: SubgroupSpec) -> list[Subspace]:
    out = [u]
    cur = u.scale_exp(sub.l)
    while cur != u:
        out.append(cur)
        cur = cur.scale_exp(sub.l)
    return out


def cardinality_formula(f: Flag, sub: SubgroupSpec, m: int | None = None) -> int:
    """lcm(l, (p^n-1)/(p^m-1)) / l, with F_{p^m} the best friend of f."""
    ctx = f.ctx
    if m is None:
        m = best_friend(f).m
    c = ctx.subfield_exponent(m)
    return lcm(sub.l, c) // sub.l


def min_distance(code: OrbitCode) -> int:
    """min d_f(F, F beta^j) over the non-stabilizing powers; 0 for a singleton orbit."""
    if "min_distance" not in code._cache:
        gen = code.generator
        code._cache["min_distance"] = min((flag_distance(gen, g) for g in code.orbit[1:]), default=0)
    return code._cache["min_distance"]


def projected(code: OrbitCode, i: int) -> list[Subspace]:
    """The i-th projected code (1-based), in orbit order without repeats."""
    if not 1 <= i <= len(code.type_vector):
        raise IndexOutOfRange(f"level {i} outside 1..{len(code.type_vector)}")
    return list(dict.fromkeys(g.subspaces[i - 1] for g in code.orbit))


def projected_min_distance(code: OrbitCode, i: int) -> int:
    """Minimum subspace distance of the i-th projected code, anchored at the generator."""
    proj = projected(code, i)
    return min((subspace_distance(proj[0], u) for u in proj[1:]), default=0)


def is_disjoint(code: OrbitCode) -> bool:
    """All level stabilizers coincide; cross-checked against the projected code sizes."""
    by_stab = len(set(code.stab_orders_per_level)) == 1
    by_size = all(len(projected(code, i)) == code.size for i in range(1, len(code.type_vector) + 1))
    if by_stab != by_size:
        raise InconsistentResult("disjointness by stabilizers and by projected sizes disagree")
    return by_stab


class SpreadKind(str, enum.Enum):
    SPREAD = "spread"
    PARTIAL_SPREAD = "partial_spread"
    NEITHER = "neither"


def is_partial_spread(subspaces: Sequence[Subspace], ambient: Subspace | None = None) -> SpreadKind:
    """Classify equal-dimension subspaces of ``ambient`` (default: the whole field).

    Partial spread: pairwise trivial intersections.  Spread: also covers
    ``ambient``, i.e. there are (p^d - 1)/(p^k - 1) of them.
    """
    if not subspaces:
        raise ValueError("empty collection")
    k = subspaces[0].dim
    if any(s.dim != k for s in subspaces):
        raise MixedDimensions("all subspaces must have the same dimension")
    ctx = subspaces[0].ctx
    if ambient is not None and not all(s.issubspace(ambient) for s in subspaces):
        return SpreadKind.NEITHER
    for a in range(len(subspaces)):
        for b in range(a + 1, len(subspaces)):
            if subspaces[a].sum_dim(subspaces[b]) != 2 * k:
                return SpreadKind.NEITHER
    d = ctx.n if ambient is None else ambient.dim
    if len(subspaces) * (ctx.p**k - 1) == ctx.p**d - 1:
        return SpreadKind.SPREAD
    return SpreadKind.PARTIAL_SPREAD


def _sorted_elements(space: Subspace) -> list[int]:
    ctx = space.ctx
    return sorted(ctx.log_table[c] for c in space.element_codes() if c)


def decompose_over_friend(f: Flag, m: int) -> list[FieldElem]:
    """Elements a_1, ..., a_{s_r} with F_i the direct sum of F_{p^m} a_j for j <= s_i.

    Each a_j is the smallest-exponent element of the current level not yet covered.
    """
    ctx = f.ctx
    c = ctx.subfield_exponent(m)
    for i, level in enumerate(f.subspaces, start=1):
        if level.dim % m or level.scale_exp(c) != level:
            raise NotAFriend(f"F_{{p^{m}}} is not a friend of subspace {i}")
    chosen: list[FieldElem] = []
    span = Subspace.zero(ctx)
    for level in f.subspaces:
        candidates = iter(_sorted_elements(level))
        while span.dim < level.dim:
            e = next(x for x in candidates if not span.contains(ctx.elem(x)))
            chosen.append(ctx.elem(e))
            span = span + Subspace.from_generators(ctx, [ctx.elem(e + c * k) for k in range(m)])
    return chosen


# -- report record ----------------------------------------------------------------


@dataclass(frozen=True)
class OrbitReport:
    l: int
    beta_order: int
    orbit_size: int
    stab_order: int
    stab_orders: tuple[int, ...]
    min_distance: int
    best_friend_m: int
    disjoint: bool
    projected_sizes: tuple[int, ...]

    def as_dict(self) -> dict:
        return {
            "l": self.l,
            "beta_order": self.beta_order,
            "orbit_size": self.orbit_size,
            "stab_order": self.stab_order,
            "stab_orders": list(self.stab_orders),
            "min_distance": self.min_distance,
            "best_friend_m": self.best_friend_m,
            "disjoint": self.disjoint,
            "projected_sizes": list(self.projected_sizes),
        }


def orbit_report(code: OrbitCode) -> OrbitReport:
    r = len(code.type_vector)
    return OrbitReport(
        l=code.subgroup.l,
        beta_order=code.subgroup.order,
        orbit_size=code.size,
        stab_order=code.stab_order,
        stab_orders=code.stab_orders_per_level,
        min_distance=min_distance(code),
        best_friend_m=best_friend(code.generator).m,
        disjoint=is_disjoint(code),
        projected_sizes=tuple(len(projected(code, i)) for i in range(1, r + 1)),
    )
