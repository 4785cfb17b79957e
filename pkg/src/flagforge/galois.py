"""Galois flags (towers of subfields) and their beta-cyclic orbit codes."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from .errors import EnumerationCapExceeded, NotADivisor, NotDivisorChain
from .ffield import FieldCtx
from .flag import Flag
from .ntheory import divisors, lcm
from .orbit import SpreadKind, is_partial_spread, subgroup, subspace_orbit
from .subspace import Subspace

SPREAD_CHECK_LIMIT = 2**16


@dataclass(frozen=True)
class GaloisType:
    p: int
    n: int
    type_vector: tuple[int, ...]
    c: tuple[int, ...]

    @property
    def order_star(self) -> int:
        return self.p**self.n - 1

    @property
    def r(self) -> int:
        return len(self.type_vector)


def galois_type(p: int, n: int, type_vector: Sequence[int]) -> GaloisType:
    """Validate a divisor chain t_1 | t_2 | ... | t_r | n with t_r < n."""
    tv = tuple(int(t) for t in type_vector)
    if not tv:
        raise NotDivisorChain("empty type vector")
    for t in tv:
        if t < 1 or t >= n or n % t:
            raise NotDivisorChain(f"{t} is not a proper divisor of n = {n}")
    for a, b in zip(tv, tv[1:]):
        if b <= a or b % a:
            raise NotDivisorChain(f"{a} does not properly divide {b}")
    N = p**n - 1
    return GaloisType(p, n, tv, tuple(N // (p**t - 1) for t in tv))


def galois_flag(ctx: FieldCtx, gtype: GaloisType) -> Flag:
    """The flag of subfields (F_{p^t_1}, ..., F_{p^t_r})."""
    if (ctx.p, ctx.n) != (gtype.p, gtype.n):
        raise NotDivisorChain(f"type built for p={gtype.p}, n={gtype.n}, field is p={ctx.p}, n={ctx.n}")
    return Flag([Subspace.subfield(ctx, t) for t in gtype.type_vector])


def _level_exponents(gtype: GaloisType, l: int) -> list[int]:
    if l < 1 or gtype.order_star % l:
        raise NotADivisor(f"{l} does not divide {gtype.order_star}")
    return [lcm(l, c) for c in gtype.c]


def galois_distance(gtype: GaloisType, l: int) -> int:
    """Closed-form minimum distance of Orb_beta of the Galois flag, <beta> = <a^l>."""
    ls = _level_exponents(gtype, l)
    tv = gtype.type_vector
    if ls[0] == ls[-1]:
        return 0 if ls[0] == l else 2 * sum(tv)
    j = next(i for i, li in enumerate(ls) if li != ls[0])
    return 2 * sum(tv[:j])


@dataclass(frozen=True)
class GaloisRow:
    l: int
    beta_order: int
    stab_orders: tuple[int, ...]
    orbit_size: int
    distance: int

    def as_dict(self, type_vector: Sequence[int]) -> dict:
        d = {"beta_exponent": self.l, "beta_order": self.beta_order}
        for t, s in zip(type_vector, self.stab_orders):
            d[f"stab_t{t}"] = s
        d["orbit_size"] = self.orbit_size
        d["distance"] = self.distance
        return d


def galois_row(gtype: GaloisType, l: int) -> GaloisRow:
    N = gtype.order_star
    ls = _level_exponents(gtype, l)
    return GaloisRow(
        l=l,
        beta_order=N // l,
        stab_orders=tuple(N // li for li in ls),
        orbit_size=ls[0] // l,
        distance=galois_distance(gtype, l),
    )


def galois_table(gtype: GaloisType) -> list[GaloisRow]:
    """One row per subgroup of F_{p^n}^*, by decreasing |beta|."""
    return [galois_row(gtype, l) for l in divisors(gtype.order_star)]


@dataclass(frozen=True)
class SpreadStructure:
    i: int
    j: int
    projected_is_spread: bool
    projected_size: int
    sub_spreads: tuple[tuple[int, SpreadKind, int], ...]  # (l, kind, size)
    recovers_projected: bool

    @property
    def ok(self) -> bool:
        return (
            self.projected_is_spread
            and all(kind is SpreadKind.SPREAD for _, kind, _ in self.sub_spreads)
            and self.recovers_projected
        )


def spread_structure_check(
    ctx: FieldCtx,
    gtype: GaloisType,
    i: int,
    j: int,
    l_sample: int | None = None,
    *,
    exhaustive: bool = False,
) -> SpreadStructure:
    """Check the nested-spread structure of level i inside level j (1-based).

    (a) projected code i of the full-group Galois code is a t_i-spread;
    (b) the <a^c_j>-orbit of F_{p^t_i} a^l is a t_i-spread of F_{p^t_j} a^l,
        for ``l_sample`` (default 0) or for every l in 0..c_j - 1;
    (c) those orbits for l = 0..c_j - 1 partition projected code i.
    """
    if ctx.size > SPREAD_CHECK_LIMIT:
        raise EnumerationCapExceeded(f"field of size {ctx.size} exceeds {SPREAD_CHECK_LIMIT}")
    if not 1 <= i < j <= gtype.r:
        raise ValueError(f"need 1 <= i < j <= {gtype.r}")
    ti_space = Subspace.subfield(ctx, gtype.type_vector[i - 1])
    tj_space = Subspace.subfield(ctx, gtype.type_vector[j - 1])
    cj = gtype.c[j - 1]

    proj = subspace_orbit(ti_space, subgroup(ctx, 1))
    proj_kind = is_partial_spread(proj)

    sub_j = subgroup(ctx, cj)
    pieces = [subspace_orbit(ti_space.scale_exp(l), sub_j) for l in range(cj)]
    if exhaustive:
        sample = range(cj)
    else:
        sample = [0 if l_sample is None else l_sample % cj]
    sub_spreads = tuple(
        (l, is_partial_spread(pieces[l], ambient=tj_space.scale_exp(l)), len(pieces[l])) for l in sample
    )
    union = [u for piece in pieces for u in piece]
    recovers = len(union) == len(set(union)) and set(union) == set(proj)
    return SpreadStructure(
        i=i,
        j=j,
        projected_is_spread=proj_kind is SpreadKind.SPREAD and len(proj) == gtype.c[i - 1],
        projected_size=len(proj),
        sub_spreads=sub_spreads,
        recovers_projected=recovers,
    )
