"""Shared builders and hypothesis strategies for the test suite."""

from __future__ import annotations

import random

from hypothesis import strategies as st

from flagforge.ffield import FieldCtx, build_field
from flagforge.flag import Flag
from flagforge.ntheory import divisors
from flagforge.subspace import Subspace

# every field with 2 <= n and p^n <= 2^12
FIELDS = [(p, n) for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31) for n in range(2, 13) if p**n <= 2**12]


def poly_mul_oracle(a: list[int], b: list[int], modulus: tuple[int, ...], p: int) -> list[int]:
    """Schoolbook product of coordinate vectors, reduced by the monic modulus."""
    n = len(modulus) - 1
    prod = [0] * (2 * n - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            prod[i + j] = (prod[i + j] + x * y) % p
    for k in range(len(prod) - 1, n - 1, -1):
        c = prod[k]
        if c:
            for i in range(n + 1):
                prod[k - n + i] = (prod[k - n + i] - c * modulus[i]) % p
    return prod[:n]


def element_set(space: Subspace) -> frozenset[int]:
    return frozenset(space.element_codes())


def dim_of_count(count: int, p: int) -> int:
    k = 0
    while count > 1:
        assert count % p == 0
        count //= p
        k += 1
    return k


def random_subspace(ctx: FieldCtx, rng: random.Random, k: int) -> Subspace:
    span = Subspace.zero(ctx)
    while span.dim < k:
        span = span + Subspace.from_generators(ctx, [ctx.elem(rng.randrange(ctx.order_star))])
    return span


def friendly_flag(ctx: FieldCtx, rng: random.Random, m: int = 1, r: int | None = None) -> Flag:
    """A random flag all of whose subspaces are F_{p^m}-vector spaces."""
    s = ctx.n // m
    if r is None:
        r = rng.randint(1, min(3, s - 1))
    dims = [m * d for d in sorted(rng.sample(range(1, s), r))]
    c = ctx.subfield_exponent(m)
    span = Subspace.zero(ctx)
    levels = []
    for t in dims:
        while span.dim < t:
            x = rng.randrange(ctx.order_star)
            span = span + Subspace.from_generators(ctx, [ctx.elem(x + c * j) for j in range(m)])
        levels.append(span)
    return Flag(levels)


@st.composite
def fields(draw, fields=FIELDS):
    p, n = draw(st.sampled_from(fields))
    return build_field(p, n)


@st.composite
def flags(draw, friendly: bool = False, fields_list=FIELDS):
    ctx = draw(fields(fields_list))
    m = 1
    if friendly:
        m = draw(st.sampled_from([d for d in divisors(ctx.n) if d < ctx.n]))
    seed = draw(st.integers(0, 2**32 - 1))
    return friendly_flag(ctx, random.Random(seed), m)


@st.composite
def flags_with_subgroup(draw, friendly: bool = False, fields_list=FIELDS):
    f = draw(flags(friendly, fields_list))
    l = draw(st.sampled_from(divisors(f.ctx.order_star)))
    return f, l


@st.composite
def subspace_pairs(draw, fields_list=FIELDS):
    ctx = draw(fields(fields_list))
    rng = random.Random(draw(st.integers(0, 2**32 - 1)))
    k1 = draw(st.integers(0, ctx.n))
    k2 = draw(st.integers(0, ctx.n))
    return random_subspace(ctx, rng, k1), random_subspace(ctx, rng, k2)
