"""F_p-subspaces of F_{p^n} in canonical reduced-basis form."""

from __future__ import annotations

from collections.abc import Iterable

from . import _linalg
from .errors import (
    AllZeroGenerators,
    CtxMismatch,
    EnumerationCapExceeded,
    ScaleByZero,
)
from .ffield import FieldCtx, FieldElem

ENUMERATION_CAP = 2**16


def _check_same_ctx(a: FieldCtx, b: FieldCtx) -> None:
    if a is not b and a.key != b.key:
        raise CtxMismatch(f"{a!r} vs {b!r}")


class Subspace:
    """An F_p-subspace of F_{p^n}.

    ``rows`` holds the canonical reduced row echelon basis, each row packed as
    a coordinate code in the polynomial basis.  Two subspaces are equal iff
    their ``rows`` coincide.
    """

    __slots__ = ("ctx", "rows", "_hash")

    def __init__(self, ctx: FieldCtx, rows: tuple[int, ...]):
        self.ctx = ctx
        self.rows = rows
        self._hash = hash(rows)

    # -- construction ----------------------------------------------------------

    @classmethod
    def from_codes(cls, ctx: FieldCtx, codes: Iterable[int]) -> Subspace:
        return cls(ctx, _linalg.rref(codes, ctx.p, ctx.n))

    @classmethod
    def from_generators(
        cls, ctx: FieldCtx, gens: Iterable[FieldElem], *, allow_zero: bool = False
    ) -> Subspace:
        gens = list(gens)
        if not gens:
            raise ValueError("need at least one generator")
        space = cls.from_codes(ctx, (ctx.code_of(g) for g in gens))
        if not space.rows and not allow_zero:
            raise AllZeroGenerators("generators span the zero subspace")
        return space

    @classmethod
    def zero(cls, ctx: FieldCtx) -> Subspace:
        return cls(ctx, ())

    @classmethod
    def whole(cls, ctx: FieldCtx) -> Subspace:
        return cls(ctx, tuple(ctx.p**i for i in range(ctx.n)))

    @classmethod
    def subfield(cls, ctx: FieldCtx, m: int) -> Subspace:
        """F_{p^m} as an m-dimensional subspace, spanned by 1, g, ..., g^(m-1) with g = a^c."""
        c = ctx.subfield_exponent(m)
        return cls.from_generators(ctx, [ctx.elem(c * k) for k in range(m)])

    # -- basic properties ---------------------------------------------------------

    @property
    def dim(self) -> int:
        return len(self.rows)

    k = dim

    def basis(self) -> list[FieldElem]:
        return [self.ctx.from_code(r) for r in self.rows]

    def matrix(self) -> list[list[int]]:
        return [_linalg.unpack(r, self.ctx.p, self.ctx.n) for r in self.rows]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.rows == other.rows and (self.ctx is other.ctx or self.ctx.key == other.ctx.key)

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, basis=[{', '.join(map(str, self.basis()))}])"

    # -- lattice operations ----------------------------------------------------------

    def __add__(self, other: Subspace) -> Subspace:
        _check_same_ctx(self.ctx, other.ctx)
        return Subspace(self.ctx, _linalg.rref(self.rows + other.rows, self.ctx.p, self.ctx.n))

    def __and__(self, other: Subspace) -> Subspace:
        _check_same_ctx(self.ctx, other.ctx)
        return Subspace(self.ctx, _linalg.intersect(self.rows, other.rows, self.ctx.p, self.ctx.n))

    def sum_dim(self, other: Subspace) -> int:
        return len(_linalg.rref(self.rows + other.rows, self.ctx.p, self.ctx.n))

    def issubspace(self, other: Subspace) -> bool:
        _check_same_ctx(self.ctx, other.ctx)
        p, n = self.ctx.p, self.ctx.n
        return all(_linalg.reduce(r, other.rows, p, n) == 0 for r in self.rows)

    def contains(self, x: FieldElem) -> bool:
        if x.is_zero:
            return True
        return _linalg.reduce(self.ctx.code_of(x), self.rows, self.ctx.p, self.ctx.n) == 0

    __contains__ = contains

    # -- multiplicative action -----------------------------------------------------

    def scale_exp(self, e: int) -> Subspace:
        """The subspace multiplied by a^e."""
        ctx = self.ctx
        N = ctx.order_star
        log, exp = ctx.log_table, ctx.exp_table
        codes = [exp[(log[r] + e) % N] for r in self.rows]
        return Subspace(ctx, _linalg.rref(codes, ctx.p, ctx.n))

    def scale(self, b: FieldElem) -> Subspace:
        if b.is_zero:
            raise ScaleByZero("cannot scale a subspace by zero")
        return self.scale_exp(b.exp)

    # -- enumeration ----------------------------------------------------------------

    def element_codes(self, cap: int = ENUMERATION_CAP) -> list[int]:
        p = self.ctx.p
        if p**self.dim > cap:
            raise EnumerationCapExceeded(f"{p}^{self.dim} elements exceed the cap {cap}")
        out = [0]
        for r in self.rows:
            multiples = [_scalar_code(r, c, p, self.ctx.n) for c in range(1, p)]
            out += [_linalg.add_codes(x, m, p) for x in out for m in multiples]
        return out

    def enumerate_elements(self, cap: int = ENUMERATION_CAP) -> list[FieldElem]:
        """All p^k elements, zero first."""
        return [self.ctx.from_code(c) for c in self.element_codes(cap)]


def _scalar_code(code: int, c: int, p: int, width: int) -> int:
    if p == 2:
        return code
    return _linalg.pack([(c * d) % p for d in _linalg.unpack(code, p, width)], p)


# Functional aliases


def from_generators(ctx: FieldCtx, gens: Iterable[FieldElem], *, allow_zero: bool = False) -> Subspace:
    return Subspace.from_generators(ctx, gens, allow_zero=allow_zero)


def subspace_sum(u: Subspace, v: Subspace) -> Subspace:
    return u + v


def intersect(u: Subspace, v: Subspace) -> Subspace:
    return u & v


def subspace_distance(u: Subspace, v: Subspace) -> int:
    """dim(U+V) - dim(U cap V), evaluated as 2 dim(U+V) - dim U - dim V."""
    _check_same_ctx(u.ctx, v.ctx)
    if u.rows == v.rows:
        return 0
    return 2 * u.sum_dim(v) - u.dim - v.dim


def scale(u: Subspace, b: FieldElem) -> Subspace:
    return u.scale(b)


def contains(u: Subspace, x: FieldElem) -> bool:
    return u.contains(x)


def enumerate_elements(u: Subspace, cap: int = ENUMERATION_CAP) -> list[FieldElem]:
    return u.enumerate_elements(cap)
