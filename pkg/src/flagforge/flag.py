"""Flags: strictly nested sequences of subspaces of F_{p^n}."""

from __future__ import annotations

from collections.abc import Sequence

from .errors import CtxMismatch, FullOrZeroSubspace, NotNested, ScaleByZero, TypeMismatch
from .ffield import FieldCtx, FieldElem
from .subspace import Subspace, subspace_distance


class Flag:
    """A flag (F_1, ..., F_r) with F_1 < F_2 < ... < F_r, all proper and nonzero."""

    __slots__ = ("ctx", "subspaces", "_hash")

    def __init__(self, subspaces: Sequence[Subspace], *, validate: bool = True):
        subspaces = tuple(subspaces)
        if not subspaces:
            raise ValueError("a flag needs at least one subspace")
        self.ctx: FieldCtx = subspaces[0].ctx
        self.subspaces = subspaces
        self._hash = hash(tuple(s.rows for s in subspaces))
        if validate:
            self._validate()

    def _validate(self) -> None:
        n = self.ctx.n
        for i, s in enumerate(self.subspaces):
            if s.ctx is not self.ctx and s.ctx.key != self.ctx.key:
                raise CtxMismatch(f"subspace {i + 1} lives in a different field")
            if s.dim in (0, n):
                raise FullOrZeroSubspace(f"subspace {i + 1} has dimension {s.dim}")
        for i, (a, b) in enumerate(zip(self.subspaces, self.subspaces[1:]), start=1):
            if a.dim >= b.dim or not a.issubspace(b):
                raise NotNested(f"subspace {i} is not strictly contained in subspace {i + 1}")

    @property
    def type_vector(self) -> tuple[int, ...]:
        return tuple(s.dim for s in self.subspaces)

    @property
    def r(self) -> int:
        return len(self.subspaces)

    def __len__(self) -> int:
        return len(self.subspaces)

    def __getitem__(self, i: int) -> Subspace:
        return self.subspaces[i]

    def __iter__(self):
        return iter(self.subspaces)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Flag):
            return NotImplemented
        return self.subspaces == other.subspaces

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Flag(type={self.type_vector})"

    def scale_exp(self, e: int) -> Flag:
        return Flag([s.scale_exp(e) for s in self.subspaces], validate=False)

    def scale(self, b: FieldElem) -> Flag:
        if b.is_zero:
            raise ScaleByZero("cannot scale a flag by zero")
        return self.scale_exp(b.exp)


def new_flag(subspaces: Sequence[Subspace]) -> Flag:
    return Flag(subspaces)


def flag_distance(f: Flag, g: Flag) -> int:
    """Sum of the subspace distances level by level."""
    if f.type_vector != g.type_vector:
        raise TypeMismatch(f"type {f.type_vector} vs {g.type_vector}")
    return sum(subspace_distance(a, b) for a, b in zip(f.subspaces, g.subspaces))


def scale_flag(f: Flag, b: FieldElem) -> Flag:
    return f.scale(b)


def first_nonzero_exponent(space: Subspace) -> int:
    """Smallest e with a^e in ``space``."""
    ctx = space.ctx
    if ctx.p**space.dim <= 2**16:
        return min(ctx.log_table[c] for c in space.element_codes() if c)
    return next(e for e in range(ctx.order_star) if space.contains(ctx.elem(e)))


def normalize_to_one(f: Flag) -> Flag:
    """Translate f by the inverse of the smallest-exponent nonzero element of F_1, so 1 lies in F_1."""
    e = first_nonzero_exponent(f.subspaces[0])
    return f if e == 0 else f.scale_exp(-e)
