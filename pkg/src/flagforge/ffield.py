"""Arithmetic in F_{p^n} for prime p, in discrete-log form with Zech tables.

Nonzero elements are stored as exponents of a fixed primitive element ``a``
(the residue of x modulo a primitive polynomial).  Addition goes through the
Zech logarithm ``z(i)`` defined by ``a^z(i) = a^i + 1``.

Coordinates in the polynomial basis {1, a, ..., a^(n-1)} are packed into a
single integer ``code = c_0 + c_1 p + ... + c_{n-1} p^(n-1)``; the exp/log
tables translate between the two forms.
"""

from __future__ import annotations

import os
import re
from math import gcd
from dataclasses import dataclass
from functools import lru_cache

from ._linalg import add_codes
from .errors import (
    ElementSyntaxError,
    InvalidModulus,
    NotADivisor,
    NotPrime,
    NotPrimitive,
    TableCapExceeded,
    ZeroHasNoOrder,
)
from .ntheory import divisors, is_prime, prime_divisors

DEFAULT_TABLE_CAP = 2**20
CAP_ENV_VAR = "FLAGFORGE_TABLE_CAP"
NO_ZECH = -1


@dataclass(frozen=True)
class FieldElem:
    """A field element: ``exp is None`` for zero, else ``a^exp``."""

    exp: int | None

    @property
    def is_zero(self) -> bool:
        return self.exp is None

    def __str__(self) -> str:
        if self.exp is None:
            return "0"
        if self.exp == 0:
            return "1"
        if self.exp == 1:
            return "a"
        return f"a^{self.exp}"


ZERO = FieldElem(None)
ONE = FieldElem(0)


def table_cap() -> int:
    env = os.environ.get(CAP_ENV_VAR)
    return int(env) if env else DEFAULT_TABLE_CAP


# -- polynomial helpers over F_p (coefficient lists, constant term first) --


def _poly_mulmod(a: list[int], b: list[int], mod: tuple[int, ...], p: int) -> list[int]:
    n = len(mod) - 1
    prod = [0] * (2 * n - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    prod[i + j] = (prod[i + j] + ai * bj) % p
    # mod is monic
    for d in range(len(prod) - 1, n - 1, -1):
        c = prod[d]
        if c:
            for k in range(n + 1):
                prod[d - n + k] = (prod[d - n + k] - c * mod[k]) % p
    return prod[:n]


def poly_x_power(e: int, mod: tuple[int, ...], p: int) -> list[int]:
    """x^e reduced modulo the monic polynomial ``mod``, by square-and-multiply."""
    n = len(mod) - 1
    result = [1] + [0] * (n - 1)
    base = [0] * n
    if n == 1:
        base = [(-mod[0]) % p]
    else:
        base[1] = 1
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, mod, p)
        base = _poly_mulmod(base, base, mod, p)
        e >>= 1
    return result


def is_primitive_poly(mod: tuple[int, ...], p: int) -> bool:
    """True when x has multiplicative order exactly p^n - 1 modulo ``mod``."""
    n = len(mod) - 1
    if mod[-1] != 1 or mod[0] % p == 0:
        return False
    order = p**n - 1
    one = [1] + [0] * (n - 1)
    if poly_x_power(order, mod, p) != one:
        return False
    return all(poly_x_power(order // q, mod, p) != one for q in prime_divisors(order))


@lru_cache(maxsize=None)
def find_primitive_poly(p: int, n: int) -> tuple[int, ...]:
    """Smallest primitive monic polynomial of degree n, scanning c_0 + c_1 p + ... upward."""
    for k in range(p**n):
        coeffs = []
        for _ in range(n):
            k, c = divmod(k, p)
            coeffs.append(c)
        mod = tuple(coeffs) + (1,)
        if is_primitive_poly(mod, p):
            return mod
    raise NotPrimitive(f"no primitive polynomial of degree {n} over F_{p}")  # pragma: no cover


class FieldCtx:
    """F_{p^n} with a fixed primitive element; immutable after construction."""

    __slots__ = ("p", "n", "modulus", "order_star", "size", "exp_table", "log_table", "zech")

    def __init__(self, p: int, n: int, modulus: tuple[int, ...]):
        self.p = p
        self.n = n
        self.modulus = modulus
        self.size = p**n
        self.order_star = self.size - 1
        self.exp_table, self.log_table = self._build_tables()
        self.zech = self._build_zech()

    def _build_tables(self) -> tuple[list[int], list[int]]:
        p, n, N = self.p, self.n, self.order_star
        top = p ** (n - 1)
        # x^n = -(m_0 + ... + m_{n-1} x^{n-1})
        red = 0
        for i in range(n):
            red += ((-self.modulus[i]) % p) * p**i
        shift_in = [0] * p
        for t in range(1, p):
            acc = 0
            for _ in range(t):
                acc = add_codes(acc, red, p)
            shift_in[t] = acc
        exp_table = [0] * N
        log_table = [NO_ZECH] * self.size
        code = 1
        for i in range(N):
            if log_table[code] != NO_ZECH:
                raise NotPrimitive(f"modulus {self.modulus} is not primitive over F_{p}")
            exp_table[i] = code
            log_table[code] = i
            t, rest = divmod(code, top)
            code = rest * p
            if t:
                code = add_codes(code, shift_in[t], p)
        if code != 1:
            raise NotPrimitive(f"modulus {self.modulus} is not primitive over F_{p}")
        return exp_table, log_table

    def _build_zech(self) -> list[int]:
        p = self.p
        zech = [NO_ZECH] * self.order_star
        for i, code in enumerate(self.exp_table):
            c0 = code % p
            plus_one = code - c0 + (c0 + 1) % p
            if plus_one:
                zech[i] = self.log_table[plus_one]
        return zech

    # -- identity ----------------------------------------------------------

    @property
    def key(self) -> tuple[int, int, tuple[int, ...]]:
        return (self.p, self.n, self.modulus)

    def __repr__(self) -> str:
        return f"FieldCtx(p={self.p}, n={self.n}, modulus={list(self.modulus)})"

    def modulus_str(self) -> str:
        terms = []
        for i in range(self.n, -1, -1):
            c = self.modulus[i]
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
                continue
            mono = "x" if i == 1 else f"x^{i}"
            terms.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(terms)

    # -- elements ----------------------------------------------------------

    def elem(self, e: int) -> FieldElem:
        return FieldElem(e % self.order_star)

    @property
    def zero(self) -> FieldElem:
        return ZERO

    @property
    def one(self) -> FieldElem:
        return ONE

    @property
    def alpha(self) -> FieldElem:
        return self.elem(1)

    def code_of(self, a: FieldElem) -> int:
        return 0 if a.exp is None else self.exp_table[a.exp % self.order_star]

    def from_code(self, code: int) -> FieldElem:
        if code == 0:
            return ZERO
        return FieldElem(self.log_table[code])

    def coords(self, a: FieldElem) -> tuple[int, ...]:
        code = self.code_of(a)
        out = []
        for _ in range(self.n):
            code, c = divmod(code, self.p)
            out.append(c)
        return tuple(out)

    def from_coords(self, coords) -> FieldElem:
        coords = list(coords)
        if len(coords) != self.n or any(not 0 <= c < self.p for c in coords):
            raise ElementSyntaxError(f"need {self.n} coordinates in 0..{self.p - 1}, got {coords}")
        code = 0
        for c in reversed(coords):
            code = code * self.p + c
        return self.from_code(code)

    # -- arithmetic ----------------------------------------------------------

    def add(self, a: FieldElem, b: FieldElem) -> FieldElem:
        """a^i + a^j = a^j (a^(i-j) + 1), looked up in the Zech table."""
        if a.exp is None:
            return b
        if b.exp is None:
            return a
        z = self.zech[(a.exp - b.exp) % self.order_star]
        if z == NO_ZECH:
            return ZERO
        return FieldElem((b.exp + z) % self.order_star)

    def neg(self, a: FieldElem) -> FieldElem:
        if a.exp is None or self.p == 2:
            return a
        return FieldElem((a.exp + self.order_star // 2) % self.order_star)

    def sub(self, a: FieldElem, b: FieldElem) -> FieldElem:
        return self.add(a, self.neg(b))

    def mul(self, a: FieldElem, b: FieldElem) -> FieldElem:
        if a.exp is None or b.exp is None:
            return ZERO
        return FieldElem((a.exp + b.exp) % self.order_star)

    def inverse(self, a: FieldElem) -> FieldElem:
        if a.exp is None:
            raise ZeroDivisionError("zero has no inverse")
        return FieldElem((-a.exp) % self.order_star)

    def power(self, a: FieldElem, k: int) -> FieldElem:
        if a.exp is None:
            if k <= 0:
                raise ZeroDivisionError("zero to a non-positive power")
            return ZERO
        return FieldElem((a.exp * k) % self.order_star)

    def mult_order(self, a: FieldElem) -> int:
        if a.exp is None:
            raise ZeroHasNoOrder("the zero element has no multiplicative order")
        return self.order_star // gcd(self.order_star, a.exp)

    # -- subfields -----------------------------------------------------------

    def subfield_exponent(self, m: int) -> int:
        """c = (p^n - 1)/(p^m - 1), so that <a^c> together with 0 is F_{p^m}."""
        if m < 1 or self.n % m:
            raise NotADivisor(f"{m} does not divide n = {self.n}")
        return self.order_star // (self.p**m - 1)

    def subfield_generator(self, m: int) -> FieldElem:
        return self.elem(self.subfield_exponent(m))

    def subfield_lattice(self) -> list[tuple[int, int]]:
        return [(m, self.subfield_exponent(m)) for m in divisors(self.n)]

    # -- text syntax -----------------------------------------------------------

    def parse_element(self, text: str) -> FieldElem:
        """Parse ``0``, ``1``, ``a``, ``a^K`` or ``[c0,c1,...]``."""
        s = text.strip()
        if s == "0":
            return ZERO
        if s == "1":
            return ONE
        if s == "a":
            return self.elem(1)
        m = re.fullmatch(r"a\^(\d+)", s)
        if m:
            return self.elem(int(m.group(1)))
        m = re.fullmatch(r"\[\s*(\d+(?:\s*,\s*\d+)*)\s*\]", s)
        if m:
            return self.from_coords(int(c) for c in m.group(1).split(","))
        raise ElementSyntaxError(f"bad element {text!r}; expected 0, 1, a^K or [c0,...,c{self.n - 1}]")


def build_field(
    p: int, n: int, modulus: tuple[int, ...] | list[int] | None = None, *, cap: int | None = None
) -> FieldCtx:
    """Build (or fetch from cache) F_{p^n}.

    ``modulus`` lists the coefficients of a monic degree-n polynomial, constant term first.
    When omitted, the smallest primitive polynomial in base-p counting order is used.
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime (prime-power base fields are not supported)")
    if n < 1:
        raise ValueError("extension degree must be >= 1")
    limit = table_cap() if cap is None else cap
    if p**n > limit:
        raise TableCapExceeded(f"field of {p}^{n} elements exceeds the table cap {limit}")
    if modulus is None:
        mod = find_primitive_poly(p, n)
    else:
        mod = tuple(int(c) for c in modulus)
        if len(mod) != n + 1:
            raise InvalidModulus(f"modulus must have {n + 1} coefficients, got {len(mod)}")
        if any(not 0 <= c < p for c in mod) or mod[-1] != 1:
            raise InvalidModulus(f"modulus must be monic with coefficients in 0..{p - 1}")
        if not is_primitive_poly(mod, p):
            raise NotPrimitive(f"{list(mod)} is not a primitive polynomial over F_{p}")
    return _cached_field(p, n, mod)


@lru_cache(maxsize=32)
def _cached_field(p: int, n: int, mod: tuple[int, ...]) -> FieldCtx:
    return FieldCtx(p, n, mod)


def parse_field_spec(text: str) -> FieldCtx:
    """Parse ``p=2 n=16 [poly=1,1,0,...,1]``."""
    fields = dict(tok.split("=", 1) for tok in text.split() if "=" in tok)
    try:
        p, n = int(fields["p"]), int(fields["n"])
    except (KeyError, ValueError) as exc:
        raise ElementSyntaxError(f"field spec needs integer p= and n=: {text!r}") from exc
    poly = fields.get("poly")
    modulus = [int(c) for c in poly.split(",")] if poly else None
    return build_field(p, n, modulus)
