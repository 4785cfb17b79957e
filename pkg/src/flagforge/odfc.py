"""Optimum distance flag codes: maximum distance, admissible dimensions, scans."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from math import gcd

from .errors import DegenerateCase, InconsistentResult, InvalidType, NotADivisor, NotAFriendDimension
from .ntheory import divisors, lcm
from .orbit import OrbitCode, is_disjoint, min_distance, projected_min_distance


def _check_type(type_vector: Sequence[int], n: int) -> tuple[int, ...]:
    tv = tuple(type_vector)
    if not tv or any(t < 1 or t >= n for t in tv) or any(b <= a for a, b in zip(tv, tv[1:])):
        raise InvalidType(f"{tv} is not a strictly increasing type vector for n = {n}")
    return tv


def max_flag_distance(type_vector: Sequence[int], n: int) -> int:
    """2 (sum of t_i <= n/2 plus sum of n - t_i over t_i > n/2)."""
    tv = _check_type(type_vector, n)
    return 2 * sum(min(t, n - t) for t in tv)


def distance_bounds(m: int, type_vector: Sequence[int], n: int, disjoint: bool) -> tuple[int, int]:
    """(lower, upper) distance bounds for a non-trivial orbit code with best friend F_{p^m}."""
    tv = _check_type(type_vector, n)
    if m < 1 or n % m or any(t % m for t in tv):
        raise NotAFriendDimension(f"{m} does not divide gcd{tv + (n,)}")
    s = n // m
    upper = 2 * m * sum(min(t // m, s - t // m) for t in tv)
    lower = 2 * m * len(tv) if disjoint else 2 * m
    return lower, upper


def _scan_orbit_size(q: int, n: int, m: int, l: int) -> int:
    N = q**n - 1
    return lcm(l, N // (q**m - 1)) // l


def allowed_dimensions(q: int, n: int, m: int, l: int) -> list[int]:
    """Dimensions t, multiples of m in [m, n - m], compatible with an optimum distance beta-cyclic code."""
    N = q**n - 1
    if m < 1 or n % m:
        raise NotADivisor(f"{m} does not divide n = {n}")
    if l < 1 or N % l:
        raise NotADivisor(f"{l} does not divide {N}")
    size = _scan_orbit_size(q, n, m, l)
    out = []
    for t in range(m, n - m + 1, m):
        k = t if 2 * t <= n else n - t
        if size <= N // (q**k - 1):
            out.append(t)
    return out


@dataclass(frozen=True)
class OdfcScanRow:
    l: int
    beta_order: int
    intersection_order: int
    orbit_size: int
    allowed_dims: tuple[int, ...]
    max_distance: int

    def as_dict(self) -> dict:
        return {
            "beta_exponent": self.l,
            "beta_order": self.beta_order,
            "intersection_order": self.intersection_order,
            "orbit_size": self.orbit_size,
            "allowed_dims": ",".join(map(str, self.allowed_dims)),
            "max_distance": self.max_distance,
        }


def odfc_scan(q: int, n: int, m: int) -> list[OdfcScanRow]:
    """One row per subgroup <a^l> of F_{q^n}^*, by decreasing |beta|."""
    N = q**n - 1
    if m < 1 or n % m:
        raise NotADivisor(f"{m} does not divide n = {n}")
    rows = []
    for l in divisors(N):
        beta_order = N // l
        size = _scan_orbit_size(q, n, m, l)
        dims = tuple(allowed_dimensions(q, n, m, l))
        rows.append(
            OdfcScanRow(
                l=l,
                beta_order=beta_order,
                intersection_order=gcd(beta_order, q**m - 1),
                orbit_size=size,
                allowed_dims=dims,
                max_distance=0 if size == 1 or not dims else max_flag_distance(dims, n),
            )
        )
    return rows


def odfc_cyclic_types(q: int, n: int, m: int) -> set[tuple[int, ...]]:
    """Type vectors admissible for full-group optimum distance cyclic orbit codes."""
    if m < 1 or n % m:
        raise NotADivisor(f"{m} does not divide n = {n}")
    if 2 * m >= n:
        raise DegenerateCase(f"n = {n} <= 2m = {2 * m}: (m, n - m) is not a flag type")
    return {(m,), (n - m,), (m, n - m)}


def odfc_characterization(code: OrbitCode) -> bool:
    """Disjoint, and every projected code at distance 2 min(t_i, n - t_i)."""
    n = code.ctx.n
    if code.size == 1:
        return False
    return is_disjoint(code) and all(
        projected_min_distance(code, i) == 2 * min(t, n - t) for i, t in enumerate(code.type_vector, start=1)
    )


def odfc_direct(code: OrbitCode) -> bool:
    return code.size > 1 and min_distance(code) == max_flag_distance(code.type_vector, code.ctx.n)


def odfc_verify(code: OrbitCode) -> bool:
    """Whether the code attains the maximum flag distance; both criteria must agree."""
    direct = odfc_direct(code)
    if direct != odfc_characterization(code):
        raise InconsistentResult("direct distance test and characterization disagree")
    return direct
