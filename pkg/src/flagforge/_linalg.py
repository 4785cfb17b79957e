"""Row reduction over F_p on vectors packed as base-p integer codes.

Digit i of a code is coordinate i.  The canonical form of a row space is its
reduced row echelon form with pivot = lowest nonzero coordinate, pivots
normalized to 1, rows sorted by pivot.  Characteristic 2 uses XOR on
bitmasks; odd p unpacks to digit lists.
"""

from __future__ import annotations


def unpack(code: int, p: int, width: int) -> list[int]:
    out = [0] * width
    for i in range(width):
        code, out[i] = divmod(code, p)
    return out


def pack(digits: list[int], p: int) -> int:
    code = 0
    for c in reversed(digits):
        code = code * p + c
    return code


def add_codes(a: int, b: int, p: int) -> int:
    """Coordinatewise sum of two packed vectors."""
    if p == 2:
        return a ^ b
    out, place = 0, 1
    while a or b:
        a, da = divmod(a, p)
        b, db = divmod(b, p)
        out += ((da + db) % p) * place
        place *= p
    return out


def _rref_bits(codes) -> tuple[int, ...]:
    rows: dict[int, int] = {}  # pivot bit -> row
    for v in codes:
        for piv, r in rows.items():
            if v & piv:
                v ^= r
        if v:
            piv = v & -v
            for b, r in rows.items():
                if r & piv:
                    rows[b] = r ^ v
            rows[piv] = v
    return tuple(rows[b] for b in sorted(rows))


def _rref_digits(codes, p: int, width: int) -> tuple[int, ...]:
    inv = [0] + [pow(c, p - 2, p) for c in range(1, p)]
    rows: list[tuple[int, list[int]]] = []  # (pivot index, digits)
    for code in codes:
        v = unpack(code, p, width)
        for piv, r in rows:
            c = v[piv]
            if c:
                v = [(a - c * b) % p for a, b in zip(v, r)]
        piv = next((i for i, c in enumerate(v) if c), None)
        if piv is None:
            continue
        s = inv[v[piv]]
        if s != 1:
            v = [(c * s) % p for c in v]
        for k, (b, r) in enumerate(rows):
            c = r[piv]
            if c:
                rows[k] = (b, [(x - c * y) % p for x, y in zip(r, v)])
        rows.append((piv, v))
    rows.sort(key=lambda t: t[0])
    return tuple(pack(r, p) for _, r in rows)


def rref(codes, p: int, width: int) -> tuple[int, ...]:
    """Canonical basis (as codes) of the F_p-span of ``codes``."""
    if p == 2:
        return _rref_bits(codes)
    return _rref_digits(codes, p, width)


def reduce(code: int, rows: tuple[int, ...], p: int, width: int) -> int:
    """Remainder of ``code`` against a canonical basis; zero iff it lies in the span."""
    if p == 2:
        for r in rows:
            if code & (r & -r):
                code ^= r
        return code
    v = unpack(code, p, width)
    for r in rows:
        rd = unpack(r, p, width)
        piv = next(i for i, c in enumerate(rd) if c)
        c = v[piv]
        if c:
            v = [(a - c * b) % p for a, b in zip(v, rd)]
    return pack(v, p)


def intersect(a_rows: tuple[int, ...], b_rows: tuple[int, ...], p: int, width: int) -> tuple[int, ...]:
    """Zassenhaus: reduce [u | u] and [v | 0]; rows with zero low half span the intersection."""
    shift = p**width
    stacked = [u + u * shift for u in a_rows] + list(b_rows)
    reduced = rref(stacked, p, 2 * width)
    return rref((r // shift for r in reduced if r % shift == 0), p, width)
