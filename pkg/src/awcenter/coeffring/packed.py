"""Integer Laurent polynomials over Z[q]/(q^d - 1) with exponents packed into one int.

A packed polynomial is ``{key: int}``; the key stores the q-exponent in the low
slot and each variable exponent in a further SLOT_BITS-bit slot, all signed, so
multiplying monomials is adding keys.  Used as a fast kernel for products whose
scalars are integral; results are reduced back to CycloScalar coefficients.
"""
from __future__ import annotations

from functools import lru_cache

from .cyclo import CycloScalar, _make, field

SLOT_BITS = 16
_MASK = (1 << SLOT_BITS) - 1
_HALF = 1 << (SLOT_BITS - 1)


def pack_key(exps: tuple, qexp: int = 0) -> int:
    key = 0
    for e in reversed(exps):
        key = (key << SLOT_BITS) + e
    return (key << SLOT_BITS) + qexp


def unpack_key(key: int, nvars: int) -> tuple:
    """(exps, qexp) from a packed key."""
    out = []
    for _ in range(nvars + 1):
        low = ((key + _HALF) & _MASK) - _HALF
        out.append(low)
        key = (key - low) >> SLOT_BITS
    return tuple(out[1:]), out[0]


def pack(p: dict, d: int):
    """Pack {exps: CycloScalar}; None when some coefficient is not integral."""
    out: dict = {}
    for exps, c in p.items():
        if c.den != 1:
            return None
        base = pack_key(exps)
        for m, v in enumerate(c.num):
            if v:
                out[base + m] = out.get(base + m, 0) + v
    return out


def packed_mul(p: dict, r: dict) -> dict:
    if len(p) > len(r):
        p, r = r, p
    out: dict = {}
    get = out.get
    for k1, c1 in p.items():
        for k2, c2 in r.items():
            k = k1 + k2
            out[k] = get(k, 0) + c1 * c2
    return out


def packed_acc(acc: dict, p: dict, scale: int = 1) -> dict:
    get = acc.get
    for k, c in p.items():
        acc[k] = get(k, 0) + c * scale
    return acc


@lru_cache(maxsize=None)
def _q_vectors(d: int) -> tuple:
    return tuple(CycloScalar.q_power(d, m).num for m in range(d))


def unpack(p: dict, d: int, nvars: int) -> dict:
    """Reduce a packed polynomial to {exps: CycloScalar}."""
    n = field(d).n
    vecs: dict = {}
    for key, c in packed_reduce(p, d).items():
        low = ((key + _HALF) & _MASK) - _HALF
        base = key - low
        vec = vecs.get(base)
        if vec is None:
            vec = vecs[base] = [0] * n
        vec[low] += c
    return {unpack_key(base, nvars)[0]: _make(d, vec, 1) for base, vec in vecs.items() if any(vec)}


def packed_reduce(p: dict, d: int) -> dict:
    """Canonical form: q-exponents reduced to the cyclotomic power basis, zeros dropped."""
    n = field(d).n
    qv = _q_vectors(d)
    out: dict = {}
    get = out.get
    for key, c in p.items():
        if not c:
            continue
        low = ((key + _HALF) & _MASK) - _HALF
        base = key - low
        m = low % d
        if m < n:
            out[base + m] = get(base + m, 0) + c
        else:
            for j, x in enumerate(qv[m]):
                if x:
                    out[base + j] = get(base + j, 0) + c * x
    return {k: c for k, c in out.items() if c}
