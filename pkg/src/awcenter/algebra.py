"""Shared machinery for algebras whose elements are sums of normal-form monomials
with sparse polynomial coefficients.

An element stores ``{monomial key: raw coefficient polynomial}``, where a raw
polynomial is ``{exponent tuple: CycloScalar}`` over the algebra's coefficient
registry.  Subclasses supply ``mono_mul`` (product of two normal monomials as a
new ``{monomial: raw polynomial}``).
"""
from __future__ import annotations

import sys
import threading

from .coeffring.cyclo import CycloScalar
from .coeffring.multipoly import MultiPoly, pacc, pmul, pscale

sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))


def acc_term(out: dict, mono, poly: dict) -> None:
    cur = out.get(mono)
    if cur is None:
        if poly:
            out[mono] = dict(poly)
        return
    pacc(cur, poly)
    if not cur:
        del out[mono]


class Algebra:
    """Base context: order d, coefficient registry and memo tables."""

    kind = "algebra"

    def __init__(self, d: int, coef_registry):
        self.d = d
        self.coef_registry = tuple(coef_registry)
        self.ncoef = len(self.coef_registry)
        self.zero_exps = (0,) * self.ncoef
        self._lock = threading.RLock()
        self._mm_cache: dict = {}

    # scalars
    def q(self, m: int) -> CycloScalar:
        return CycloScalar.q_power(self.d, m)

    def s(self, v) -> CycloScalar:
        if isinstance(v, CycloScalar):
            return v
        return CycloScalar.from_int(self.d, v)

    def cpoly(self, c=1, exps=None) -> dict:
        """Raw coefficient monomial c * (coefficient vars)^exps."""
        c = self.s(c)
        if not c:
            return {}
        return {tuple(exps) if exps is not None else self.zero_exps: c}

    def cvar(self, name: str, power: int = 1) -> dict:
        names = [n for n, _ in self.coef_registry]
        e = [0] * self.ncoef
        e[names.index(name)] = power
        return {tuple(e): self.s(1)}

    def to_raw(self, p) -> dict:
        """Coerce an int / CycloScalar / MultiPoly into a raw coefficient polynomial."""
        if isinstance(p, MultiPoly):
            p = p.extend(self.coef_registry)
            return {k: self.s(c) for k, c in p.terms.items() if c}
        if isinstance(p, dict):
            return p
        return self.cpoly(p)

    # elements
    def element(self, terms: dict):
        raise NotImplementedError

    def mono_mul(self, m1, m2) -> dict:
        raise NotImplementedError

    def mul(self, x, y):
        out: dict = {}
        for m1, p1 in x.terms.items():
            for m2, p2 in y.terms.items():
                p12 = pmul(p1, p2)
                if not p12:
                    continue
                for m3, p3 in self.mono_mul(m1, m2).items():
                    if len(p3) == 1 and self.zero_exps in p3:
                        acc_term(out, m3, pscale(p12, p3[self.zero_exps]))
                    else:
                        acc_term(out, m3, pmul(p12, p3))
        return self.element(out)


class AlgebraElement:
    __slots__ = ("alg", "terms")

    def __init__(self, alg: Algebra, terms: dict):
        self.alg = alg
        self.terms = {m: p for m, p in terms.items() if p}

    @property
    def d(self) -> int:
        return self.alg.d

    def _same(self, other):
        if not isinstance(other, AlgebraElement):
            return False
        if other.alg is not self.alg:
            if type(other.alg) is not type(self.alg):
                raise TypeError("elements of different algebras")
            if other.alg.d != self.alg.d:
                raise ValueError(f"order mismatch: {self.alg.d} vs {other.alg.d}")
            if other.alg.coef_registry != self.alg.coef_registry:
                raise ValueError("coefficient registries differ")
        return True

    def _lift(self, other):
        if isinstance(other, AlgebraElement):
            self._same(other)
            return other
        return self.alg.element({self.alg.one_mono: self.alg.to_raw(other)})

    def __add__(self, other):
        o = self._lift(other)
        out = {m: dict(p) for m, p in self.terms.items()}
        for m, p in o.terms.items():
            acc_term(out, m, p)
        return self.alg.element(out)

    __radd__ = __add__

    def __neg__(self):
        return self.alg.element({m: pscale(p, -1) for m, p in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def scale(self, c) -> "AlgebraElement":
        raw = self.alg.to_raw(c)
        if len(raw) == 1 and self.alg.zero_exps in raw:
            c0 = raw[self.alg.zero_exps]
            return self.alg.element({m: pscale(p, c0) for m, p in self.terms.items()})
        return self.alg.element({m: pmul(p, raw) for m, p in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            self._same(other)
            return self.alg.mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        # scalars and coefficient polynomials are central
        return self.scale(other)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not supported")
        out = self.alg.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def __eq__(self, other):
        if isinstance(other, AlgebraElement):
            self._same(other)
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return self == self._lift(other)

    def __hash__(self):
        return hash(frozenset((m, frozenset(p.items())) for m, p in self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def coeff(self, mono) -> MultiPoly:
        return MultiPoly(self.alg.coef_registry, dict(self.terms.get(tuple(mono), {})))

    def grouped(self) -> dict:
        return {m: MultiPoly(self.alg.coef_registry, dict(p)) for m, p in sorted(self.terms.items())}

    def commutator(self, other) -> "AlgebraElement":
        return self * other - other * self

    def nterms(self) -> int:
        return sum(len(p) for p in self.terms.values())

    def __repr__(self):
        return self.alg.format(self)
