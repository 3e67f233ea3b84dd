"""The rank-one double affine Hecke algebra of type (C1v, C1) in normal form.

Normal words are t1^l u^i v^j with l in {0, 1} and i, j any integers, keyed by
(l, i, j).  Coefficients are Laurent polynomials in k0, k1, k0v, k1v; the
parameters c0 = k0 + 1/k0 etc. are derived polynomials.  Rewriting uses

    t1^-1 = c1 - t1,   u t1^-1 = -t1 u^-1 + c0v,   v t1^-1 = -t1 v^-1 + c1v

and four rules that move v^(+-1) to the right of u^(+-1).
"""
from __future__ import annotations

import itertools
import random
from fractions import Fraction
from functools import lru_cache
from math import comb

from .algebra import Algebra, AlgebraElement, acc_term
from .chebyshev import cheb_eval, cyclic_shift, phi, psi
from .checks import CheckResult, combine
from .coeffring.cyclo import CycloScalar, dbar, field
from .coeffring.multipoly import MultiPoly, pacc, pmul, pscale
from .coeffring.packed import pack, pack_key, packed_acc, packed_mul, packed_reduce, unpack, unpack_key
from .linalg import rank
from .uaw import UAWElement, casimir_omega, evaluate_commuting, generators, uaw_algebra

PARAMS = (("k0", True), ("k1", True), ("k0v", True), ("k1v", True))


class RewritingError(RuntimeError):
    pass


class DahaAlgebra(Algebra):
    kind = "daha"
    one_mono = (0, 0, 0)

    def __init__(self, d: int):
        super().__init__(d, PARAMS)
        self._one = {self.zero_exps: self.s(1)}
        # Structure constants live in Z[q][c0, c1, c0v, c1v] and are kept packed
        # (see coeffring.packed); slot i of a c-monomial is the parameter of slot i
        # of a k-monomial.
        self.c0, self.c1, self.c0v, self.c1v = (
            {pack_key(tuple(int(s == i) for s in range(4))): 1} for i in range(4)
        )
        self._k_of_c: dict = {}
        self._k_table: dict = {}
        self._P: dict = {}
        self._Q: dict = {}
        self._t1_cache: dict = {}
        self._u_cache: dict = {}
        self._rules = self._build_rules()
        self._self_check()

    def element(self, terms):
        return DahaElement(self, terms)

    def one(self):
        return self.element({(0, 0, 0): dict(self._one)})

    def word(self, l: int = 0, i: int = 0, j: int = 0, coeff=1) -> "DahaElement":
        return self.element({(l, i, j): self.to_raw(coeff)})

    # packed helpers ------------------------------------------------------------
    def _pq(self, m: int) -> dict:
        """q^m as a packed constant."""
        return {m % self.d: 1}

    @staticmethod
    def _acc(out: dict, mono, poly: dict, scale: int = 1) -> None:
        cur = out.get(mono)
        if cur is None:
            cur = out[mono] = {}
        packed_acc(cur, poly, scale)

    def _done(self, out: dict) -> dict:
        res = {}
        for m, p in out.items():
            p = packed_reduce(p, self.d)
            if p:
                res[m] = p
        return res

    # relation data -----------------------------------------------------------
    def _t1_power(self, p: int) -> list:
        """t1^p for p in -2..1 as [(packed coeff, l)]."""
        one, c1 = {0: 1}, self.c1
        if p == 0:
            return [(one, 0)]
        if p == 1:
            return [(one, 1)]
        if p == -1:
            return [(c1, 0), ({0: -1}, 1)]
        if p == -2:
            return [(packed_acc(packed_mul(c1, c1), one, -1), 0), ({k: -c for k, c in c1.items()}, 1)]
        raise ValueError(p)

    def _build_rules(self) -> dict:
        q = self._pq
        c0, c1, c0v, c1v = self.c0, self.c1, self.c0v, self.c1v

        def k(s, *polys):
            out = s if isinstance(s, dict) else {0: s}
            for p in polys:
                out = packed_mul(out, p)
            return out

        def neg(p):
            return {key: -c for key, c in p.items()}

        # (s, e): v^s u^e = sum coeff * t1^p u^a v^b
        raw = {
            (1, 1): [
                (k(q(2)), 0, 1, 1), (k(q(-2), c1), -1, 1, -1), (k(-1, c1v), -1, 1, 0),
                (k(1, c0v), 1, 0, -1), (k(neg(q(-2)), c0v, c1), 0, 0, -1),
                (k(neg(q(1)), c0), 1, 0, 0), (k(q(-1), c0, c1), 0, 0, 0),
            ],
            (-1, -1): [
                (k(q(2)), 0, -1, -1), (k(q(2), c1), -1, 1, -1), (k(neg(q(2)), c1v), -1, 1, 0),
                # v^-1 coefficient: q^2 c0v (t1 - c1) = -q^2 c0v t1^-1
                (k(q(2), c0v), 1, 0, -1), (k(neg(q(2)), c0v, c1), 0, 0, -1), (k(q(1), c0), -1, 0, 0),
            ],
            (-1, 1): [
                (k(neg(q(-2))), -2, 1, -1), (k(1, c1v), -1, 1, 0), (k(q(-2), c0v), -1, 0, -1),
                (k(neg(q(-1)), c0), -1, 0, 0),
            ],
            (1, -1): [
                (k(q(-2)), 0, -1, 1), (k(neg(q(-2)), c1), -1, 1, -1), (k(q(-2), c1v), -1, 1, 0),
                (k(q(-2), c0v, c1), 0, 0, -1), (k(-1, c0v), 1, 0, -1), (k(neg(q(-1)), c0), -1, 0, 0),
                (k(packed_acc({0: 1}, q(-2), -1), c0v, c1v), 0, 0, 0),
            ],
        }
        rules = {}
        for key, terms in raw.items():
            out: dict = {}
            for coef, p, a, b in terms:
                for tc, l in self._t1_power(p):
                    self._acc(out, (l, a, b), packed_mul(coef, tc))
            rules[key] = self._done(out)
        return rules

    # rewriting kernel ----------------------------------------------------------
    def _left_t1(self, x: dict) -> dict:
        """t1 times a normal-form dict."""
        out: dict = {}
        for (l, i, j), p in x.items():
            if l == 0:
                self._acc(out, (1, i, j), p)
            else:
                # t1^2 = c1 t1 - 1
                self._acc(out, (1, i, j), packed_mul(p, self.c1))
                self._acc(out, (0, i, j), p, -1)
        return out

    @staticmethod
    def _shift(x: dict, di: int = 0, dj: int = 0) -> dict:
        return {(l, i + di, j + dj): p for (l, i, j), p in x.items()}

    def _u_v_t1(self, i: int, j: int) -> dict:
        """u^i v^j t1 in normal form."""
        key = (i, j)
        hit = self._P.get(key)
        if hit is not None:
            return hit
        c1, c0v, c1v = self.c1, self.c0v, self.c1v
        out: dict = {}
        if j > 0:
            # v t1 = c1 v + t1 v^-1 - c1v
            self._acc(out, (0, i, j), c1)
            self._acc(out, (0, i, j - 1), c1v, -1)
            rest = self._shift(self._u_v_t1(i, j - 1), dj=-1)
        elif j < 0:
            # v^-1 t1 = c1v - c1 v + t1 v
            self._acc(out, (0, i, j + 1), c1v)
            self._acc(out, (0, i, j + 2), c1, -1)
            rest = self._shift(self._u_v_t1(i, j + 1), dj=1)
        elif i > 0:
            # u t1 = c1 u + t1 u^-1 - c0v
            self._acc(out, (0, i, 0), c1)
            self._acc(out, (0, i - 1, 0), c0v, -1)
            rest = self._shift(self._u_v_t1(i - 1, 0), di=-1)
        elif i < 0:
            # u^-1 t1 = c0v - c1 u + t1 u
            self._acc(out, (0, i + 1, 0), c0v)
            self._acc(out, (0, i + 2, 0), c1, -1)
            rest = self._shift(self._u_v_t1(i + 1, 0), di=1)
        else:
            rest = {(1, 0, 0): {0: 1}}
        for m, p in rest.items():
            self._acc(out, m, p)
        out = self._done(out)
        self._P[key] = out
        return out

    def _v_u(self, j: int, e: int) -> dict:
        """v^j u^e (e = +-1) in normal form."""
        key = (j, e)
        hit = self._Q.get(key)
        if hit is not None:
            return hit
        out: dict = {}
        if j == 0:
            out[(0, e, 0)] = {0: 1}
        else:
            s = 1 if j > 0 else -1
            rest = j - s
            for (l, a, b), coef in self._rules[(s, e)].items():
                # v^rest t1^l u^a v^b
                if l == 0:
                    head = {(0, 0, rest): {0: 1}} if a == 0 else self._v_u(rest, a)
                else:
                    head = {}
                    for (l2, _, e2), p2 in self._u_v_t1(0, rest).items():
                        if a == 0:
                            part = {(0, 0, e2): p2}
                        else:
                            part = {m: packed_mul(p, p2) for m, p in self._v_u(e2, a).items()}
                        if l2:
                            part = self._left_t1(part)
                        for m, p in part.items():
                            self._acc(head, m, p)
                for m, p in self._shift(head, dj=b).items():
                    self._acc(out, m, packed_mul(p, coef))
        out = self._done(out)
        self._Q[key] = out
        return out

    def times_t1(self, m: tuple) -> dict:
        hit = self._t1_cache.get(m)
        if hit is None:
            l, i, j = m
            hit = self._u_v_t1(i, j)
            if l:
                hit = self._done(self._left_t1(hit))
            self._t1_cache[m] = hit
        return hit

    def times_u(self, m: tuple, e: int) -> dict:
        key = (m, e)
        hit = self._u_cache.get(key)
        if hit is None:
            l, i, j = m
            hit = {}
            for (l2, a, b), p in self._v_u(j, e).items():
                if l2 == 0:
                    self._acc(hit, (0, i + a, b), p)
                else:
                    for (l3, c, _), p3 in self._u_v_t1(i, 0).items():
                        self._acc(hit, (l3, c + a, b), packed_mul(p, p3))
            if l:
                hit = self._left_t1(hit)
            hit = self._done(hit)
            self._u_cache[key] = hit
        return hit

    def _c_monomial_to_k(self, key: int) -> dict:
        hit = self._k_of_c.get(key)
        if hit is None:
            exps, _ = unpack_key(key, 4)
            hit = {0: 1}
            for slot, n in enumerate(exps):
                if n:
                    # (k + 1/k)^n
                    factor = {}
                    for t in range(n + 1):
                        factor[pack_key(tuple(n - 2 * t if s == slot else 0 for s in range(4)))] = comb(n, t)
                    hit = packed_mul(hit, factor)
            self._k_of_c[key] = hit
        return hit

    def c_to_k(self, p: dict) -> dict:
        """Expand a packed polynomial in c0, c1, c0v, c1v into a packed Laurent polynomial in the k's."""
        out: dict = {}
        get = out.get
        for key, c in p.items():
            low = ((key + (1 << 15)) & 0xFFFF) - (1 << 15)
            for k2, c2 in self._c_monomial_to_k(key - low).items():
                out[k2 + low] = get(k2 + low, 0) + c * c2
        return out

    def k_to_c(self, p: dict) -> dict:
        """Inverse of c_to_k on canonical packed polynomials invariant under each k -> 1/k."""
        p = packed_reduce(p, self.d)
        n = field(self.d).n
        out: dict = {}
        while p:
            top = max(p)
            low = ((top + (1 << 15)) & 0xFFFF) - (1 << 15)
            base = top - low
            exps, _ = unpack_key(base, 4)
            if min(exps) < 0:
                raise ValueError("coefficient is not symmetric under k -> 1/k")
            # canonical q-slots lie in [0, n)
            part = {base + m: p[base + m] for m in range(n) if base + m in p}
            expansion = self._c_monomial_to_k(base)
            for k1, c1 in part.items():
                m = k1 - base
                out[base + m] = out.get(base + m, 0) + c1
                for k2, c2 in expansion.items():
                    key = k2 + m
                    v = p.get(key, 0) - c1 * c2
                    if v:
                        p[key] = v
                    else:
                        p.pop(key, None)
        return out

    def param_sum_raw(self, i: int) -> dict:
        """k_i + 1/k_i as a raw coefficient polynomial."""
        return unpack(self.c_to_k((self.c0, self.c1, self.c0v, self.c1v)[i]), self.d, 4)

    def _packed_table(self, m1, m2) -> dict:
        key = (m1, m2)
        hit = self._k_table.get(key)
        if hit is None:
            hit = {m: self.c_to_k(p) for m, p in self._c_mono_mul(m1, m2).items()}
            self._k_table[key] = hit
        return hit

    def mono_mul(self, m1, m2) -> dict:
        return {m: unpack(p, self.d, 4) for m, p in self._packed_table(m1, m2).items()}

    def mul(self, x, y):
        d = self.d
        xs = [(m, pack(p, d)) for m, p in x.terms.items()]
        ys = [(m, pack(p, d)) for m, p in y.terms.items()]
        if any(p is None for _, p in xs + ys):
            return super().mul(x, y)
        out: dict = {}
        for m1, p1 in xs:
            for m2, p2 in ys:
                p12 = packed_mul(p1, p2)
                for m3, p3 in self._packed_table(m1, m2).items():
                    acc = out.get(m3)
                    if acc is None:
                        acc = out[m3] = {}
                    if len(p3) == 1 and 0 in p3:
                        packed_acc(acc, p12, p3[0])
                    else:
                        packed_acc(acc, packed_mul(p12, p3))
        return self.element({m: unpack(p, d, 4) for m, p in out.items()})

    def _c_mono_mul(self, m1, m2) -> dict:
        l2, i2, j2 = m2
        if l2 == 0 and i2 == 0:
            return {(m1[0], m1[1], m1[2] + j2): {0: 1}}
        if m1[2] == 0 and m1[0] == 0 and l2 == 0:
            return {(0, m1[1] + i2, j2): {0: 1}}
        key = (m1, m2)
        hit = self._mm_cache.get(key)
        if hit is not None:
            return hit
        if i2 != 0:
            e = 1 if i2 > 0 else -1
            prev = self._c_mono_mul(m1, (l2, i2 - e, 0))
            out: dict = {}
            for m, p in prev.items():
                for m3, p3 in self.times_u(m, e).items():
                    self._acc(out, m3, packed_mul(p, p3))
            out = self._done(out)
        else:
            out = self.times_t1(m1)
        if j2:
            out = self._shift(out, dj=j2)
        self._mm_cache[key] = out
        return out

    def _self_check(self) -> None:
        """Multiply the t1-moving rules back against the defining relations."""
        t1, u, ui, v, vi = (self.word(*k) for k in ((1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)))
        t1i = self.element({(0, 0, 0): self.param_sum_raw(1)}) - t1
        checks = [
            (u * t1i, -(t1 * ui) + self.element({(0, 0, 0): self.param_sum_raw(2)})),
            (v * t1i, -(t1 * vi) + self.element({(0, 0, 0): self.param_sum_raw(3)})),
            (t1 * t1i, self.one()),
        ]
        for x in (u, ui, v, vi):
            checks.append(((x * t1) * t1i, x))
            checks.append(((x * t1i) * t1, x))
        for lhs, rhs in checks:
            if lhs != rhs:
                raise RewritingError("t1-moving rules are inconsistent with the defining relations")

    def format(self, x) -> str:
        if not x.terms:
            return "0"
        parts = []
        for m, p in sorted(x.terms.items(), reverse=True):
            l, i, j = m
            mono = "*".join(t for t in (
                "t1" if l else "",
                (f"u^{i}" if i != 1 else "u") if i else "",
                (f"v^{j}" if j != 1 else "v") if j else "",
            ) if t)
            coef = str(MultiPoly(self.coef_registry, dict(p)))
            parts.append(f"({coef})*{mono}" if mono else coef)
        return " + ".join(parts)


@lru_cache(maxsize=None)
def daha_algebra(d: int) -> DahaAlgebra:
    return DahaAlgebra(d)


class DahaElement(AlgebraElement):
    __slots__ = ()

    def to_json(self) -> dict:
        return {
            "d": self.alg.d,
            "terms": [
                {"l": m[0], "u": m[1], "v": m[2], "coeff": MultiPoly(self.alg.coef_registry, dict(p)).to_json()}
                for m, p in sorted(self.terms.items())
            ],
        }

    @staticmethod
    def from_json(obj: dict) -> "DahaElement":
        alg = daha_algebra(int(obj["d"]))
        out: dict = {}
        for t in obj["terms"]:
            l = int(t["l"])
            if l not in (0, 1):
                raise ValueError("t1 exponent of a normal word must be 0 or 1")
            acc_term(out, (l, int(t["u"]), int(t["v"])), alg.to_raw(MultiPoly.from_json(t["coeff"])))
        return alg.element(out)


def daha_mul(x: DahaElement, y: DahaElement) -> DahaElement:
    return x * y


class CForm:
    """An element whose coefficients lie in Z[q][c0, c1, c0v, c1v].

    Products use the c-valued structure constants directly, which avoids the
    k-Laurent expansion of every intermediate coefficient.  The substitution
    c -> k + 1/k is injective, so equalities and degrees transfer unchanged.
    """

    __slots__ = ("alg", "terms")

    def __init__(self, alg: DahaAlgebra, terms: dict):
        self.alg = alg
        self.terms = {m: p for m, p in terms.items() if p}

    @classmethod
    def from_element(cls, x: DahaElement) -> "CForm":
        alg = x.alg
        return cls(alg, {m: alg.k_to_c(pack(p, alg.d)) for m, p in x.terms.items()})

    @classmethod
    def one(cls, alg: DahaAlgebra) -> "CForm":
        return cls(alg, {(0, 0, 0): {0: 1}})

    def to_element(self) -> DahaElement:
        alg = self.alg
        return alg.element({m: unpack(alg.c_to_k(p), alg.d, 4) for m, p in self.terms.items()})

    def _combine(self, other: "CForm", sign: int) -> "CForm":
        out = {m: dict(p) for m, p in self.terms.items()}
        for m, p in other.terms.items():
            cur = out.get(m)
            if cur is None:
                out[m] = {k: c * sign for k, c in p.items()}
            else:
                packed_acc(cur, p, sign)
                out[m] = {k: c for k, c in cur.items() if c}
        return CForm(self.alg, out)

    def __add__(self, other):
        if not isinstance(other, CForm):
            other = CForm.one(self.alg).scale(other)
        return self._combine(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, CForm):
            other = CForm.one(self.alg).scale(other)
        return self._combine(other, -1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c) -> "CForm":
        """Multiply by an int or a packed c-polynomial."""
        if isinstance(c, int):
            return CForm(self.alg, {m: {k: v * c for k, v in p.items()} for m, p in self.terms.items()} if c else {})
        d = self.alg.d
        return CForm(self.alg, {m: packed_reduce(packed_mul(p, c), d) for m, p in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, CForm):
            return self.scale(other)
        alg = self.alg
        out: dict = {}
        for m1, p1 in self.terms.items():
            for m2, p2 in other.terms.items():
                p12 = packed_mul(p1, p2)
                for m3, p3 in alg._c_mono_mul(m1, m2).items():
                    acc = out.get(m3)
                    if acc is None:
                        acc = out[m3] = {}
                    if len(p3) == 1 and 0 in p3:
                        packed_acc(acc, p12, p3[0])
                    else:
                        packed_acc(acc, packed_mul(p12, p3))
        return CForm(alg, {m: packed_reduce(p, alg.d) for m, p in out.items()})

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n: int) -> "CForm":
        out = CForm.one(self.alg)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, CForm):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.terms

    def nterms(self) -> int:
        return sum(len(p) for p in self.terms.values())

    def degree(self):
        if not self.terms:
            return float("-inf")
        return max(abs(i) + abs(j) for (_, i, j) in self.terms)


def param(name: str, d: int, power: int = 1) -> DahaElement:
    alg = daha_algebra(d)
    return alg.element({(0, 0, 0): alg.cvar(name, power)})


def param_sum(name: str, d: int) -> DahaElement:
    """k + 1/k for one of the four parameters."""
    return param(name, d) + param(name, d, -1)


def basic(d: int) -> dict:
    alg = daha_algebra(d)
    t1 = alg.word(1, 0, 0)
    return {
        "t1": t1, "t1inv": param_sum("k1", d) - t1,
        "u": alg.word(0, 1, 0), "uinv": alg.word(0, -1, 0),
        "v": alg.word(0, 0, 1), "vinv": alg.word(0, 0, -1),
    }


@lru_cache(maxsize=None)
def reconstruct_generators(d: int) -> tuple:
    """(t0, t1, t0v, t1v) from t0v = t1^-1 u, t1v = v t1^-1, t0 = q^-1 u^-1 t1 v^-1."""
    g = basic(d)
    q = daha_algebra(d).q
    t0v = g["t1inv"] * g["u"]
    t1v = g["v"] * g["t1inv"]
    t0 = q(-1) * (g["uinv"] * g["t1"] * g["vinv"])
    return t0, g["t1"], t0v, t1v


@lru_cache(maxsize=None)
def abc(g: str, d: int) -> DahaElement:
    if g not in ("A", "B", "C"):
        raise ValueError(f"unknown generator {g}")
    b = basic(d)
    if g == "A":
        return b["u"] + b["uinv"]
    if g == "B":
        return b["v"] + b["vinv"]
    t0, t1, _, _ = reconstruct_generators(d)
    # (t0 t1)^-1 = t1^-1 t0^-1 with t0^-1 = c0 - t0
    return t0 * t1 + b["t1inv"] * (param_sum("k0", d) - t0)


def _shifted_t1(d: int) -> DahaElement:
    """q^-1 t1 + q t1^-1."""
    b = basic(d)
    q = daha_algebra(d).q
    return q(-1) * b["t1"] + q(1) * b["t1inv"]


@lru_cache(maxsize=None)
def _sharp_images(d: int) -> dict:
    args = (param_sum("k0v", d), param_sum("k1v", d), param_sum("k0", d), _shifted_t1(d))
    one = daha_algebra(d).one()
    imgs = {g: abc(g, d) for g in ("A", "B", "C")}
    for i, name in enumerate(("alpha", "beta", "gamma")):
        imgs[name] = evaluate_commuting(cyclic_shift(i, phi(1)), args, one)
    imgs["Omega"] = evaluate_commuting(psi(1), args, one)
    return imgs


class _Sharp:
    def __init__(self, d: int):
        self.d = d
        self.alg = daha_algebra(d)
        self.imgs = _sharp_images(d)
        self._pow: dict = {}

    def power(self, g: str, n: int) -> DahaElement:
        key = (g, n)
        hit = self._pow.get(key)
        if hit is None:
            hit = self.alg.one() if n == 0 else self.power(g, n - 1) * self.imgs[g]
            self._pow[key] = hit
        return hit


@lru_cache(maxsize=None)
def _sharp(d: int) -> _Sharp:
    return _Sharp(d)


def sharp(w: UAWElement) -> DahaElement:
    d = w.alg.d
    sh = _sharp(d)
    out = sh.alg.element({})
    for (i, j, k), p in w.terms.items():
        cpart = sh.alg.element({})
        for exps, c in p.items():
            if any(exps[3:]):
                raise ValueError("sharp expects coefficients in alpha, beta, gamma only")
            cpart = cpart + sh.power("alpha", exps[0]) * sh.power("beta", exps[1]) * sh.power("gamma", exps[2]) * c
        out = out + cpart * sh.power("A", i) * sh.power("B", j) * sh.power("C", k)
    return out


def daha_filtration_degree(x: DahaElement):
    if not x.terms:
        return float("-inf")
    return max(abs(i) + abs(j) for (_, i, j) in x.terms)


@lru_cache(maxsize=None)
def c_basic(d: int) -> dict:
    """t1, t1^-1, u^(+-1), v^(+-1), A, B, C as CForm elements."""
    out = {k: CForm.from_element(x) for k, x in basic(d).items()}
    for g in "ABC":
        out[g] = CForm.from_element(abc(g, d))
    return out


_C_CHEB: dict = {}


def c_cheb_abc(n: int, g: str, d: int) -> CForm:
    key = (n, g, d)
    hit = _C_CHEB.get(key)
    if hit is None:
        hit = cheb_eval(n, c_basic(d)[g], CForm.one(daha_algebra(d)))
        _C_CHEB[key] = hit
    return hit


def cheb_abc(n: int, g: str, d: int) -> DahaElement:
    """T_n(g) for g in A, B, C."""
    return c_cheb_abc(n, g, d).to_element()


# checks ------------------------------------------------------------------------

def _payload(x: DahaElement, limit: int = 6) -> list:
    items = sorted(x.terms.items())[:limit]
    return [{"l": m[0], "u": m[1], "v": m[2], "coeff": str(MultiPoly(x.alg.coef_registry, dict(p)))} for m, p in items]


def _eq_check(name: str, lhs, rhs) -> CheckResult:
    diff = lhs - rhs
    return CheckResult(name, diff.is_zero(), {} if diff.is_zero() else {"residual": _payload(diff)})


def _degree_check(name: str, x: DahaElement, bound: int) -> CheckResult:
    deg = daha_filtration_degree(x)
    return CheckResult(name, deg <= bound, {"degree": deg if x.terms else None, "bound": bound})


def hecke_relations_check(d: int) -> CheckResult:
    t0, t1, t0v, t1v = reconstruct_generators(d)
    alg = daha_algebra(d)
    q = alg.q
    zero = alg.element({})
    res = []
    for name, t, kname in (("t0", t0, "k0"), ("t1", t1, "k1"), ("t0v", t0v, "k0v"), ("t1v", t1v, "k1v")):
        kk, ki = param(kname, d), param(kname, d, -1)
        res.append(_eq_check(f"({name} - {kname})({name} - 1/{kname}) = 0", (t - kk) * (t - ki), zero))
    res.append(_eq_check("t0v t0 t1v t1 = q^-1", t0v * t0 * t1v * t1, alg.one() * q(-1)))
    b = basic(d)
    res.append(_eq_check("t1^-1 u = t0v", b["t1inv"] * b["u"], t0v))
    return combine(f"Hecke relations of the reconstructed generators, d={d}", res)


def presentation_check(d: int) -> CheckResult:
    """The seven relations used for rewriting hold for the normal-form product."""
    alg = daha_algebra(d)
    q = alg.q
    g = basic(d)
    t1, T, u, U, v, V = (g[k] for k in ("t1", "t1inv", "u", "uinv", "v", "vinv"))
    c0, c1, c0v, c1v = (param_sum(n, d) for n in ("k0", "k1", "k0v", "k1v"))
    res = [
        _eq_check("t1 t1^-1 = 1", t1 * T, alg.one()),
        _eq_check("u u^-1 = 1", u * U, alg.one()),
        _eq_check("u t1^-1 = -t1 u^-1 + c0v", u * T, c0v - t1 * U),
        _eq_check("v t1^-1 = -t1 v^-1 + c1v", v * T, c1v - t1 * V),
        _eq_check("v^-1 u^-1", V * U, q(2) * (U * V) + q(2) * (c1 * T * u * V) - q(2) * (c1v * T * u)
                  - q(2) * (c0v * T * V) + q(1) * (c0 * T)),
        _eq_check("v u", v * u, q(2) * (u * v) + q(-2) * (c1 * T * u * V) - c1v * T * u
                  + c0v * (t1 - q(-2) * c1) * V - q(1) * (c0 * (t1 - q(-2) * c1))),
        _eq_check("v^-1 u", V * u, -q(-2) * (T * T * u * V) + c1v * T * u + q(-2) * (c0v * T * V) - q(-1) * (c0 * T)),
        _eq_check("v u^-1", v * U, q(-2) * (U * v) - q(-2) * (c1 * T * u * V) + q(-2) * (c1v * T * u)
                  + c0v * (q(-2) * c1 - t1) * V - q(-1) * (c0 * T) + (1 - q(-2)) * (c0v * c1v)),
    ]
    return combine(f"rewriting presentation, d={d}", res)


def abc_checks(d: int) -> list:
    alg = daha_algebra(d)
    q = alg.q
    g = basic(d)
    T, u, U, v, V = (g[k] for k in ("t1inv", "u", "uinv", "v", "vinv"))
    c0, c0v, c1v = (param_sum(n, d) for n in ("k0", "k0v", "k1v"))
    t0, t1, t0v, t1v = reconstruct_generators(d)
    A, B, C = (abc(x, d) for x in "ABC")
    c_display = (q(-1) * (T * T * u * V) - q(-1) * (U * v) - q(-1) * (c1v * T * u)
                 - q(-1) * (c0v * T * V) + c0 * T + q(-1) * (c0v * c1v))
    res = [
        _eq_check("A = u + u^-1", A, (t1 * t0v) + ((c0v - t0v) * T)),
        _eq_check("B = v + v^-1", B, (t1v * t1) + ((param_sum("k1", d) - t1) * (c1v - t1v))),
        _eq_check("C normal form", C, c_display),
    ]
    for x in (A, B, C):
        res.append(_eq_check("A, B, C commute with t1", x * t1, t1 * x))
    return res


def sharp_checks(d: int) -> CheckResult:
    alg = daha_algebra(d)
    q = uaw_algebra(d).q
    im = _sharp_images(d)
    A, B, C, al, be, ga = (im[k] for k in ("A", "B", "C", "alpha", "beta", "gamma"))
    zero = alg.element({})
    res = [
        _eq_check("image of CB relation", C * B - q(2) * (B * C) - q(1) * (q(2) - q(-2)) * A + q(1) * (q(1) - q(-1)) * al, zero),
        _eq_check("image of CA relation", C * A - q(-2) * (A * C) + q(-1) * (q(2) - q(-2)) * B - q(-1) * (q(1) - q(-1)) * be, zero),
        _eq_check("image of BA relation", B * A - q(2) * (A * B) - q(1) * (q(2) - q(-2)) * C + q(1) * (q(1) - q(-1)) * ga, zero),
        _eq_check("sharp(Omega) = psi_1 at (c0v, c1v, c0; q^-1 t1 + q t1^-1)", sharp(casimir_omega(d)), im["Omega"]),
        _eq_check("sharp(1) = 1", sharp(uaw_algebra(d).one()), alg.one()),
    ]
    t1 = basic(d)["t1"]
    for name in ("alpha", "beta", "gamma", "Omega"):
        res.append(_eq_check(f"sharp({name}) commutes with t1", im[name] * t1, t1 * im[name]))
    return combine(f"sharp is a homomorphism on the defining relations, d={d}", res)


def b_power_u_check(d: int, n: int) -> CheckResult:
    """B^n u = u S^n + t1 (q^-1 c0v v^-1 - c0) (S^n - B^n) / (q v - q^-1 v^-1), S = q^2 v + q^-2 v^-1.

    Checked after right multiplication by q v - q^-1 v^-1, which is injective on
    normal forms (it only multiplies the v-Laurent part of each t1^l u^i slot).
    """
    alg = daha_algebra(d)
    q = alg.q
    g = basic(d)
    t1, u, v, V = g["t1"], g["u"], g["v"], g["vinv"]
    B = abc("B", d)
    S = q(2) * v + q(-2) * V
    Bn, Sn = B ** n, S ** n
    c0, c0v = param_sum("k0", d), param_sum("k0v", d)
    w = q(1) * v - q(-1) * V
    lhs = (Bn * u - u * Sn) * w
    rhs = t1 * (q(-1) * (c0v * V) - c0) * (Sn - Bn)
    return _eq_check(f"B^{n} u closed form, d={d}", lhs, rhs)


def _c_eq_check(name: str, lhs: CForm, rhs: CForm) -> CheckResult:
    diff = lhs - rhs
    if diff.is_zero():
        return CheckResult(name, True)
    return CheckResult(name, False, {"residual": _payload(CForm(diff.alg, dict(sorted(diff.terms.items())[:6])).to_element())})


def _c_degree_check(name: str, x: CForm, bound: int) -> CheckResult:
    deg = x.degree()
    return CheckResult(name, deg <= bound, {"degree": deg if x.terms else None, "bound": bound})


def daha_centrality_suite(d: int) -> list:
    b = dbar(d)
    alg = daha_algebra(d)
    g = c_basic(d)
    t1, T, u, U, v, V = (g[k] for k in ("t1", "t1inv", "u", "uinv", "v", "vinv"))
    res = []
    for n in (b, 2 * b):
        for G in "ABC":
            TG = c_cheb_abc(n, G, d)
            for name, x in (("t1", t1), ("u", u), ("v", v)):
                res.append(_c_eq_check(f"[T_{n}({G}), {name}] = 0, d={d}", TG * x, x * TG))
    for n in range(0, 2 * b + 1):
        res.append(b_power_u_check(d, n))
    A, B, C = g["A"], g["B"], g["C"]
    c1 = alg.c1
    qs = lambda m: {m % d: 1}
    pw: dict = {}

    def power(name, n):
        if (name, n) not in pw:
            pw[(name, n)] = CForm.one(alg) if n == 0 else power(name, n - 1) * g[name]
        return pw[(name, n)]

    for i in range(1, b + 1):
        ui, Ui, vi, Vi = power("u", i), power("uinv", i), power("v", i), power("vinv", i)
        res.append(_c_degree_check(f"A^{i} = u^{i} + u^-{i} mod H_{i - 1}, d={d}", power("A", i) - (ui + Ui), i - 1))
        res.append(_c_degree_check(f"B^{i} = v^{i} + v^-{i} mod H_{i - 1}, d={d}", power("B", i) - (vi + Vi), i - 1))
        lead = (Ui * vi - T * T * ui * Vi).scale(qs(-i * i)).scale((-1) ** i)
        res.append(_c_degree_check(f"C^{i} = (-1)^{i} q^-{i * i} (u^-{i} v^{i} - t1^-2 u^{i} v^-{i}) mod H_{2 * i - 1}, d={d}",
                                   power("C", i) - lead, 2 * i - 1))
        res.append(_c_degree_check(f"u^{i} t1^-1 = -t1 u^-{i} mod H_{i - 1}, d={d}", ui * T + t1 * Ui, i - 1))
        res.append(_c_degree_check(f"v^{i} t1^-1 = -t1 v^-{i} mod H_{i - 1}, d={d}", vi * T + t1 * Vi, i - 1))
        for j in range(1, b + 1):
            vj, Vj = power("v", j), power("vinv", j)
            res.append(_c_degree_check(f"u^{i} v^{j} t1^-1 = -t1 u^-{i} v^-{j} - c1 u^{i} v^-{j} mod H_{i + j - 1}, d={d}",
                                       ui * vj * T + t1 * Ui * Vj + (ui * Vj).scale(c1), i + j - 1))
            res.append(_c_degree_check(f"u^-{i} v^{j} t1^-1 = t1^-1 u^{i} v^-{j} mod H_{i + j - 1}, d={d}",
                                       Ui * vj * T - T * ui * Vj, i + j - 1))
            res.append(_c_degree_check(f"u^-{i} v^-{j} t1 = -t1^-1 u^{i} v^{j} - c1 u^-{i} v^{j} mod H_{i + j - 1}, d={d}",
                                       Ui * Vj * t1 + T * ui * vj + (Ui * vj).scale(c1), i + j - 1))
    comm = t1 * u - u * t1
    res.append(CheckResult(f"[t1, u] != 0 (t1 is not central), d={d}", not comm.is_zero(), {"degree": comm.degree()}))
    return res


def intro_parameter_forms(d: int) -> tuple:
    """The closed k-power forms of the three linear coefficients and the constant."""
    b = dbar(d)
    alg = daha_algebra(d)
    q = alg.q
    s = lambda name, m: param(name, d, m * b) + param(name, d, -m * b)
    k0, k1, k0v, k1v = (s(n, 1) for n in ("k0", "k1", "k0v", "k1v"))
    phis = (
        k1 * k0v + q(b) * (k1v * k0),
        k1 * k1v + q(b) * (k0 * k0v),
        k1 * k0 + q(b) * (k0v * k1v),
    )
    const = s("k0", 2) + s("k1", 2) + s("k0v", 2) + s("k1v", 2) + k0 * k1 * k0v * k1v
    return phis, const


def _at_parameters(P: MultiPoly, d: int) -> DahaElement:
    """P(c0v, c1v, c0; q^-1 k1 + q k1^-1) as a scalar element."""
    alg = daha_algebra(d)
    c1t = param("k1", d) * alg.q(-1) + param("k1", d, -1) * alg.q(1)
    args = (param_sum("k0v", d), param_sum("k1v", d), param_sum("k0", d), c1t)
    return evaluate_commuting(P, args, alg.one())


def center_relation_H_sides(d: int) -> tuple:
    """Both sides of the Z(H) relation as CForm elements."""
    b = dbar(d)
    alg = daha_algebra(d)
    qd = {b % d: 1}
    T = {G: c_cheb_abc(b, G, d) for G in "ABC"}
    phis = [CForm.from_element(_at_parameters(cyclic_shift(i, phi(b)), d)) for i in range(3)]
    ps = CForm.from_element(_at_parameters(psi(b), d))
    lhs = CForm(alg, {})
    for i, G in enumerate("ABC"):
        lhs = lhs + (phis[i] * T[G]).scale(qd)
    rhs = (T["A"] * T["B"] * T["C"]).scale(qd) + T["A"] * T["A"] + T["B"] * T["B"] + T["C"] * T["C"] + ps - 2
    return lhs, rhs


def center_relation_H_check(d: int) -> CheckResult:
    b = dbar(d)
    alg = daha_algebra(d)
    qd = alg.q(b)
    lhs, rhs = center_relation_H_sides(d)
    res = [_c_eq_check(f"center relation in Z(H), d={d}", lhs, rhs)]
    phis, const = intro_parameter_forms(d)
    for i in range(3):
        small = _at_parameters(cyclic_shift(i, phi(b)), d)
        res.append(_eq_check(f"closed k-power form of linear coefficient {i} = q^dbar phi_dbar^(shift {i}), d={d}", phis[i], qd * small))
    ps = _at_parameters(psi(b), d)
    out = combine(f"center relation in Z(H) and its parameter forms, d={d}", res)
    # constant term: q^dbar X0 X1 X2 + sum X^2 - sum phi X + const + 4 needs const + 4 = psi_dbar - 2
    const_ok = const + 6 == ps
    out.detail["constant_term_as_printed_agrees"] = const_ok
    if not const_ok:
        s = lambda name: param(name, d, b) + param(name, d, -b)
        prod = s("k0") * s("k1") * s("k0v") * s("k1v")
        corrected = const - prod + qd * prod
        fixed_ok = corrected + 6 == ps
        out.notes.append({
            "item": f"closed k-power form of the constant term, d={d}",
            "status": "printed form differs from psi_dbar - 6; with the four-fold product scaled by q^dbar it agrees"
            if fixed_ok else "printed form differs from psi_dbar - 6",
            "printed_plus_6": repr(const + 6),
            "psi_dbar": repr(ps),
        })
        if not fixed_ok:
            out.passed = False
    return out


def centralizer_basis_monomials(bound: int) -> list:
    """(i, j, k) for A^i C^j B^k with ijk = 0 and i + j + k <= bound."""
    out = []
    for total in range(bound + 1):
        for i in range(total + 1):
            for j in range(total - i + 1):
                k = total - i - j
                if i * j * k == 0:
                    out.append((i, j, k))
    return out


def _specialize(alg: DahaAlgebra, p: dict, cvals: tuple):
    """Value of a packed c-polynomial at rational c0, c1, c0v, c1v."""
    n = field(alg.d).n
    vec = [Fraction(0)] * n
    for key, c in p.items():
        exps, m = unpack_key(key, 4)
        v = Fraction(c)
        for x, e in zip(cvals, exps):
            v *= x ** e
        vec[m] += v
    return CycloScalar(alg.d, vec)


def _leading_vector(x: CForm, degree: int, cvals: tuple) -> dict:
    """Top filtration layer of x at a rational parameter point, as {(l, i, j): scalar}."""
    out = {}
    for (l, i, j), p in x.terms.items():
        if abs(i) + abs(j) == degree:
            c = _specialize(x.alg, p, cvals)
            if c:
                out[(l, i, j)] = c
    return out


# k0, k1, k0v, k1v = 2, 3, 5, 7; a nonzero minor here is nonzero generically
_POINT = tuple(Fraction(k) + Fraction(1, k) for k in (2, 3, 5, 7))


def centralizer_basis_bounded_check(d: int, degree_bound: int | None = None) -> list:
    b = dbar(d)
    if degree_bound is None:
        degree_bound = min(2 * b, 4)
    alg = daha_algebra(d)
    g = c_basic(d)
    t1, T = g["t1"], g["t1inv"]
    res = []
    pw: dict = {}

    def power(name, x, n):
        if (name, n) not in pw:
            pw[(name, n)] = CForm.one(alg) if n == 0 else power(name, x, n - 1) * x
        return pw[(name, n)]

    bad = []
    by_degree: dict = {}
    for i, j, k in centralizer_basis_monomials(degree_bound):
        m = power("A", g["A"], i) * power("C", g["C"], j) * power("B", g["B"], k)
        if m * t1 != t1 * m:
            bad.append({"commutes": [i, j, k]})
        deg = i + 2 * j + k
        if m.degree() != deg:
            bad.append({"degree": [i, j, k], "found": m.degree()})
        by_degree.setdefault(deg, []).append(m)
    res.append(CheckResult(
        f"A^i C^j B^k (ijk=0, i+j+k <= {degree_bound}) commute with t1 and have degree i+2j+k, d={d}",
        not bad, {"bad": bad[:3]}))
    # T-independence: leading layers of m and t1^-1 m together
    ok = True
    info = {}
    for deg, ms in sorted(by_degree.items()):
        vecs = []
        for m in ms:
            vecs.append(_leading_vector(m, deg, _POINT))
            vecs.append(_leading_vector(T * m, deg, _POINT))
        r = rank(vecs)
        info[deg] = [r, len(vecs)]
        ok &= r == len(vecs)
    res.append(CheckResult(f"A^i C^j B^k are T-linearly independent (leading layers), d={d}", ok, {"rank_by_degree": info}))

    TA, TB, TC = (c_cheb_abc(b, x, d) for x in "ABC")
    zb = 1 if b >= 3 else 2
    bad = []
    by_degree = {}
    for i, j, k in centralizer_basis_monomials(zb):
        m = power("TA", TA, i) * power("TC", TC, j) * power("TB", TB, k)
        for name in ("t1", "u", "v"):
            if m * g[name] != g[name] * m:
                bad.append([i, j, k, name])
        by_degree.setdefault(b * (i + 2 * j + k), []).append(m)
    res.append(CheckResult(f"T_dbar(A)^i T_dbar(C)^j T_dbar(B)^k (ijk=0, i+j+k <= {zb}) are central, d={d}", not bad, {"bad": bad[:3]}))
    ok = True
    info = {}
    for deg, ms in sorted(by_degree.items()):
        r = rank([_leading_vector(m, deg, _POINT) for m in ms])
        info[deg] = [r, len(ms)]
        ok &= r == len(ms)
    res.append(CheckResult(f"center monomials are linearly independent, d={d}", ok, {"rank_by_degree": info}))
    return res


def random_element(alg: DahaAlgebra, rng: random.Random, max_degree: int = 3, max_terms: int = 3) -> DahaElement:
    out: dict = {}
    for _ in range(rng.randint(1, max_terms)):
        i = rng.randint(-max_degree, max_degree)
        rest = max_degree - abs(i)
        j = rng.randint(-rest, rest)
        k = tuple(rng.randint(-1, 1) for _ in range(4))
        acc_term(out, (rng.randint(0, 1), i, j), {k: alg.s(rng.choice((1, -1, 2, -3)))})
    return alg.element(out)


def associativity_fuzz(d: int, seed: int = 0, samples: int = 1000, max_degree: int = 3) -> CheckResult:
    alg = daha_algebra(d)
    rng = random.Random(seed)
    bad = []
    for _ in range(samples):
        x, y, z = (random_element(alg, rng, max_degree, max_terms=1) for _ in range(3))
        if (x * y) * z != x * (y * z):
            bad.append([x.to_json(), y.to_json(), z.to_json()])
            if len(bad) >= 3:
                break
    return CheckResult(f"associativity on {samples} random triples of degree <= {max_degree}, d={d}", not bad, {"counterexamples": bad[:1]})


def property_checks(d: int, seed: int = 0, samples: int = 30) -> list:
    alg = daha_algebra(d)
    rng = random.Random(seed)
    bad = []
    for _ in range(samples):
        x, y = random_element(alg, rng, 2), random_element(alg, rng, 2)
        if daha_filtration_degree(x * y) > daha_filtration_degree(x) + daha_filtration_degree(y):
            bad.append([x.to_json(), y.to_json()])
    res = [CheckResult(f"filtration degree is subadditive, d={d}", not bad, {"counterexamples": bad[:1]})]
    ualg = uaw_algebra(d)
    bad = []
    for _ in range(max(3, samples // 5)):
        ws = []
        for _ in range(2):
            terms: dict = {}
            for _ in range(rng.randint(1, 2)):
                exps = [0] * 6
                for _ in range(rng.randint(0, 2)):
                    exps[rng.randrange(6)] += 1
                acc_term(terms, tuple(exps[:3]), {tuple(exps[3:]): ualg.s(rng.choice((1, -1, 2)))})
            ws.append(ualg.element(terms))
        if sharp(ws[0] * ws[1]) != sharp(ws[0]) * sharp(ws[1]):
            bad.append([w.to_json() for w in ws])
    res.append(CheckResult(f"sharp is multiplicative on random pairs, d={d}", not bad, {"counterexamples": bad[:1]}))
    return res
