"""Exact arithmetic in the cyclotomic field Q(q), q a primitive d-th root of unity."""
from __future__ import annotations

import threading
from fractions import Fraction
from functools import lru_cache
from math import gcd


def dbar(d: int) -> int:
    """Multiplicative order of q^2."""
    if d < 1:
        raise ValueError("order must be positive")
    return d if d % 2 else d // 2


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    # exact division of integer polynomials, den monic
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + len(den) - 1]
        out[k] = c
        if c:
            for j, dj in enumerate(den):
                num[k + j] -= c * dj
    if any(num):
        raise ArithmeticError("non-exact cyclotomic division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(d: int) -> tuple[int, ...]:
    """Coefficients (low to high) of the d-th cyclotomic polynomial."""
    if d < 1:
        raise ValueError("order must be positive")
    poly = [-1] + [0] * (d - 1) + [1]
    for e in range(1, d):
        if d % e == 0:
            poly = _poly_divexact(poly, list(cyclotomic_polynomial(e)))
    return tuple(poly)


def _norm(x):
    if type(x) is Fraction and x.denominator == 1:
        return x.numerator
    return x


class _Field:
    """Per-order data: degree, reduction table for q^m, powers of q."""

    __slots__ = ("d", "n", "red", "qpow", "zero", "one")

    def __init__(self, d: int):
        cyc = cyclotomic_polynomial(d)
        n = len(cyc) - 1
        self.d = d
        self.n = n
        # red[m] = q^m reduced, for 0 <= m < max(2n - 1, d)
        top = max(2 * n - 1, d, n + 1)
        red = []
        cur = [0] * n
        cur[0] = 1
        for _ in range(top):
            red.append(tuple(cur))
            lead = cur[-1]
            cur = [0] + cur[:-1]
            if lead:
                for j in range(n):
                    cur[j] -= lead * cyc[j]
        self.red = red
        self.qpow = [red[m] for m in range(d)]
        self.zero = tuple([0] * n)
        self.one = red[0]


_FIELDS: dict[int, _Field] = {}
_FIELDS_LOCK = threading.Lock()


def field(d: int) -> _Field:
    f = _FIELDS.get(d)
    if f is None:
        with _FIELDS_LOCK:
            f = _FIELDS.get(d)
            if f is None:
                f = _Field(d)
                _FIELDS[d] = f
    return f


def _mulvec(F: _Field, a: tuple, b: tuple) -> list:
    """Product of two integer coefficient vectors, reduced mod the cyclotomic polynomial."""
    n = F.n
    if n == 1:
        return [a[0] * b[0]]
    conv = [0] * (2 * n - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    conv[i + j] += x * y
    res = conv[:n]
    red = F.red
    for m in range(n, 2 * n - 1):
        cm = conv[m]
        if cm:
            r = red[m]
            for j in range(n):
                if r[j]:
                    res[j] += cm * r[j]
    return res


def _make(d: int, num, den: int) -> "CycloScalar":
    # canonical form: den > 0 and gcd(num..., den) == 1
    x = CycloScalar.__new__(CycloScalar)
    x.d = d
    if den != 1:
        if den < 0:
            num = [-v for v in num]
            den = -den
        g = gcd(den, *num)
        if g != 1:
            num = [v // g for v in num]
            den //= g
    x.num = tuple(num)
    x.den = den
    return x


class CycloScalar:
    """Element of Q[q]/(Phi_d(q)): integer coefficient vector over a common denominator."""

    __slots__ = ("d", "num", "den")

    def __init__(self, d: int, coeffs):
        fr = [Fraction(v) for v in coeffs]
        den = 1
        for v in fr:
            den = den * v.denominator // gcd(den, v.denominator)
        self.d = d
        self.num = tuple(int(v * den) for v in fr)
        self.den = den

    @property
    def c(self) -> tuple:
        """Coefficients of 1, q, q^2, ... as ints or Fractions."""
        if self.den == 1:
            return self.num
        return tuple(_norm(Fraction(v, self.den)) for v in self.num)

    # constructors
    @staticmethod
    def from_int(d: int, v) -> "CycloScalar":
        F = field(d)
        if isinstance(v, int):
            return _make(d, (v,) + F.zero[1:], 1)
        v = Fraction(v)
        return _make(d, (v.numerator,) + F.zero[1:], v.denominator)

    @staticmethod
    def q_power(d: int, m: int) -> "CycloScalar":
        return _make(d, field(d).qpow[m % d], 1)

    @staticmethod
    def from_poly(d: int, poly) -> "CycloScalar":
        """Reduce a Laurent polynomial in q given as {exponent: coeff} or a list."""
        F = field(d)
        if not isinstance(poly, dict):
            poly = dict(enumerate(poly))
        acc = [0] * F.n
        for m, c in poly.items():
            if c:
                r = F.qpow[m % d]
                for j in range(F.n):
                    if r[j]:
                        acc[j] += c * r[j]
        return CycloScalar(d, acc)

    # helpers
    def _coerce(self, other):
        if isinstance(other, CycloScalar):
            if other.d != self.d:
                raise ValueError(f"order mismatch: {self.d} vs {other.d}")
            return other
        if isinstance(other, (int, Fraction)):
            return CycloScalar.from_int(self.d, other)
        return NotImplemented

    def is_zero(self) -> bool:
        return not any(self.num)

    def __bool__(self):
        return any(self.num)

    def __eq__(self, other):
        if isinstance(other, CycloScalar):
            return self.d == other.d and self.den == other.den and self.num == other.num
        if isinstance(other, (int, Fraction)):
            return not any(self.num[1:]) and Fraction(self.num[0], self.den) == other
        return NotImplemented

    def __hash__(self):
        if not any(self.num[1:]):
            return hash(Fraction(self.num[0], self.den))
        return hash((self.d, self.num, self.den))

    def __repr__(self):
        return f"CycloScalar({self.d}, {self})"

    def __str__(self):
        parts = []
        for m, x in enumerate(self.c):
            if not x:
                continue
            mono = "" if m == 0 else ("q" if m == 1 else f"q^{m}")
            if mono == "":
                parts.append(str(x))
            elif x == 1:
                parts.append(mono)
            elif x == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{x}*{mono}")
        return " + ".join(parts).replace("+ -", "- ") if parts else "0"

    # arithmetic
    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.den == o.den:
            return _make(self.d, [a + b for a, b in zip(self.num, o.num)], self.den)
        da, db = self.den, o.den
        return _make(self.d, [a * db + b * da for a, b in zip(self.num, o.num)], da * db)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.den == o.den:
            return _make(self.d, [a - b for a, b in zip(self.num, o.num)], self.den)
        da, db = self.den, o.den
        return _make(self.d, [a * db - b * da for a, b in zip(self.num, o.num)], da * db)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __neg__(self):
        return _make(self.d, [-a for a in self.num], self.den)

    def __mul__(self, other):
        if isinstance(other, int):
            return _make(self.d, [a * other for a in self.num], self.den)
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return _make(self.d, _mulvec(field(self.d), self.num, o.num), self.den * o.den)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = _make(self.d, field(self.d).one, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def inverse(self) -> "CycloScalar":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in cyclotomic field")
        F = field(self.d)
        cyc = [Fraction(x) for x in cyclotomic_polynomial(self.d)]
        a = [Fraction(x) for x in self.c]
        # extended Euclid: s*a == r (mod cyc) is kept invariant
        r0, r1 = _trim(cyc), _trim(a)
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while len(r1) > 1:
            qt, rem = _divmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _trim(_sub(s0, _mul(qt, s1)))
        if r1[0] == 0:
            raise ArithmeticError("non-invertible cyclotomic element")
        inv = [x / r1[0] for x in s1]
        _, rem = _divmod(inv, cyc)
        vec = list(rem) + [Fraction(0)] * (F.n - len(rem))
        return CycloScalar(self.d, vec[: F.n])

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero scalar")
            other = Fraction(other)
            return _make(self.d, [a * other.denominator for a in self.num], self.den * other.numerator)
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def to_json(self) -> dict:
        out = []
        for x in self.c:
            f = Fraction(x)
            out.append([f.numerator, f.denominator])
        return {"d": self.d, "coeffs": out}

    @staticmethod
    def from_json(obj: dict) -> "CycloScalar":
        d = int(obj["d"])
        coeffs = [Fraction(int(n), int(m)) for n, m in obj["coeffs"]]
        if len(coeffs) != field(d).n:
            raise ValueError("coefficient vector has wrong length")
        return CycloScalar(d, coeffs)


def _trim(p):
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p or [Fraction(0)]


def _sub(a, b):
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]


def _mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _divmod(num, den):
    num = [Fraction(x) for x in _trim(num)]
    den = _trim(den)
    if len(num) < len(den):
        return [Fraction(0)], num
    out = [Fraction(0)] * (len(num) - len(den) + 1)
    lead = den[-1]
    for k in range(len(out) - 1, -1, -1):
        c = num[k + len(den) - 1] / lead
        out[k] = c
        if c:
            for j, dj in enumerate(den):
                num[k + j] -= c * dj
    return out, _trim(num[: len(den) - 1] or [Fraction(0)])


def cyclo_new(d: int, poly_in_q) -> CycloScalar:
    """Reduce an integer polynomial in q (dict exponent->coeff or coefficient list)."""
    if d < 1:
        raise ValueError("order must be positive")
    return CycloScalar.from_poly(d, poly_in_q)


def cyclo_arith(x: CycloScalar, y: CycloScalar, op: str) -> CycloScalar:
    if x.d != y.d:
        raise ValueError(f"order mismatch: {x.d} vs {y.d}")
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    raise ValueError(f"unknown op {op!r}")

