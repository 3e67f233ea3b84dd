"""Laurent polynomials in an indeterminate Q with rational coefficients."""
from __future__ import annotations

from fractions import Fraction

from .cyclo import CycloScalar, _norm


class GenericQScalar:
    """Element of Q[Q, Q^{-1}], stored as {exponent: coefficient} with no zeros."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        t = {}
        if terms:
            for e, c in terms.items():
                c = _norm(c) if isinstance(c, Fraction) else c
                if c:
                    t[int(e)] = c
        self.terms = t

    @staticmethod
    def monomial(e: int, c=1) -> "GenericQScalar":
        return GenericQScalar({e: c})

    @staticmethod
    def const(c) -> "GenericQScalar":
        return GenericQScalar({0: c})

    def _coerce(self, o):
        if isinstance(o, GenericQScalar):
            return o
        if isinstance(o, (int, Fraction)):
            return GenericQScalar.const(o)
        if isinstance(o, CycloScalar):
            raise TypeError("cannot mix generic-Q and root-of-unity scalars")
        return NotImplemented

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, o):
        o = self._coerce(o)
        if o is NotImplemented:
            return o
        return self.terms == o.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, o):
        o = self._coerce(o)
        if o is NotImplemented:
            return o
        t = dict(self.terms)
        for e, c in o.terms.items():
            t[e] = t.get(e, 0) + c
        return GenericQScalar(t)

    __radd__ = __add__

    def __neg__(self):
        return GenericQScalar({e: -c for e, c in self.terms.items()})

    def __sub__(self, o):
        o = self._coerce(o)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, o):
        o = self._coerce(o)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, o):
        o = self._coerce(o)
        if o is NotImplemented:
            return o
        t: dict[int, object] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                t[e1 + e2] = t.get(e1 + e2, 0) + c1 * c2
        return GenericQScalar(t)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self.terms) != 1:
                raise ArithmeticError("only monomials are invertible")
            (e, c), = self.terms.items()
            return GenericQScalar({-e * (-n): Fraction(1) / Fraction(c) ** (-n)})
        out = GenericQScalar.const(1)
        for _ in range(n):
            out = out * self
        return out

    def divexact(self, o: "GenericQScalar") -> "GenericQScalar":
        """Exact Laurent division; raises if the remainder is nonzero."""
        o = self._coerce(o)
        if not o.terms:
            raise ZeroDivisionError("division by zero Laurent polynomial")
        if not self.terms:
            return GenericQScalar()
        lo = min(o.terms)
        den = {e - lo: Fraction(c) for e, c in o.terms.items()}
        dtop = max(den)
        rem = {e: Fraction(c) for e, c in self.terms.items()}
        quot: dict[int, Fraction] = {}
        floor = min(self.terms)
        while rem:
            top = max(rem)
            shift = top - dtop
            if shift < floor:
                break
            c = rem[top] / den[dtop]
            quot[shift] = quot.get(shift, 0) + c
            for e, dc in den.items():
                k = e + shift
                v = rem.get(k, 0) - c * dc
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        if rem:
            raise ArithmeticError("inexact division in Z[Q^{+-1}]")
        return GenericQScalar({e - lo: c for e, c in quot.items()})

    def specialize(self, d: int) -> CycloScalar:
        """Image under the ring map Q -> q, q a primitive d-th root of unity."""
        return CycloScalar.from_poly(d, self.terms)

    def is_integral(self) -> bool:
        return all(Fraction(c).denominator == 1 for c in self.terms.values())

    def __repr__(self):
        return f"GenericQScalar({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "" if e == 0 else ("Q" if e == 1 else f"Q^{e}")
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")
