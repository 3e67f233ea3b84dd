"""Sparse multivariate Laurent polynomials over an exact scalar ring.

The module-level helpers work on raw ``{exponent tuple: scalar}`` dicts and are
shared by the algebra kernels; ``MultiPoly`` wraps them with a variable registry.
"""
from __future__ import annotations

from fractions import Fraction

from .cyclo import CycloScalar, _norm


# raw sparse polynomial helpers ------------------------------------------------

def pacc(acc: dict, p: dict, scale=None) -> dict:
    """acc += scale * p, in place; zero terms are removed."""
    if scale is None:
        for k, c in p.items():
            v = acc.get(k)
            v = c if v is None else v + c
            if v:
                acc[k] = v
            else:
                acc.pop(k, None)
    else:
        for k, c in p.items():
            w = c * scale
            v = acc.get(k)
            v = w if v is None else v + w
            if v:
                acc[k] = v
            else:
                acc.pop(k, None)
    return acc


def padd(p: dict, r: dict) -> dict:
    return pacc(dict(p), r)


def psub(p: dict, r: dict) -> dict:
    return pacc(dict(p), r, -1)


def pscale(p: dict, c) -> dict:
    if not c:
        return {}
    out = {}
    for k, v in p.items():
        w = v * c
        if w:
            out[k] = w
    return out


def pmul(p: dict, r: dict) -> dict:
    if len(p) > len(r):
        p, r = r, p
    out: dict = {}
    for k1, c1 in p.items():
        for k2, c2 in r.items():
            k = tuple(a + b for a, b in zip(k1, k2))
            w = c1 * c2
            v = out.get(k)
            v = w if v is None else v + w
            if v:
                out[k] = v
            else:
                out.pop(k, None)
    return out


def pmono_mul(p: dict, exps: tuple, c=1) -> dict:
    """Multiply by the monomial c * x^exps."""
    out = {}
    for k, v in p.items():
        w = v * c
        if w:
            out[tuple(a + b for a, b in zip(k, exps))] = w
    return out


def ppow(p: dict, n: int, one: dict) -> dict:
    out = one
    base = p
    while n:
        if n & 1:
            out = pmul(out, base)
        n >>= 1
        if n:
            base = pmul(base, base)
    return out


# scalar serialization -----------------------------------------------------------

def scalar_to_json(c) -> dict:
    if isinstance(c, CycloScalar):
        return c.to_json()
    f = Fraction(c)
    return {"d": 1, "coeffs": [[f.numerator, f.denominator]]}


def scalar_from_json(obj: dict):
    if int(obj["d"]) == 1:
        (n, m), = obj["coeffs"]
        return _norm(Fraction(int(n), int(m)))
    return CycloScalar.from_json(obj)


def _fmt_scalar(c) -> str:
    s = str(c)
    if isinstance(c, CycloScalar) and len([x for x in c.c if x]) > 1:
        return f"({s})"
    return s


# MultiPoly ---------------------------------------------------------------------

class MultiPoly:
    """Polynomial in named commuting variables; Laurent-flagged ones may go negative."""

    __slots__ = ("registry", "terms", "_index")

    def __init__(self, registry, terms=None, _trusted: bool = False):
        self.registry = tuple((str(n), bool(f)) for n, f in registry)
        self._index = {n: i for i, (n, _) in enumerate(self.registry)}
        if len(self._index) != len(self.registry):
            raise ValueError("duplicate variable names in registry")
        if _trusted:
            self.terms = terms
            return
        t: dict = {}
        n = len(self.registry)
        for k, c in (terms or {}).items():
            k = tuple(int(x) for x in k)
            if len(k) != n:
                raise ValueError("exponent vector length does not match registry")
            for (name, laurent), e in zip(self.registry, k):
                if e < 0 and not laurent:
                    raise ValueError(f"negative exponent on polynomial variable {name}")
            if c:
                v = t.get(k)
                v = c if v is None else v + c
                if v:
                    t[k] = v
                else:
                    t.pop(k)
        self.terms = t

    # construction
    @staticmethod
    def variable(registry, name: str, power: int = 1, coeff=1) -> "MultiPoly":
        reg = tuple(registry)
        names = [n for n, _ in reg]
        k = [0] * len(reg)
        k[names.index(name)] = power
        return MultiPoly(reg, {tuple(k): coeff})

    @staticmethod
    def constant(registry, c) -> "MultiPoly":
        return MultiPoly(registry, {tuple([0] * len(tuple(registry))): c})

    @property
    def names(self) -> tuple:
        return tuple(n for n, _ in self.registry)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    # registry handling
    def extend(self, registry) -> "MultiPoly":
        """Re-embed into a registry containing all of this polynomial's variables."""
        registry = tuple(registry)
        if registry == self.registry:
            return self
        pos = {n: i for i, (n, _) in enumerate(registry)}
        for n, f in self.registry:
            if n not in pos:
                raise ValueError(f"variable {n} missing from target registry")
            if f and not registry[pos[n]][1]:
                if any(k[self._index[n]] < 0 for k in self.terms):
                    raise ValueError(f"variable {n} has negative exponents")
        m = len(registry)
        out = {}
        for k, c in self.terms.items():
            nk = [0] * m
            for (n, _), e in zip(self.registry, k):
                nk[pos[n]] = e
            out[tuple(nk)] = c
        return MultiPoly(registry, out, _trusted=True)

    def _unify(self, other: "MultiPoly"):
        if self.registry == other.registry:
            return self, other
        reg = list(self.registry)
        have = set(self._index)
        for n, f in other.registry:
            if n not in have:
                reg.append((n, f))
            else:
                i = self._index[n]
                reg[i] = (n, reg[i][1] or f)
        return self.extend(reg), other.extend(reg)

    def _lift(self, other):
        if isinstance(other, MultiPoly):
            return self._unify(other)
        if isinstance(other, (int, Fraction, CycloScalar)):
            return self, MultiPoly.constant(self.registry, other)
        return None, None

    # arithmetic
    def __add__(self, other):
        a, b = self._lift(other)
        if a is None:
            return NotImplemented
        return MultiPoly(a.registry, padd(a.terms, b.terms), _trusted=True)

    __radd__ = __add__

    def __sub__(self, other):
        a, b = self._lift(other)
        if a is None:
            return NotImplemented
        return MultiPoly(a.registry, psub(a.terms, b.terms), _trusted=True)

    def __rsub__(self, other):
        a, b = self._lift(other)
        if a is None:
            return NotImplemented
        return MultiPoly(a.registry, psub(b.terms, a.terms), _trusted=True)

    def __neg__(self):
        return MultiPoly(self.registry, pscale(self.terms, -1), _trusted=True)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CycloScalar)):
            return MultiPoly(self.registry, pscale(self.terms, other), _trusted=True)
        a, b = self._lift(other)
        if a is None:
            return NotImplemented
        return MultiPoly(a.registry, pmul(a.terms, b.terms), _trusted=True)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        one = {tuple([0] * len(self.registry)): 1}
        return MultiPoly(self.registry, ppow(self.terms, n, one), _trusted=True)

    def inverse(self) -> "MultiPoly":
        """Inverse of an invertible monomial (Laurent variables only)."""
        if len(self.terms) != 1:
            raise ArithmeticError("only monomials are invertible")
        (k, c), = self.terms.items()
        for (n, f), e in zip(self.registry, k):
            if e and not f:
                raise ArithmeticError(f"{n} is not a Laurent variable")
        inv = Fraction(1) / c if isinstance(c, (int, Fraction)) else c.inverse()
        return MultiPoly(self.registry, {tuple(-e for e in k): _norm(inv) if isinstance(inv, Fraction) else inv})

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, CycloScalar)):
            other = MultiPoly.constant(self.registry, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        a, b = self._unify(other)
        return a.terms == b.terms

    def __hash__(self):
        return hash((self.registry, frozenset(self.terms.items())))

    # evaluation
    def substitute(self, bindings: dict) -> "MultiPoly":
        """Replace variables by polynomials; unbound variables stay."""
        keep = [(n, f) for n, f in self.registry if n not in bindings]
        reg = list(keep)
        seen = {n for n, _ in reg}
        for b in bindings.values():
            if isinstance(b, MultiPoly):
                for n, f in b.registry:
                    if n not in seen:
                        reg.append((n, f))
                        seen.add(n)
                    elif f:
                        i = [m for m, _ in reg].index(n)
                        reg[i] = (n, True)
        reg = tuple(reg)
        one = {tuple([0] * len(reg)): 1}
        images = {}
        for n, b in bindings.items():
            if n not in self._index:
                continue
            if not isinstance(b, MultiPoly):
                b = MultiPoly.constant(reg, b)
            images[n] = b.extend(reg)
        powcache: dict = {}

        def power(name, e):
            key = (name, e)
            if key not in powcache:
                base = images[name]
                if e < 0:
                    try:
                        base = base.inverse()
                    except ArithmeticError as exc:
                        raise ValueError(
                            f"cannot substitute non-invertible value for {name} with negative exponent"
                        ) from exc
                    e = -e
                powcache[key] = ppow(base.terms, e, one)
            return powcache[key]

        pos = {n: i for i, (n, _) in enumerate(reg)}
        out: dict = {}
        for k, c in self.terms.items():
            mono = [0] * len(reg)
            acc = None
            for (n, _), e in zip(self.registry, k):
                if n in images:
                    if e:
                        p = power(n, e)
                        acc = p if acc is None else pmul(acc, p)
                else:
                    mono[pos[n]] = e
            base = {tuple(mono): c}
            pacc(out, base if acc is None else pmul(base, acc))
        return MultiPoly(reg, out, _trusted=True)

    def rename(self, mapping: dict) -> "MultiPoly":
        reg = tuple((mapping.get(n, n), f) for n, f in self.registry)
        return MultiPoly(reg, dict(self.terms), _trusted=True)

    def map_coeffs(self, fn) -> "MultiPoly":
        return MultiPoly(self.registry, {k: fn(c) for k, c in self.terms.items()})

    def degree(self, name: str | None = None) -> int:
        if not self.terms:
            return -1
        if name is None:
            return max(sum(k) for k in self.terms)
        i = self._index[name]
        return max(k[i] for k in self.terms)

    def coeff(self, exps) -> object:
        return self.terms.get(tuple(exps), 0)

    def sorted_terms(self):
        return sorted(self.terms.items())

    def canonical(self) -> "MultiPoly":
        return MultiPoly(self.registry, dict(self.sorted_terms()), _trusted=True)

    # serialization
    def to_json(self) -> dict:
        return {
            "vars": [n for n, _ in self.registry],
            "laurent": [f for _, f in self.registry],
            "terms": [{"exps": list(k), "coeff": scalar_to_json(c)} for k, c in self.sorted_terms()],
        }

    @staticmethod
    def from_json(obj: dict) -> "MultiPoly":
        names = obj["vars"]
        flags = obj.get("laurent", [False] * len(names))
        terms = {}
        for t in obj["terms"]:
            k = tuple(int(x) for x in t["exps"])
            terms[k] = terms.get(k, 0) + scalar_from_json(t["coeff"])
        flags = list(flags)
        for k in terms:
            for i, e in enumerate(k):
                if e < 0:
                    flags[i] = flags[i] or "laurent" not in obj
        return MultiPoly(list(zip(names, flags)), terms)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for k, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(
                n if e == 1 else f"{n}^{e}" for (n, _), e in zip(self.registry, k) if e
            )
            if not mono:
                parts.append(_fmt_scalar(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{_fmt_scalar(c)}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"MultiPoly({self})"


def poly_arith(p: MultiPoly, r: MultiPoly, op: str) -> MultiPoly:
    if op == "add":
        return p + r
    if op == "sub":
        return p - r
    if op == "mul":
        return p * r
    raise ValueError(f"unknown op {op!r}")


def poly_substitute(p: MultiPoly, bindings: dict) -> MultiPoly:
    return p.substitute(bindings)
