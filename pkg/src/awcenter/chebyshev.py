"""Normalized Chebyshev polynomials and the four-variable polynomials phi, psi, Phi, Psi.

Conventions: T_0 = 2, T_1 = X, X*T_n = T_{n+1} + T_{n-1}, so that
T_n(X + X^{-1}) = X^n + X^{-n}.  Polynomials in X0, X1, X2, X are MultiPoly
objects over the rationals.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

from .checks import CheckResult
from .coeffring.multipoly import MultiPoly
from .linalg import LinearSystemError, solve_sparse

VARS4 = (("X0", False), ("X1", False), ("X2", False), ("X", False))

# packed exponent keys: X0 | X1 << 8 | X2 << 16 | X << 24
_SH = (0, 8, 16, 24)
_MASK = 0xFF


def _pack(e0, e1, e2, e3) -> int:
    if max(e0, e1, e2, e3) > _MASK or min(e0, e1, e2, e3) < 0:
        raise OverflowError("exponent out of packed range")
    return e0 | (e1 << 8) | (e2 << 16) | (e3 << 24)


def _unpack(k: int) -> tuple:
    return (k & _MASK, (k >> 8) & _MASK, (k >> 16) & _MASK, k >> 24)


def _kmul(p: dict, r: dict) -> dict:
    if len(p) > len(r):
        p, r = r, p
    out: dict = {}
    get = out.get
    for k1, c1 in p.items():
        for k2, c2 in r.items():
            k = k1 + k2
            out[k] = get(k, 0) + c1 * c2
    return {k: v for k, v in out.items() if v}


def _kacc(acc: dict, p: dict, scale) -> None:
    for k, c in p.items():
        v = acc.get(k, 0) + scale * c
        if v:
            acc[k] = v
        else:
            acc.pop(k, None)


def _to_packed(p: MultiPoly) -> dict:
    p = p.extend(VARS4)
    return {_pack(*k): c for k, c in p.terms.items()}


def _from_packed(p: dict) -> MultiPoly:
    return MultiPoly(VARS4, {_unpack(k): c for k, c in p.items()})


# univariate ---------------------------------------------------------------------

@lru_cache(maxsize=None)
def cheb_T(n: int) -> tuple:
    """Coefficients (low to high degree) of T_n, from the three-term recurrence."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    prev, cur = (2,), (0, 1)
    if n == 0:
        return prev
    for _ in range(n - 1):
        nxt = [0] + list(cur)
        for i, c in enumerate(prev):
            nxt[i] -= c
        prev, cur = cur, tuple(nxt)
    return cur


def cheb_T_closed(n: int) -> tuple:
    """T_n from the binomial closed form, used as an independent cross-check."""
    if n == 0:
        return (2,)
    out = [0] * (n + 1)
    for i in range(n // 2 + 1):
        c = comb(n - i, i) + (comb(n - i - 1, i - 1) if i >= 1 else 0)
        out[n - 2 * i] += (-1) ** i * c
    return tuple(out)


def cheb_eval(n: int, x, one):
    """T_n(x) for an element x of any ring with unit ``one``, by the recurrence."""
    if n == 0:
        return one * 2
    prev, cur = one * 2, x
    for _ in range(n - 1):
        prev, cur = cur, x * cur - prev
    return cur


def poly_eval(coeffs, x, one):
    """Evaluate a univariate coefficient list at a ring element (Horner)."""
    acc = None
    for c in reversed(coeffs):
        acc = one * c if acc is None else acc * x + one * c
    return acc if acc is not None else one * 0


def compose_univariate(p: tuple, r: tuple) -> tuple:
    """Coefficients of p(r(X))."""
    def mul(a, b):
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return out

    acc = [0]
    for c in reversed(p):
        acc = mul(acc, r)
        acc[0] += c
    while len(acc) > 1 and acc[-1] == 0:
        acc.pop()
    return tuple(acc)


def cheb_poly(n: int, var: str, registry=VARS4) -> MultiPoly:
    idx = [name for name, _ in registry].index(var)
    terms = {}
    for deg, c in enumerate(cheb_T(n)):
        if c:
            k = [0] * len(registry)
            k[idx] = deg
            terms[tuple(k)] = c
    return MultiPoly(registry, terms)


# phi, psi -------------------------------------------------------------------------

@lru_cache(maxsize=None)
def phi(n: int) -> MultiPoly:
    return cheb_poly(n, "X") * cheb_poly(n, "X0") + cheb_poly(n, "X1") * cheb_poly(n, "X2")


@lru_cache(maxsize=None)
def psi(n: int) -> MultiPoly:
    t = [cheb_poly(n, v) for v in ("X0", "X1", "X2")]
    tx = cheb_poly(n, "X")
    return cheb_poly(2 * n, "X") + t[0] * t[0] + t[1] * t[1] + t[2] * t[2] + tx * t[0] * t[1] * t[2]


def cyclic_shift(i: int, p: MultiPoly) -> MultiPoly:
    """X-fixing automorphism sending X_j to X_{i+j} (indices mod 3)."""
    i %= 3
    if i == 0:
        return p
    names = ("X0", "X1", "X2")
    return p.rename({names[j]: "__" + names[(i + j) % 3] for j in range(3)}).rename(
        {"__" + n: n for n in names}
    ).extend(VARS4)


# solving for Phi_n, Psi_n ---------------------------------------------------------

class _Substitution:
    """Powers of phi_1^{u0}, phi_1^{u1}, phi_1^{u2}, psi_1 in packed form."""

    def __init__(self):
        self.bases = [_to_packed(cyclic_shift(i, phi(1))) for i in range(3)] + [_to_packed(psi(1))]
        self._pow = [[{0: 1}] for _ in range(4)]
        self._triple: dict = {}

    def power(self, which: int, e: int) -> dict:
        cache = self._pow[which]
        while len(cache) <= e:
            cache.append(_kmul(cache[-1], self.bases[which]))
        return cache[e]

    def triple(self, i0, i1, i2) -> dict:
        key = (i0, i1, i2)
        t = self._triple.get(key)
        if t is None:
            t = _kmul(_kmul(self.power(0, i0), self.power(1, i1)), self.power(2, i2))
            self._triple[key] = t
        return t

    def column(self, i0, i1, i2, j) -> dict:
        return _kmul(self.triple(i0, i1, i2), self.power(3, j))


_SUBST = None


def _subst() -> _Substitution:
    global _SUBST
    if _SUBST is None:
        _SUBST = _Substitution()
    return _SUBST


def ansatz_monomials(bound: int) -> list:
    """Monomials X0^i0 X1^i1 X2^i2 X^j with i0+i1+i2+2j <= bound."""
    out = []
    for j in range(bound // 2 + 1):
        rest = bound - 2 * j
        for i0 in range(rest + 1):
            for i1 in range(rest - i0 + 1):
                for i2 in range(rest - i0 - i1 + 1):
                    out.append((i0, i1, i2, j))
    return out


def _solve_system(target: dict, bound: int) -> dict:
    sub = _subst()
    columns = {m: sub.column(*m) for m in ansatz_monomials(bound)}
    return solve_sparse(columns, target)


def _solve_triangular(target: dict, bound: int) -> dict:
    # the substituted monomial X0^a X1^b X2^c X^j has top X-degree term
    # X0^a X1^b X2^c X^(a+b+c+2j) with coefficient 1, so peeling off the
    # term of highest X-degree is a back substitution
    sub = _subst()
    rem = dict(target)
    sol: dict = {}
    while rem:
        key = max(rem, key=lambda k: (k >> 24, k))
        a, b, c, e = _unpack(key)
        t = e - a - b - c
        if t < 0 or t % 2:
            raise LinearSystemError(f"no ansatz monomial leads with {(a, b, c, e)}")
        m = (a, b, c, t // 2)
        if a + b + c + t > bound:
            raise LinearSystemError(f"leading term {(a, b, c, e)} exceeds the weighted degree bound")
        col = sub.column(*m)
        coef = rem[key]
        lead = col[key]
        if lead != 1:
            coef = Fraction(coef) / lead
        sol[m] = sol.get(m, 0) + coef
        _kacc(rem, col, -coef)
    return sol


def _as_poly(sol: dict) -> MultiPoly:
    terms = {}
    for (i0, i1, i2, j), c in sol.items():
        if c:
            c = Fraction(c)
            if c.denominator != 1:
                raise ArithmeticError("non-integral coefficient in Phi/Psi")
            terms[(i0, i1, i2, j)] = c.numerator
    return MultiPoly(VARS4, terms)


SYSTEM_LIMIT = 6


@lru_cache(maxsize=None)
def solve_capital(n: int, method: str = "auto") -> tuple:
    """Return (Phi_n, Psi_n) from the defining substitution equations.

    ``method='system'`` builds the full ansatz and solves it with sparse exact
    elimination; ``'triangular'`` peels leading terms, which is the same
    elimination restricted to the columns that actually occur.  ``'auto'``
    uses the full system for n <= SYSTEM_LIMIT.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if method == "auto":
        method = "system" if n <= SYSTEM_LIMIT else "triangular"
    solver = {"system": _solve_system, "triangular": _solve_triangular}[method]
    Phi = _as_poly(solver(_to_packed(phi(n)), n))
    Psi = _as_poly(solver(_to_packed(psi(n)), 2 * n))
    return Phi, Psi


def system_rank_check(n: int) -> CheckResult:
    """The ansatz columns for weighted degree <= 2n are linearly independent."""
    sub = _subst()
    mons = ansatz_monomials(2 * n)
    columns = {m: sub.column(*m) for m in mons}
    from .linalg import rank

    r = rank(list(columns.values()))
    return CheckResult("ansatz full column rank", r == len(mons), {"n": n, "rank": r, "columns": len(mons)})


def substitute_capital(P: MultiPoly, args: tuple) -> MultiPoly:
    """P(args[0], args[1], args[2]; args[3]) for polynomial arguments."""
    return P.substitute(dict(zip(("X0", "X1", "X2", "X"), args)))


# checks ---------------------------------------------------------------------------

def _laurent_args(m: int) -> tuple:
    # images of phi_m^{ui}, psi_m, phi_{k}, psi_{k} under X_i -> y_i + 1/y_i,
    # an injective ring map into Laurent polynomials
    reg = (("y0", True), ("y1", True), ("y2", True), ("w", True))

    def sym(i, k):
        if k == 0:
            return MultiPoly.constant(reg, 2)
        e = [0] * 4
        e[i] = k
        f = [0] * 4
        f[i] = -k
        return MultiPoly(reg, {tuple(e): 1, tuple(f): 1})

    def phis(k):
        t = [sym(0, k), sym(1, k), sym(2, k)]
        tx = sym(3, k)
        return (
            tx * t[0] + t[1] * t[2],
            tx * t[1] + t[2] * t[0],
            tx * t[2] + t[0] * t[1],
            sym(3, 2 * k) + t[0] * t[0] + t[1] * t[1] + t[2] * t[2] + tx * t[0] * t[1] * t[2],
        )

    return phis


def composition_check(m: int, n: int) -> CheckResult:
    """Phi_n(phi_m^{ui}; psi_m) = phi_{mn}, the Psi analogue, and the Phi/Psi composition law."""
    phis = _laurent_args(m)
    args = phis(m)
    Phi_n, Psi_n = solve_capital(n)
    target = phis(m * n)
    detail = {"m": m, "n": n}
    ok = True
    lhs = substitute_capital(Phi_n, args)
    if lhs != target[0]:
        ok = False
        detail["phi_mismatch"] = str(lhs - target[0])
    lhs = substitute_capital(Psi_n, args)
    if lhs != target[3]:
        ok = False
        detail["psi_mismatch"] = str(lhs - target[3])
    return CheckResult(f"composition m={m} n={n}", ok, detail)


def capital_composition_check(m: int, n: int) -> CheckResult:
    """Phi_n(Phi_m^{ui}; Psi_m) = Phi_{mn} and Psi_n(Phi_m^{ui}; Psi_m) = Psi_{mn} exactly."""
    Phi_m, Psi_m = solve_capital(m)
    Phi_n, Psi_n = solve_capital(n)
    Phi_mn, Psi_mn = solve_capital(m * n)
    args = (cyclic_shift(0, Phi_m), cyclic_shift(1, Phi_m), cyclic_shift(2, Phi_m), Psi_m)
    detail = {"m": m, "n": n}
    ok = True
    lhs = substitute_capital(Phi_n, args).extend(VARS4)
    if lhs != Phi_mn:
        ok = False
        detail["Phi_mismatch"] = str(lhs - Phi_mn)
    lhs = substitute_capital(Psi_n, args).extend(VARS4)
    if lhs != Psi_mn:
        ok = False
        detail["Psi_mismatch"] = str(lhs - Psi_mn)
    return CheckResult(f"capital composition m={m} n={n}", ok, detail)


def _closed_zero_forms(n: int) -> tuple:
    fl, ce = n // 2, (n + 1) // 2
    factor = fl - ce + 1
    sign = (-1) ** fl
    X = (("X", False),)
    tf = cheb_poly(fl, "X", X)
    phi0 = (tf * sign + 2) * (2 * factor)
    psi0 = cheb_poly(n, "X", X) + (tf * (2 * sign) + 3) * (4 * factor)
    return phi0, psi0


def so3_specialization_check(n: int) -> CheckResult:
    """Phi_n(0,0,0;X) and Psi_n(0,0,0;X) against their floor/ceiling closed forms."""
    Phi, Psi = solve_capital(n)
    zero = {"X0": 0, "X1": 0, "X2": 0}
    X = (("X", False),)
    got_phi = Phi.substitute(zero).extend(X)
    got_psi = Psi.substitute(zero).extend(X)
    want_phi, want_psi = _closed_zero_forms(n)
    ok = got_phi == want_phi and got_psi == want_psi
    return CheckResult(
        f"Phi/Psi at X0=X1=X2=0, n={n}",
        ok,
        {"Phi": str(got_phi), "Phi_closed": str(want_phi), "Psi": str(got_psi), "Psi_closed": str(want_psi)},
    )


def known_capital(n: int) -> tuple:
    """Hand-listed (Phi_n, Psi_n) for n <= 3, independent of the solver."""
    X0, X1, X2, X = (MultiPoly.variable(VARS4, v) for v in ("X0", "X1", "X2", "X"))
    one = MultiPoly.constant(VARS4, 1)
    sq = X0 ** 2 + X1 ** 2 + X2 ** 2
    prod = X0 * X1 * X2
    table = {
        0: (8 * one, 30 * one),
        1: (X0, X),
        2: (X0 ** 2 - 2 * X + 4, X ** 2 - 8 * X + 2 * (sq - prod) + 10),
        3: (
            X0 ** 3 - 3 * (X - 1) * X0 + 3 * X1 * X2,
            X ** 3 - 3 * (prod + sq + 1) * X
            + 3 * (X0 ** 2 * X1 ** 2 + X1 ** 2 * X2 ** 2 + X2 ** 2 * X0 ** 2 - prod) + 6 * sq,
        ),
    }
    if n not in table:
        raise ValueError("listed values exist for n <= 3 only")
    return table[n]


def known_values_check() -> CheckResult:
    """solve_capital(n) against the hand-listed polynomials, n = 0..3."""
    bad = {}
    for n in range(4):
        got = solve_capital(n)
        want = known_capital(n)
        if got != want:
            bad[n] = {"Phi": str(got[0]), "Psi": str(got[1]), "Phi_listed": str(want[0]), "Psi_listed": str(want[1])}
    return CheckResult("Phi_n, Psi_n for n <= 3 match the listed polynomials", not bad, {"mismatches": bad} if bad else {})
