"""The universal Askey-Wilson algebra at a root of unity, in PBW normal form.

Monomials are A^i0 B^i1 C^i2 keyed by (i0, i1, i2); the central generators
alpha, beta, gamma are coefficient variables.  Rewriting rules:

    C B = q^2 B C + q(q^2 - q^-2) A - q(q - q^-1) alpha
    C A = q^-2 A C - q^-1(q^2 - q^-2) B + q^-1(q - q^-1) beta
    B A = q^2 A B + q(q^2 - q^-2) C - q(q - q^-1) gamma
"""
from __future__ import annotations

import itertools
import random
from functools import lru_cache

from .algebra import Algebra, AlgebraElement, acc_term
from .chebyshev import cheb_eval, cyclic_shift, solve_capital
from .checks import CheckResult, combine
from .coeffring.cyclo import CycloScalar, dbar
from .coeffring.multipoly import MultiPoly, pmul, pscale
from .linalg import rank

CENTRAL = (("alpha", False), ("beta", False), ("gamma", False))
GENS = ("A", "B", "C")


class UAWAlgebra(Algebra):
    kind = "uaw"
    one_mono = (0, 0, 0)

    def __init__(self, d: int, extra=()):
        super().__init__(d, CENTRAL + tuple(extra))
        q = self.q
        one = self.s(1)
        self._one = {self.zero_exps: one}
        # structure constants
        self.k_q2 = q(2)
        self.k_qm2 = q(-2)
        self.k_cb_a = q(1) * (q(2) - q(-2))
        self.k_cb_alpha = -(q(1) * (q(1) - q(-1)))
        self.k_ca_b = -(q(-1) * (q(2) - q(-2)))
        self.k_ca_beta = q(-1) * (q(1) - q(-1))
        self.k_ba_c = q(1) * (q(2) - q(-2))
        self.k_ba_gamma = -(q(1) * (q(1) - q(-1)))
        self._e = {}
        for i, name in enumerate(("alpha", "beta", "gamma")):
            e = [0] * self.ncoef
            e[i] = 1
            self._e[name] = tuple(e)
        self._gen_cache: dict = {}

    def element(self, terms):
        return UAWElement(self, terms)

    def one(self):
        return self.element({(0, 0, 0): dict(self._one)})

    def gen(self, g: str) -> "UAWElement":
        if g in GENS:
            k = [0, 0, 0]
            k[GENS.index(g)] = 1
            return self.element({tuple(k): dict(self._one)})
        return self.element({(0, 0, 0): self.cvar(g)})

    # rewriting kernel ---------------------------------------------------------
    def times_gen(self, m: tuple, g: str) -> dict:
        """PBW form of monomial m times generator g, memoized."""
        key = (m, g)
        hit = self._gen_cache.get(key)
        if hit is not None:
            return hit
        a, b, c = m
        one = self._one
        out: dict = {}
        if g == "C":
            out[(a, b, c + 1)] = one
        elif g == "B":
            if c == 0:
                out[(a, b + 1, 0)] = one
            else:
                base = (a, b, c - 1)
                for m2, p2 in self.times_gen(base, "B").items():
                    acc_term(out, (m2[0], m2[1], m2[2] + 1), pscale(p2, self.k_q2))
                for m2, p2 in self.times_gen(base, "A").items():
                    acc_term(out, m2, pscale(p2, self.k_cb_a))
                acc_term(out, base, {self._e["alpha"]: self.k_cb_alpha})
        elif g == "A":
            if b == 0 and c == 0:
                out[(a + 1, 0, 0)] = one
            elif c > 0:
                base = (a, b, c - 1)
                for m2, p2 in self.times_gen(base, "A").items():
                    acc_term(out, (m2[0], m2[1], m2[2] + 1), pscale(p2, self.k_qm2))
                for m2, p2 in self.times_gen(base, "B").items():
                    acc_term(out, m2, pscale(p2, self.k_ca_b))
                acc_term(out, base, {self._e["beta"]: self.k_ca_beta})
            else:
                base = (a, b - 1, 0)
                for m2, p2 in self.times_gen(base, "A").items():
                    for m3, p3 in self.times_gen(m2, "B").items():
                        acc_term(out, m3, pscale(pmul(p2, p3), self.k_q2))
                acc_term(out, (a, b - 1, 1), {self.zero_exps: self.k_ba_c})
                acc_term(out, base, {self._e["gamma"]: self.k_ba_gamma})
        else:
            raise ValueError(f"unknown generator {g}")
        self._gen_cache[key] = out
        return out

    def mono_mul(self, m1, m2) -> dict:
        if m1[1] == 0 and m1[2] == 0:
            return {(m1[0] + m2[0], m2[1], m2[2]): self._one}
        if m2[0] == 0 and m2[1] == 0:
            return {(m1[0], m1[1], m1[2] + m2[2]): self._one}
        key = (m1, m2)
        hit = self._mm_cache.get(key)
        if hit is not None:
            return hit
        a, b, c = m2
        if c > 0:
            prev, g = self.mono_mul(m1, (a, b, c - 1)), "C"
        elif b > 0:
            prev, g = self.mono_mul(m1, (a, b - 1, 0)), "B"
        else:
            prev, g = self.mono_mul(m1, (a - 1, 0, 0)), "A"
        out: dict = {}
        for m, p in prev.items():
            for m3, p3 in self.times_gen(m, g).items():
                acc_term(out, m3, pmul(p, p3))
        self._mm_cache[key] = out
        return out

    def format(self, x) -> str:
        if not x.terms:
            return "0"
        parts = []
        for m, p in sorted(x.terms.items(), reverse=True):
            mono = "*".join(f"{g}^{e}" if e > 1 else g for g, e in zip(GENS, m) if e)
            coef = str(MultiPoly(self.coef_registry, dict(p)))
            if not mono:
                parts.append(coef)
            else:
                parts.append(f"({coef})*{mono}")
        return " + ".join(parts)


@lru_cache(maxsize=None)
def uaw_algebra(d: int, extra: tuple = ()) -> UAWAlgebra:
    return UAWAlgebra(d, extra)


class UAWElement(AlgebraElement):
    __slots__ = ()

    def to_json(self) -> dict:
        return {
            "d": self.alg.d,
            "terms": [
                {"abc": list(m), "coeff": MultiPoly(self.alg.coef_registry, dict(p)).to_json()}
                for m, p in sorted(self.terms.items())
            ],
        }

    @staticmethod
    def from_json(obj: dict, alg: UAWAlgebra | None = None) -> "UAWElement":
        d = int(obj["d"])
        if alg is None:
            alg = uaw_algebra(d)
        elif alg.d != d:
            raise ValueError("order mismatch")
        out: dict = {}
        for t in obj["terms"]:
            m = tuple(int(x) for x in t["abc"])
            if len(m) != 3 or min(m) < 0:
                raise ValueError("PBW exponents must be three naturals")
            acc_term(out, m, alg.to_raw(MultiPoly.from_json(t["coeff"])))
        return alg.element(out)


# public operations ------------------------------------------------------------

def uaw_mul(x: UAWElement, y: UAWElement) -> UAWElement:
    return x * y


def generators(d: int, extra: tuple = ()) -> dict:
    alg = uaw_algebra(d, extra)
    return {g: alg.gen(g) for g in ("A", "B", "C", "alpha", "beta", "gamma")}


def casimir_omega(d: int, extra: tuple = ()) -> UAWElement:
    alg = uaw_algebra(d, extra)
    q = alg.q
    G = generators(d, extra)
    A, B, C, al, be, ga = (G[k] for k in ("A", "B", "C", "alpha", "beta", "gamma"))
    return (
        alg.one() * (q(2) + q(-2))
        - q(1) * (A * B * C)
        - q(2) * (A * A)
        - q(-2) * (B * B)
        - q(2) * (C * C)
        + q(1) * (A * al)
        + q(-1) * (B * be)
        + q(1) * (C * ga)
    )


def rho(x: UAWElement) -> UAWElement:
    """Cyclic automorphism (A, B, C, alpha, beta, gamma) -> (B, C, A, beta, gamma, alpha)."""
    alg = x.alg
    out = alg.element({})
    for (a, b, c), p in x.terms.items():
        # alpha^x beta^y gamma^z -> beta^x gamma^y alpha^z
        newp = {}
        for k, v in p.items():
            newp[(k[2], k[0], k[1]) + k[3:]] = v
        # B^a C^b A^c
        img = alg.element(alg.mono_mul((0, a, b), (c, 0, 0)))
        out = out + img.scale(newp)
    return out


NEG_INF = float("-inf")


def filtration_degree(x: UAWElement):
    if not x.terms:
        return NEG_INF
    return max(sum(m) + sum(k[:3]) for m, p in x.terms.items() for k in p)


def cheb_of_generator(n: int, g: str, d: int, extra: tuple = ()) -> UAWElement:
    alg = uaw_algebra(d, extra)
    return cheb_eval(n, alg.gen(g), alg.one())


# checks -------------------------------------------------------------------------

def _elem_payload(x: UAWElement, limit: int = 6) -> list:
    items = sorted(x.terms.items())[:limit]
    return [{"abc": list(m), "coeff": str(MultiPoly(x.alg.coef_registry, dict(p)))} for m, p in items]


def _zero_check(name: str, x: UAWElement) -> CheckResult:
    return CheckResult(name, x.is_zero(), {} if x.is_zero() else {"residual": _elem_payload(x)})


def pqrs_expansion_check(d: int, n: int) -> CheckResult:
    """B*A^n against P_n(A)B + Q_n(A)C + R_n(A)beta + S_n(A)gamma."""
    from .qidentities import pqrs
    from .chebyshev import poly_eval

    alg = uaw_algebra(d)
    G = generators(d)
    A, B, C = G["A"], G["B"], G["C"]
    one = alg.one()
    P, Q, R, S = pqrs(n, d)
    lhs = B * A ** n
    ev = lambda p: poly_eval(p, A, one)
    rhs = ev(P) * B + ev(Q) * C + ev(R) * G["beta"] + ev(S) * G["gamma"]
    return _zero_check(f"B*A^{n} = P(A)B + Q(A)C + R(A)beta + S(A)gamma, d={d}", lhs - rhs)


def commutator_checks(d: int, n: int | None = None) -> list:
    b = dbar(d) if n is None else n
    G = generators(d)
    out = []
    for g in GENS:
        T = cheb_of_generator(b, g, d)
        for h in GENS:
            out.append(_zero_check(f"[T_{b}({g}), {h}] = 0, d={d}", T.commutator(G[h])))
    return out


def degenerate_branch_checks(d: int) -> list:
    """The q^2 = 1 and q^4 = 1 branches: B A^dbar = A^dbar B with P = X^dbar, Q = R = S = 0."""
    from .qidentities import pqrs

    b = dbar(d)
    out = []
    if b > 2:
        return out
    P, Q, R, S = pqrs(b, d)
    one = CycloScalar.from_int(d, 1)
    zero = CycloScalar.from_int(d, 0)
    want_P = [zero] * b + [one]
    ok = P == want_P and Q == [zero] and R == [zero] and S == [zero]
    out.append(CheckResult(f"P_{b} = X^{b}, Q_{b} = R_{b} = S_{b} = 0 at d={d}", ok, {"P": [str(c) for c in P]}))
    G = generators(d)
    A, B = G["A"], G["B"]
    out.append(_zero_check(f"B A^{b} = A^{b} B at d={d}", B * A ** b - A ** b * B))
    return out


def prop36_checks(d: int) -> list:
    """T_{2 dbar}(A) central, and prod_i (A - Theta_i(lambda)) central for a free invertible lambda."""
    b = dbar(d)
    out = []
    G = generators(d)
    T2 = cheb_of_generator(2 * b, "A", d)
    for h in GENS:
        out.append(_zero_check(f"[T_{2 * b}(A), {h}] = 0, d={d}", T2.commutator(G[h])))
    extra = (("lam", True),)
    alg = uaw_algebra(d, extra)
    Gl = generators(d, extra)
    lam = alg.cvar("lam")
    laminv = alg.cvar("lam", -1)
    prod = alg.one()
    for i in range(b):
        theta = {k: v for k, v in [(next(iter(laminv)), alg.q(2 * i)), (next(iter(lam)), alg.q(-2 * i))]}
        prod = prod * (Gl["A"] - alg.element({(0, 0, 0): theta}))
    for h in GENS:
        out.append(_zero_check(f"[prod (A - Theta_i(lambda)), {h}] = 0, d={d}", prod.commutator(Gl[h])))
    return out


def filtration_congruence_checks(d: int, max_exp: int = 2) -> list:
    """C B = q^2 B C mod Delta_1 (and the other pairs); the Omega^l congruence of PBW monomials."""
    alg = uaw_algebra(d)
    q = alg.q
    G = generators(d)
    A, B, C = G["A"], G["B"], G["C"]
    out = []
    for name, lhs, rhs in (
        ("CB - q^2 BC", C * B, q(2) * (B * C)),
        ("CA - q^-2 AC", C * A, q(-2) * (A * C)),
        ("BA - q^2 AB", B * A, q(2) * (A * B)),
    ):
        deg = filtration_degree(lhs - rhs)
        out.append(CheckResult(f"{name} in Delta_1, d={d}", deg <= 1, {"degree": deg}))
    Om = casimir_omega(d)
    for i0, i1, i2 in itertools.product(range(1, max_exp + 1), repeat=3):
        mono = alg.element({(i0, i1, i2): {alg.zero_exps: alg.s(1)}})
        top = i0 + i1 + i2 - 1
        for l in range(min(i0, i1, i2) + 1):
            red = alg.element({(i0 - l, i1 - l, i2 - l): {alg.zero_exps: alg.s(1)}})
            rhs = (red * Om ** l).scale(alg.q(l * (l - 2 * i1)) * (-1) ** l)
            deg = filtration_degree(mono - rhs)
            out.append(CheckResult(f"A^{i0}B^{i1}C^{i2} vs Omega^{l} congruence, d={d}", deg <= top, {"degree": deg, "bound": top}))
    # commutators with generators raise the degree by at most the expected amount
    for i0, i1, i2 in itertools.product(range(max_exp + 1), repeat=3):
        mono = alg.element({(i0, i1, i2): {alg.zero_exps: alg.s(1)}})
        n = i0 + i1 + i2
        for g, shift, factor in (
            ("A", (1, 0, 0), q(2 * (i1 - i2)) - 1),
            ("B", (0, 1, 0), q(2 * i2) - q(2 * i0)),
            ("C", (0, 0, 1), 1 - q(2 * (i1 - i0))),
        ):
            comm = mono.commutator(G[g])
            lead = alg.element({(i0 + shift[0], i1 + shift[1], i2 + shift[2]): {alg.zero_exps: factor}})
            deg = filtration_degree(comm - lead)
            out.append(CheckResult(f"[A^{i0}B^{i1}C^{i2}, {g}] leading term, d={d}", deg <= n, {"degree": deg, "bound": n}))
    return out


def centrality_suite(d: int) -> list:
    out = commutator_checks(d)
    out += degenerate_branch_checks(d)
    out += prop36_checks(d)
    b = dbar(d)
    for n in range(0, 2 * b + 1):
        out.append(pqrs_expansion_check(d, n))
    out += filtration_congruence_checks(d)
    G = generators(d)
    Om = casimir_omega(d)
    for g in GENS:
        out.append(_zero_check(f"[Omega, {g}] = 0, d={d}", Om.commutator(G[g])))
    return out


def capital_in_center(d: int, which: str, shift: int = 0) -> UAWElement:
    """Phi_dbar^{u shift}(alpha, beta, gamma; Omega) or Psi_dbar(...) as a PBW element."""
    b = dbar(d)
    Phi, Psi = solve_capital(b)
    P = cyclic_shift(shift, Phi) if which == "Phi" else Psi
    G = generators(d)
    Om = casimir_omega(d)
    return evaluate_commuting(P, (G["alpha"], G["beta"], G["gamma"], Om), uaw_algebra(d).one())


def evaluate_commuting(P: MultiPoly, args: tuple, one) -> AlgebraElement:
    """Evaluate a polynomial in X0, X1, X2, X at pairwise commuting algebra elements."""
    names = [n for n, _ in P.registry]
    order = ("X0", "X1", "X2", "X")
    pos = [names.index(v) if v in names else None for v in order]
    cache: dict = {}

    def power(i, e):
        key = (i, e)
        if key not in cache:
            cache[key] = args[i] ** e
        return cache[key]

    out = one * 0
    for k, c in P.terms.items():
        term = one * c
        for i, p in enumerate(pos):
            if p is not None and k[p]:
                term = term * power(i, k[p])
        out = out + term
    return out


def central_relation_sides(d: int) -> tuple:
    b = dbar(d)
    alg = uaw_algebra(d)
    qd = alg.q(b)
    TA, TB, TC = (cheb_of_generator(b, g, d) for g in GENS)
    lhs = alg.element({})
    for i, T in enumerate((TA, TB, TC)):
        lhs = lhs + (capital_in_center(d, "Phi", i) * T).scale(qd)
    rhs = (TA * TB * TC).scale(qd) + TA * TA + TB * TB + TC * TC + capital_in_center(d, "Psi") - 2
    return lhs, rhs


def central_relation_check(d: int) -> CheckResult:
    lhs, rhs = central_relation_sides(d)
    return _zero_check(f"center relation in Z(Delta), d={d}", lhs - rhs)


def center_basis_monomials(d: int, bound: int, omega_below_dbar: bool = False) -> list:
    """(i0, i1, i2, l) with the filtration bound; i0*i1*i2 = 0 unless omega_below_dbar."""
    b = dbar(d)
    out = []
    for l in range(bound // 3 + 1):
        if omega_below_dbar and l >= b:
            continue
        rest = bound - 3 * l
        for i0 in range(rest // b + 1):
            for i1 in range(rest // b + 1):
                for i2 in range(rest // b + 1):
                    if b * (i0 + i1 + i2) > rest:
                        continue
                    if not omega_below_dbar and i0 * i1 * i2 != 0:
                        continue
                    out.append((i0, i1, i2, l))
    return out


def _top_component(x: UAWElement) -> dict:
    deg = filtration_degree(x)
    out = {}
    for m, p in x.terms.items():
        for k, v in p.items():
            if sum(m) + sum(k[:3]) == deg:
                out[(m, k)] = v
    return out


def center_basis_bounded_check(d: int, degree_bound: int | None = None, seed: int = 0, samples: int = 3) -> list:
    """Bounded-degree centrality and independence for both center bases."""
    b = dbar(d)
    if degree_bound is None:
        degree_bound = 3 * b
    alg = uaw_algebra(d)
    G = generators(d)
    Om = casimir_omega(d)
    Ts = [cheb_of_generator(b, g, d) for g in GENS]
    rng = random.Random(seed)
    results = []
    for variant, flag in (("i0*i1*i2 = 0", False), ("Omega exponent < dbar", True)):
        mons = center_basis_monomials(d, degree_bound, flag)
        elems = {}
        for (i0, i1, i2, l) in mons:
            x = Ts[0] ** i0 * Ts[1] ** i1 * Ts[2] ** i2 * Om ** l
            elems[(i0, i1, i2, l)] = x
            for g in GENS:
                results.append(_zero_check(f"[T^({i0},{i1},{i2}) Omega^{l}, {g}] = 0 ({variant}), d={d}", x.commutator(G[g])))
        # leading monomials, including alpha^j beta^j gamma^j factors, are pairwise distinct
        leads = {}
        ok = True
        for key, x in elems.items():
            top = _top_component(x)
            if len(top) != 1:
                ok = False
                continue
            (m, _), = top.items()
            used = sum(key[:3]) * b + 3 * key[3]
            for js in itertools.product(range(degree_bound - used + 1), repeat=3):
                if sum(js) > degree_bound - used:
                    continue
                lm = (m, js)
                if lm in leads:
                    ok = False
                leads[lm] = (key, js)
        results.append(CheckResult(f"distinct leading PBW monomials ({variant}), d={d}, bound={degree_bound}", ok, {"count": len(leads)}))
        # specialize alpha, beta, gamma to random rationals: the alpha-free elements stay independent
        for s in range(samples):
            vals = [rng.randint(-9, 9) or 1 for _ in range(3)]
            vecs = []
            for x in elems.values():
                vec = {}
                for m, p in x.terms.items():
                    tot = alg.s(0)
                    for k, v in p.items():
                        tot = tot + v * (vals[0] ** k[0] * vals[1] ** k[1] * vals[2] ** k[2])
                    if tot:
                        vec[m] = tot
                vecs.append(vec)
            r = rank(vecs)
            results.append(CheckResult(f"rank after specializing alpha,beta,gamma={vals} ({variant}), d={d}", r == len(vecs), {"rank": r, "size": len(vecs)}))
    return results


def random_element(alg: UAWAlgebra, rng: random.Random, max_exp: int = 2, max_terms: int = 3) -> UAWElement:
    out: dict = {}
    for _ in range(rng.randint(1, max_terms)):
        m = tuple(rng.randint(0, max_exp) for _ in range(3))
        poly = {}
        for _ in range(rng.randint(1, 2)):
            k = tuple(rng.randint(0, 1) for _ in range(3)) + (0,) * (alg.ncoef - 3)
            c = rng.randint(-3, 3)
            if c:
                poly[k] = poly.get(k, 0) + alg.s(c)
        acc_term(out, m, {k: v for k, v in poly.items() if v})
    return alg.element(out)


def property_checks(d: int, seed: int = 0, samples: int = 30) -> list:
    """Associativity, filtration submultiplicativity and rho multiplicativity on random inputs."""
    alg = uaw_algebra(d)
    rng = random.Random(seed)
    bad = []
    for _ in range(samples):
        x, y, z = (random_element(alg, rng) for _ in range(3))
        if (x * y) * z != x * (y * z):
            bad.append([x.to_json(), y.to_json(), z.to_json()])
    res = [CheckResult(f"Delta associativity on {samples} random triples, d={d}", not bad, {"counterexamples": bad[:1]})]
    bad = []
    for _ in range(samples):
        x, y = random_element(alg, rng), random_element(alg, rng)
        if filtration_degree(x * y) > filtration_degree(x) + filtration_degree(y):
            bad.append([x.to_json(), y.to_json()])
    res.append(CheckResult(f"filtration degree is subadditive, d={d}", not bad, {"counterexamples": bad[:1]}))
    bad = []
    for _ in range(samples):
        x, y = random_element(alg, rng), random_element(alg, rng)
        if rho(x * y) != rho(x) * rho(y):
            bad.append([x.to_json(), y.to_json()])
    res.append(CheckResult(f"rho is multiplicative on random pairs, d={d}", not bad, {"counterexamples": bad[:1]}))
    G = generators(d)
    Om = casimir_omega(d)
    res.append(CheckResult(f"rho fixes Omega, d={d}", rho(Om) == Om))
    res.append(CheckResult(f"rho cycles A -> B -> C, d={d}", rho(G["A"]) == G["B"] and rho(G["B"]) == G["C"] and rho(G["C"]) == G["A"]))
    return res
