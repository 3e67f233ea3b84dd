"""q-binomial and Chebyshev identities in a two-generator quantum torus, the
Laurent polynomials Theta_i, and the P/Q/R/S recurrences for B*A^n."""
from __future__ import annotations

from .chebyshev import cheb_T, cheb_eval, poly_eval
from .checks import CheckResult, combine
from .coeffring.cyclo import CycloScalar, dbar
from .coeffring.genericq import GenericQScalar
from .coeffring.multipoly import MultiPoly


# scalar rings -------------------------------------------------------------------

class _GenericRing:
    name = "generic"

    def qpow(self, m):
        return GenericQScalar.monomial(m)

    def const(self, c):
        return GenericQScalar.const(c)

    def lift(self, g: GenericQScalar):
        return g


class _RootRing:
    def __init__(self, d):
        self.d = d
        self.name = f"root({d})"

    def qpow(self, m):
        return CycloScalar.q_power(self.d, m)

    def const(self, c):
        return CycloScalar.from_int(self.d, c)

    def lift(self, g: GenericQScalar):
        return g.specialize(self.d)


def _ring(mode):
    if mode in (None, "generic"):
        return _GenericRing()
    if isinstance(mode, tuple):
        mode = mode[1]
    return _RootRing(int(mode))


# quantum torus ----------------------------------------------------------------------

class QTorusElement:
    """Sum of c * R^i S^j (i in Z, j >= 0) with S R = Q^2 R S."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms=None):
        self.ring = ring
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @staticmethod
    def R(ring, power=1):
        return QTorusElement(ring, {(power, 0): ring.const(1)})

    @staticmethod
    def S(ring, power=1):
        if power < 0:
            raise ValueError("S is not invertible")
        return QTorusElement(ring, {(0, power): ring.const(1)})

    def _acc(self, out, k, v):
        w = out.get(k)
        w = v if w is None else w + v
        if w:
            out[k] = w
        else:
            out.pop(k, None)

    def __add__(self, o):
        if not isinstance(o, QTorusElement):
            o = QTorusElement(self.ring, {(0, 0): self.ring.const(o)})
        out = dict(self.terms)
        for k, v in o.terms.items():
            self._acc(out, k, v)
        return QTorusElement(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return QTorusElement(self.ring, {k: -v for k, v in self.terms.items()})

    def __sub__(self, o):
        if not isinstance(o, QTorusElement):
            o = QTorusElement(self.ring, {(0, 0): self.ring.const(o)})
        return self + (-o)

    def __mul__(self, o):
        if not isinstance(o, QTorusElement):
            c = o if not isinstance(o, int) else self.ring.const(o)
            return QTorusElement(self.ring, {k: v * c for k, v in self.terms.items()})
        out: dict = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in o.terms.items():
                # S^j1 R^i2 = Q^{2 j1 i2} R^i2 S^j1
                self._acc(out, (i1 + i2, j1 + j2), c1 * c2 * self.ring.qpow(2 * j1 * i2))
        return QTorusElement(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        out = QTorusElement(self.ring, {(0, 0): self.ring.const(1)})
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, o):
        if not isinstance(o, QTorusElement):
            return NotImplemented
        return self.terms == o.terms

    def __repr__(self):
        return " + ".join(f"({c})*R^{i}*S^{j}" for (i, j), c in sorted(self.terms.items())) or "0"


# Gaussian binomials ---------------------------------------------------------------

def qint(n: int) -> GenericQScalar:
    """[n] = (Q^n - Q^-n)/(Q - Q^-1)."""
    num = GenericQScalar({n: 1, -n: -1})
    return num.divexact(GenericQScalar({1: 1, -1: -1}))


def gauss_binomial(n: int, i: int) -> GenericQScalar:
    if i < 0:
        raise ValueError("i must be nonnegative")
    num = GenericQScalar.const(1)
    den = GenericQScalar.const(1)
    for j in range(1, i + 1):
        num = num * qint(n - j + 1)
        den = den * qint(j)
    out = num.divexact(den)
    if not out.is_integral():
        raise ArithmeticError("Gaussian binomial left a rational denominator")
    return out


def qbinomial_theorem_check(n: int, mode="generic") -> CheckResult:
    """(R+S)^n against the Gaussian-binomial expansion; at a root also the collapse."""
    ring = _ring(mode)
    R, S = QTorusElement.R(ring), QTorusElement.S(ring)
    lhs = (R + S) ** n
    rhs = QTorusElement(ring)
    for i in range(n + 1):
        c = ring.lift(gauss_binomial(n, i) * GenericQScalar.monomial(i * (n - i)))
        rhs = rhs + QTorusElement(ring, {(n - i, i): c})
    results = [CheckResult(f"q-binomial expansion n={n} {ring.name}", lhs == rhs, {"lhs": repr(lhs), "rhs": repr(rhs)})]
    if isinstance(ring, _RootRing):
        b = dbar(ring.d)
        got = (R + S) ** b
        want = R ** b + S ** b
        results.append(CheckResult(f"(R+S)^dbar collapse {ring.name}", got == want, {"got": repr(got)}))
    return combine(f"q-binomial theorem n={n} {ring.name}", results)


def iorgov_rhs(n: int, ring) -> QTorusElement:
    out = QTorusElement.R(ring, n) + QTorusElement.R(ring, -n)
    for i in range(1, n + 1):
        for j in range(0, n - i + 1):
            num = qint(n) * gauss_binomial(i + j - 1, i - 1) * gauss_binomial(n - j - 1, i - 1)
            c = num.divexact(qint(i)) * GenericQScalar.monomial(i * (n - i - 2 * j))
            out = out + QTorusElement(ring, {(n - i - 2 * j, i): ring.lift(c)})
    return out


def iorgov_identity_check(n: int, mode="generic") -> CheckResult:
    """T_n(R+S+R^-1) against the double-sum expansion; at a root also the collapse."""
    ring = _ring(mode)
    R, S, Rinv = QTorusElement.R(ring), QTorusElement.S(ring), QTorusElement.R(ring, -1)
    one = QTorusElement(ring, {(0, 0): ring.const(1)})
    x = R + S + Rinv
    lhs = cheb_eval(n, x, one)
    rhs = iorgov_rhs(n, ring)
    results = [CheckResult(f"T_n(R+S+R^-1) expansion n={n} {ring.name}", lhs == rhs, {"lhs": repr(lhs), "rhs": repr(rhs)})]
    if isinstance(ring, _RootRing):
        b = dbar(ring.d)
        got = cheb_eval(b, x, one)
        want = QTorusElement.R(ring, b) + QTorusElement.S(ring, b) + QTorusElement.R(ring, -b)
        results.append(CheckResult(f"T_dbar(R+S+R^-1) collapse {ring.name}", got == want, {"got": repr(got)}))
    return combine(f"T_n(R+S+R^-1) n={n} {ring.name}", results)


# Theta polynomials ---------------------------------------------------------------------

REG_Y = (("Y", True),)
REG_XY = (("X", False), ("Y", True))


def _q(d, m):
    return CycloScalar.q_power(d, m)


def theta(i: int, d: int, registry=REG_Y) -> MultiPoly:
    """Theta_i(Y) = q^{2i} Y^-1 + q^{-2i} Y."""
    y = [n for n, _ in registry].index("Y")
    lo = [0] * len(registry)
    hi = [0] * len(registry)
    lo[y], hi[y] = -1, 1
    return MultiPoly(registry, {tuple(lo): _q(d, 2 * i), tuple(hi): _q(d, -2 * i)})


def _poly_one(d, registry):
    return MultiPoly.constant(registry, CycloScalar.from_int(d, 1))


def theta_identities_check(d: int) -> CheckResult:
    b = dbar(d)
    one = _poly_one(d, REG_Y)
    results = []
    for i in range(2 * b):
        for j in range(2 * b):
            eq = theta(i, d) == theta(j, d)
            results.append(CheckResult(f"Theta_{i} = Theta_{j} iff dbar | i-j", eq == ((i - j) % b == 0), {"i": i, "j": j}))
    ydb = MultiPoly(REG_Y, {(b,): 1, (-b,): 1})
    for i in range(2 * b):
        got = cheb_eval(b, theta(i, d), one)
        results.append(CheckResult(f"T_dbar(Theta_{i}) = Y^dbar + Y^-dbar", got == ydb, {"got": str(got)}))
    # T_dbar(X) = prod (X - Theta_i(Y)) + Y^dbar + Y^-dbar, in X and Y
    onexy = _poly_one(d, REG_XY)
    X = MultiPoly.variable(REG_XY, "X")
    prod = onexy
    for i in range(b):
        prod = prod * (X - theta(i, d, REG_XY))
    lhs = cheb_eval(b, X, onexy)
    rhs = prod + MultiPoly(REG_XY, {(0, b): 1, (0, -b): 1})
    results.append(CheckResult("T_dbar(X) = prod_i (X - Theta_i(Y)) + Y^dbar + Y^-dbar", lhs == rhs, {"diff": str(lhs - rhs)}))
    return combine(f"Theta identities d={d}", results)


# P, Q, R, S --------------------------------------------------------------------------

def _uadd(a, b):
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]


def _uscale(a, c):
    return [x * c for x in a]


def _ushift(a):
    return [0] + list(a)


def _utrim(a, d):
    a = [x if isinstance(x, CycloScalar) else CycloScalar.from_int(d, x) for x in a]
    while len(a) > 1 and not a[-1]:
        a.pop()
    return a or [CycloScalar.from_int(d, 0)]


def pqrs(n: int, d: int) -> tuple:
    """(P_n, Q_n, R_n, S_n) as coefficient lists over CycloScalar, low degree first."""
    q = lambda m: _q(d, m)
    c_pq = -(q(-1) * (q(2) - q(-2)))
    c_qp = q(1) * (q(2) - q(-2))
    c_rq = q(-1) * (q(1) - q(-1))
    c_sp = -(q(1) * (q(1) - q(-1)))
    P, Q, R, S = [q(0)], [0], [0], [0]
    for _ in range(n):
        P, Q, R, S = (
            _uadd(_uscale(_ushift(P), q(2)), _uscale(Q, c_pq)),
            _uadd(_uscale(_ushift(Q), q(-2)), _uscale(P, c_qp)),
            _uadd(_ushift(R), _uscale(Q, c_rq)),
            _uadd(_ushift(S), _uscale(P, c_sp)),
        )
    return tuple(_utrim(p, d) for p in (P, Q, R, S))


def _geom(a: MultiPoly, b: MultiPoly, n: int, one) -> MultiPoly:
    """(a^n - b^n)/(a - b) as the polynomial sum a^k b^(n-1-k)."""
    out = one * 0
    for k in range(n):
        out = out + a ** k * b ** (n - 1 - k)
    return out


def pqrs_theta_check(n: int, d: int) -> CheckResult:
    """Evaluations of P_n..S_n at Theta_i(Y), cross-multiplied by Theta_{i+1} - Theta_{i-1}."""
    b = dbar(d)
    if b <= 2:
        raise ValueError("Theta evaluations need dbar > 2")
    q = lambda m: _q(d, m)
    one = _poly_one(d, REG_Y)
    P, Q, R, S = pqrs(n, d)
    results = []
    for i in range(b):
        tm, t0, tp = theta(i - 1, d), theta(i, d), theta(i + 1, d)
        den = tp - tm
        ev = lambda p: poly_eval(p, t0, one)
        hp = _geom(tp, t0, n, one)
        hm = _geom(t0, tm, n, one)
        checks = {
            "P": (ev(P) * den, (tp - t0 * q(2)) * tm ** n + (t0 * q(2) - tm) * tp ** n),
            "Q": (ev(Q) * den, (tp ** n - tm ** n) * (q(1) * (q(2) - q(-2)))),
            "R": (ev(R) * den, (hp - hm) * ((q(1) - q(-1)) * (q(2) - q(-2)))),
            "S": (ev(S) * den, (hp * (tm - t0 * q(2)) - hm * (tp - t0 * q(2))) * (q(1) * (q(1) - q(-1)))),
        }
        for name, (lhs, rhs) in checks.items():
            results.append(CheckResult(f"{name}_{n}(Theta_{i})", lhs == rhs, {"diff": str(lhs - rhs)}))
    return combine(f"P/Q/R/S at Theta points n={n} d={d}", results)


def script_pqrs(n: int, d: int) -> tuple:
    """Replace X^k in T_n by P_k, Q_k, R_k, S_k."""
    out = [[0], [0], [0], [0]]
    for k, c in enumerate(cheb_T(n)):
        if c:
            for slot, poly in enumerate(pqrs(k, d)):
                out[slot] = _uadd(out[slot], _uscale(poly, c))
    return tuple(_utrim(p, d) for p in out)


def script_pqrs_check(d: int) -> CheckResult:
    b = dbar(d)
    P, Q, R, S = script_pqrs(b, d)
    T = _utrim(list(cheb_T(b)), d)
    zero = _utrim([0], d)
    ok = P == T and Q == zero and R == zero and S == zero
    return CheckResult(
        f"script P = T_dbar and script Q = R = S = 0, d={d}",
        ok,
        {"P": [str(x) for x in P], "Q": [str(x) for x in Q], "R": [str(x) for x in R], "S": [str(x) for x in S]},
    )
