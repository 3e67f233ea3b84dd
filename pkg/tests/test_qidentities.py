import itertools

import pytest
from hypothesis import given, strategies as st

from awcenter.chebyshev import cheb_eval
from awcenter.coeffring.cyclo import CycloScalar, dbar
from awcenter.coeffring.genericq import GenericQScalar
from awcenter.coeffring.multipoly import MultiPoly
from awcenter.qidentities import (
    REG_Y, QTorusElement, _GenericRing, _RootRing, gauss_binomial, iorgov_identity_check, iorgov_rhs, pqrs,
    pqrs_theta_check, qbinomial_theorem_check, qint, script_pqrs, script_pqrs_check, theta, theta_identities_check,
)

Q = GenericQScalar.monomial


def pascal_binomial(n, i):
    """q-Pascal rule [n,i] = Q^i [n-1,i] + Q^(i-n) [n-1,i-1], an independent route."""
    if i == 0 or i == n:
        return GenericQScalar.const(1)
    if i < 0 or i > n:
        return GenericQScalar()
    return Q(i) * pascal_binomial(n - 1, i) + Q(i - n) * pascal_binomial(n - 1, i - 1)


def words_expansion(n, ring):
    """(R+S)^n by summing all 2^n words, reordering each with S R = Q^2 R S."""
    out = QTorusElement(ring)
    for word in itertools.product("RS", repeat=n):
        inversions = sum(1 for a, b in itertools.combinations(word, 2) if a == "S" and b == "R")
        i = word.count("S")
        out = out + QTorusElement(ring, {(n - i, i): ring.qpow(2 * inversions)})
    return out


# Gaussian binomials --------------------------------------------------------------------

def test_gauss_binomial_examples():
    assert gauss_binomial(2, 1) == Q(1) + Q(-1)
    assert gauss_binomial(7, 0) == GenericQScalar.const(1)
    assert gauss_binomial(4, 2) == Q(4) + Q(2) + 2 + Q(-2) + Q(-4)


@given(st.integers(0, 12), st.integers(0, 12))
def test_gauss_binomial_matches_pascal_rule(n, i):
    if i <= n:
        g = gauss_binomial(n, i)
        assert g == pascal_binomial(n, i)
        assert g.is_integral()


def test_qint_values():
    assert qint(3) == Q(2) + 1 + Q(-2)
    assert qint(1) == GenericQScalar.const(1)


# quantum torus --------------------------------------------------------------------------

tori = st.lists(
    st.tuples(st.integers(-2, 2), st.integers(0, 2), st.integers(-3, 3), st.integers(-2, 2)), max_size=3
)


def torus(raw, ring):
    out = QTorusElement(ring)
    for i, j, c, e in raw:
        out = out + QTorusElement(ring, {(i, j): ring.const(c) * ring.qpow(e)})
    return out


@given(tori, tori, tori)
def test_torus_associative(a, b, c):
    ring = _GenericRing()
    x, y, z = torus(a, ring), torus(b, ring), torus(c, ring)
    assert (x * y) * z == x * (y * z)


@given(tori, tori, st.sampled_from([3, 4, 5, 6]))
def test_specialize_then_multiply_equals_multiply_then_specialize(a, b, d):
    g, r = _GenericRing(), _RootRing(d)
    prod = torus(a, g) * torus(b, g)
    spec = QTorusElement(r, {k: v.specialize(d) for k, v in prod.terms.items()})
    assert spec == torus(a, r) * torus(b, r)


def test_s_relation():
    ring = _GenericRing()
    S, R = QTorusElement.S(ring), QTorusElement.R(ring)
    assert S * R == R * S * Q(2)


@pytest.mark.parametrize("n", range(0, 9))
def test_qbinomial_by_word_expansion(n):
    ring = _GenericRing()
    R, S = QTorusElement.R(ring), QTorusElement.S(ring)
    assert (R + S) ** n == words_expansion(n, ring)


def test_qbinomial_n2_example():
    ring = _GenericRing()
    R, S = QTorusElement.R(ring), QTorusElement.S(ring)
    want = R * R + QTorusElement(ring, {(1, 1): (Q(1) + Q(-1)) * Q(1)}) + S * S
    assert (R + S) ** 2 == want


@pytest.mark.parametrize("n", range(0, 11))
def test_qbinomial_theorem_generic(n):
    assert qbinomial_theorem_check(n).passed


@pytest.mark.parametrize("n", range(0, 9))
def test_iorgov_identity_generic(n):
    assert iorgov_identity_check(n).passed


@pytest.mark.parametrize("n", range(0, 6))
def test_iorgov_by_recurrence_on_both_sides(n):
    # T_n(x) from the recurrence vs the closed double sum, generic Q
    ring = _GenericRing()
    x = QTorusElement.R(ring) + QTorusElement.S(ring) + QTorusElement.R(ring, -1)
    one = QTorusElement(ring, {(0, 0): ring.const(1)})
    assert cheb_eval(n, x, one) == iorgov_rhs(n, ring)


@pytest.mark.parametrize("d", [3, 4, 5, 6, 7, 8, 10, 12, 14])
def test_root_of_unity_collapses(d):
    b = dbar(d)
    assert qbinomial_theorem_check(b, d).passed
    assert iorgov_identity_check(b, d).passed


def test_d3_collapse_example():
    ring = _RootRing(3)
    R, S = QTorusElement.R(ring), QTorusElement.S(ring)
    assert (R + S) ** 3 == R ** 3 + S ** 3


def test_d5_iorgov_example():
    ring = _RootRing(5)
    R, S, Ri = QTorusElement.R(ring), QTorusElement.S(ring), QTorusElement.R(ring, -1)
    one = QTorusElement(ring, {(0, 0): ring.const(1)})
    assert cheb_eval(5, R + S + Ri, one) == QTorusElement.R(ring, 5) + QTorusElement.S(ring, 5) + QTorusElement.R(ring, -5)


def test_no_collapse_below_dbar():
    ring = _RootRing(5)
    R, S = QTorusElement.R(ring), QTorusElement.S(ring)
    assert (R + S) ** 4 != R ** 4 + S ** 4


# Theta ---------------------------------------------------------------------------------------

def test_theta_examples():
    assert theta(0, 4) == theta(2, 4)
    one = MultiPoly.constant(REG_Y, CycloScalar.from_int(3, 1))
    assert cheb_eval(3, theta(1, 3), one) == MultiPoly(REG_Y, {(3,): 1, (-3,): 1})
    assert (theta(2, 5) - theta(2, 5)).is_zero()


@pytest.mark.parametrize("d", [3, 4, 5, 6, 7, 8])
def test_theta_identities(d):
    assert theta_identities_check(d).passed


# P, Q, R, S -------------------------------------------------------------------------------------

def _poly(d, coeffs):
    return [CycloScalar.from_int(d, c) if isinstance(c, int) else c for c in coeffs]


@pytest.mark.parametrize("d", [3, 4, 5, 7])
def test_pqrs_small_n(d):
    q = lambda m: CycloScalar.q_power(d, m)
    zero = CycloScalar.from_int(d, 0)
    P, Qn, R, S = pqrs(0, d)
    assert (P, Qn, R, S) == ([q(0)], [zero], [zero], [zero])
    P, Qn, R, S = pqrs(1, d)
    assert P == [zero, q(2)]
    assert Qn == [q(1) * (q(2) - q(-2))]
    assert R == [zero]
    assert S == [-(q(1) * (q(1) - q(-1)))]
    P2 = pqrs(2, d)[0]
    assert P2 == [-((q(2) - q(-2)) ** 2), zero, q(4)]


@pytest.mark.parametrize("d", [3, 5, 6, 7, 8])
def test_pqrs_theta_evaluations(d):
    for n in range(0, 2 * dbar(d) + 1):
        assert pqrs_theta_check(n, d).passed


def test_pqrs_theta_precondition():
    with pytest.raises(ValueError):
        pqrs_theta_check(2, 4)


@pytest.mark.parametrize("d", [3, 4, 5, 6, 7, 8])
def test_script_pqrs(d):
    assert script_pqrs_check(d).passed


def test_script_q_vanishes_at_d5():
    Qs = script_pqrs(5, 5)[1]
    assert all(c == 0 for c in Qs)


def test_script_q_nonzero_below_dbar():
    Qs = script_pqrs(4, 5)[1]
    assert any(c != 0 for c in Qs)
