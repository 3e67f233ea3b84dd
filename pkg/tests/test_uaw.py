import json
import random

import pytest
from hypothesis import given, strategies as st

from awcenter.coeffring.cyclo import CycloScalar, dbar
from awcenter.coeffring.multipoly import MultiPoly
from awcenter.uaw import (
    GENS, NEG_INF, UAWElement, casimir_omega, center_basis_bounded_check, central_relation_check,
    central_relation_sides, centrality_suite, cheb_of_generator, commutator_checks, degenerate_branch_checks,
    filtration_congruence_checks, filtration_degree, generators, pqrs_expansion_check, prop36_checks,
    property_checks, random_element, rho, uaw_algebra, uaw_mul,
)

from oracles import uaw_reference_product


def as_polys(x):
    return {m: MultiPoly(x.alg.coef_registry, dict(p)) for m, p in x.terms.items()}


def word_product(d, word):
    G = generators(d)
    out = uaw_algebra(d).one()
    for g in word:
        out = out * G[g]
    return out


# products against the word-rewriting oracle --------------------------------------------------

def test_cb_relation():
    d = 5
    q = lambda m: CycloScalar.q_power(d, m)
    G = generators(d)
    A, B, C, al = G["A"], G["B"], G["C"], G["alpha"]
    want = q(2) * (B * C) + (q(1) * (q(2) - q(-2))) * A - (q(1) * (q(1) - q(-1))) * al
    assert C * B == want
    assert as_polys(C * B) == uaw_reference_product(d, "CB")


@pytest.mark.parametrize("d", [3, 4, 5, 6])
@pytest.mark.parametrize("word", ["CB", "CA", "BA", "CBA", "CCBA", "BBAA", "CACB", "CBCBA", "BACAB"])
def test_products_match_word_oracle(d, word):
    assert as_polys(word_product(d, word)) == uaw_reference_product(d, word)


words = st.text(alphabet="ABC", min_size=0, max_size=6)


@given(st.sampled_from([3, 4, 5]), words)
def test_random_words_match_oracle(d, word):
    assert as_polys(word_product(d, word)) == uaw_reference_product(d, word)


def test_unit():
    alg = uaw_algebra(3)
    x = random_element(alg, random.Random(3))
    assert alg.one() * x == x == x * alg.one()


@pytest.mark.parametrize("d", [3, 4, 5])
def test_associativity_two_orders(d):
    G = generators(d)
    A, B = G["A"], G["B"]
    assert (B * A) * A == B * (A * A)


@given(st.integers(0, 2 ** 32), st.sampled_from([3, 4, 5]))
def test_associativity_random(seed, d):
    rng = random.Random(seed)
    alg = uaw_algebra(d)
    x, y, z = (random_element(alg, rng) for _ in range(3))
    assert uaw_mul(uaw_mul(x, y), z) == uaw_mul(x, uaw_mul(y, z))


def test_order_mismatch():
    with pytest.raises(ValueError):
        generators(3)["A"] * generators(5)["A"]


# Omega, rho, filtration ----------------------------------------------------------------------

@pytest.mark.parametrize("d", [3, 4, 5, 7])
def test_omega_abc_coefficient_and_centrality(d):
    Om = casimir_omega(d)
    G = generators(d)
    alg = uaw_algebra(d)
    assert Om.terms[(1, 1, 1)] == {alg.zero_exps: -CycloScalar.q_power(d, 1)}
    for g in GENS:
        assert Om.commutator(G[g]).is_zero()
    assert rho(Om) == Om


@given(st.integers(0, 2 ** 32))
def test_rho_order_three_and_multiplicative(seed):
    rng = random.Random(seed)
    alg = uaw_algebra(4)
    x, y = random_element(alg, rng), random_element(alg, rng)
    assert rho(rho(rho(x))) == x
    assert rho(x * y) == rho(x) * rho(y)


def test_rho_on_generators():
    G = generators(3)
    assert rho(G["A"]) == G["B"]
    assert rho(G["alpha"]) == G["beta"]


def test_filtration_examples():
    d = 3
    G = generators(d)
    assert filtration_degree(casimir_omega(d)) == 3
    assert filtration_degree(G["alpha"]) == 1
    assert filtration_degree(G["A"] * G["A"] * G["B"]) == 3
    assert filtration_degree(uaw_algebra(d).element({})) == NEG_INF


@given(st.integers(0, 2 ** 32))
def test_filtration_subadditive(seed):
    rng = random.Random(seed)
    alg = uaw_algebra(5)
    x, y = random_element(alg, rng), random_element(alg, rng)
    assert filtration_degree(x * y) <= filtration_degree(x) + filtration_degree(y)


@given(st.integers(0, 2 ** 32))
def test_json_round_trip(seed):
    alg = uaw_algebra(4)
    x = random_element(alg, random.Random(seed))
    assert UAWElement.from_json(json.loads(json.dumps(x.to_json()))) == x


# centrality ----------------------------------------------------------------------------------

def test_cheb_of_generator_examples():
    d = 3
    G = generators(d)
    assert cheb_of_generator(1, "A", d) == G["A"]
    assert cheb_of_generator(2, "B", d) == G["B"] * G["B"] - 2


def test_d6_t3_central():
    T = cheb_of_generator(3, "A", 6)
    assert T.commutator(generators(6)["B"]).is_zero()


@pytest.mark.parametrize("d", [3, 4, 5, 6, 7])
def test_chebyshev_of_generators_central(d):
    assert all(r.passed for r in commutator_checks(d))


@pytest.mark.parametrize("d", [5, 7])
def test_lower_chebyshev_not_central(d):
    assert not all(r.passed for r in commutator_checks(d, dbar(d) - 1))


@pytest.mark.parametrize("d", [1, 2, 4])
def test_degenerate_branches(d):
    res = degenerate_branch_checks(d)
    assert res and all(r.passed for r in res)


def test_d1_generators_commute():
    G = generators(1)
    assert G["B"] * G["A"] == G["A"] * G["B"]


@pytest.mark.parametrize("d", [3, 4, 5, 6])
def test_pqrs_expansion_cross_module(d):
    for n in range(0, 2 * dbar(d) + 1):
        assert pqrs_expansion_check(d, n).passed


@pytest.mark.parametrize("d", [3, 4, 5, 6, 7])
def test_centrality_suite(d):
    res = centrality_suite(d)
    assert all(r.passed for r in res), [r.name for r in res if not r.passed]


@pytest.mark.parametrize("d", [3, 4, 5])
def test_prop36_and_congruences(d):
    assert all(r.passed for r in prop36_checks(d))
    assert all(r.passed for r in filtration_congruence_checks(d))


# Z(Delta) relation -------------------------------------------------------------------------------

@pytest.mark.parametrize("d", [1, 2, 3, 4, 6])
def test_center_relation(d):
    assert central_relation_check(d).passed


def test_center_relation_dbar1_is_the_casimir_identity():
    # at dbar = 1 the relation is Phi_1/Psi_1-level: q(alpha A + beta B + gamma C) = qABC + A^2 + B^2 + C^2 + Omega - 2
    d = 2
    G = generators(d)
    q = CycloScalar.q_power(d, 1)
    A, B, C = G["A"], G["B"], G["C"]
    lhs = q * (A * G["alpha"] + B * G["beta"] + C * G["gamma"])
    rhs = q * (A * B * C) + A * A + B * B + C * C + casimir_omega(d) - 2
    assert lhs == rhs


def test_center_relation_sides_differ_when_broken():
    lhs, rhs = central_relation_sides(3)
    assert lhs == rhs
    assert lhs != rhs + generators(3)["A"]


@pytest.mark.parametrize("d", [3, 4])
def test_center_basis_bounded(d):
    res = center_basis_bounded_check(d)
    assert all(r.passed for r in res), [r.name for r in res if not r.passed]


def test_property_checks():
    assert all(r.passed for r in property_checks(3, seed=7))
