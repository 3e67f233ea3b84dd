import json
import random

import pytest
from hypothesis import given, strategies as st

from awcenter.coeffring.cyclo import CycloScalar
from awcenter.uaw import casimir_omega, cheb_of_generator, generators, rho
from awcenter.uqsl2 import (
    UElement, capital_phi_psi_cross_check, casimir_power_leading_check, chevalley, coef, concini_kac_check,
    defining_relations_check, equitable, equitable_checks, grading_components,
    homogeneous_component_check, injectivity_smoke_check, lambda_casimir, lambda_chevalley_forms, natural_embed,
    natural_relations_check, omega_image_formula, power_formulas_check, property_checks, random_element,
    rho_tilde, rho_tilde_checks, u_algebra, u_mul,
)

from oracles import u_reference_product

LETTERS = {"f": "f", "k": "k", "K": "kinv", "e": "e"}


def word_product(d, word):
    out = u_algebra(d).one()
    for g in word:
        out = out * chevalley(LETTERS[g], d)
    return out


def scalar_terms(x):
    zero = x.alg.zero_exps
    out = {}
    for m, p in x.terms.items():
        assert set(p) == {zero}
        out[m] = p[zero]
    return out


def q(d, m):
    return CycloScalar.q_power(d, m)


# products ------------------------------------------------------------------------------

def test_ef_relation():
    d = 5
    e, f, k, K = (chevalley(g, d) for g in ("e", "f", "k", "kinv"))
    assert e * f == f * e + (q(d, 1) - q(d, -1)).inverse() * (k - K)


def test_ke_relation():
    d = 4
    e, k = chevalley("e", d), chevalley("k", d)
    assert k * e == q(d, 2) * (e * k)


@pytest.mark.parametrize("d", [3, 4, 5, 6])
@pytest.mark.parametrize("word", ["ef", "ke", "kf", "eef", "eeff", "efef", "Kef", "eKfk", "eeefff", "fkeKe"])
def test_products_match_word_oracle(d, word):
    assert scalar_terms(word_product(d, word)) == u_reference_product(d, word)


@given(st.sampled_from([3, 4, 5]), st.text(alphabet="fkKe", max_size=7))
def test_random_words_match_oracle(d, word):
    assert scalar_terms(word_product(d, word)) == u_reference_product(d, word)


def test_associativity_example():
    d = 3
    e, f, k = (chevalley(g, d) for g in "efk")
    assert (e * f) * k == e * (f * k)


@given(st.integers(0, 2 ** 32), st.sampled_from([3, 4, 5, 6]))
def test_associativity_random(seed, d):
    rng = random.Random(seed)
    alg = u_algebra(d)
    x, y, z = (random_element(alg, rng) for _ in range(3))
    assert u_mul(u_mul(x, y), z) == u_mul(x, u_mul(y, z))


@pytest.mark.parametrize("d", [1, 2])
def test_small_d_rejected(d):
    with pytest.raises(ValueError):
        u_algebra(d)


@given(st.integers(0, 2 ** 32))
def test_json_round_trip(seed):
    x = random_element(u_algebra(5), random.Random(seed))
    assert UElement.from_json(json.loads(json.dumps(x.to_json()))) == x


# equitable generators and the Casimir --------------------------------------------------------

def test_y_is_k():
    assert equitable("y", 4) == chevalley("k", 4)
    assert equitable("yinv", 4) == chevalley("kinv", 4)


@pytest.mark.parametrize("d", [3, 4, 5, 7])
def test_e_recovered_from_x_and_y(d):
    x, y = equitable("x", d), equitable("y", d)
    e = q(d, 1) * (q(d, 1) - q(d, -1)).inverse() * (u_algebra(d).one() - x * y)
    assert e == chevalley("e", d)


@pytest.mark.parametrize("d", [3, 4, 5, 6])
def test_casimir_forms_and_centrality(d):
    lam = lambda_casimir(d)
    fe_form, ef_form = lambda_chevalley_forms(d)
    assert lam == fe_form == ef_form
    assert lam.terms[(1, 0, 1)] == {u_algebra(d).zero_exps: (q(d, 1) - q(d, -1)) ** 2}
    for g in ("e", "f", "k"):
        assert lam.commutator(chevalley(g, d)).is_zero()


def test_grading_examples():
    d = 3
    assert set(grading_components(chevalley("e", d))) == {1}
    assert set(grading_components(lambda_casimir(d))) == {0}
    assert grading_components(u_algebra(d).element({})) == {}


@given(st.integers(0, 2 ** 32))
def test_grading_components_resum(seed):
    alg = u_algebra(4)
    x = random_element(alg, random.Random(seed))
    total = alg.element({})
    for part in grading_components(x).values():
        total = total + part
    assert total == x


@pytest.mark.parametrize("d", [3, 4, 5, 6])
def test_defining_and_equitable_relations(d):
    assert defining_relations_check(d).passed
    assert all(r.passed for r in equitable_checks(d))


# embedding ---------------------------------------------------------------------------------------

@pytest.mark.parametrize("d", [3, 4, 5])
def test_embedding_of_generators(d):
    x, y = equitable("x", d), equitable("y", d)
    a, b, c = (coef(n, d) for n in "abc")
    ainv, cinv = coef("a", d, -1), coef("c", d, -1)
    one = u_algebra(d).one()
    A = a * x + ainv * y + q(d, 1) * (b * cinv * (one - x * y))
    assert natural_embed(generators(d)["A"]) == A
    alpha = (b + coef("b", d, -1)) * (c + cinv) + (a + ainv) * lambda_casimir(d)
    assert natural_embed(generators(d)["alpha"]) == alpha


@pytest.mark.parametrize("d", [3, 4, 5])
def test_omega_image_two_routes(d):
    assert natural_embed(casimir_omega(d)) == omega_image_formula(d)


@pytest.mark.parametrize("d", [3, 4, 5, 6])
def test_embedding_respects_relations(d):
    assert natural_relations_check(d).passed


@given(st.integers(0, 2 ** 32))
def test_embedding_multiplicative(seed):
    rng = random.Random(seed)
    d = 3
    G = generators(d)
    names = ["A", "B", "C", "alpha", "beta", "gamma"]
    w1 = G[rng.choice(names)] * G[rng.choice(names)]
    w2 = G[rng.choice(names)] + G[rng.choice(names)] * 2
    assert natural_embed(w1 * w2) == natural_embed(w1) * natural_embed(w2)


@pytest.mark.parametrize("d", [3, 4])
def test_embedding_injective_low_degree(d):
    assert injectivity_smoke_check(d).passed


# rho~ ------------------------------------------------------------------------------------

def test_rho_tilde_examples():
    d = 4
    assert rho_tilde(coef("a", d)) == coef("b", d)
    assert rho_tilde(lambda_casimir(d)) == lambda_casimir(d)
    A = generators(d)["A"]
    assert natural_embed(rho(A)) == rho_tilde(natural_embed(A))


@pytest.mark.parametrize("d", [3, 4, 5])
def test_rho_tilde_checks(d):
    assert rho_tilde_checks(d).passed


# root-of-unity formulas --------------------------------------------------------------------------

def test_concini_kac_d3_by_hand():
    d = 3
    e, f, k, K = (chevalley(g, d) for g in ("e", "f", "k", "kinv"))
    lam = lambda_casimir(d)
    t3 = lam * lam * lam - 3 * lam
    qd = q(d, 1) - q(d, -1)
    assert t3 == qd ** 6 * (e * e * e * f * f * f) + q(d, 3) * (k * k * k + K * K * K)


def test_x_squared_at_d4():
    d = 4
    e, K = chevalley("e", d), chevalley("kinv", d)
    x = equitable("x", d)
    assert x * x == K * K - q(d, 2) * (q(d, 1) - q(d, -1)) ** 2 * (e * e * K * K)


@pytest.mark.parametrize("d", [3, 4, 5, 6])
def test_concini_kac_and_power_formulas(d):
    assert concini_kac_check(d).passed
    assert power_formulas_check(d).passed


def test_power_formula_sign_note_at_d3():
    res = power_formulas_check(3)
    assert res.passed
    assert any("exponent sign" in n for n in res.notes)


def test_y_power_central():
    d = 5
    y5 = equitable("y", d) ** 5
    assert y5.commutator(chevalley("e", d)).is_zero()


@pytest.mark.parametrize("d", [3, 4, 5])
def test_homogeneous_components(d):
    assert homogeneous_component_check(d).passed


def test_degree_zero_component_of_ta():
    d = 3
    img = natural_embed(cheb_of_generator(3, "A", d))
    comps = grading_components(img)
    assert set(comps) <= {0, 3}
    want = coef("a", d, 3) * chevalley("kinv", d) ** 3 + coef("a", d, -3) * chevalley("k", d) ** 3
    assert comps[0] == want


@pytest.mark.parametrize("d", [3, 4, 5])
def test_casimir_power_leading_terms(d):
    assert casimir_power_leading_check(d).passed


@pytest.mark.parametrize("d", [3, 4])
def test_capital_cross_check(d):
    assert capital_phi_psi_cross_check(d).passed


def test_property_checks():
    assert all(r.passed for r in property_checks(4, seed=11))
