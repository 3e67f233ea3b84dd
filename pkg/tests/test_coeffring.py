import cmath
import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from awcenter.coeffring.cyclo import CycloScalar, cyclo_arith, cyclo_new, cyclotomic_polynomial, dbar, field
from awcenter.coeffring.genericq import GenericQScalar
from awcenter.coeffring.multipoly import MultiPoly, poly_arith, poly_substitute
from awcenter.coeffring.packed import pack, pack_key, packed_mul, unpack, unpack_key

ORDERS = [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12]


def numeric(x: CycloScalar) -> complex:
    """Value at the primitive root exp(2 pi i / d), an independent oracle."""
    z = cmath.exp(2j * cmath.pi / x.d)
    return sum(float(c) * z ** j for j, c in enumerate(x.c))


def close(a: complex, b: complex) -> bool:
    return abs(a - b) < 1e-8 * max(1.0, abs(b))


def scalars(d):
    n = field(d).n
    coeff = st.fractions(min_value=-5, max_value=5, max_denominator=4)
    return st.lists(coeff, min_size=n, max_size=n).map(lambda v: CycloScalar(d, v))


orders = st.sampled_from([3, 4, 5, 6, 8, 12])


# examples ---------------------------------------------------------------------------

def test_q_at_d4_squares_to_minus_one():
    q = cyclo_new(4, {1: 1})
    assert q.c == (0, 1)
    assert q * q == -1


def test_q_at_d1_is_one():
    assert cyclo_new(1, {1: 1}) == 1


def test_q_to_the_d_is_one():
    assert cyclo_new(5, {5: 1}) == 1


def test_q_plus_q_squared_at_d3():
    q = CycloScalar.q_power(3, 1)
    assert cyclo_arith(q, q * q, "add") == -1


def test_field_inverse_at_d5():
    q = CycloScalar.q_power(5, 1)
    x = q - q ** -1
    assert cyclo_arith(x, x, "div") == 1


def test_q_cubed_at_d6_against_long_division():
    # q^3 mod q^2 - q + 1: q^3 = (q + 1)(q^2 - q + 1) - 1
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert CycloScalar.q_power(6, 3) == -1


@pytest.mark.parametrize("d", ORDERS)
def test_cyclotomic_polynomial_has_the_primitive_roots(d):
    poly = cyclotomic_polynomial(d)
    z = cmath.exp(2j * cmath.pi / d)
    assert abs(sum(c * z ** j for j, c in enumerate(poly))) < 1e-9
    assert len(poly) - 1 == field(d).n


@pytest.mark.parametrize("d", ORDERS)
def test_q_is_primitive(d):
    one = CycloScalar.from_int(d, 1)
    assert CycloScalar.q_power(d, d) == one
    for m in range(1, d):
        assert CycloScalar.q_power(d, m) != one


@pytest.mark.parametrize("d", ORDERS)
def test_dbar_sign_identity(d):
    b = dbar(d)
    assert CycloScalar.q_power(d, b * (b - 1)) == (-1) ** (b - 1)


@pytest.mark.parametrize("d", [3, 4, 5, 6, 7, 8, 10, 12])
def test_q_squared_has_order_dbar(d):
    b = dbar(d)
    for i in range(0, 3 * b + 1):
        assert (CycloScalar.q_power(d, 2 * i) == 1) == (i % b == 0)


@pytest.mark.parametrize("d", [3, 4, 5, 6, 7, 8, 10, 12])
def test_q2i_minus_q_minus_2i_vanishes_iff_d_divides_4i(d):
    b = dbar(d)
    for i in range(0, 3 * b + 1):
        x = CycloScalar.q_power(d, 2 * i) - CycloScalar.q_power(d, -2 * i)
        assert (x == 0) == (4 * i % d == 0)
        if d % 4:
            # same as dbar | i unless 4 | d
            assert (x == 0) == (i % b == 0)


def test_order_mismatch_raises():
    with pytest.raises(ValueError):
        cyclo_arith(CycloScalar.q_power(3, 1), CycloScalar.q_power(5, 1), "add")


def test_division_by_zero_raises():
    with pytest.raises(ZeroDivisionError):
        cyclo_arith(CycloScalar.q_power(5, 1), CycloScalar.from_int(5, 0), "div")


def test_dbar_values():
    assert [dbar(d) for d in (1, 2, 3, 4, 5, 6, 7, 8)] == [1, 1, 3, 2, 5, 3, 7, 4]


# properties -------------------------------------------------------------------------

@given(st.data())
def test_ring_axioms(data):
    d = data.draw(orders)
    x, y, z = (data.draw(scalars(d)) for _ in range(3))
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x
    assert x + y == y + x
    assert x - x == 0


@given(st.data())
def test_arithmetic_matches_numeric_evaluation(data):
    d = data.draw(orders)
    x, y = data.draw(scalars(d)), data.draw(scalars(d))
    assert close(numeric(x * y), numeric(x) * numeric(y))
    assert close(numeric(x + y), numeric(x) + numeric(y))
    if y:
        assert close(numeric(x / y), numeric(x) / numeric(y))


@given(st.data())
def test_inverse(data):
    d = data.draw(orders)
    x = data.draw(scalars(d))
    if x:
        assert x * x.inverse() == 1


@given(st.data())
def test_scalar_json_round_trip(data):
    d = data.draw(orders)
    x = data.draw(scalars(d))
    assert CycloScalar.from_json(json.loads(json.dumps(x.to_json()))) == x


@given(st.integers(-30, 30), st.sampled_from(ORDERS))
def test_q_power_matches_numeric(m, d):
    z = cmath.exp(2j * cmath.pi / d)
    assert close(numeric(CycloScalar.q_power(d, m)), z ** m)


# generic Q ----------------------------------------------------------------------------

laurent = st.dictionaries(st.integers(-4, 4), st.integers(-3, 3), max_size=4).map(GenericQScalar)


@given(laurent, laurent)
def test_generic_specialization_is_a_ring_map(a, b):
    for d in (3, 4, 7):
        assert (a * b).specialize(d) == a.specialize(d) * b.specialize(d)
        assert (a + b).specialize(d) == a.specialize(d) + b.specialize(d)


@given(laurent, laurent)
def test_generic_exact_division(a, b):
    if b:
        assert (a * b).divexact(b) == a


def test_generic_keeps_no_zeros():
    x = GenericQScalar({1: 1}) - GenericQScalar({1: 1})
    assert x.terms == {}


def test_generic_and_root_scalars_do_not_mix():
    with pytest.raises(TypeError):
        GenericQScalar.const(1) + CycloScalar.q_power(3, 1)


# MultiPoly ------------------------------------------------------------------------------

REG_A = (("a", True),)
REG2 = (("alpha", False), ("beta", False))


def test_laurent_product_example():
    a = MultiPoly.variable(REG_A, "a")
    ainv = MultiPoly.variable(REG_A, "a", -1)
    assert poly_arith(a + ainv, a - ainv, "mul") == MultiPoly(REG_A, {(2,): 1, (-2,): -1})


def test_substitution_example():
    reg = (("X", False), ("X1", False))
    p = MultiPoly.variable(reg, "X") * MultiPoly.variable(reg, "X1")
    x0 = MultiPoly.variable((("X0", False),), "X0")
    got = poly_substitute(p, {"X": x0})
    want = MultiPoly.variable((("X1", False), ("X0", False)), "X1") * MultiPoly.variable((("X0", False),), "X0")
    assert got == want


def test_square_example():
    al, be = MultiPoly.variable(REG2, "alpha"), MultiPoly.variable(REG2, "beta")
    assert (al + be) ** 2 == MultiPoly(REG2, {(2, 0): 1, (1, 1): 2, (0, 2): 1})


def test_negative_exponent_on_polynomial_variable_rejected():
    with pytest.raises(ValueError):
        MultiPoly(REG2, {(-1, 0): 1})


def test_non_invertible_substitution_reported():
    a = MultiPoly.variable(REG_A, "a", -1)
    x = MultiPoly.variable((("x", False),), "x")
    with pytest.raises(ValueError):
        a.substitute({"a": x + 1})


polys = st.dictionaries(
    st.tuples(st.integers(-2, 2), st.integers(0, 2)), st.integers(-4, 4), max_size=5
).map(lambda t: MultiPoly((("a", True), ("b", False)), t))


@given(polys, polys, polys)
def test_poly_ring_axioms(p, r, s):
    assert (p * r) * s == p * (r * s)
    assert p * (r + s) == p * r + p * s
    assert p * r == r * p


@given(polys, polys)
def test_poly_stores_no_zeros(p, r):
    for x in (p + r, p * r, p - p):
        assert all(c != 0 for c in x.terms.values())


@given(polys)
def test_poly_canonical_is_idempotent_and_json_round_trips(p):
    c = p.canonical()
    assert c == c.canonical() == p
    assert MultiPoly.from_json(json.loads(json.dumps(p.to_json()))) == p


# packed kernel ----------------------------------------------------------------------------

@given(st.lists(st.integers(-300, 300), min_size=1, max_size=5), st.integers(-300, 300))
def test_pack_key_round_trip(exps, qexp):
    assert unpack_key(pack_key(tuple(exps), qexp), len(exps)) == (tuple(exps), qexp)


cyclo_polys = st.dictionaries(
    st.tuples(st.integers(-2, 2), st.integers(0, 2)),
    st.tuples(st.integers(-3, 3), st.integers(0, 5)),
    max_size=4,
)


@given(st.sampled_from([3, 4, 5, 6]), cyclo_polys, cyclo_polys)
def test_packed_product_matches_multipoly_product(d, p_raw, r_raw):
    reg = (("x", True), ("y", False))
    to_poly = lambda raw: MultiPoly(reg, {k: CycloScalar.from_int(d, c) * CycloScalar.q_power(d, m) for k, (c, m) in raw.items()})
    p, r = to_poly(p_raw), to_poly(r_raw)
    via_packed = unpack(packed_mul(pack(p.terms, d), pack(r.terms, d)), d, 2)
    assert MultiPoly(reg, via_packed) == p * r


def test_pack_refuses_fractions():
    assert pack({(0,): CycloScalar(3, [Fraction(1, 2), 0])}, 3) is None
