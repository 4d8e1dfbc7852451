from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st


def test_prime_field_arithmetic():
    from reciprocity_laws.algebra import PrimeField

    F = PrimeField(7)
    assert F(3) * F(5) == 1
    assert F(3).inverse() == 5
    assert F(-1) == 6
    assert str(F(-1)) == "6"
    assert F(2) ** -1 == 4


def test_prime_field_rejects_composite():
    from reciprocity_laws.algebra import PrimeField
    from reciprocity_laws.exception import AlgebraException

    with pytest.raises(AlgebraException):
        PrimeField(9)


def test_rationals_zero_has_no_inverse():
    from reciprocity_laws.algebra import Rationals
    from reciprocity_laws.exception import NonUnitException

    Q = Rationals()
    assert Q(Fraction(2, 3)) * Q(Fraction(3, 2)) == 1
    with pytest.raises(NonUnitException):
        Q(0).inverse()


def test_galois_field_picks_first_irreducible_modulus():
    from reciprocity_laws.algebra import galois_field

    assert galois_field(2, 2).format_modulus() == "a^2 + a + 1"
    assert galois_field(3, 2).format_modulus() == "a^2 + 1"
    assert galois_field(5, 2).format_modulus() == "a^2 + 2"
    assert galois_field(3, 2).spec == "fq:3^2"
    assert galois_field(5, 1).spec == "fp:5"


def test_extension_generator_satisfies_modulus():
    from reciprocity_laws.algebra import FieldElem, galois_field

    F9 = galois_field(3, 2)
    a = FieldElem(F9, F9.generator)
    assert a**2 == -1
    assert a**4 == 1
    assert a * a.inverse() == 1
    assert str(a + 1) == "a + 1"


def test_norm_and_trace():
    from reciprocity_laws.algebra import FieldElem, Rationals, ExtensionField, galois_field, norm_and_trace

    F9 = galois_field(3, 2)
    a = FieldElem(F9, F9.generator)
    n, tr = norm_and_trace(a)
    assert n == 1
    assert tr == 0

    one_n, one_tr = norm_and_trace(F9(1))
    assert one_n == 1
    assert one_tr == 2

    Q = Rationals()
    Qi = ExtensionField(Q, (Q.one, Q.zero, Q.one))
    i = FieldElem(Qi, Qi.generator)
    n, tr = norm_and_trace(i + 1)
    assert n == 2
    assert tr == 2


def test_nil_inverse():
    from reciprocity_laws.algebra import FieldElem, Rationals, eps2, nil_inverse
    from reciprocity_laws.exception import NonUnitException

    R = eps2(Rationals())
    e1, e2 = FieldElem(R, R.generator(0)), FieldElem(R, R.generator(1))
    assert nil_inverse(1 - e1) == 1 + e1
    assert nil_inverse(1 - e1 - e2) == 1 + e1 + e2 + 2 * e1 * e2
    assert e1 * e1 == 0
    with pytest.raises(NonUnitException):
        nil_inverse(e1)


def test_eps3_truncation():
    from reciprocity_laws.algebra import FieldElem, PrimeField, eps3

    R = eps3(PrimeField(5))
    e = FieldElem(R, R.generator(0))
    assert e**3 == 0
    assert e**2 != 0
    assert (1 - e).inverse() == 1 + e + e**2
    assert str(1 - e**2) == "1 + 4*eps^2"


@pytest.mark.slow
@pytest.mark.parametrize("spec", ["q", "fp:5", "fp:7", "fq:3^2", "fq:2^3"])
@settings(max_examples=1000)
@given(seed=st.integers(min_value=0, max_value=2**32))
def test_field_axioms(spec: str, seed: int):
    from random import Random

    from reciprocity_laws.cli.specs import parse_field

    K = parse_field(spec)
    rng = Random(seed)
    a, b, c = (K.wrap(K.random(rng)) for _ in range(3))
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0
    if a:
        assert a * a.inverse() == 1


@given(seed=st.integers(min_value=0, max_value=2**32))
def test_nilpotent_units_invert(seed: int):
    from random import Random

    from reciprocity_laws.algebra import FieldElem, PrimeField, eps2

    R = eps2(PrimeField(7))
    rng = Random(seed)
    x = FieldElem(R, R.random(rng))
    if x.is_unit:
        assert x * x.inverse() == 1


@pytest.mark.slow
@pytest.mark.parametrize("spec", ["fq:2^3", "fq:3^2", "fq:5^3"])
@settings(max_examples=500)
@given(seed=st.integers(min_value=0, max_value=2**32))
def test_norm_is_multiplicative_and_trace_additive(spec: str, seed: int):
    from random import Random

    from reciprocity_laws.algebra import norm_and_trace
    from reciprocity_laws.cli.specs import parse_field

    L = parse_field(spec)
    rng = Random(seed)
    a, b = L.wrap(L.random(rng)), L.wrap(L.random(rng))
    na, ta = norm_and_trace(a)
    nb, tb = norm_and_trace(b)
    nab, _ = norm_and_trace(a * b)
    _, tsum = norm_and_trace(a + b)
    assert nab == na * nb
    assert tsum == ta + tb

    c = L.base.wrap(L.base.random(rng))
    nc, tc = norm_and_trace(L(c))
    assert nc == c**L.degree
    assert tc == c * L.degree
