import pytest
from hypothesis import given, settings
from hypothesis import strategies as st


def _parse(src: str, spec: str = "q"):
    from reciprocity_laws.cli.expr import parse_expr
    from reciprocity_laws.cli.specs import parse_field

    return parse_expr(src, parse_field(spec))


def _place(src: str, spec: str = "q"):
    from reciprocity_laws.cli.specs import parse_field, parse_place

    return parse_place(src, parse_field(spec))


def _residue(f, g, p):
    from reciprocity_laws.symbols import pairing_residue, residue_pairing

    return pairing_residue(residue_pairing(f, g, p))


def test_pairing_value():
    from reciprocity_laws.symbols import residue_pairing

    result = residue_pairing(_parse("1/t"), _parse("t"), _place("t"))
    assert str(result.value) == "1 - eps1*eps2"
    assert result.provenance.symbol == "residue"


@pytest.mark.parametrize("spec", ["q", "fp:7"])
def test_powers_of_the_uniformizer(spec: str):
    z = _parse("t", spec)
    p = _place("t", spec)
    for n in range(-5, 6):
        for m in range(-5, 6):
            if n == 0 or m == 0:
                continue
            expected = m if n + m == 0 else 0
            assert _residue(z**n, z**m, p) == expected, (n, m)


def test_regular_differential_has_no_residue():
    z = _parse("t")
    p = _place("t")
    f = _parse("t^4*(1 + t)/(2 - t)")
    for n in range(1, 4):
        assert _residue(z**-n, f, p) == 0


def test_residue_at_infinity_and_quadratic_place():
    assert _residue(_parse("1"), _parse("t^2"), _place("inf")) == 0
    assert _residue(_parse("1/t"), _parse("t"), _place("inf")) == -1
    assert _residue(_parse("2*t/(t^2+1)"), _parse("t"), _place("t^2+1")) == 2


def test_eps3_pairing():
    from reciprocity_laws.symbols import eps3_pairing, pairing_residue

    result = eps3_pairing(_parse("t^-2"), _parse("t^2"), _place("t"))
    assert pairing_residue(result) == 2
    assert str(result.value) == "1 - 2*eps^2"

    result = eps3_pairing(_parse("t^-2", "fp:5"), _parse("t^2", "fp:5"), _place("t", "fp:5"))
    assert str(result.value) == "1 + 3*eps^2"


def test_nilpotent_symbol():
    from reciprocity_laws.symbols import nilpotent_symbol
    from reciprocity_laws.exception import SymbolException

    F = _parse("1 - eps1/t", "eps2(q)")
    G = _parse("1 - eps2*t", "eps2(q)")
    assert str(nilpotent_symbol(F, G, _place("t")).value) == "1 - eps1*eps2"

    with pytest.raises(SymbolException):
        nilpotent_symbol(_parse("2 - eps1/t", "eps2(q)"), G, _place("t"))


def _pair(seed: int, spec: str):
    from random import Random

    from reciprocity_laws.sampling import random_place, random_function
    from reciprocity_laws.cli.specs import parse_field

    K = parse_field(spec)
    rng = Random(seed)
    return random_function(K, rng), random_function(K, rng), random_function(K, rng), random_place(K, rng, 2)


@settings(max_examples=200)
@given(seed=st.integers(min_value=0, max_value=2**32), spec=st.sampled_from(["q", "fp:5", "fp:7"]))
def test_pairing_is_bilinear(seed: int, spec: str):
    f, g, h, p = _pair(seed, spec)
    if not (f + h).is_zero:
        assert _residue(f + h, g, p) == _residue(f, g, p) + _residue(h, g, p)
    if not (g + h).is_zero:
        assert _residue(f, g + h, p) == _residue(f, g, p) + _residue(f, h, p)


@settings(max_examples=100)
@given(seed=st.integers(min_value=0, max_value=2**32), spec=st.sampled_from(["q", "fp:5", "fp:7"]))
def test_pairing_matches_residue(seed: int, spec: str):
    from reciprocity_laws.places import residue_fdg
    from reciprocity_laws.symbols import eps3_pairing, pairing_residue

    f, g, _, p = _pair(seed, spec)
    expected = residue_fdg(f, g, p)
    assert _residue(f, g, p) == expected
    assert pairing_residue(eps3_pairing(f, g, p)) == expected
