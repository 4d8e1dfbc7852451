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


def test_valuation():
    from reciprocity_laws.places import valuation

    assert valuation(_parse("t"), _place("inf")) == -1
    assert valuation(_parse("(t^2+1)/t"), _place("t")) == -1
    assert valuation(_parse("t^2+1"), _place("t^2+1")) == 1
    assert valuation(_parse("(t-1)^3/(t+1)"), _place("t-1")) == 3


def test_valuation_of_zero_function():
    from reciprocity_laws.places import valuation
    from reciprocity_laws.exception import ZeroFunctionException

    with pytest.raises(ZeroFunctionException):
        valuation(_parse("0"), _place("t"))


def test_reduce_at():
    from reciprocity_laws.places import reduce_at
    from reciprocity_laws.algebra import FieldElem
    from reciprocity_laws.exception import PoleException

    assert reduce_at(_parse("1-t"), _place("t")) == 1
    assert reduce_at(_parse("(1+t)/t"), _place("inf")) == 1
    assert reduce_at(_parse("t"), _place("t")) == 0

    p = _place("t^2+1", "fp:3")
    x = reduce_at(_parse("t", "fp:3"), p)
    assert x == FieldElem(p.residue_field, p.residue_field.generator)
    assert x**2 == -1

    with pytest.raises(PoleException):
        reduce_at(_parse("1/t"), _place("t"))


def test_place_parsing_normalizes_and_checks():
    from reciprocity_laws.exception import UsageException

    assert str(_place("2*t - 2")) == "(t - 1)"
    assert str(_place("inf")) == "inf"
    assert _place("t^2+1").degree == 2
    with pytest.raises(UsageException):
        _place("t^2-1")
    with pytest.raises(UsageException):
        _place("3")


def test_divisor():
    from reciprocity_laws.places import divisor

    assert str(divisor(_parse("t"))) == "(t) - inf"
    D = divisor(_parse("(t^2+1)/t"))
    assert {str(p): m for p, m in D.entries} == {"(t)": -1, "(t^2 + 1)": 1, "inf": -1}
    assert D.degree == 0
    assert not divisor(_parse("5"))


def test_divisor_keeps_given_quartic_factor():
    from reciprocity_laws.places import divisor

    D = divisor(_parse("(t^4+1)/t"))
    assert {str(p): m for p, m in D.entries} == {"(t)": -1, "(t^4 + 1)": 1, "inf": -3}
    assert D.degree == 0

    D = divisor(_parse("(t^4+1)*(t^2-1)"))
    assert [str(p) for p in D.support] == ["(t - 1)", "(t + 1)", "(t^4 + 1)", "inf"]


def test_divisor_over_finite_field_splits():
    from reciprocity_laws.places import divisor

    D = divisor(_parse("t^2+1", "fp:5"))
    assert [str(p) for p in D.support] == ["(t + 2)", "(t + 3)", "inf"]
    assert D.degree == 0


def test_laurent_expand():
    from reciprocity_laws.places import laurent_expand

    series = laurent_expand(_parse("1/t"), _place("t"), 3)
    assert series.valuation == -1
    assert series.coefficient(-1) == 1
    assert series.coefficient(0) == 0

    geometric = laurent_expand(_parse("1/(1-t)"), _place("t"), 5)
    assert [geometric.coefficient(n) for n in range(5)] == [1, 1, 1, 1, 1]

    at_infinity = laurent_expand(_parse("t"), _place("inf"), 2)
    assert at_infinity.valuation == -1
    assert at_infinity.var == "s"


def test_laurent_expand_needs_a_rational_place():
    from reciprocity_laws.places import laurent_expand
    from reciprocity_laws.exception import PlaceException

    with pytest.raises(PlaceException):
        laurent_expand(_parse("t"), _place("t^2+1"), 3)


def test_series_precision_is_tracked():
    from reciprocity_laws.places import laurent_expand
    from reciprocity_laws.exception import AlgebraException

    series = laurent_expand(_parse("1/(1-t)"), _place("t"), 3)
    product = series * series
    assert product.coefficient(2) == 3
    with pytest.raises(AlgebraException):
        product.coefficient(3)


def test_residues():
    from reciprocity_laws.places import residue_fdg

    t = _parse("t")
    assert residue_fdg(_parse("1/t"), t, _place("t")) == 1
    assert residue_fdg(_parse("1/t"), t, _place("inf")) == -1
    assert residue_fdg(_parse("1/t^2"), t, _place("t")) == 0
    # d(t^2) = 2t dt
    assert residue_fdg(_parse("1/t^2"), _parse("t^2"), _place("t")) == 2


def test_residue_at_quadratic_place_matches_splitting_field():
    from reciprocity_laws.places import Place, residue_fdg
    from reciprocity_laws.algebra import FieldElem, ExtensionField

    f, g = _parse("1/(t^2+1)"), _parse("t")
    p = _place("t^2+1")
    total = residue_fdg(f, g, p)

    # 在 Q(i) 上分成 t - i 与 t + i 两个一次点
    Qi: ExtensionField = p.residue_field  # type: ignore[assignment]
    i = FieldElem(Qi, Qi.generator)
    F, G = f.change_ring(Qi), g.change_ring(Qi)
    split = residue_fdg(F, G, Place.rational(Qi, i)) + residue_fdg(F, G, Place.rational(Qi, -i))
    assert split == Qi(total)
    assert total == 0
    assert residue_fdg(f, g, _place("inf")) == 0


def test_residue_form_is_trace_of_local_residue():
    from reciprocity_laws.places import residue_form

    # Res_{t^2+1} (2t/(t^2+1)) dt = Tr(1) = 2
    assert residue_form(_parse("2*t/(t^2+1)"), _place("t^2+1")) == 2


def _random_functions(seed: int, spec: str, count: int = 2):
    from random import Random

    from reciprocity_laws.sampling import random_line_function
    from reciprocity_laws.cli.specs import parse_field

    K = parse_field(spec)
    rng = Random(seed)
    return K, rng, [random_line_function(K, rng) for _ in range(count)]


@pytest.mark.slow
@settings(max_examples=200)
@given(seed=st.integers(min_value=0, max_value=2**32))
def test_divisor_degree_vanishes_over_f5(seed: int):
    from reciprocity_laws.places import divisor

    _, _, (f,) = _random_functions(seed, "fp:5", 1)
    assert divisor(f).degree == 0


@given(seed=st.integers(min_value=0, max_value=2**32))
def test_divisor_degree_vanishes_over_q(seed: int):
    from reciprocity_laws.places import divisor

    _, _, (f,) = _random_functions(seed, "q", 1)
    assert divisor(f).degree == 0


@given(seed=st.integers(min_value=0, max_value=2**32), spec=st.sampled_from(["q", "fp:5", "fp:7", "fq:3^2"]))
def test_reduce_at_is_multiplicative_on_units(seed: int, spec: str):
    from reciprocity_laws.places import reduce_at, valuation
    from reciprocity_laws.sampling import random_place

    K, rng, (f, g) = _random_functions(seed, spec)
    p = random_place(K, rng, 2)
    if valuation(f, p) or valuation(g, p):
        return
    assert reduce_at(f * g, p) == reduce_at(f, p) * reduce_at(g, p)
    assert reduce_at(f.const_like(3), p) == 3


@given(seed=st.integers(min_value=0, max_value=2**32), spec=st.sampled_from(["q", "fp:5", "fp:7"]))
def test_laurent_expand_is_multiplicative(seed: int, spec: str):
    from reciprocity_laws.places import Place, laurent_expand
    from reciprocity_laws.sampling import random_place

    K, rng, (f, g) = _random_functions(seed, spec)
    p = random_place(K, rng) if rng.random() < 0.7 else Place.infinity(K)
    product = laurent_expand(f, p, 6) * laurent_expand(g, p, 6)
    direct = laurent_expand(f * g, p, 6)
    assert direct.valuation == product.valuation
    span = range(product.valuation, product.absolute_precision)
    assert [direct.coefficient(n) for n in span] == [product.coefficient(n) for n in span]


@given(seed=st.integers(min_value=0, max_value=2**32), spec=st.sampled_from(["q", "fp:5", "fp:7"]))
def test_exact_differentials_have_no_residue(seed: int, spec: str):
    from random import Random

    from reciprocity_laws.algebra import RationalFunction
    from reciprocity_laws.places import Place, residue_fdg
    from reciprocity_laws.sampling import random_place, random_function
    from reciprocity_laws.cli.specs import parse_field

    K = parse_field(spec)
    rng = Random(seed)
    p = random_place(K, rng, 2)
    # 极点只在 p 与无穷远点
    h = RationalFunction.from_poly(random_function(K, rng, 4).num)
    f = h / RationalFunction.from_poly(p.poly) ** rng.randint(1, 4)
    one = f.const_like(1)
    for pole in (p, Place.infinity(K)):
        assert residue_fdg(one, f, pole) == 0
