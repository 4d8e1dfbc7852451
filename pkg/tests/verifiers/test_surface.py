import pytest
from hypothesis import given, settings
from hypothesis import strategies as st


def _surface(src: str, spec: str = "q"):
    from reciprocity_laws.cli.specs import parse_field, parse_surface_function

    return parse_surface_function(src, parse_field(spec))


def _config():
    from reciprocity_laws.config import pconfig

    return pconfig.model_copy(update={"reciprocity_spot_checks": 2})


def test_points_on_a_curve():
    from reciprocity_laws.cli.specs import parse_curve, parse_field
    from reciprocity_laws.verifiers import parshin_point_sum_check

    curve = parse_curve("y", parse_field("q"))
    report = parshin_point_sum_check(_surface("y"), _surface("x"), _surface("3"), curve, config=_config())
    assert report.passed
    assert {c.piece: c.value for c in report.contributions} == {"(x)": "3", "inf": "1/3"}
    assert report.context == {"curve": "y", "chart": "xy"}


def test_points_on_a_curve_with_a_second_factor():
    from reciprocity_laws.cli.specs import parse_curve, parse_field
    from reciprocity_laws.verifiers import parshin_point_sum_check

    curve = parse_curve("y", parse_field("q"))
    report = parshin_point_sum_check(_surface("y"), _surface("x"), _surface("1-x"), curve, config=_config())
    assert report.passed
    assert {c.piece for c in report.contributions} == {"(x)", "(x - 1)", "inf"}


def test_curves_through_a_point():
    from reciprocity_laws.verifiers import parshin_curve_sum_check

    report = parshin_curve_sum_check(_surface("x"), _surface("y"), _surface("x-y"), (0, 0), config=_config())
    assert report.passed
    assert len(report.contributions) == 3
    assert report.context == {"point": "(0, 0)", "chart": "xy"}


def test_points_on_a_curve_keep_given_factors():
    from reciprocity_laws.cli.specs import parse_curve, parse_field
    from reciprocity_laws.verifiers import parshin_point_sum_check

    curve = parse_curve("y", parse_field("q"))
    f2 = _surface("(y - x^2 - 1)*(y - x^2 - 2)")
    report = parshin_point_sum_check(_surface("y"), f2, _surface("3"), curve, config=_config())
    assert report.passed
    assert {c.piece for c in report.contributions} == {"(x^2 + 1)", "(x^2 + 2)", "inf"}


@pytest.mark.parametrize("spec", ["q", "fp:5", "fp:7"])
def test_curves_through_a_point_split_reducible_factors(spec: str):
    from reciprocity_laws.verifiers import parshin_curve_sum_check

    f = (_surface("x", spec), _surface("y", spec), _surface("x^2 - y^2", spec))
    report = parshin_curve_sum_check(*f, (0, 0), config=_config())
    assert report.passed
    assert len(report.contributions) == 4


def test_arity_is_checked():
    from reciprocity_laws.cli.specs import parse_curve, parse_field
    from reciprocity_laws.verifiers import ParshinPointVerifier
    from reciprocity_laws.exception import UsageException

    K = parse_field("q")
    verifier = ParshinPointVerifier(K, parse_curve("y", K))
    with pytest.raises(UsageException):
        verifier.verify(_surface("x"), _surface("y"))


@pytest.mark.slow
@settings(max_examples=15)
@given(
    seed=st.integers(min_value=0, max_value=2**32),
    spec=st.sampled_from(["fp:3", "fp:5", "fq:2^2"]),
    law=st.sampled_from(["parshin-points", "parshin-curves"]),
)
def test_parshin_laws_hold(seed: int, spec: str, law: str):
    from random import Random

    from reciprocity_laws.verifiers import BaseVerifier
    from reciprocity_laws.cli.specs import parse_field
    from reciprocity_laws.constants import LawEnum

    verifier, functions = BaseVerifier.of(LawEnum(law)).sample(parse_field(spec), Random(seed), _config())
    report = verifier.verify(*functions)
    assert report.passed


@pytest.mark.slow
@settings(max_examples=50)
@given(seed=st.integers(min_value=0, max_value=2**32))
def test_points_law_over_f5(seed: int):
    from random import Random

    from reciprocity_laws.verifiers import ParshinPointVerifier
    from reciprocity_laws.cli.specs import parse_field

    verifier, functions = ParshinPointVerifier.sample(parse_field("fp:5"), Random(seed), _config())
    assert verifier.verify(*functions).passed


@pytest.mark.slow
@settings(max_examples=50)
@given(seed=st.integers(min_value=0, max_value=2**32))
def test_curves_law_over_f5(seed: int):
    from random import Random

    from reciprocity_laws.verifiers import ParshinCurveVerifier
    from reciprocity_laws.cli.specs import parse_field

    verifier, functions = ParshinCurveVerifier.sample(parse_field("fp:5"), Random(seed), _config())
    assert verifier.verify(*functions).passed
