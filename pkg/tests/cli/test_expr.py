import pytest
from hypothesis import given
from hypothesis import strategies as st


def test_ast_shape():
    from reciprocity_laws.cli import parse_ast
    from reciprocity_laws.cli.expr import Num, Pow, Var, BinOp

    node = parse_ast("t^2 + 1")
    assert isinstance(node, BinOp)
    assert node.op == "+"
    assert node.left == Pow(Var("t", node.left.base.span), 2, node.left.span)
    assert isinstance(node.right, Num)

    node = parse_ast("2*(t - 1)^-3")
    assert isinstance(node, BinOp)
    assert isinstance(node.right, Pow)
    assert node.right.exponent == -3


@pytest.mark.parametrize(
    "src, line, column",
    [
        ("t + * 2", 1, 5),
        ("t +\n  ?", 2, 3),
        ("(t + 1", 1, 7),
        ("t^x", 1, 3),
        ("t t", 1, 3),
        ("t +", 1, 4),
    ],
)
def test_syntax_errors_carry_position(src: str, line: int, column: int):
    from reciprocity_laws.cli import parse_ast
    from reciprocity_laws.exception import ExpressionSyntaxException

    with pytest.raises(ExpressionSyntaxException) as info:
        parse_ast(src)
    assert (info.value.line, info.value.column) == (line, column)


def test_evaluation_errors_carry_position():
    from reciprocity_laws.cli import parse_expr, parse_field
    from reciprocity_laws.exception import ExpressionSyntaxException

    Q = parse_field("q")
    with pytest.raises(ExpressionSyntaxException) as info:
        parse_expr("1/(t - t)", Q)
    assert "zero denominator" in info.value.message
    assert info.value.column == 3

    with pytest.raises(ExpressionSyntaxException) as info:
        parse_expr("t + x", Q)
    assert "not enabled" in info.value.message
    assert info.value.column == 5

    with pytest.raises(ExpressionSyntaxException):
        parse_expr("a + 1", parse_field("fp:5"))
    with pytest.raises(ExpressionSyntaxException):
        parse_expr("eps1", Q)


def test_evaluation():
    from reciprocity_laws.cli import parse_expr, parse_field
    from reciprocity_laws.algebra import NilpotentExtension

    Q = parse_field("q")
    f = parse_expr("(t^2 - 1)/(t + 1)", Q)
    assert f == parse_expr("t - 1", Q)
    assert parse_expr("t^-2 * t^2", Q) == 1
    assert parse_expr("-t", Q) == parse_expr("0 - t", Q)
    assert parse_expr("7", parse_field("fp:5")) == 2

    # a^2 + a + 1 是 F_4 的模多项式
    assert parse_expr("a^2 + a + 1", parse_field("fq:2^2")).is_zero

    F = parse_expr("1 - eps1*t", parse_field("eps2(q)"))
    assert isinstance(F.domain, NilpotentExtension)
    assert (F * F).domain == F.domain


def test_surface_variables():
    from reciprocity_laws.cli import parse_field
    from reciprocity_laws.cli.specs import parse_surface_function

    f = parse_surface_function("x*y/(x - y)", parse_field("fp:7"))
    assert not f.is_constant
    assert f.hint is not None


@given(seed=st.integers(min_value=0, max_value=2**32), spec=st.sampled_from(["q", "fp:5", "fq:3^2"]))
def test_printed_functions_parse_back(seed: int, spec: str):
    from random import Random

    from reciprocity_laws.cli import parse_expr, parse_field
    from reciprocity_laws.sampling import random_function

    K = parse_field(spec)
    f = random_function(K, Random(seed))
    assert parse_expr(str(f), K) == f


@given(seed=st.integers(min_value=0, max_value=2**32), spec=st.sampled_from(["q", "fp:5", "fq:3^2"]))
def test_printing_is_idempotent(seed: int, spec: str):
    from random import Random

    from reciprocity_laws.cli import parse_expr, parse_field, parse_place
    from reciprocity_laws.cli.specs import parse_surface_function
    from reciprocity_laws.sampling import random_place, random_line_function, random_surface_function

    K = parse_field(spec)
    rng = Random(seed)
    f = random_line_function(K, rng)
    assert str(parse_expr(str(f), K)) == str(f)
    g = random_surface_function(K, rng)
    assert str(parse_surface_function(str(g), K)) == str(g)
    p = random_place(K, rng, 2)
    assert str(parse_place(str(p), K)) == str(p)


@pytest.mark.parametrize(
    "spec, expected",
    [("q", "q"), ("fp:5", "fp:5"), ("fq:2^3", "fq:2^3"), ("eps2(fp:3)", "eps2(fp:3)")],
)
def test_field_descriptors(spec: str, expected: str):
    from reciprocity_laws.cli import parse_field

    assert parse_field(spec).spec == expected


@pytest.mark.parametrize("spec", ["fp:4", "fq:6^2", "fq:2^0", "eps2(eps3(q))", "r", "fp:"])
def test_bad_field_descriptors(spec: str):
    from reciprocity_laws.cli import parse_field
    from reciprocity_laws.exception import UsageException

    with pytest.raises(UsageException):
        parse_field(spec)


@pytest.mark.parametrize("spec", ["t^2 - 1", "3", "0", "1/t"])
def test_bad_places(spec: str):
    from reciprocity_laws.cli import parse_field, parse_place
    from reciprocity_laws.exception import UsageException

    with pytest.raises(UsageException):
        parse_place(spec, parse_field("q"))


def test_places_are_made_monic():
    from reciprocity_laws.cli import parse_field, parse_place

    assert str(parse_place("2*t + 4", parse_field("q"))) == "(t + 2)"
    assert str(parse_place("inf", parse_field("q"))) == "inf"


def test_flags():
    from reciprocity_laws.cli import parse_flag, parse_field
    from reciprocity_laws.constants import ChartEnum
    from reciprocity_laws.exception import UsageException

    Q = parse_field("q")
    flag = parse_flag("curve=y - x^2;point=x - 1;chart=Xy", Q)
    assert flag.chart == ChartEnum.INV_X
    assert flag.curve.parameter == "x"
    assert str(flag.point) == "(x - 1)"

    flag = parse_flag("curve=x - y^2;point=y^2 + 1", Q)
    assert flag.curve.parameter == "y"
    assert str(flag.point) == "(y^2 + 1)"
    assert flag.point.degree == 2
    assert str(parse_flag("curve=y;point=2*x - 2", Q).point) == "(x - 1)"

    for bad in ("curve=y", "point=x", "curve=y;point=x;color=red", "curve=x*y;point=x", "curve=y;point=x*y"):
        with pytest.raises(UsageException):
            parse_flag(bad, Q)
