import pytest


def _parse(src: str):
    from reciprocity_laws.cli.expr import parse_expr
    from reciprocity_laws.algebra import Rationals

    return parse_expr(src, Rationals())


def _at_zero():
    from reciprocity_laws.places import Place, PlaceValuation
    from reciprocity_laws.algebra import Rationals

    return PlaceValuation(Place.rational(Rationals(), 0))


def test_boundary_of_units_vanishes():
    from reciprocity_laws.symbols import MilnorSymbol, milnor_boundary

    symbol = MilnorSymbol.wedge(_parse("1+t"), _parse("2"), _parse("3-t"))
    assert milnor_boundary(symbol, _at_zero()).is_zero


def test_boundary_with_trailing_uniformizer():
    from reciprocity_laws.symbols import MilnorSymbol, milnor_boundary

    u1, u2 = _parse("2+t"), _parse("3")
    boundary = milnor_boundary(MilnorSymbol.wedge(u1, u2, _parse("t")), _at_zero())
    assert boundary.weight == 2
    ((wedge, coefficient),) = boundary.terms
    assert coefficient == 1
    assert [str(x) for x in wedge] == ["2", "3"]


def test_boundary_of_u_z_z():
    from reciprocity_laws.symbols import MilnorSymbol, milnor_boundary

    boundary = milnor_boundary(MilnorSymbol.wedge(_parse("5"), _parse("t"), _parse("t")), _at_zero())
    ((wedge, coefficient),) = boundary.terms
    assert coefficient == 1
    assert [str(x) for x in wedge] == ["5", "-1"]


def test_leading_convention_differs_by_sign():
    from reciprocity_laws.symbols import MilnorSymbol, milnor_boundary

    symbol = MilnorSymbol.wedge(_parse("t"), _parse("2"))
    trailing = milnor_boundary(symbol, _at_zero())
    leading = milnor_boundary(symbol, _at_zero(), trailing=False)
    assert trailing == -leading
    assert str(leading) == "{2}"


def test_weight_one_boundary_is_valuation():
    from reciprocity_laws.symbols import MilnorSymbol, milnor_boundary

    assert milnor_boundary(MilnorSymbol.wedge(_parse("t^3/(t+1)")), _at_zero()).to_integer() == 3


def test_weight_limits():
    from reciprocity_laws.symbols import MilnorSymbol, milnor_boundary
    from reciprocity_laws.exception import SymbolException

    t = _parse("t")
    with pytest.raises(SymbolException):
        milnor_boundary(MilnorSymbol.wedge(t, t, t, t), _at_zero())
    with pytest.raises(SymbolException):
        milnor_boundary(MilnorSymbol.integer(3), _at_zero())
    with pytest.raises(SymbolException):
        MilnorSymbol.wedge(t, _parse("0"))


def test_symbol_arithmetic():
    from reciprocity_laws.symbols import MilnorSymbol

    t = _parse("t")
    a = MilnorSymbol.wedge(t)
    assert (a + a) == 2 * a
    assert (a - a).is_zero
    assert a.exponentiate(_parse("1")) == t
    assert (2 * a).exponentiate(_parse("1")) == t**2
