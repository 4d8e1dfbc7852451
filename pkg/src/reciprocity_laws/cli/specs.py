"""域, 点, 曲线, 旗, 坐标卡的描述串"""

from re import compile

from sympy import isprime

from .expr import parse_expr
from ..places import Place
from ..algebra import Poly, BiPoly, Domain, Rationals, ExtensionField, RationalFunction, NilpotentExtension
from ..algebra import eps2, eps3, galois_field
from ..surfaces import Curve, Flag2D
from ..constants import INFINITY_NAME, LINE_VARIABLE, SURFACE_VARIABLES, ChartEnum
from ..exception import AlgebraException, PlaceException, UsageException, UnsupportedCurveException

_PRIME = compile(r"fp:(\d+)")
_PRIME_POWER = compile(r"fq:(\d+)\^(\d+)")
_NILPOTENT = compile(r"(eps2|eps3)\((.+)\)")


def parse_field(spec: str) -> Domain:
    """q, fp:<p>, fq:<p>^<d>, eps2(<base>), eps3(<base>)"""
    spec = spec.strip()
    if spec == "q":
        return Rationals()
    if matched := _PRIME.fullmatch(spec):
        return _finite_field(int(matched[1]), 1, spec)
    if matched := _PRIME_POWER.fullmatch(spec):
        return _finite_field(int(matched[1]), int(matched[2]), spec)
    if matched := _NILPOTENT.fullmatch(spec):
        base = parse_field(matched[2])
        if isinstance(base, NilpotentExtension):
            raise UsageException(f"nested nilpotent extensions are not supported: {spec}")
        return eps2(base) if matched[1] == "eps2" else eps3(base)
    raise UsageException(f"unknown field descriptor {spec!r}, expected q, fp:<p>, fq:<p>^<d>, eps2(..) or eps3(..)")


def _finite_field(p: int, degree: int, spec: str) -> Domain:
    if not isprime(p):
        raise UsageException(f"{p} is not a prime in {spec!r}")
    if degree < 1:
        raise UsageException(f"extension degree must be positive in {spec!r}")
    return galois_field(p, degree)


def field_modulus(domain: Domain) -> str | None:
    """有限扩域的模多项式, 报告中用于复现"""
    if isinstance(domain, NilpotentExtension):
        return field_modulus(domain.base)
    if isinstance(domain, ExtensionField):
        return domain.format_modulus()
    return None


def base_field(domain: Domain) -> Domain:
    return domain.base if isinstance(domain, NilpotentExtension) else domain


def parse_line_function(src: str, domain: Domain) -> RationalFunction[Poly]:
    return parse_expr(src, base_field(domain), (LINE_VARIABLE,))


def parse_surface_function(src: str, domain: Domain) -> RationalFunction[BiPoly]:
    return parse_expr(src, base_field(domain), SURFACE_VARIABLES)


def _as_poly(f: RationalFunction, what: str):
    if not f.den.is_constant:
        raise UsageException(f"{what} {f} must be a polynomial")
    if f.is_zero:
        raise UsageException(f"{what} must not be zero")
    return f.num.mul_ground(f.domain.inv(f.den.constant_value()))


def parse_place(spec: str, domain: Domain, var: str = LINE_VARIABLE) -> Place:
    """首一化后的不可约多项式, 或 inf"""
    k = base_field(domain)
    spec = spec.strip()
    if spec == INFINITY_NAME:
        return Place.infinity(k, var)
    variables = SURFACE_VARIABLES if var in SURFACE_VARIABLES else (var,)
    poly = _as_poly(parse_expr(spec, k, variables), "place")
    if isinstance(poly, BiPoly):
        try:
            poly = poly.as_poly(var)
        except AlgebraException as e:
            raise UsageException(f"place {spec!r} must be a polynomial in {var} alone") from e
    if poly.degree < 1:
        raise UsageException(f"place {spec!r} must have positive degree")
    try:
        return Place.finite(poly.monic())
    except PlaceException as e:
        raise UsageException(e.message) from e


def parse_curve(spec: str, domain: Domain) -> Curve:
    """y - s(x) 或 x - s(y) 形状的多项式"""
    k = base_field(domain)
    g = _as_poly(parse_expr(spec, k, SURFACE_VARIABLES), "curve")
    try:
        return Curve.from_poly(g)
    except UnsupportedCurveException as e:
        raise UsageException(e.message) from e


def parse_chart(spec: str) -> ChartEnum:
    try:
        return ChartEnum(spec.strip())
    except ValueError:
        charts = ", ".join(c.value for c in ChartEnum)
        raise UsageException(f"unknown chart {spec!r}, expected one of {charts}") from None


def parse_point(spec: str, domain: Domain) -> tuple:
    """仿射点 "a,b" 的两个坐标 (原始值)"""
    k = base_field(domain)
    coordinates = spec.split(",")
    if len(coordinates) != 2:
        raise UsageException(f"point {spec!r} must have the form <x>,<y>")
    raws = []
    for c in coordinates:
        value = parse_expr(c, k, (LINE_VARIABLE,))
        if not value.is_constant:
            raise UsageException(f"point coordinate {c.strip()!r} must be a constant")
        raws.append(value.constant_value().raw)
    return tuple(raws)


def parse_flag(spec: str, domain: Domain) -> Flag2D:
    """curve=<curve>;point=<place in the curve parameter>;chart=<chart>"""
    entries: dict[str, str] = {}
    for item in spec.split(";"):
        key, sep, value = item.partition("=")
        if not sep or key.strip() not in ("curve", "point", "chart"):
            raise UsageException(f"flag entry {item!r} must be curve=.., point=.. or chart=..")
        entries[key.strip()] = value
    if "curve" not in entries or "point" not in entries:
        raise UsageException(f"flag {spec!r} needs both curve= and point=")

    curve = parse_curve(entries["curve"], domain)
    point = parse_place(entries["point"], domain, curve.parameter)
    chart = parse_chart(entries.get("chart", ChartEnum.XY.value))
    return Flag2D(curve, point, chart)
