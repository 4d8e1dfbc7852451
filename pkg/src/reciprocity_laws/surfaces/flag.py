"""P^1 x P^1 上的曲线, 旗与数字序列

曲线只取图像 V(y - s(x)) 与 V(x - s(y)), 竖直线 V(x - alpha) 是后者的常数情形.
曲线的函数域因此同构于其参数直线 k(x) 或 k(y), 一维的赋值与剩余全部复用.
"""

from dataclasses import dataclass

from ..places import Place, PlaceValuation, DiscreteValuation
from ..algebra import Poly, BiPoly, Domain, FieldElem, FactoredForm, RationalFunction
from ..constants import SURFACE_VARIABLES, ChartEnum
from ..exception import UnsupportedCurveException, ZeroFunctionException

X, Y = SURFACE_VARIABLES


@dataclass(frozen=True, slots=True)
class Curve:
    """V(axis - s(parameter))"""

    section: Poly
    axis: str = Y

    @classmethod
    def graph(cls, section: Poly) -> "Curve":
        """y = s(x)"""
        return cls(section.with_var(X), Y)

    @classmethod
    def x_graph(cls, section: Poly) -> "Curve":
        """x = s(y)"""
        return cls(section.with_var(Y), X)

    @classmethod
    def vertical(cls, domain: Domain, alpha) -> "Curve":
        """x = alpha"""
        return cls.x_graph(Poly.const(domain, alpha, Y))

    @classmethod
    def from_poly(cls, g: BiPoly) -> "Curve":
        """识别关于 y (优先) 或 x 为一次且一次项系数为常数的多项式"""
        for axis, h in ((Y, g), (X, g.swap())):
            rows = h.as_y_poly()
            if len(rows) == 2 and rows[1].is_constant:
                K = g.domain
                section = rows[0].mul_ground(K.neg(K.inv(rows[1].LC)))
                return cls.graph(section) if axis == Y else cls.x_graph(section)
        raise UnsupportedCurveException(f"V({g}) is neither a graph over x nor over y")

    @property
    def domain(self) -> Domain:
        return self.section.domain

    @property
    def parameter(self) -> str:
        """曲线函数域 k(parameter) 的变量"""
        return X if self.axis == Y else Y

    def equation(self) -> BiPoly:
        s = BiPoly.from_poly(self.section, self.parameter)
        gen = BiPoly.gen_y(self.domain) if self.axis == Y else BiPoly.gen_x(self.domain)
        return gen - s

    def uniformizer(self) -> RationalFunction[BiPoly]:
        return RationalFunction.from_poly(self.equation())

    def contains(self, x, y) -> bool:
        """仿射点 (x, y) (原始值) 是否在曲线上"""
        return self.domain.is_zero(self.equation().eval_raw(x, y))

    def point_at(self, x, y) -> Place:
        """(x, y) 在参数直线上对应的一次点"""
        return Place.rational(self.domain, self.domain.wrap(x if self.axis == Y else y), self.parameter)

    def sort_key(self) -> tuple:
        return (self.axis, self.section.degree, self.section.sort_key())

    def __str__(self) -> str:
        return str(self.equation())


@dataclass(frozen=True, slots=True)
class Flag2D:
    """坐标卡 chart 中的旗 point in curve; point 是曲线参数直线上的点 (可以是无穷远点)"""

    curve: Curve
    point: Place
    chart: ChartEnum = ChartEnum.XY

    def __post_init__(self):
        if self.point.var != self.curve.parameter:
            raise UnsupportedCurveException(f"point {self.point} is not on the parameter line {self.curve.parameter}")
        if self.point.domain != self.curve.domain:
            raise UnsupportedCurveException("curve and point live over different fields")

    @property
    def domain(self) -> Domain:
        return self.curve.domain

    @property
    def z1(self) -> RationalFunction[BiPoly]:
        return self.curve.uniformizer()

    @property
    def z2(self) -> RationalFunction[Poly]:
        return self.point.uniformizer()

    def sort_key(self) -> tuple:
        return (self.chart.value, self.curve.sort_key(), self.point.sort_key())

    def __str__(self) -> str:
        return f"curve={self.curve};point={self.point};chart={self.chart}"


def _invert(f: RationalFunction[BiPoly], var: str) -> RationalFunction[BiPoly]:
    """f(1/var), 因式分解形式逐因子变换"""
    form = f.factored_form()
    gen = BiPoly.gen_x(f.domain) if var == X else BiPoly.gen_y(f.domain)
    factors: list[tuple[BiPoly, int]] = []
    for g, m in form.factors:
        inverted, n = g.invert(var)
        factors += [(inverted, m), (gen, -n * m)]
    return RationalFunction.from_factored(f.num, FactoredForm.build(f.domain, form.unit, factors))


def pullback(f: RationalFunction[BiPoly], chart: ChartEnum) -> RationalFunction[BiPoly]:
    """把整体坐标下的 f 写成坐标卡 chart 的局部坐标"""
    if f.is_zero:
        raise ZeroFunctionException()
    if chart.inverts_x:
        f = _invert(f, X)
    if chart.inverts_y:
        f = _invert(f, Y)
    return f


class CurveValuation(DiscreteValuation[RationalFunction[BiPoly]]):
    """沿曲线的赋值, 单值化参数 z1 = axis - s, 剩余域为 k(parameter)"""

    def __init__(self, curve: Curve):
        self.curve = curve

    def _order(self, g: BiPoly) -> tuple[int, Poly]:
        coeffs = g.along_graph(self.curve.section, self.curve.axis)
        order = next(i for i, c in enumerate(coeffs) if not c.is_zero)
        return order, coeffs[order]

    def split(self, f: RationalFunction[BiPoly]) -> tuple[int, RationalFunction[Poly]]:
        """逐因子限制到曲线上, 剩余部分保留因式分解形式"""
        if f.is_zero:
            raise ZeroFunctionException()
        form = f.factored_form()
        order = 0
        restricted: list[tuple[Poly, int]] = []
        for g, m in form.factors:
            a, top = self._order(g)
            order += a * m
            restricted.append((top, m))
        K = self.curve.domain
        template = Poly.const(K, 1, self.curve.parameter)
        return order, RationalFunction.from_factored(template, FactoredForm.build(K, form.unit, restricted))

    def residue_minus_one(self) -> RationalFunction[Poly]:
        return RationalFunction.const(self.curve.domain, -1, (self.curve.parameter,))

    @property
    def label(self) -> str:
        return f"V({self.curve})"


@dataclass(frozen=True, slots=True)
class DigitSequence:
    """f = z1^a1 u1, u1 在曲线上的像 = z2^a2 u2, unit 为 u2 在点处的值"""

    a1: int
    a2: int
    unit: FieldElem
    curve_unit: RationalFunction[Poly]

    def __str__(self) -> str:
        return f"({self.a1}, {self.a2}, {self.unit})"


def parshin_digits(f: RationalFunction[BiPoly], flag: Flag2D) -> DigitSequence:
    """f 取整体坐标, 先拉回到旗所在的坐标卡"""
    g = pullback(f, flag.chart)
    a1, u1 = CurveValuation(flag.curve).split(g)
    a2, unit = PlaceValuation(flag.point).split(u1)
    return DigitSequence(a1, a2, unit, u1)
