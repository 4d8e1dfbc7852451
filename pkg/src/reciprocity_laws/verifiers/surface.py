"""P^1 x P^1 上的 Parshin 互反律: 固定曲线对其上所有点求积, 固定点对过它的所有曲线求积"""

from random import Random

from .base import BaseVerifier
from .data import ReciprocityReport
from ..config import Config
from ..places import Place, divisor
from ..algebra import BiPoly, Domain, RationalFunction, factor_bivariate
from ..symbols import SymbolValue
from ..sampling import (
    random_section,
    random_place_outside,
    random_curve_through,
    random_surface_function,
)
from ..surfaces import Curve, Flag2D, CurveValuation, pullback, parshin_symbol
from ..constants import LawEnum, ChartEnum

SurfaceFunctions = tuple[RationalFunction[BiPoly], RationalFunction[BiPoly], RationalFunction[BiPoly]]


class ParshinPointVerifier(BaseVerifier[Place]):
    """曲线 (含其无穷远点) 上所有点处 Parshin 符号之积为 1"""

    law = LawEnum.PARSHIN_POINTS
    arity = 3
    argument = "at a point where every curve digit a2 vanishes the digit matrix has a zero column"

    def __init__(self, domain: Domain, curve: Curve, chart: ChartEnum = ChartEnum.XY, config: Config | None = None):
        super().__init__(domain, config)
        self.curve = curve
        self.chart = chart

    def context(self) -> dict[str, str]:
        return {"curve": str(self.curve), "chart": str(self.chart)}

    def support(self, functions: SurfaceFunctions) -> list[Place]:
        places: set[Place] = {Place.infinity(self.domain, self.curve.parameter)}
        valuation = CurveValuation(self.curve)
        for f in functions:
            _, unit = valuation.split(pullback(f, self.chart))
            places.update(divisor(unit, self.config).support)
        return sorted(places, key=Place.sort_key)

    def local(self, functions: SurfaceFunctions, piece: Place) -> SymbolValue:
        return parshin_symbol(*functions, Flag2D(self.curve, piece, self.chart))

    def random_piece(self, rng: Random, functions: SurfaceFunctions, excluded: set[Place]) -> Place | None:
        degree = self.config.spot_check_degree
        return random_place_outside(self.domain, rng, excluded, degree, self.curve.parameter)

    @classmethod
    def sample(cls, domain: Domain, rng: Random, config: Config | None = None) -> tuple[BaseVerifier, tuple]:
        section = random_section(domain, rng, 2)
        curve = Curve.graph(section) if rng.random() < 0.5 else Curve.x_graph(section)
        along = RationalFunction.from_poly(curve.equation())
        functions = tuple(random_surface_function(domain, rng) * along ** rng.choice([-1, 0, 1]) for _ in range(3))
        return cls(domain, curve, ChartEnum.XY, config), functions


class ParshinCurveVerifier(BaseVerifier[Curve]):
    """过仿射点的所有曲线上 Parshin 符号之积为 1"""

    law = LawEnum.PARSHIN_CURVES
    arity = 3
    argument = "along a curve that no f_i vanishes on or has a pole along, the digit matrix has a zero column"

    def __init__(self, domain: Domain, point: tuple, chart: ChartEnum = ChartEnum.XY, config: Config | None = None):
        super().__init__(domain, config)
        # (x, y) 的原始值
        self.point = point
        self.chart = chart

    def context(self) -> dict[str, str]:
        x, y = (self.domain.format(c) for c in self.point)
        return {"point": f"({x}, {y})", "chart": str(self.chart)}

    def support(self, functions: SurfaceFunctions) -> list[Curve]:
        x, y = self.point
        curves: set[Curve] = set()
        for f in functions:
            for g, _ in pullback(f, self.chart).factored_form().factors:
                for component, _ in factor_bivariate(g, self.config):
                    if self.domain.is_zero(component.eval_raw(x, y)):
                        curves.add(Curve.from_poly(component))
        return sorted(curves, key=Curve.sort_key)

    def local(self, functions: SurfaceFunctions, piece: Curve) -> SymbolValue:
        x, y = self.point
        return parshin_symbol(*functions, Flag2D(piece, piece.point_at(x, y), self.chart))

    def random_piece(self, rng: Random, functions: SurfaceFunctions, excluded: set[Curve]) -> Curve | None:
        x, y = self.point
        for _ in range(50):
            curve = random_curve_through(self.domain, rng, x, y, self.config.spot_check_degree)
            if curve not in excluded:
                return curve
        return None

    @classmethod
    def sample(cls, domain: Domain, rng: Random, config: Config | None = None) -> tuple[BaseVerifier, tuple]:
        point = (domain.random(rng), domain.random(rng))
        functions = tuple(random_surface_function(domain, rng, through=point) for _ in range(3))
        return cls(domain, point, ChartEnum.XY, config), functions


def parshin_point_sum_check(
    f1, f2, f3, curve: Curve, chart: ChartEnum = ChartEnum.XY, config: Config | None = None
) -> ReciprocityReport:
    return ParshinPointVerifier(curve.domain, curve, chart, config).verify(f1, f2, f3)


def parshin_curve_sum_check(
    f1, f2, f3, point: tuple, chart: ChartEnum = ChartEnum.XY, config: Config | None = None
) -> ReciprocityReport:
    return ParshinCurveVerifier(f1.domain, point, chart, config).verify(f1, f2, f3)
