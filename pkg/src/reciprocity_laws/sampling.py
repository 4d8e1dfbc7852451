"""带种子的随机实例

直线上的有理函数与点, 曲面上由图像形因子组成的函数, 过给定点的曲线.
"""

from random import Random

from .places import Place
from .algebra import Poly, BiPoly, Domain, FactoredForm, RationalFunction
from .surfaces import Curve
from .constants import LINE_VARIABLE, SURFACE_VARIABLES

X, Y = SURFACE_VARIABLES


def random_nonzero(domain: Domain, rng: Random):
    while True:
        c = domain.random(rng)
        if not domain.is_zero(c):
            return c


def random_function(
    domain: Domain, rng: Random, max_degree: int = 3, var: str = LINE_VARIABLE
) -> RationalFunction[Poly]:
    """非零的单变量有理函数, 分子分母次数不超过 max_degree"""
    while True:
        f = RationalFunction.random(domain, rng, max_degree, var)
        if not f.is_zero:
            return f


def random_place(domain: Domain, rng: Random, max_degree: int = 1, var: str = LINE_VARIABLE) -> Place:
    return Place.random(domain, rng, max_degree, var)


def random_place_outside(
    domain: Domain, rng: Random, excluded: set[Place], max_degree: int, var: str = LINE_VARIABLE, attempts: int = 50
) -> Place | None:
    """不在 excluded 中的随机有限点, 多次尝试失败 (小域上点已被取尽) 时返回 None"""
    for _ in range(attempts):
        p = Place.random(domain, rng, max_degree, var)
        if p not in excluded:
            return p
    return None


def random_section(domain: Domain, rng: Random, max_degree: int, var: str = X) -> Poly:
    return Poly.random(domain, rng.randint(0, max_degree), rng, var)


def random_graph_factor(domain: Domain, rng: Random, max_degree: int = 2) -> BiPoly:
    """y - s(x), x - s(y) 或竖直线 x - alpha 之一"""
    kind = rng.randrange(3)
    if kind == 0:
        return Curve.graph(random_section(domain, rng, max_degree)).equation()
    if kind == 1:
        return Curve.x_graph(random_section(domain, rng, max_degree, Y)).equation()
    return Curve.vertical(domain, domain.wrap(domain.random(rng))).equation()


def random_curve_through(domain: Domain, rng: Random, x, y, max_degree: int = 2) -> Curve:
    """过仿射点 (x, y) (原始值) 的随机图像 y = y0 + (x - x0) r(x) 或 x = x0 + (y - y0) r(y)"""
    axis_y = rng.random() < 0.5
    var = X if axis_y else Y
    base, height = (x, y) if axis_y else (y, x)
    r = random_section(domain, rng, max(0, max_degree - 1), var)
    shift = Poly.from_raw(domain, [domain.neg(base), domain.one], var)
    section = shift * r + Poly.const_raw(domain, height, var)
    return Curve.graph(section) if axis_y else Curve.x_graph(section)


def random_surface_function(
    domain: Domain,
    rng: Random,
    n_factors: int = 3,
    max_degree: int = 2,
    through: tuple | None = None,
) -> RationalFunction[BiPoly]:
    """常数乘以图像形因子的幂, 保留因式分解形式; through 给出时约一半的因子过该点"""
    factors: list[tuple[BiPoly, int]] = []
    for _ in range(rng.randint(0, n_factors)):
        if through is not None and rng.random() < 0.5:
            g = random_curve_through(domain, rng, through[0], through[1], max_degree).equation()
        else:
            g = random_graph_factor(domain, rng, max_degree)
        exponent = rng.choice([-2, -1, 1, 1, 2])
        factors.append((g, exponent))
    form = FactoredForm.build(domain, random_nonzero(domain, rng), factors)
    return RationalFunction.from_factored(BiPoly.const(domain, 1), form)


def random_y_free(
    domain: Domain, rng: Random, max_degree: int = 2
) -> tuple[RationalFunction[BiPoly], RationalFunction[Poly]]:
    """不含 y 的曲面函数, 以及它在参数直线 k(x) 上的对应"""
    f = random_function(domain, rng, max_degree, X)
    lifted = RationalFunction.new(BiPoly.from_poly(f.num, X), BiPoly.from_poly(f.den, X))
    return lifted, f


def random_line_function(domain: Domain, rng: Random, max_degree: int = 6) -> RationalFunction[Poly]:
    """直线上的随机函数; 无限域上由有理一次因子与 t^2 + c 相乘, 因子都已知不可约"""
    if domain.is_finite:
        return random_function(domain, rng, max_degree)
    t = RationalFunction.gen(domain)
    f = RationalFunction.const(domain, domain.wrap(random_nonzero(domain, rng)))
    for _ in range(rng.randint(0, max_degree // 2)):
        factor = t - domain.wrap(domain.random(rng)) if rng.random() < 0.6 else t**2 + rng.randint(1, 9)
        f = f * factor ** rng.choice([-2, -1, 1, 2])
    return f
