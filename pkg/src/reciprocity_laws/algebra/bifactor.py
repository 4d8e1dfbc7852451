"""二元多项式拆成曲线分量

有理数域交给 sympy 完全分解. sympy 不分解有限域上的多元多项式, 素域上只分出图像分量
y - s(x) 与 x - s(y): s 是 g 作为 y 的多项式在 k[x] 中的根, 模一个次数大于 deg s 的不可约
多项式后变成扩域上的根, 由一元分解求出再代回检验. 剩下的部分作为一个整体保留.
"""

from fractions import Fraction

from loguru import logger
from sympy import QQ, Rational, symbols
from sympy import Poly as SymPoly

from .poly import Poly
from .bipoly import BiPoly
from .fields import Rationals, PrimeField, ExtensionField
from .factor import factorize, first_irreducible
from ..config import Config
from ..constants import SURFACE_VARIABLES

X, Y = SURFACE_VARIABLES
_GENS = symbols("x y")

Components = list[tuple[BiPoly, int]]


def factor_bivariate(g: BiPoly, config: Config | None = None) -> Components:
    """[(首一分量, 重数)], 乘积与 g 相差一个常数"""
    if g.is_zero or g.is_constant:
        return []
    K = g.domain
    if isinstance(K, Rationals):
        components = _sympy_components(g)
    elif isinstance(K, PrimeField):
        components = _graph_components(g, config)
    else:
        logger.debug(f"no bivariate factorization over {K.spec}, keeping {g} whole")
        components = [(g.monic(), 1)]
    logger.debug(f"{g} has {len(components)} component(s) over {K.spec}")
    return sorted(components, key=lambda item: item[0].sort_key())


def _sympy_components(g: BiPoly) -> Components:
    K = g.domain
    terms = {e: Rational(Fraction(c).numerator, Fraction(c).denominator) for e, c in g.terms}
    _, pieces = SymPoly.from_dict(terms, *_GENS, domain=QQ).factor_list()
    components: Components = []
    for h, m in pieces:
        raw = {e: Fraction(int(c.p), int(c.q)) for e, c in h.terms()}
        components.append((BiPoly.from_dict(K, raw).monic(), m))
    return components


def _graph_components(g: BiPoly, config: Config | None) -> Components:
    components: Components = []
    for axis in (Y, X):
        h = g if axis == Y else g.swap()
        for s in _roots_in_polys(h, config):
            component = BiPoly.gen_y(g.domain) - BiPoly.from_poly(s.with_var(X), X)
            coeffs = h.along_graph(s, Y)
            m = next(i for i, c in enumerate(coeffs) if not c.is_zero)
            h = h.exquo(component**m)
            components.append((component if axis == Y else component.swap(), m))
        g = h if axis == Y else h.swap()
    if not g.is_constant:
        components.append((g.monic(), 1))
    return components


def _roots_in_polys(h: BiPoly, config: Config | None) -> list[Poly]:
    """h(x, s(x)) = 0 的多项式 s(x)"""
    rows = h.as_y_poly()
    if len(rows) < 2:
        return []
    K = h.domain
    # (y - s) | h 时 deg s 不超过 h 的总次数
    d = max(i + j for (i, j), _ in h.terms) + 1
    L = ExtensionField(K, first_irreducible(K, d).coeffs)
    lifted = Poly.from_raw(L, [tuple(row.coeffs) + (K.zero,) * (d - len(row.coeffs)) for row in rows], Y)

    roots: list[Poly] = []
    for factor, _ in factorize(lifted, config=config):
        if factor.degree != 1:
            continue
        s = Poly.from_raw(K, L.coordinates(L.neg(factor.coeffs[0])), X)
        coeffs = h.along_graph(s, Y)
        if not coeffs or coeffs[0].is_zero:
            roots.append(s)
    return roots
