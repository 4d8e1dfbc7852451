from loguru import logger

from .place import Place
from .series import expand_at
from .valuation import valuation
from ..algebra import Poly, FieldElem, RationalFunction, trace
from ..exception import ZeroFunctionException


def residue_fdg(f: RationalFunction[Poly], g: RationalFunction[Poly], p: Place) -> FieldElem:
    """Res_p(f dg)

    在 k(p) 上以 t - [t] (无穷远点处 1/t) 为单值化参数展开 f 与 g, 取 f dg/dz 的 z^-1 系数,
    再用 Tr_{k(p)/k} 推回 k. 展开项数 |v(f)| + |v(g)| + 2 足以精确得到 z^-1 系数.
    """
    if f.is_zero or g.is_zero:
        raise ZeroFunctionException()
    n_terms = abs(valuation(f, p)) + abs(valuation(g, p)) + 2
    if p.is_infinity:
        F, G = expand_at(f, None, n_terms), expand_at(g, None, n_terms)
    else:
        K = p.residue_field
        alpha = p.root
        F, G = expand_at(f.change_ring(K), alpha, n_terms), expand_at(g.change_ring(K), alpha, n_terms)
    local = (F * G.derivative()).residue()
    value = trace(local, p.domain)
    logger.debug(f"Res_{p}(({f}) d({g})) = {value}")
    return value


def residue_form(h: RationalFunction[Poly], p: Place) -> FieldElem:
    """Res_p(h dt)"""
    return residue_fdg(h, RationalFunction.gen(h.domain, h.num.var), p)
