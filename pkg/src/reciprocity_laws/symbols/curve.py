"""曲线 (射影直线) 上的一维局部符号"""

from math import factorial

from loguru import logger

from .data import Provenance, SymbolValue
from .milnor import MilnorSymbol, milnor_boundary
from ..places import Place, PlaceValuation, valuation, residue_form
from ..algebra import Poly, FieldElem, FunctionField, RationalFunction, NilpotentExtension, eps2, eps3, norm
from ..exception import SymbolException, ZeroFunctionException


def _check_nonzero(*functions: RationalFunction) -> None:
    if any(f.is_zero for f in functions):
        raise ZeroFunctionException()


def degree_symbol(f: RationalFunction[Poly], p: Place) -> int:
    """[k(p):k] v_p(f)"""
    _check_nonzero(f)
    return p.degree * valuation(f, p)


def degree_from_boundary(f: RationalFunction[Poly], p: Place) -> int:
    """权 1 的边界映射给出 v_p(f), 再乘以 [k(p):k]"""
    _check_nonzero(f)
    return p.degree * milnor_boundary(MilnorSymbol.wedge(f), PlaceValuation(p)).to_integer()


def tame_symbol(f: RationalFunction[Poly], g: RationalFunction[Poly], p: Place) -> SymbolValue:
    """N_{k(p)/k}((-1)^(v(f) v(g)) (f^v(g) / g^v(f))(p))"""
    _check_nonzero(f, g)
    local = PlaceValuation(p)
    a, u_f = local.split(f)
    b, u_g = local.split(g)
    pre = u_f**b / u_g**a
    if (a * b) % 2:
        pre = -pre
    value = norm(pre, p.domain)
    logger.debug(f"({f}, {g})_{p} = {value}")
    return SymbolValue(
        value,
        Provenance(
            "tame",
            str(p),
            (str(f), str(g)),
            "N((-1)^(v(f)v(g)) f^v(g)/g^v(f))(p)",
            (("v(f)", str(a)), ("v(g)", str(b)), ("before norm", str(pre))),
        ),
    )


def tame_from_boundary(f: RationalFunction[Poly], g: RationalFunction[Poly], p: Place) -> FieldElem:
    """对 {f, g} 取边界映射, 在 k(p)^x 中取幂, 再取范数"""
    _check_nonzero(f, g)
    K = p.residue_field
    boundary = milnor_boundary(MilnorSymbol.wedge(f, g), PlaceValuation(p))
    return norm(boundary.exponentiate(K.wrap(K.one)), p.domain)


def _log_times(R: NilpotentExtension, n, w):
    """log(1 + n) * w, 对数截断到与 w 的乘积为零的阶

    平方为零的生成元 (eps1, eps2) 用除幂表示 log, 不会除以特征; eps^3 = 0 时逐项展开.
    """
    K = R.base
    if R.nilpotency == 2:
        # 单项式 tau 满足 tau^2 = 0, 故 n^k / k! 为 tau 的 k 次初等对称多项式 e_k
        terms = [((m, c),) for m, c in n]
        e = [R.one] + [R.zero] * R.max_order
        for tau in terms:
            for k in range(R.max_order, 0, -1):
                e[k] = R.add(e[k], R.mul(e[k - 1], tau))
        log = R.zero
        for k in range(1, R.max_order + 1):
            coefficient = K.from_int((-1) ** (k + 1) * factorial(k - 1))
            log = R.add(log, R.scale(e[k], coefficient))
        return R.mul(log, w)

    result, power = R.zero, R.one
    for k in range(1, R.max_order + 1):
        power = R.mul(power, n)
        term = R.mul(power, w)
        if not term:
            break
        if R.characteristic and k % R.characteristic == 0:
            raise SymbolException(f"log needs division by {k} in characteristic {R.characteristic}")
        result = R.add(result, R.scale(term, K.div(K.from_int((-1) ** (k + 1)), K.from_int(k))))
    return result


def nilpotent_symbol(F: FieldElem, G: FieldElem, p: Place) -> SymbolValue:
    """r_p(F, G) = 1 - Res_p(log F * dG / G), F 与 G 在 k(t)_eps 中且常数项为 1"""
    R = F.domain
    if not isinstance(R, NilpotentExtension) or not isinstance(R.base, FunctionField) or G.domain != R:
        raise SymbolException("nilpotent symbol needs both arguments over k(t) with nilpotents")
    for E in (F, G):
        if not R.base.is_one(R.constant_term(E.raw)):
            raise SymbolException(f"{E} does not have constant term 1")

    k = R.base.base
    n = R.nilpotent_part(F.raw)
    dG = R.map_coefficients(G.raw, lambda h: h.diff(), R)
    w = R.mul(R.inv(G.raw), dG)
    omega = _log_times(R, n, w)

    target = NilpotentExtension(k, R.names, R.nilpotency)
    residues = {m: k.neg(residue_form(h, p).raw) for m, h in omega}
    value = FieldElem(target, target.add(target.one, target._build(residues)))
    logger.debug(f"r_{p}({F}, {G}) = {value}")
    return SymbolValue(
        value,
        Provenance(
            "nilpotent",
            str(p),
            (str(F), str(G)),
            "1 - Res_p(log F dG/G)",
            tuple((R.format_monomial(m), str(h)) for m, h in omega),
        ),
    )


def _check_pairing_shape(value: FieldElem, allowed: set) -> None:
    R: NilpotentExtension = value.domain  # type: ignore[assignment]
    if not R.base.is_one(R.constant_term(value.raw)):
        raise SymbolException(f"pairing {value} does not have constant term 1")
    for m, _ in R.nilpotent_part(value.raw):
        if m not in allowed:
            raise SymbolException(f"pairing {value} has a stray {R.format_monomial(m)} term")


def _one_minus(R: NilpotentExtension, index: int, f: RationalFunction[Poly]) -> FieldElem:
    return FieldElem(R, R.sub(R.one, R.mul(R.generator(index), R.embed(f))))


def residue_pairing(f: RationalFunction[Poly], g: RationalFunction[Poly], p: Place) -> SymbolValue:
    """(1 - eps1 f, 1 - eps2 g)_p = 1 - eps1 eps2 Res_p(f dg)"""
    _check_nonzero(f, g)
    R = eps2(FunctionField(f.domain, (f.num.var,)))
    result = nilpotent_symbol(_one_minus(R, 0, f), _one_minus(R, 1, g), p)
    _check_pairing_shape(result.value, {(1, 1)})  # type: ignore[arg-type]
    return SymbolValue(
        result.value,
        Provenance("residue", str(p), (str(f), str(g)), "1 - eps1*eps2 Res_p(f dg)", result.provenance.details),
    )


def eps3_pairing(f: RationalFunction[Poly], g: RationalFunction[Poly], p: Place) -> SymbolValue:
    """(1 - eps f, 1 - eps g)_p = 1 - eps^2 Res_p(f dg)"""
    _check_nonzero(f, g)
    R = eps3(FunctionField(f.domain, (f.num.var,)))
    result = nilpotent_symbol(_one_minus(R, 0, f), _one_minus(R, 0, g), p)
    _check_pairing_shape(result.value, {(2,)})  # type: ignore[arg-type]
    return SymbolValue(
        result.value,
        Provenance("residue-eps3", str(p), (str(f), str(g)), "1 - eps^2 Res_p(f dg)", result.provenance.details),
    )


def pairing_residue(value: SymbolValue) -> FieldElem:
    """从 1 - c eps^m 中取出 c"""
    E = value.value
    R = E.domain  # type: ignore[union-attr]
    top = (1, 1) if len(R.names) == 2 else (2,)
    return FieldElem(R.base, R.base.neg(R.coefficient(E.raw, top)))  # type: ignore[union-attr]
