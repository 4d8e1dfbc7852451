"""二维旗上的 Parshin 符号: 数字矩阵公式, 以及迭代边界映射给出的对照值"""

from loguru import logger

from .flag import Flag2D, CurveValuation, DigitSequence, pullback, parshin_digits
from ..places import PlaceValuation
from ..symbols import Provenance, SymbolValue, MilnorSymbol, milnor_boundary
from ..algebra import BiPoly, FieldElem, RationalFunction, norm
from ..exception import ZeroFunctionException

Functions = tuple[RationalFunction[BiPoly], RationalFunction[BiPoly], RationalFunction[BiPoly]]


def _minor(a: list[tuple[int, int]], i: int) -> int:
    """去掉第 i 行后的 2x2 行列式 (0 起)"""
    (p, q), (r, s) = [row for k, row in enumerate(a) if k != i]
    return p * s - q * r


def sign_exponent(a: list[tuple[int, int]]) -> int:
    """B = sum_k sum_{i<j} a_ik a_jk A^k_ij, A^k_ij 为去掉 i, j 行与第 k 列后剩下的元素"""
    b = 0
    for k in range(2):
        for i in range(3):
            for j in range(i + 1, 3):
                (rest,) = [row for n, row in enumerate(a) if n not in (i, j)]
                b += a[i][k] * a[j][k] * rest[1 - k]
    return b


def parshin_exponents(a: list[tuple[int, int]]) -> list[int]:
    """(-1)^(i+1) A_i, i 从 1 起"""
    return [(-1) ** i * _minor(a, i) for i in range(3)]


def parshin_symbol(f1, f2, f3, flag: Flag2D) -> SymbolValue:
    """N_{k(x2)/k}((-1)^B prod f_i^((-1)^(i+1) A_i) (x2))"""
    functions: Functions = (f1, f2, f3)
    if any(f.is_zero for f in functions):
        raise ZeroFunctionException()
    digits: list[DigitSequence] = [parshin_digits(f, flag) for f in functions]
    a = [(d.a1, d.a2) for d in digits]
    exponents = parshin_exponents(a)
    b = sign_exponent(a)

    K = flag.point.residue_field
    pre = FieldElem(K, K.one)
    for d, e in zip(digits, exponents):
        pre = pre * d.unit**e
    if b % 2:
        pre = -pre
    value = norm(pre, flag.domain)
    logger.debug(f"parshin{tuple(str(f) for f in functions)} at {flag} = {value}")
    return SymbolValue(
        value,
        Provenance(
            "parshin",
            str(flag),
            tuple(str(f) for f in functions),
            "N((-1)^B prod f_i^((-1)^(i+1) A_i))(x2)",
            (
                ("z1", str(flag.z1)),
                ("z2", str(flag.z2)),
                ("digits", " ".join(str(d) for d in digits)),
                ("A_i", " ".join(str((-1) ** i * e) for i, e in enumerate(exponents))),
                ("B", str(b)),
            ),
        ),
    )


def parshin_oracle(f1, f2, f3, flag: Flag2D) -> SymbolValue:
    """先沿曲线, 再在点处取边界映射 (单值化参数放在首位), 取幂后求范数"""
    functions: Functions = (f1, f2, f3)
    if any(f.is_zero for f in functions):
        raise ZeroFunctionException()
    wedge = MilnorSymbol.wedge(*(pullback(f, flag.chart) for f in functions))
    along_curve = milnor_boundary(wedge, CurveValuation(flag.curve), trailing=False)
    at_point = milnor_boundary(along_curve, PlaceValuation(flag.point), trailing=False)
    K = flag.point.residue_field
    value = norm(at_point.exponentiate(FieldElem(K, K.one)), flag.domain)
    return SymbolValue(
        value,
        Provenance(
            "parshin-oracle",
            str(flag),
            tuple(str(f) for f in functions),
            "N(boundary at point of boundary along curve)",
            (("along curve", str(along_curve)), ("at point", str(at_point))),
        ),
    )
