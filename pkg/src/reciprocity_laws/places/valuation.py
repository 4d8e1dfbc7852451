from abc import ABC, abstractmethod
from typing import Any, Generic, TypeVar

from .place import Place
from ..algebra import Poly, FieldElem, RationalFunction
from ..exception import PoleException, ZeroFunctionException

E = TypeVar("E")


def _poly_valuation(g: Poly, q: Poly) -> int:
    n = 0
    while True:
        quo, rem = divmod(g, q)
        if not rem.is_zero:
            return n
        g, n = quo, n + 1


def valuation(f: RationalFunction[Poly], p: Place) -> int:
    """v_p(f); 无穷远点处为 deg(den) - deg(num)"""
    if f.is_zero:
        raise ZeroFunctionException()
    if p.poly is None:
        return f.den.degree - f.num.degree
    return _poly_valuation(f.num, p.poly) - _poly_valuation(f.den, p.poly)


def unit_part(f: RationalFunction[Poly], p: Place, v: int | None = None) -> RationalFunction[Poly]:
    """f / z^v_p(f), z 为 p 的固定单值化参数"""
    v = valuation(f, p) if v is None else v
    return f if v == 0 else f / p.uniformizer() ** v


def reduce_at(f: RationalFunction[Poly], p: Place) -> FieldElem:
    """f 在 k(p) 中的像; 零点处为 0, 极点处抛出 PoleException"""
    K = p.residue_field
    if f.is_zero:
        return FieldElem(K, K.zero)
    v = valuation(f, p)
    if v < 0:
        raise PoleException(f, p)
    if v > 0:
        return FieldElem(K, K.zero)
    if p.poly is None:
        return FieldElem(K, K.div(f.num.LC, f.den.LC))
    if p.poly.degree == 1:
        alpha = p.root.raw
        return FieldElem(K, K.div(f.num.eval_raw(alpha), f.den.eval_raw(alpha)))
    d = p.poly.degree

    def residue_class(g: Poly) -> tuple:
        coeffs = (g % p.poly).coeffs  # type: ignore[operator]
        return tuple(coeffs) + (f.domain.zero,) * (d - len(coeffs))

    return FieldElem(K, K.div(residue_class(f.num), residue_class(f.den)))


class DiscreteValuation(ABC, Generic[E]):
    """带固定单值化参数的离散赋值, 供 Milnor 边界映射使用"""

    @abstractmethod
    def split(self, f: E) -> tuple[int, Any]:
        """f = z^a u, 返回 (a, u 在剩余域中的像)"""

    @abstractmethod
    def residue_minus_one(self) -> Any:
        """剩余域中的 -1"""

    @property
    @abstractmethod
    def label(self) -> str: ...


class PlaceValuation(DiscreteValuation[RationalFunction[Poly]]):
    """射影直线上一点处的赋值, 剩余值落在 k(p)"""

    def __init__(self, place: Place):
        self.place = place

    def split(self, f: RationalFunction[Poly]) -> tuple[int, FieldElem]:
        v = valuation(f, self.place)
        return v, reduce_at(unit_part(f, self.place, v), self.place)

    def residue_minus_one(self) -> FieldElem:
        K = self.place.residue_field
        return FieldElem(K, K.neg(K.one))

    @property
    def label(self) -> str:
        return str(self.place)
