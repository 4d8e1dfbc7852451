"""Milnor K 群中的形式符号与边界映射

边界映射的规则 (单值化参数 z 固定):

1. 每个槽写成 z^a u, 多重线性展开;
2. 全是单位的楔积映到 0;
3. 含多个 z 时用 {z, z} = {-1, z} 把前面的 z 换成 -1;
4. 只剩一个 z 时把它移到末尾 (trailing) 或开头 (leading), 其余槽取剩余类.
"""

from typing import Any
from functools import reduce
from itertools import combinations
from dataclasses import dataclass

from loguru import logger

from ..places import DiscreteValuation
from ..exception import SymbolException

Wedge = tuple[Any, ...]

MAX_WEIGHT = 3


@dataclass(frozen=True, slots=True)
class MilnorSymbol:
    """楔积的整系数形式组合, 权为每个楔积的槽数"""

    weight: int
    terms: tuple[tuple[Wedge, int], ...] = ()

    @classmethod
    def wedge(cls, *slots: Any, coefficient: int = 1) -> "MilnorSymbol":
        if any(not s for s in slots):
            raise SymbolException("Milnor symbols need nonzero entries")
        return cls.from_dict(len(slots), {tuple(slots): coefficient})

    @classmethod
    def integer(cls, n: int) -> "MilnorSymbol":
        return cls.from_dict(0, {(): n})

    @classmethod
    def from_dict(cls, weight: int, terms: dict[Wedge, int]) -> "MilnorSymbol":
        return cls(weight, tuple((w, c) for w, c in terms.items() if c))

    def as_dict(self) -> dict[Wedge, int]:
        return dict(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "MilnorSymbol") -> "MilnorSymbol":
        if other.weight != self.weight:
            raise SymbolException("cannot add symbols of different weights")
        merged = self.as_dict()
        for w, c in other.terms:
            merged[w] = merged.get(w, 0) + c
        return MilnorSymbol.from_dict(self.weight, merged)

    def __neg__(self) -> "MilnorSymbol":
        return MilnorSymbol(self.weight, tuple((w, -c) for w, c in self.terms))

    def __sub__(self, other: "MilnorSymbol") -> "MilnorSymbol":
        return self + (-other)

    def __rmul__(self, n: int) -> "MilnorSymbol":
        return MilnorSymbol.from_dict(self.weight, {w: n * c for w, c in self.terms})

    def to_integer(self) -> int:
        """权 0 的符号即整数"""
        if self.weight != 0:
            raise SymbolException(f"weight {self.weight} symbol is not an integer")
        return sum(c for _, c in self.terms)

    def exponentiate(self, one: Any) -> Any:
        """权 1 的符号 sum n_i {c_i} 映到 prod c_i^n_i"""
        if self.weight != 1:
            raise SymbolException(f"weight {self.weight} symbol cannot be exponentiated")
        return reduce(lambda acc, term: acc * term[0][0] ** term[1], self.terms, one)

    def __str__(self) -> str:
        if self.weight == 0:
            return str(self.to_integer())
        if not self.terms:
            return "0"
        parts = []
        for wedge, c in self.terms:
            body = "{" + ", ".join(str(x) for x in wedge) + "}"
            parts.append(body if c == 1 else f"{c}{body}")
        return " + ".join(parts)


def milnor_boundary(symbol: MilnorSymbol, valuation: DiscreteValuation, *, trailing: bool = True) -> MilnorSymbol:
    """K_m(F) -> K_{m-1}(k(v)) 的边界映射, m <= 3"""
    m = symbol.weight
    if m > MAX_WEIGHT:
        raise SymbolException(f"boundary of weight {m} symbols is not supported")
    if m < 1:
        raise SymbolException("weight 0 symbols have no boundary")

    out: dict[Wedge, int] = {}
    for wedge, coefficient in symbol.terms:
        splits = [valuation.split(f) for f in wedge]
        for size in range(1, m + 1):
            for chosen in combinations(range(m), size):
                # z 出现在 chosen 中的槽, 系数为对应指数之积
                weight = coefficient
                for i in chosen:
                    weight *= splits[i][0]
                if not weight:
                    continue
                slots = [u for _, u in splits]
                for i in chosen[:-1]:
                    slots[i] = valuation.residue_minus_one()
                j = chosen[-1]
                sign = (-1) ** (m - 1 - j) if trailing else (-1) ** j
                rest = tuple(slots[:j] + slots[j + 1 :])
                out[rest] = out.get(rest, 0) + sign * weight

    result = MilnorSymbol.from_dict(m - 1, out)
    logger.debug(f"boundary at {valuation.label} of {symbol} = {result}")
    return result
