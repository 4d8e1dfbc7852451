from dataclasses import dataclass

from loguru import logger

from .place import Place
from .valuation import valuation
from ..config import Config
from ..algebra import Poly, RationalFunction, factor_rational
from ..exception import ZeroFunctionException


@dataclass(frozen=True, slots=True)
class Divisor:
    """有限形式和 sum m_p (p), 只保存非零重数, 按点的规范顺序排列"""

    entries: tuple[tuple[Place, int], ...] = ()

    @classmethod
    def from_dict(cls, mults: dict[Place, int]) -> "Divisor":
        return cls(tuple(sorted(((p, m) for p, m in mults.items() if m), key=lambda item: item[0].sort_key())))

    def as_dict(self) -> dict[Place, int]:
        return dict(self.entries)

    @property
    def degree(self) -> int:
        """sum [k(p):k] m_p"""
        return sum(p.degree * m for p, m in self.entries)

    @property
    def support(self) -> list[Place]:
        return [p for p, _ in self.entries]

    def __getitem__(self, place: Place) -> int:
        return self.as_dict().get(place, 0)

    def __add__(self, other: "Divisor") -> "Divisor":
        mults = self.as_dict()
        for p, m in other.entries:
            mults[p] = mults.get(p, 0) + m
        return Divisor.from_dict(mults)

    def __neg__(self) -> "Divisor":
        return Divisor(tuple((p, -m) for p, m in self.entries))

    def __sub__(self, other: "Divisor") -> "Divisor":
        return self + (-other)

    def __bool__(self) -> bool:
        return bool(self.entries)

    def __str__(self) -> str:
        if not self.entries:
            return "0"
        text = ""
        for i, (p, m) in enumerate(self.entries):
            name = str(p)
            body = name if abs(m) == 1 else f"{abs(m)}*{name}"
            if i == 0:
                text = f"-{body}" if m < 0 else body
            else:
                text += f" {'-' if m < 0 else '+'} {body}"
        return text


def divisor(f: RationalFunction[Poly], config: Config | None = None) -> Divisor:
    """div(f), 含无穷远点"""
    if f.is_zero:
        raise ZeroFunctionException()
    mults: dict[Place, int] = {}
    for g, m in factor_rational(f.num, f.den, f.hint, config):
        mults[Place(f.domain, g, g.var)] = m
    inf = Place.infinity(f.domain, f.num.var)
    mults[inf] = valuation(f, inf)
    result = Divisor.from_dict(mults)
    logger.debug(f"div({f}) = {result}")
    return result
