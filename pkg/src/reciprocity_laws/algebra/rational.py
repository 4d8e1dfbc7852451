"""约化的有理函数 f = num / den

单变量时分母首一, 双变量时分母按字典序首一; 分子分母互素.
``hint`` 保存用户给出的因式分解形式 (因子, 重数), 乘除时合并, 加减时丢弃.
"""

from random import Random
from typing import Any, Generic, TypeVar
from fractions import Fraction
from dataclasses import field, dataclass

from .poly import Poly, Scalar
from .bipoly import BiPoly
from .fields import Domain, FieldElem
from ..constants import LINE_VARIABLE, SURFACE_VARIABLES
from ..exception import AlgebraException, ZeroFunctionException

P = TypeVar("P", Poly, BiPoly)


@dataclass(frozen=True, slots=True)
class FactoredForm(Generic[P]):
    """unit * prod factor^mult, 每个因子首一且非常数"""

    unit: Any
    factors: tuple[tuple[P, int], ...] = ()

    @classmethod
    def build(cls, domain: Domain, unit, factors: list[tuple[P, int]]) -> "FactoredForm[P]":
        merged: dict[P, int] = {}
        for poly, mult in factors:
            if poly.is_zero:
                raise ZeroFunctionException()
            if mult == 0:
                continue
            if poly.is_constant:
                unit = domain.mul(unit, domain.pow(poly.leading_coeff(), mult))
                continue
            lc = poly.leading_coeff()
            if not domain.is_one(lc):
                unit = domain.mul(unit, domain.pow(lc, mult))
                poly = poly.monic()
            merged[poly] = merged.get(poly, 0) + mult
        items = [(p, m) for p, m in merged.items() if m]
        items.sort(key=lambda item: item[0].sort_key())
        return cls(unit, tuple(items))

    def expand(self, template: P) -> tuple[P, P]:
        num = template.const_like(self.unit)
        den = template.one_like()
        for poly, mult in self.factors:
            if mult > 0:
                num = num * poly**mult
            else:
                den = den * poly ** (-mult)
        return num, den


@dataclass(frozen=True, slots=True, eq=False)
class RationalFunction(Generic[P]):
    num: P
    den: P
    hint: FactoredForm[P] | None = field(default=None)

    @classmethod
    def new(cls, num: P, den: P, hint: FactoredForm[P] | None = None) -> "RationalFunction[P]":
        """约化并规范化"""
        if den.is_zero:
            raise AlgebraException("zero denominator")
        if num.is_zero:
            return cls(num, den.one_like())
        g = num.gcd(den)
        if not g.is_one:
            num, den = num.exquo(g), den.exquo(g)
        lc = den.leading_coeff()
        K = den.domain
        if not K.is_one(lc):
            inv = K.inv(lc)
            num, den = num.mul_ground(inv), den.mul_ground(inv)
        return cls(num, den, hint)

    @classmethod
    def from_poly(cls, poly: P) -> "RationalFunction[P]":
        return cls(poly, poly.one_like())

    @classmethod
    def gen(cls, domain: Domain, var: str = LINE_VARIABLE) -> "RationalFunction":
        if var in SURFACE_VARIABLES:
            bp = BiPoly.gen_x(domain) if var == SURFACE_VARIABLES[0] else BiPoly.gen_y(domain)
            return cls.from_poly(bp)
        return cls.from_poly(Poly.gen(domain, var))

    @classmethod
    def const(cls, domain: Domain, value: Scalar, variables: tuple[str, ...] = (LINE_VARIABLE,)) -> "RationalFunction":
        if len(variables) == 2:
            return cls.from_poly(BiPoly.const(domain, value))
        return cls.from_poly(Poly.const(domain, value, variables[0]))

    @classmethod
    def random(
        cls, domain: Domain, rng: Random, max_degree: int = 3, var: str = LINE_VARIABLE
    ) -> "RationalFunction[Poly]":
        """随机的非零单变量有理函数"""
        num = Poly.random(domain, rng.randint(0, max_degree), rng, var)
        den = Poly.random(domain, rng.randint(0, max_degree), rng, var, monic=True)
        return cls.new(num, den)

    # ---- 结构 ----

    @property
    def domain(self) -> Domain:
        return self.num.domain

    @property
    def variables(self) -> tuple[str, ...]:
        return self.num.variables

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_constant(self) -> bool:
        return self.num.is_constant and self.den.is_constant

    @property
    def is_one(self) -> bool:
        return self.num.is_one and self.den.is_one

    def constant_value(self) -> FieldElem:
        if not self.is_constant:
            raise AlgebraException(f"{self} is not constant")
        return FieldElem(self.domain, self.num.constant_value())

    def const_like(self, value: Scalar) -> "RationalFunction[P]":
        return RationalFunction(self.num.const_like(self.domain.convert(value)), self.den.one_like())

    def factored_form(self) -> FactoredForm[P]:
        """用户给出的或由分子分母直接得到的因式分解形式"""
        if self.num.is_zero:
            raise ZeroFunctionException()
        if self.hint is not None:
            return self.hint
        return FactoredForm.build(self.domain, self.domain.one, [(self.num, 1), (self.den, -1)])

    def with_hint(self, hint: FactoredForm[P] | None) -> "RationalFunction[P]":
        return RationalFunction(self.num, self.den, hint)

    @classmethod
    def from_factored(cls, template: P, form: FactoredForm[P]) -> "RationalFunction[P]":
        num, den = form.expand(template)
        return cls.new(num, den, form)

    def _coerce(self, other) -> "RationalFunction[P] | None":
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, (Poly, BiPoly)):
            return RationalFunction.from_poly(other)
        if isinstance(other, (int, Fraction, FieldElem)) and not isinstance(other, bool):
            return self.const_like(other)
        return None

    # ---- 运算 ----

    def __add__(self, other) -> "RationalFunction[P]":
        if (g := self._coerce(other)) is None:
            return NotImplemented
        if self.den == g.den:
            return RationalFunction.new(self.num + g.num, self.den)
        return RationalFunction.new(self.num * g.den + g.num * self.den, self.den * g.den)

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction[P]":
        hint = None
        if self.hint is not None:
            hint = FactoredForm(self.domain.neg(self.hint.unit), self.hint.factors)
        return RationalFunction(-self.num, self.den, hint)

    def __sub__(self, other) -> "RationalFunction[P]":
        if (g := self._coerce(other)) is None:
            return NotImplemented
        return self + (-g)

    def __rsub__(self, other) -> "RationalFunction[P]":
        return (-self) + other

    def _merge_hint(self, other: "RationalFunction[P]", sign: int) -> FactoredForm[P] | None:
        if self.is_zero or other.is_zero:
            return None
        a, b = self.factored_form(), other.factored_form()
        K = self.domain
        unit = K.mul(a.unit, K.pow(b.unit, sign))
        return FactoredForm.build(K, unit, [*a.factors, *((p, sign * m) for p, m in b.factors)])

    def __mul__(self, other) -> "RationalFunction[P]":
        if (g := self._coerce(other)) is None:
            return NotImplemented
        hint = self._merge_hint(g, 1)
        return RationalFunction.new(self.num * g.num, self.den * g.den, hint)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalFunction[P]":
        if (g := self._coerce(other)) is None:
            return NotImplemented
        if g.is_zero:
            raise AlgebraException("division by the zero function")
        hint = self._merge_hint(g, -1)
        return RationalFunction.new(self.num * g.den, self.den * g.num, hint)

    def __rtruediv__(self, other) -> "RationalFunction[P]":
        if (g := self._coerce(other)) is None:
            return NotImplemented
        return g / self

    def inverse(self) -> "RationalFunction[P]":
        return self.one_like() / self

    def one_like(self) -> "RationalFunction[P]":
        return RationalFunction(self.num.one_like(), self.den.one_like())

    def __pow__(self, n: int) -> "RationalFunction[P]":
        if n < 0:
            return self.inverse() ** (-n)
        hint = None
        if not self.is_zero:
            form = self.factored_form()
            hint = FactoredForm(self.domain.pow(form.unit, n), tuple((p, m * n) for p, m in form.factors if n))
        return RationalFunction(self.num**n, self.den**n, hint)

    def __eq__(self, other) -> bool:
        if isinstance(other, RationalFunction):
            return self.num == other.num and self.den == other.den
        if (g := self._coerce(other)) is not None:
            return self == g
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __bool__(self) -> bool:
        return not self.is_zero

    def diff(self) -> "RationalFunction[Poly]":
        """d/dt, 仅限单变量"""
        if not isinstance(self.num, Poly):
            raise AlgebraException("derivative is only defined for one variable")
        num = self.num.diff() * self.den - self.num * self.den.diff()
        return RationalFunction.new(num, self.den * self.den)

    def change_ring(self, domain: Domain) -> "RationalFunction[P]":
        """系数换到 domain 上; 约化在更大的域上依然成立"""
        hint = None
        if self.hint is not None:
            unit = domain.convert(self.domain.wrap(self.hint.unit))
            hint = FactoredForm.build(domain, unit, [(p.change_ring(domain), m) for p, m in self.hint.factors])
        return RationalFunction(self.num.change_ring(domain), self.den.change_ring(domain), hint)

    def sort_key(self) -> tuple:
        return (self.num.sort_key(), self.den.sort_key())

    def __str__(self) -> str:
        num = str(self.num)
        if self.den.is_one:
            return num
        den = str(self.den)
        if " " in num or (num.startswith("-") and "*" in num):
            num = f"({num})"
        if " " in den or "*" in den or "^" in den or "/" in den:
            den = f"({den})"
        return f"{num}/{den}"

    def __repr__(self) -> str:
        return f"RationalFunction({self}, {self.domain.spec})"


@dataclass(frozen=True, slots=True)
class FunctionField(Domain):
    """有理函数域 k(t) 或 k(x, y), 作为幂零扩张的系数环使用"""

    base: Domain
    variables: tuple[str, ...] = (LINE_VARIABLE,)

    @property
    def zero(self) -> RationalFunction:
        return RationalFunction.const(self.base, 0, self.variables)

    @property
    def one(self) -> RationalFunction:
        return RationalFunction.const(self.base, 1, self.variables)

    @property
    def characteristic(self) -> int:
        return self.base.characteristic

    @property
    def spec(self) -> str:
        return f"{self.base.spec}({','.join(self.variables)})"

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a.is_zero:
            raise ZeroFunctionException()
        return a.inverse()

    def is_zero(self, a) -> bool:
        return a.is_zero

    def is_one(self, a) -> bool:
        return a.is_one

    def from_int(self, n: int):
        return RationalFunction.const(self.base, n, self.variables)

    def from_fraction(self, value: Fraction):
        return RationalFunction.const(self.base, value, self.variables)

    def embed(self, a):
        return RationalFunction.const(self.base, self.base.wrap(a), self.variables)

    def format(self, a) -> str:
        return str(a)

    def sort_key(self, a) -> Any:
        return a.sort_key()

    def random(self, rng: Random):
        return RationalFunction.random(self.base, rng, var=self.variables[0])
