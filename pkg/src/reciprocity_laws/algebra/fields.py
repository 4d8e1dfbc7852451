"""系数域描述符与域元素

描述符的接口与 sympy 的 domain 相同: 原始值 (raw) 由描述符解释, ``FieldElem``
只是 (描述符, 原始值) 的不可变封装, 负责运算符重载和规范字符串.

原始值的形状:

- ``Rationals``: ``Fraction``
- ``PrimeField``: ``int``, 取值 ``0..p-1``
- ``ExtensionField``: 长度为 ``[k':k]`` 的基域原始值元组, 常数项在前
- ``NilpotentExtension``: ``((指数元组, 基域原始值), ...)``, 按单项式排序且无零系数
"""

import itertools
from abc import ABC, abstractmethod
from random import Random
from typing import Any, ClassVar
from fractions import Fraction
from dataclasses import field, dataclass
from collections.abc import Iterator

from sympy import isprime

from . import dense
from ..constants import EPS_TRUNCATED, EPS_SQUARE_ZERO, EXTENSION_GENERATOR
from ..exception import AlgebraException, NonUnitException, FieldMismatchException


def join_terms(terms: list[tuple[str, str]]) -> str:
    """把 (系数串, 单项式串) 拼成可被表达式解析器读回的和式"""
    parts: list[tuple[str, str]] = []
    for coef, mono in terms:
        compound = " " in coef
        if mono:
            if coef == "1":
                parts.append(("+", mono))
            elif coef == "-1":
                parts.append(("-", mono))
            elif compound:
                parts.append(("+", f"({coef})*{mono}"))
            elif coef.startswith("-"):
                parts.append(("-", f"{coef[1:]}*{mono}"))
            else:
                parts.append(("+", f"{coef}*{mono}"))
        elif compound:
            parts.append(("+", f"({coef})" if parts else coef))
        elif coef.startswith("-"):
            parts.append(("-", coef[1:]))
        else:
            parts.append(("+", coef))

    if not parts:
        return "0"
    sign, body = parts[0]
    text = f"-{body}" if sign == "-" else body
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


def power_name(name: str, exp: int) -> str:
    return name if exp == 1 else f"{name}^{exp}"


class Domain(ABC):
    """系数域 (或有限局部环) 描述符"""

    __slots__ = ()

    is_field: ClassVar[bool] = True

    @property
    @abstractmethod
    def zero(self) -> Any: ...

    @property
    @abstractmethod
    def one(self) -> Any: ...

    @property
    @abstractmethod
    def characteristic(self) -> int: ...

    @property
    def order(self) -> int | None:
        """有限域的元素个数, 无限域返回 None"""
        return None

    @property
    def is_finite(self) -> bool:
        return self.order is not None

    @property
    @abstractmethod
    def spec(self) -> str:
        """CLI 中使用的描述串"""

    @abstractmethod
    def add(self, a, b): ...

    @abstractmethod
    def neg(self, a): ...

    @abstractmethod
    def mul(self, a, b): ...

    @abstractmethod
    def inv(self, a): ...

    @abstractmethod
    def from_int(self, n: int): ...

    @abstractmethod
    def format(self, a) -> str: ...

    @abstractmethod
    def sort_key(self, a) -> Any: ...

    @abstractmethod
    def random(self, rng: Random): ...

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def is_zero(self, a) -> bool:
        return a == self.zero

    def is_one(self, a) -> bool:
        return a == self.one

    def is_unit(self, a) -> bool:
        return not self.is_zero(a)

    def normalize(self, a):
        return a

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, n: int):
        if n < 0:
            return self.pow(self.inv(a), -n)
        result = self.one
        while n:
            if n & 1:
                result = self.mul(result, a)
            n >>= 1
            if n:
                a = self.mul(a, a)
        return result

    def from_fraction(self, value: Fraction):
        den = self.from_int(value.denominator)
        if self.is_zero(den):
            raise NonUnitException(f"{value.denominator} (mod {self.characteristic})")
        return self.div(self.from_int(value.numerator), den)

    def convert(self, value: "int | Fraction | FieldElem"):
        """把整数, 分数或子域上的元素转为本域的原始值"""
        if isinstance(value, FieldElem):
            if value.domain == self:
                return value.raw
            base = getattr(self, "base", None)
            if base is not None:
                return self.embed(base.convert(value))
            raise FieldMismatchException(value.domain.spec, self.spec)
        if isinstance(value, bool):
            raise TypeError("bool is not a field element")
        if isinstance(value, int):
            return self.from_int(value)
        if isinstance(value, Fraction):
            return self.from_fraction(value)
        raise TypeError(f"cannot convert {type(value).__name__} into {self.spec}")

    def embed(self, a):
        raise FieldMismatchException(a, self.spec)

    def elements(self) -> Iterator[Any]:
        raise AlgebraException(f"{self.spec} is not finite")

    def pth_root(self, a):
        """有限域上的 p 次根 (Frobenius 的逆)"""
        order = self.order
        if order is None:
            raise AlgebraException(f"{self.spec} is not finite")
        return self.pow(a, order // self.characteristic)

    def __call__(self, value: "int | Fraction | FieldElem") -> "FieldElem":
        return FieldElem(self, self.convert(value))

    def wrap(self, raw) -> "FieldElem":
        return FieldElem(self, raw)

    def __str__(self) -> str:
        return self.spec


@dataclass(frozen=True, slots=True)
class Rationals(Domain):
    """有理数域 Q"""

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    @property
    def characteristic(self) -> int:
        return 0

    @property
    def spec(self) -> str:
        return "q"

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if not a:
            raise NonUnitException(a)
        return 1 / Fraction(a)

    def from_int(self, n: int):
        return Fraction(n)

    def from_fraction(self, value: Fraction):
        return Fraction(value)

    def format(self, a) -> str:
        return str(a)

    def sort_key(self, a) -> Any:
        return a

    def random(self, rng: Random):
        return Fraction(rng.randint(-9, 9), rng.randint(1, 4))


@dataclass(frozen=True, slots=True)
class PrimeField(Domain):
    """素域 F_p"""

    p: int

    def __post_init__(self):
        if self.p < 2 or not isprime(self.p):
            raise AlgebraException(f"{self.p} is not a prime")

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def order(self) -> int:
        return self.p

    @property
    def spec(self) -> str:
        return f"fp:{self.p}"

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise NonUnitException(a)
        return pow(a, -1, self.p)

    def pow(self, a, n: int):
        if n < 0:
            return pow(self.inv(a), -n, self.p)
        return pow(a, n, self.p)

    def from_int(self, n: int):
        return n % self.p

    def format(self, a) -> str:
        return str(a)

    def sort_key(self, a) -> Any:
        return a

    def random(self, rng: Random):
        return rng.randrange(self.p)

    def elements(self) -> Iterator[int]:
        return iter(range(self.p))


@dataclass(frozen=True, slots=True)
class ExtensionField(Domain):
    """单扩张 k' = k[a]/(m), m 首一不可约, 系数常数项在前"""

    base: Domain
    modulus: tuple
    name: str = EXTENSION_GENERATOR

    def __post_init__(self):
        if not self.base.is_field:
            raise AlgebraException(f"{self.base.spec} is not a field")
        if len(self.modulus) < 2 or not self.base.is_one(self.modulus[-1]):
            raise AlgebraException("extension modulus must be monic of positive degree")

    @property
    def degree(self) -> int:
        return len(self.modulus) - 1

    @property
    def zero(self) -> tuple:
        return (self.base.zero,) * self.degree

    @property
    def one(self) -> tuple:
        return self.embed(self.base.one)

    @property
    def generator(self) -> tuple:
        return self._pad(dense.dup_rem([self.base.zero, self.base.one], list(self.modulus), self.base))

    @property
    def characteristic(self) -> int:
        return self.base.characteristic

    @property
    def order(self) -> int | None:
        q = self.base.order
        return None if q is None else q**self.degree

    @property
    def spec(self) -> str:
        if isinstance(self.base, PrimeField):
            return f"fq:{self.base.p}^{self.degree}"
        return f"{self.base.spec}[{self.name}]/({self.format_modulus()})"

    def format_modulus(self) -> str:
        terms = [
            (self.base.format(c), power_name(self.name, i) if i else "")
            for i, c in reversed(list(enumerate(self.modulus)))
            if not self.base.is_zero(c)
        ]
        return join_terms(terms)

    def _pad(self, f: list) -> tuple:
        return tuple(f) + (self.base.zero,) * (self.degree - len(f))

    def embed(self, a) -> tuple:
        return (a,) + (self.base.zero,) * (self.degree - 1)

    def add(self, a, b):
        return tuple(self.base.add(x, y) for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple(self.base.sub(x, y) for x, y in zip(a, b))

    def neg(self, a):
        return tuple(self.base.neg(x) for x in a)

    def mul(self, a, b):
        K = self.base
        prod = dense.dup_mul(dense.dup_strip(list(a), K), dense.dup_strip(list(b), K), K)
        return self._pad(dense.dup_rem(prod, list(self.modulus), K))

    def inv(self, a):
        K = self.base
        s, _, h = dense.dup_gcdex(dense.dup_strip(list(a), K), list(self.modulus), K)
        if len(h) != 1:
            raise NonUnitException(self.format(a))
        return self._pad(s)

    def is_zero(self, a) -> bool:
        return all(self.base.is_zero(c) for c in a)

    def from_int(self, n: int):
        return self.embed(self.base.from_int(n))

    def from_fraction(self, value: Fraction):
        return self.embed(self.base.from_fraction(value))

    def coordinates(self, a) -> list:
        """在基 1, a, ..., a^(d-1) 下的坐标"""
        return list(a)

    def format(self, a) -> str:
        terms = [
            (self.base.format(c), power_name(self.name, i) if i else "")
            for i, c in reversed(list(enumerate(a)))
            if not self.base.is_zero(c)
        ]
        return join_terms(terms)

    def sort_key(self, a) -> Any:
        return tuple(self.base.sort_key(c) for c in a)

    def random(self, rng: Random):
        return tuple(self.base.random(rng) for _ in range(self.degree))

    def elements(self) -> Iterator[tuple]:
        return itertools.product(list(self.base.elements()), repeat=self.degree)


Monomial = tuple[int, ...]


@dataclass(frozen=True, slots=True)
class NilpotentExtension(Domain):
    """截断幂零扩张 base[eps_1..eps_m]/(eps_i^N)

    ``names`` 为两个时是 k[eps1, eps2]/(eps1^2, eps2^2), 为一个且 N = 3 时是 k[eps]/(eps^3).
    """

    base: Domain
    names: tuple[str, ...]
    nilpotency: int = 2

    is_field: ClassVar[bool] = False

    def __post_init__(self):
        if self.nilpotency < 2 or not self.names:
            raise AlgebraException("nilpotent extension needs at least one generator with eps^N = 0, N >= 2")

    @property
    def zero(self) -> tuple:
        return ()

    @property
    def one(self) -> tuple:
        return self.embed(self.base.one)

    @property
    def characteristic(self) -> int:
        return self.base.characteristic

    @property
    def spec(self) -> str:
        if len(self.names) == 2 and self.nilpotency == 2:
            return f"eps2({self.base.spec})"
        if len(self.names) == 1 and self.nilpotency == 3:
            return f"eps3({self.base.spec})"
        return f"{self.base.spec}[{','.join(self.names)}]/^{self.nilpotency}"

    @property
    def constant_monomial(self) -> Monomial:
        return (0,) * len(self.names)

    @property
    def max_order(self) -> int:
        """幂零理想的幂零指数减一: n^(max_order + 1) = 0"""
        return len(self.names) * (self.nilpotency - 1)

    def monomials(self) -> list[Monomial]:
        monos = itertools.product(range(self.nilpotency), repeat=len(self.names))
        return sorted(monos, key=lambda m: (sum(m), m))

    def generator(self, index: int) -> tuple:
        mono = tuple(int(i == index) for i in range(len(self.names)))
        return ((mono, self.base.one),)

    def _build(self, coeffs: dict[Monomial, Any]) -> tuple:
        return tuple(
            (m, c)
            for m, c in sorted(coeffs.items(), key=lambda item: (sum(item[0]), item[0]))
            if not self.base.is_zero(c)
        )

    def embed(self, a) -> tuple:
        return self._build({self.constant_monomial: a})

    def coefficient(self, a, mono: Monomial):
        for m, c in a:
            if m == mono:
                return c
        return self.base.zero

    def constant_term(self, a):
        return self.coefficient(a, self.constant_monomial)

    def add(self, a, b):
        coeffs = dict(a)
        for m, c in b:
            coeffs[m] = self.base.add(coeffs[m], c) if m in coeffs else c
        return self._build(coeffs)

    def neg(self, a):
        return tuple((m, self.base.neg(c)) for m, c in a)

    def mul(self, a, b):
        coeffs: dict[Monomial, Any] = {}
        for ma, ca in a:
            for mb, cb in b:
                m = tuple(x + y for x, y in zip(ma, mb))
                if any(e >= self.nilpotency for e in m):
                    continue
                prod = self.base.mul(ca, cb)
                coeffs[m] = self.base.add(coeffs[m], prod) if m in coeffs else prod
        return self._build(coeffs)

    def scale(self, a, c):
        return self._build({m: self.base.mul(x, c) for m, x in a})

    def is_unit(self, a) -> bool:
        return self.base.is_unit(self.constant_term(a))

    def inv(self, a):
        c = self.constant_term(a)
        if not self.base.is_unit(c):
            raise NonUnitException(self.format(a))
        c_inv = self.base.inv(c)
        # a = c (1 + n), a^-1 = c^-1 sum (-n)^k
        minus_n = self.neg(self.sub(self.scale(a, c_inv), self.one))
        result, term = self.one, self.one
        for _ in range(self.max_order):
            term = self.mul(term, minus_n)
            if not term:
                break
            result = self.add(result, term)
        return self.scale(result, c_inv)

    def nilpotent_part(self, a):
        return tuple((m, c) for m, c in a if m != self.constant_monomial)

    def from_int(self, n: int):
        return self.embed(self.base.from_int(n))

    def from_fraction(self, value: Fraction):
        return self.embed(self.base.from_fraction(value))

    def map_coefficients(self, a, fn, target: "NilpotentExtension") -> tuple:
        """对每个系数施加 fn, 结果落在 target 中"""
        return target._build({m: fn(c) for m, c in a})

    def format_monomial(self, mono: Monomial) -> str:
        return "*".join(power_name(n, e) for n, e in zip(self.names, mono) if e)

    def format(self, a) -> str:
        return join_terms([(self.base.format(c), self.format_monomial(m)) for m, c in a])

    def sort_key(self, a) -> Any:
        return tuple((m, self.base.sort_key(c)) for m, c in a)

    def random(self, rng: Random):
        return self._build({m: self.base.random(rng) for m in self.monomials()})


def is_over(big: Domain, small: Domain) -> bool:
    """big 是否由 small 经过若干次扩张得到"""
    while big != small:
        big = getattr(big, "base", None)  # type: ignore[assignment]
        if big is None:
            return False
    return True


@dataclass(frozen=True, slots=True, eq=False)
class FieldElem:
    """某个描述符上的元素"""

    domain: Domain
    raw: Any = field(default=None)

    def __post_init__(self):
        if self.raw is None:
            object.__setattr__(self, "raw", self.domain.zero)

    def _pair(self, other) -> "tuple[FieldElem, FieldElem] | None":
        """把两个操作数放到同一个描述符上"""
        if isinstance(other, FieldElem):
            if other.domain == self.domain:
                return self, other
            if is_over(self.domain, other.domain):
                return self, self.domain(other)
            if is_over(other.domain, self.domain):
                return other.domain(self), other
            raise FieldMismatchException(self.domain.spec, other.domain.spec)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self, self.domain(other)
        return None

    def __add__(self, other):
        if (pair := self._pair(other)) is None:
            return NotImplemented
        a, b = pair
        return FieldElem(a.domain, a.domain.add(a.raw, b.raw))

    __radd__ = __add__

    def __sub__(self, other):
        if (pair := self._pair(other)) is None:
            return NotImplemented
        a, b = pair
        return FieldElem(a.domain, a.domain.sub(a.raw, b.raw))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if (pair := self._pair(other)) is None:
            return NotImplemented
        a, b = pair
        return FieldElem(a.domain, a.domain.mul(a.raw, b.raw))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if (pair := self._pair(other)) is None:
            return NotImplemented
        a, b = pair
        return FieldElem(a.domain, a.domain.div(a.raw, b.raw))

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __neg__(self) -> "FieldElem":
        return FieldElem(self.domain, self.domain.neg(self.raw))

    def __pow__(self, n: int) -> "FieldElem":
        return FieldElem(self.domain, self.domain.pow(self.raw, n))

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElem):
            if other.domain == self.domain:
                return self.raw == other.raw
            return False
        if isinstance(other, (int, Fraction)):
            try:
                return self.raw == self.domain.convert(other)
            except NonUnitException:
                return False
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.domain, self.raw))

    def __bool__(self) -> bool:
        return not self.domain.is_zero(self.raw)

    def __str__(self) -> str:
        return self.domain.format(self.raw)

    def __repr__(self) -> str:
        return f"FieldElem({self.domain.spec}, {self})"

    def inverse(self) -> "FieldElem":
        return FieldElem(self.domain, self.domain.inv(self.raw))

    @property
    def is_zero(self) -> bool:
        return self.domain.is_zero(self.raw)

    @property
    def is_one(self) -> bool:
        return self.domain.is_one(self.raw)

    @property
    def is_unit(self) -> bool:
        return self.domain.is_unit(self.raw)

    def sort_key(self) -> Any:
        return self.domain.sort_key(self.raw)


def nil_inverse(e: FieldElem) -> FieldElem:
    """幂零扩张中的逆元, 常数项不可逆时抛出 NonUnitException"""
    if not isinstance(e.domain, NilpotentExtension):
        raise FieldMismatchException(e.domain.spec, "nilpotent extension")
    return e.inverse()


def eps2(base: Domain) -> NilpotentExtension:
    """k[eps1, eps2]/(eps1^2, eps2^2)"""
    return NilpotentExtension(base, EPS_SQUARE_ZERO, 2)


def eps3(base: Domain) -> NilpotentExtension:
    """k[eps]/(eps^3)"""
    return NilpotentExtension(base, (EPS_TRUNCATED,), 3)
