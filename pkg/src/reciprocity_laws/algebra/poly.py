from random import Random
from typing import Any
from fractions import Fraction
from dataclasses import dataclass
from collections.abc import Iterable

from . import dense
from .fields import Domain, FieldElem, join_terms, power_name
from ..constants import LINE_VARIABLE
from ..exception import AlgebraException

Scalar = int | Fraction | FieldElem


@dataclass(frozen=True, slots=True)
class Poly:
    """单变量多项式, 系数为原始值, 常数项在前且已去掉高次零系数"""

    domain: Domain
    coeffs: tuple = ()
    var: str = LINE_VARIABLE

    @classmethod
    def from_raw(cls, domain: Domain, coeffs: Iterable[Any], var: str = LINE_VARIABLE) -> "Poly":
        return cls(domain, tuple(dense.dup_strip(list(coeffs), domain)), var)

    @classmethod
    def from_values(cls, domain: Domain, values: Iterable[Scalar], var: str = LINE_VARIABLE) -> "Poly":
        """由常数项在前的系数构造, 系数可以是整数, 分数或域元素"""
        return cls.from_raw(domain, [domain.convert(v) for v in values], var)

    @classmethod
    def gen(cls, domain: Domain, var: str = LINE_VARIABLE) -> "Poly":
        return cls(domain, (domain.zero, domain.one), var)

    @classmethod
    def const(cls, domain: Domain, value: Scalar, var: str = LINE_VARIABLE) -> "Poly":
        return cls.from_raw(domain, [domain.convert(value)], var)

    @classmethod
    def const_raw(cls, domain: Domain, raw, var: str = LINE_VARIABLE) -> "Poly":
        return cls.from_raw(domain, [raw], var)

    @classmethod
    def random(
        cls, domain: Domain, degree: int, rng: Random, var: str = LINE_VARIABLE, *, monic: bool = False
    ) -> "Poly":
        coeffs = [domain.random(rng) for _ in range(degree)]
        if monic:
            lead = domain.one
        else:
            lead = domain.random(rng)
            while domain.is_zero(lead):
                lead = domain.random(rng)
        return cls.from_raw(domain, [*coeffs, lead], var)

    # ---- 结构 ----

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def is_one(self) -> bool:
        return len(self.coeffs) == 1 and self.domain.is_one(self.coeffs[0])

    @property
    def variables(self) -> tuple[str, ...]:
        return (self.var,)

    @property
    def LC(self):
        return dense.dup_LC(list(self.coeffs), self.domain)

    @property
    def TC(self):
        return dense.dup_TC(list(self.coeffs), self.domain)

    @property
    def lc(self) -> FieldElem:
        return FieldElem(self.domain, self.LC)

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.domain.is_one(self.coeffs[-1])

    def coeff(self, n: int):
        return self.coeffs[n] if 0 <= n < len(self.coeffs) else self.domain.zero

    def leading_coeff(self):
        return self.LC

    def constant_value(self):
        return self.TC

    def valuation(self) -> int:
        """t 的最高整除次数"""
        return dense.dup_valuation(list(self.coeffs), self.domain)

    def _new(self, coeffs: list) -> "Poly":
        return Poly(self.domain, tuple(dense.dup_strip(coeffs, self.domain)), self.var)

    def zero_like(self) -> "Poly":
        return Poly(self.domain, (), self.var)

    def one_like(self) -> "Poly":
        return Poly(self.domain, (self.domain.one,), self.var)

    def const_like(self, raw) -> "Poly":
        return self._new([raw])

    def _coerce(self, other) -> "Poly | None":
        if isinstance(other, Poly):
            if other.domain != self.domain:
                if other.is_constant:
                    return self.const_like(self.domain.convert(other.lc) if other.coeffs else self.domain.zero)
                return other.change_ring(self.domain)
            return other
        if isinstance(other, (int, Fraction, FieldElem)) and not isinstance(other, bool):
            return self.const_like(self.domain.convert(other))
        return None

    # ---- 运算 ----

    def __add__(self, other) -> "Poly":
        if (g := self._coerce(other)) is None:
            return NotImplemented
        return self._new(dense.dup_add(list(self.coeffs), list(g.coeffs), self.domain))

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return self._new(dense.dup_neg(list(self.coeffs), self.domain))

    def __sub__(self, other) -> "Poly":
        if (g := self._coerce(other)) is None:
            return NotImplemented
        return self._new(dense.dup_sub(list(self.coeffs), list(g.coeffs), self.domain))

    def __rsub__(self, other) -> "Poly":
        return (-self) + other

    def __mul__(self, other) -> "Poly":
        if (g := self._coerce(other)) is None:
            return NotImplemented
        return self._new(dense.dup_mul(list(self.coeffs), list(g.coeffs), self.domain))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise AlgebraException("negative power of a polynomial")
        return self._new(dense.dup_pow(list(self.coeffs), n, self.domain))

    def __divmod__(self, other) -> tuple["Poly", "Poly"]:
        if (g := self._coerce(other)) is None:
            return NotImplemented
        q, r = dense.dup_divmod(list(self.coeffs), list(g.coeffs), self.domain)
        return self._new(q), self._new(r)

    def __floordiv__(self, other) -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "Poly":
        return divmod(self, other)[1]

    def mul_ground(self, raw) -> "Poly":
        return self._new(dense.dup_mul_ground(list(self.coeffs), raw, self.domain))

    def exquo(self, other: "Poly") -> "Poly":
        q, r = divmod(self, other)
        if not r.is_zero:
            raise AlgebraException(f"{other} does not divide {self}")
        return q

    def monic(self) -> "Poly":
        return self._new(dense.dup_monic(list(self.coeffs), self.domain))

    def gcd(self, other: "Poly") -> "Poly":
        """首一最大公因式"""
        return self._new(dense.dup_gcd(list(self.coeffs), list(other.coeffs), self.domain))

    def gcdex(self, other: "Poly") -> tuple["Poly", "Poly", "Poly"]:
        s, t, h = dense.dup_gcdex(list(self.coeffs), list(other.coeffs), self.domain)
        return self._new(s), self._new(t), self._new(h)

    def diff(self) -> "Poly":
        return self._new(dense.dup_diff(list(self.coeffs), self.domain))

    def compose(self, other: "Poly") -> "Poly":
        return self._new(dense.dup_compose(list(self.coeffs), list(other.coeffs), self.domain))

    def shift(self, a) -> "Poly":
        """f(t + a), a 为原始值"""
        return self._new(dense.dup_shift(list(self.coeffs), a, self.domain))

    def reverse(self, n: int | None = None) -> "Poly":
        """t^n f(1/t)"""
        n = self.degree if n is None else n
        return self._new(dense.dup_reverse(list(self.coeffs), n, self.domain))

    def pow_mod(self, n: int, modulus: "Poly") -> "Poly":
        return self._new(dense.dup_pow_mod(list(self.coeffs), n, list(modulus.coeffs), self.domain))

    def eval_raw(self, a):
        return dense.dup_eval(list(self.coeffs), a, self.domain)

    def __call__(self, value: Scalar) -> FieldElem:
        """在 value 处求值; value 可以在系数域的扩张中"""
        if isinstance(value, FieldElem) and value.domain != self.domain:
            K = value.domain
            return FieldElem(K, dense.dup_eval([K.convert(self.domain.wrap(c)) for c in self.coeffs], value.raw, K))
        return FieldElem(self.domain, self.eval_raw(self.domain.convert(value)))

    def change_ring(self, domain: Domain) -> "Poly":
        """把系数搬到 domain (系数域的扩张) 上"""
        if domain == self.domain:
            return self
        return Poly.from_raw(domain, [domain.convert(self.domain.wrap(c)) for c in self.coeffs], self.var)

    def with_var(self, var: str) -> "Poly":
        return Poly(self.domain, self.coeffs, var)

    # ---- 显示 ----

    def sort_key(self) -> tuple:
        return (self.degree, tuple(self.domain.sort_key(c) for c in self.coeffs))

    def __str__(self) -> str:
        terms = [
            (self.domain.format(c), power_name(self.var, i) if i else "")
            for i, c in reversed(list(enumerate(self.coeffs)))
            if not self.domain.is_zero(c)
        ]
        return join_terms(terms)

    def __repr__(self) -> str:
        return f"Poly({self}, {self.domain.spec})"
