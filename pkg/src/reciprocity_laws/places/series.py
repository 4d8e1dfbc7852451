"""截断 Laurent 级数 k((z)) 与有理函数在一次点处的展开"""

from typing import Any
from dataclasses import dataclass

from .place import Place
from .valuation import valuation
from ..algebra import Poly, Domain, FieldElem, RationalFunction
from ..algebra.fields import join_terms, power_name
from ..exception import PlaceException, AlgebraException


@dataclass(frozen=True, slots=True)
class LaurentSeries:
    """sum_{i < precision} coeffs[i] z^(valuation + i) + O(z^(valuation + precision))"""

    domain: Domain
    valuation: int
    coeffs: tuple
    precision: int
    var: str = "z"

    @classmethod
    def build(cls, domain: Domain, valuation: int, coeffs: list, precision: int, var: str = "z") -> "LaurentSeries":
        """去掉首部的零系数, 绝对精度保持不变"""
        coeffs = list(coeffs[:precision])
        coeffs += [domain.zero] * (precision - len(coeffs))
        while coeffs and domain.is_zero(coeffs[0]):
            coeffs.pop(0)
            valuation += 1
            precision -= 1
        return cls(domain, valuation, tuple(coeffs), precision, var)

    @property
    def absolute_precision(self) -> int:
        return self.valuation + self.precision

    def coefficient(self, n: int) -> Any:
        if n < self.valuation:
            return self.domain.zero
        if n >= self.absolute_precision:
            raise AlgebraException(f"coefficient of {self.var}^{n} is beyond the known precision")
        return self.coeffs[n - self.valuation]

    def __add__(self, other: "LaurentSeries") -> "LaurentSeries":
        K = self.domain
        val = min(self.valuation, other.valuation)
        top = min(self.absolute_precision, other.absolute_precision)
        coeffs = [K.add(self._at(n), other._at(n)) for n in range(val, top)]
        return LaurentSeries.build(K, val, coeffs, top - val, self.var)

    def _at(self, n: int):
        if n < self.valuation or n - self.valuation >= len(self.coeffs):
            return self.domain.zero
        return self.coeffs[n - self.valuation]

    def __neg__(self) -> "LaurentSeries":
        coeffs = tuple(self.domain.neg(c) for c in self.coeffs)
        return LaurentSeries(self.domain, self.valuation, coeffs, self.precision, self.var)

    def __sub__(self, other: "LaurentSeries") -> "LaurentSeries":
        return self + (-other)

    def __mul__(self, other: "LaurentSeries") -> "LaurentSeries":
        K = self.domain
        precision = min(self.precision, other.precision)
        coeffs = [K.zero] * precision
        for i, a in enumerate(self.coeffs[:precision]):
            if K.is_zero(a):
                continue
            for j, b in enumerate(other.coeffs[: precision - i]):
                coeffs[i + j] = K.add(coeffs[i + j], K.mul(a, b))
        return LaurentSeries.build(K, self.valuation + other.valuation, coeffs, precision, self.var)

    def derivative(self) -> "LaurentSeries":
        """d/dz"""
        K = self.domain
        coeffs = [K.mul(K.from_int(self.valuation + i), c) for i, c in enumerate(self.coeffs)]
        return LaurentSeries.build(K, self.valuation - 1, coeffs, self.precision, self.var)

    def residue(self) -> FieldElem:
        """z^-1 的系数"""
        return FieldElem(self.domain, self.coefficient(-1))

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            n = self.valuation + i
            if self.domain.is_zero(c):
                continue
            mono = "" if n == 0 else (power_name(self.var, n) if n > 0 else f"{self.var}^({n})")
            terms.append((self.domain.format(c), mono))
        body = join_terms(terms) if terms else ""
        order = f"O({power_name(self.var, self.absolute_precision)})"
        return f"{body} + {order}" if body else order


def _power_series_quotient(num: list, den: list, K: Domain, n_terms: int) -> list:
    """den[0] 可逆时 num / den 的前 n_terms 项"""
    inv = K.inv(den[0])
    out: list = []
    for k in range(n_terms):
        acc = num[k] if k < len(num) else K.zero
        for j in range(1, min(k, len(den) - 1) + 1):
            acc = K.sub(acc, K.mul(den[j], out[k - j]))
        out.append(K.mul(acc, inv))
    return out


def expand_at(f: RationalFunction[Poly], alpha: FieldElem | None, n_terms: int) -> LaurentSeries:
    """在 t = alpha (alpha 为 None 时在无穷远点, s = 1/t) 处展开 n_terms 项"""
    if f.is_zero:
        return LaurentSeries(f.domain, 0, (), n_terms)
    K = f.domain
    if alpha is None:
        num, den = f.num.reverse(), f.den.reverse()
        shift, var = f.den.degree - f.num.degree, "s"
    else:
        num, den = f.num.shift(K.convert(alpha)), f.den.shift(K.convert(alpha))
        shift, var = 0, "z"
    vn, vd = num.valuation(), den.valuation()
    a = list(num.coeffs[vn:])
    b = list(den.coeffs[vd:])
    coeffs = _power_series_quotient(a, b, K, n_terms)
    return LaurentSeries(K, shift + vn - vd, tuple(coeffs), n_terms, var)


def laurent_expand(f: RationalFunction[Poly], p: Place, n_terms: int) -> LaurentSeries:
    """f 在一次点或无穷远点处关于固定单值化参数 (t - alpha 或 1/t) 的展开"""
    if n_terms < 1:
        raise PlaceException("n_terms must be positive")
    if p.degree > 1:
        raise PlaceException(f"{p} is not a rational place; expand over its residue field instead")
    series = expand_at(f, None if p.is_infinity else p.root, n_terms)
    if not f.is_zero and series.valuation != valuation(f, p):
        raise AlgebraException(f"expansion of {f} at {p} lost its leading term")
    return series
