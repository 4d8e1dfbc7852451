"""k[x, y] 中的稀疏多项式

单项式按 (y 次数, x 次数) 的字典序排序, 首项系数即 y 次数最高的项中 x 次数最高者.
最大公因式用 k[x] 上的本原多项式余式序列计算.
"""

from typing import Any
from fractions import Fraction
from dataclasses import dataclass

from .poly import Poly, Scalar
from .fields import Domain, FieldElem, join_terms, power_name
from ..constants import SURFACE_VARIABLES
from ..exception import AlgebraException

X, Y = SURFACE_VARIABLES
Exp = tuple[int, int]


def _lex(item: tuple[Exp, Any]) -> tuple[int, int]:
    (i, j), _ = item
    return (j, i)


@dataclass(frozen=True, slots=True)
class BiPoly:
    domain: Domain
    terms: tuple[tuple[Exp, Any], ...] = ()
    """((x 次数, y 次数), 系数) 按字典序升序"""

    @classmethod
    def from_dict(cls, domain: Domain, terms: dict[Exp, Any]) -> "BiPoly":
        items = [(e, c) for e, c in terms.items() if not domain.is_zero(c)]
        return cls(domain, tuple(sorted(items, key=_lex)))

    @classmethod
    def const(cls, domain: Domain, value: Scalar) -> "BiPoly":
        return cls.from_dict(domain, {(0, 0): domain.convert(value)})

    @classmethod
    def gen_x(cls, domain: Domain) -> "BiPoly":
        return cls(domain, (((1, 0), domain.one),))

    @classmethod
    def gen_y(cls, domain: Domain) -> "BiPoly":
        return cls(domain, (((0, 1), domain.one),))

    @classmethod
    def from_poly(cls, poly: Poly, var: str = X) -> "BiPoly":
        if var == X:
            return cls.from_dict(poly.domain, {(i, 0): c for i, c in enumerate(poly.coeffs)})
        return cls.from_dict(poly.domain, {(0, j): c for j, c in enumerate(poly.coeffs)})

    @classmethod
    def from_y_poly(cls, domain: Domain, coeffs: list[Poly]) -> "BiPoly":
        """sum_j coeffs[j](x) y^j"""
        return cls.from_dict(domain, {(i, j): c for j, p in enumerate(coeffs) for i, c in enumerate(p.coeffs)})

    # ---- 结构 ----

    def as_dict(self) -> dict[Exp, Any]:
        return dict(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.terms[0][0] == (0, 0))

    @property
    def is_one(self) -> bool:
        return self.is_constant and bool(self.terms) and self.domain.is_one(self.terms[0][1])

    @property
    def variables(self) -> tuple[str, ...]:
        return SURFACE_VARIABLES

    @property
    def degree_x(self) -> int:
        return max((i for (i, _), _ in self.terms), default=-1)

    @property
    def degree_y(self) -> int:
        return max((j for (_, j), _ in self.terms), default=-1)

    def leading_coeff(self):
        return self.terms[-1][1] if self.terms else self.domain.zero

    def constant_value(self):
        return self.as_dict().get((0, 0), self.domain.zero)

    def zero_like(self) -> "BiPoly":
        return BiPoly(self.domain)

    def one_like(self) -> "BiPoly":
        return BiPoly(self.domain, (((0, 0), self.domain.one),))

    def const_like(self, raw) -> "BiPoly":
        return BiPoly.from_dict(self.domain, {(0, 0): raw})

    def as_y_poly(self) -> list[Poly]:
        """按 y 的幂展开, 系数是 x 的多项式"""
        rows: list[list[Any]] = [[self.domain.zero] * (self.degree_x + 1) for _ in range(self.degree_y + 1)]
        for (i, j), c in self.terms:
            rows[j][i] = c
        return [Poly.from_raw(self.domain, row, X) for row in rows]

    def swap(self) -> "BiPoly":
        """交换 x 与 y"""
        return BiPoly.from_dict(self.domain, {(j, i): c for (i, j), c in self.terms})

    def as_poly(self, var: str) -> Poly:
        """只含一个变量时转为单变量多项式"""
        if var == X and self.degree_y <= 0:
            return Poly.from_raw(self.domain, self.as_y_poly()[0].coeffs if self.terms else [], X)
        if var == Y and self.degree_x <= 0:
            return self.swap().as_poly(X).with_var(Y)
        raise AlgebraException(f"{self} is not a polynomial in {var} alone")

    def _coerce(self, other) -> "BiPoly | None":
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, (int, Fraction, FieldElem)) and not isinstance(other, bool):
            return self.const_like(self.domain.convert(other))
        return None

    # ---- 运算 ----

    def __add__(self, other) -> "BiPoly":
        if (g := self._coerce(other)) is None:
            return NotImplemented
        d = self.as_dict()
        K = self.domain
        for e, c in g.terms:
            d[e] = K.add(d[e], c) if e in d else c
        return BiPoly.from_dict(K, d)

    __radd__ = __add__

    def __neg__(self) -> "BiPoly":
        return BiPoly(self.domain, tuple((e, self.domain.neg(c)) for e, c in self.terms))

    def __sub__(self, other) -> "BiPoly":
        if (g := self._coerce(other)) is None:
            return NotImplemented
        return self + (-g)

    def __rsub__(self, other) -> "BiPoly":
        return (-self) + other

    def __mul__(self, other) -> "BiPoly":
        if (g := self._coerce(other)) is None:
            return NotImplemented
        K = self.domain
        d: dict[Exp, Any] = {}
        for (i1, j1), a in self.terms:
            for (i2, j2), b in g.terms:
                e = (i1 + i2, j1 + j2)
                prod = K.mul(a, b)
                d[e] = K.add(d[e], prod) if e in d else prod
        return BiPoly.from_dict(K, d)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "BiPoly":
        if n < 0:
            raise AlgebraException("negative power of a polynomial")
        result, base = self.one_like(), self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def mul_ground(self, raw) -> "BiPoly":
        return BiPoly.from_dict(self.domain, {e: self.domain.mul(c, raw) for e, c in self.terms})

    def mul_monomial(self, i: int, j: int) -> "BiPoly":
        return BiPoly(self.domain, tuple(((a + i, b + j), c) for (a, b), c in self.terms))

    def monic(self) -> "BiPoly":
        if not self.terms:
            return self
        return self.mul_ground(self.domain.inv(self.leading_coeff()))

    def exquo(self, other: "BiPoly") -> "BiPoly":
        """整除, 不能整除时抛出异常"""
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        K = self.domain
        (gi, gj), glc = other.terms[-1]
        inv = K.inv(glc)
        rem, quo = self, self.zero_like()
        while rem.terms:
            (fi, fj), flc = rem.terms[-1]
            if fi < gi or fj < gj:
                raise AlgebraException(f"{other} does not divide {self}")
            term = BiPoly(K, (((fi - gi, fj - gj), K.mul(flc, inv)),))
            quo = quo + term
            rem = rem - term * other
        return quo

    def gcd(self, other: "BiPoly") -> "BiPoly":
        """首项系数为 1 的最大公因式"""
        if self.is_zero:
            return other.monic()
        if other.is_zero:
            return self.monic()
        K = self.domain
        f_cont, f = _primitive(self.as_y_poly())
        g_cont, g = _primitive(other.as_y_poly())
        content = f_cont.gcd(g_cont)
        if len(f) < len(g):
            f, g = g, f
        while len(g) > 1:
            r = _prem(f, g)
            if not r:
                break
            f, g = g, _primitive(r)[1]
        if len(g) == 1:
            g = [Poly.const_raw(K, K.one, X)]
        return BiPoly.from_y_poly(K, [content * c for c in g]).monic()

    # ---- 代入 ----

    def eval_raw(self, x, y):
        K = self.domain
        total = K.zero
        for (i, j), c in self.terms:
            total = K.add(total, K.mul(c, K.mul(K.pow(x, i), K.pow(y, j))))
        return total

    def __call__(self, x: Scalar, y: Scalar) -> FieldElem:
        return FieldElem(self.domain, self.eval_raw(self.domain.convert(x), self.domain.convert(y)))

    def along_graph(self, s: Poly, axis: str = Y) -> list[Poly]:
        """沿曲线 axis = s(另一变量) 展开

        axis 为 y 时返回 c_0(x), c_1(x), ... 使 f(x, s(x) + w) = sum c_k(x) w^k.
        """
        rows = (self if axis == Y else self.swap()).as_y_poly()
        param = X if axis == Y else Y
        s = s.with_var(X)
        result: list[Poly] = []
        for c in reversed(rows):
            # result <- result * (s + w) + c
            shifted = [Poly(self.domain, (), X), *result]
            scaled = [r * s for r in result] + [Poly(self.domain, (), X)]
            result = [a + b for a, b in zip(shifted, scaled)]
            result[0] = result[0] + c
        while result and result[-1].is_zero:
            result.pop()
        return [r.with_var(param) for r in result]

    def invert(self, var: str) -> tuple["BiPoly", int]:
        """返回 (v^n f(1/v), n), n 是 f 关于 v 的次数"""
        if var == X:
            n = self.degree_x
            return BiPoly.from_dict(self.domain, {(n - i, j): c for (i, j), c in self.terms}), n
        n = self.degree_y
        return BiPoly.from_dict(self.domain, {(i, n - j): c for (i, j), c in self.terms}), n

    def change_ring(self, domain: Domain) -> "BiPoly":
        if domain == self.domain:
            return self
        return BiPoly.from_dict(domain, {e: domain.convert(self.domain.wrap(c)) for e, c in self.terms})

    # ---- 显示 ----

    def sort_key(self) -> tuple:
        return tuple((j, i, self.domain.sort_key(c)) for (i, j), c in self.terms)

    def __str__(self) -> str:
        terms = []
        for (i, j), c in reversed(self.terms):
            mono = "*".join(power_name(v, e) for v, e in ((X, i), (Y, j)) if e)
            terms.append((self.domain.format(c), mono))
        return join_terms(terms)

    def __repr__(self) -> str:
        return f"BiPoly({self}, {self.domain.spec})"


def _primitive(coeffs: list[Poly]) -> tuple[Poly, list[Poly]]:
    content = coeffs[0].zero_like()
    for c in coeffs:
        content = content.gcd(c)
    return content, [c.exquo(content) for c in coeffs]


def _prem(f: list[Poly], g: list[Poly]) -> list[Poly]:
    """关于 y 的伪余式"""
    r = list(f)
    lc = g[-1]
    dg = len(g) - 1
    while len(r) - 1 >= dg and r:
        lead, shift = r[-1], len(r) - 1 - dg
        r = [c * lc for c in r]
        for k, c in enumerate(g):
            r[k + shift] = r[k + shift] - lead * c
        while r and r[-1].is_zero:
            r.pop()
    return r
