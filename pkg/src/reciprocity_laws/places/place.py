from random import Random
from dataclasses import dataclass

from ..config import Config
from ..algebra import Poly, Domain, FieldElem, ExtensionField, RationalFunction, factorize, is_irreducible
from ..constants import INFINITY_NAME, LINE_VARIABLE, EXTENSION_GENERATOR, RESIDUE_GENERATOR
from ..exception import PlaceException


@dataclass(frozen=True, slots=True)
class Place:
    """射影直线上的闭点: 首一不可约多项式, 或无穷远点 (poly 为 None)"""

    domain: Domain
    poly: Poly | None = None
    var: str = LINE_VARIABLE

    @classmethod
    def finite(cls, poly: Poly, *, check: bool = True, config: Config | None = None) -> "Place":
        if poly.degree < 1 or not poly.is_monic:
            raise PlaceException(f"place polynomial {poly} must be monic of positive degree")
        if check and poly.degree > 1 and not is_irreducible(poly, config):
            raise PlaceException(f"place polynomial {poly} is not irreducible over {poly.domain.spec}")
        return cls(poly.domain, poly, poly.var)

    @classmethod
    def infinity(cls, domain: Domain, var: str = LINE_VARIABLE) -> "Place":
        return cls(domain, None, var)

    @classmethod
    def rational(cls, domain: Domain, alpha, var: str = LINE_VARIABLE) -> "Place":
        """t - alpha"""
        return cls(domain, Poly.from_raw(domain, [domain.neg(domain.convert(alpha)), domain.one], var), var)

    @classmethod
    def random(cls, domain: Domain, rng: Random, max_degree: int = 1, var: str = LINE_VARIABLE) -> "Place":
        """随机的有限点; 有限域上取随机多项式的一个不可约因子"""
        degree = rng.randint(1, max_degree)
        if degree > 1 and domain.is_finite:
            factors = factorize(Poly.random(domain, degree, rng, var, monic=True))
            return cls(domain, rng.choice(factors)[0], var)
        if degree > 1:
            # t^2 + c, c > 0 在 Q 上不可约
            c = domain.convert(rng.randint(1, 9))
            return cls(domain, Poly.from_raw(domain, [c, domain.zero, domain.one], var), var)
        return cls.rational(domain, domain.wrap(domain.random(rng)), var)

    @property
    def is_infinity(self) -> bool:
        return self.poly is None

    @property
    def degree(self) -> int:
        """[k(p):k]"""
        return 1 if self.poly is None else self.poly.degree

    @property
    def residue_field(self) -> Domain:
        """k(p) = k[t]/(p); 一次点与无穷远点为 k 本身"""
        if self.poly is None or self.poly.degree == 1:
            return self.domain
        name = RESIDUE_GENERATOR if isinstance(self.domain, ExtensionField) else EXTENSION_GENERATOR
        return ExtensionField(self.domain, self.poly.coeffs, name)

    @property
    def root(self) -> FieldElem:
        """t 在 k(p) 中的类; 一次点即 alpha"""
        if self.poly is None:
            raise PlaceException("the point at infinity has no affine coordinate")
        K = self.residue_field
        if self.poly.degree == 1:
            return FieldElem(K, K.neg(self.poly.coeffs[0]))
        return FieldElem(K, K.generator)  # type: ignore[attr-defined]

    def uniformizer(self) -> RationalFunction[Poly]:
        """有限点取 p 本身, 无穷远点取 1/t"""
        if self.poly is None:
            return RationalFunction.from_poly(Poly.gen(self.domain, self.var)).inverse()
        return RationalFunction.from_poly(self.poly)

    def sort_key(self) -> tuple:
        if self.poly is None:
            return (1,)
        return (0, self.poly.degree, tuple(self.domain.sort_key(c) for c in self.poly.coeffs))

    def __lt__(self, other: "Place") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return INFINITY_NAME if self.poly is None else f"({self.poly})"
