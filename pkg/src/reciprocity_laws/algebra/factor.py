"""单变量多项式的因式分解

有限域: 无平方分解 -> 不同次数分解 -> 等次数分解 (Cantor-Zassenhaus, 特征 2 时用迹映射).
有理数域: Yun 无平方分解, 有理根, 次数 <= 3 且无根者直接不可约,
其余用好约化素数证明不可约; 用户给出的因子找不到见证时按原样保留.
"""

import math
from random import Random
from fractions import Fraction
from itertools import product

from loguru import logger
from sympy import divisors, primerange
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_sqf_p, gf_irreducible_p

from .poly import Poly
from .fields import Domain, Rationals, FieldElem, PrimeField, ExtensionField
from .rational import FactoredForm
from ..config import Config, pconfig
from ..exception import AlgebraException, ZeroPolynomialException, UncertifiedFactorException

Factors = list[tuple[Poly, int]]


def factor_list(
    f: Poly, *, hint: FactoredForm | None = None, config: Config | None = None
) -> tuple[FieldElem, Factors]:
    """返回 (首项系数, [(首一不可约因子, 重数)]), 因子按次数和系数排序"""
    if f.is_zero:
        raise ZeroPolynomialException()
    config = config or pconfig
    lc = f.lc
    if f.is_constant:
        return lc, []

    K = f.domain
    pieces: list[tuple[Poly, int]] = [(f.monic(), 1)]
    trusted = False
    if hint is not None and hint.factors:
        given = [(p, m) for p, m in hint.factors if m > 0]
        if _expand(given, f) == f.monic():
            pieces, trusted = given, True
        else:
            logger.debug(f"factored form of {f} does not match, factoring from scratch")

    merged: dict[Poly, int] = {}
    for piece, mult in pieces:
        for g, m in _factor_monic(piece, config, trusted=trusted):
            merged[g] = merged.get(g, 0) + m * mult
    factors = sorted(merged.items(), key=lambda item: item[0].sort_key())
    logger.debug(f"factored {f} over {K.spec}: {len(factors)} irreducible factor(s)")
    return lc, factors


def factorize(f: Poly, *, hint: FactoredForm | None = None, config: Config | None = None) -> Factors:
    """首一不可约因子及其重数"""
    return factor_list(f, hint=hint, config=config)[1]


def factor_rational(num: Poly, den: Poly, hint: FactoredForm | None = None, config: Config | None = None) -> Factors:
    """有理函数的因子, 分母的因子重数为负"""
    config = config or pconfig
    if hint is None:
        top, bottom = factorize(num, config=config), factorize(den, config=config)
    else:
        positive = FactoredForm(hint.unit, tuple((p, m) for p, m in hint.factors if m > 0))
        top = factorize(num, hint=positive, config=config)
        bottom = factorize(
            den, hint=FactoredForm(den.domain.one, tuple((p, -m) for p, m in hint.factors if m < 0)), config=config
        )
    merged: dict[Poly, int] = {}
    for g, m in top:
        merged[g] = merged.get(g, 0) + m
    for g, m in bottom:
        merged[g] = merged.get(g, 0) - m
    return sorted(((g, m) for g, m in merged.items() if m), key=lambda item: item[0].sort_key())


def is_irreducible(f: Poly, config: Config | None = None) -> bool:
    if f.degree < 1:
        return False
    factors = factorize(f, config=config)
    return len(factors) == 1 and factors[0][1] == 1


def _expand(pieces: list[tuple[Poly, int]], template: Poly) -> Poly:
    result = template.one_like()
    for p, m in pieces:
        result = result * p.monic() ** m
    return result


def _factor_monic(f: Poly, config: Config, *, trusted: bool = False) -> Factors:
    f = f.monic()
    if f.degree < 1:
        return []
    K = f.domain
    if K.is_finite and K.is_field:
        rng = Random(config.seed)
        return [(e, m) for g, m in _ff_sqf(f) for h, d in _ddf(g) for e in _edf(h, d, rng)]
    if isinstance(K, Rationals):
        return [(h, m) for g, m in _yun(f) for h in _q_split(g, config.prime_bound, trusted=trusted)]
    raise AlgebraException(f"factorization over {K.spec} is not supported")


# ---- 有限域 ----


def _poly_pth_root(f: Poly) -> Poly:
    K = f.domain
    p = K.characteristic
    return Poly.from_raw(K, [K.pth_root(c) for c in f.coeffs[::p]], f.var)


def _ff_sqf(f: Poly) -> Factors:
    """首一多项式的无平方分解"""
    if f.degree < 1:
        return []
    p = f.domain.characteristic
    result: Factors = []
    w = f.diff()
    if w.is_zero:
        return [(g, e * p) for g, e in _ff_sqf(_poly_pth_root(f))]

    c = f.gcd(w)
    w = f // c
    i = 1
    while w.degree > 0:
        y = w.gcd(c)
        z = w // y
        if z.degree > 0:
            result.append((z.monic(), i))
        i += 1
        w, c = y, c // y
    if c.degree > 0:
        result.extend((g, e * p) for g, e in _ff_sqf(_poly_pth_root(c.monic())))
    return result


def _ddf(f: Poly) -> list[tuple[Poly, int]]:
    """不同次数分解, 返回 (次数为 d 的不可约因子之积, d)"""
    q = f.domain.order
    assert q is not None
    t = Poly.gen(f.domain, f.var)
    out: list[tuple[Poly, int]] = []
    g, h, i = f, t, 1
    while g.degree >= 2 * i:
        h = h.pow_mod(q, g)
        d = g.gcd(h - t)
        if not d.is_one:
            out.append((d, i))
            g = g // d
            h = h % g
        i += 1
    if g.degree > 0:
        out.append((g.monic(), g.degree))
    return out


def _edf(f: Poly, d: int, rng: Random) -> list[Poly]:
    """等次数分解"""
    if f.degree <= d:
        return [f.monic()]
    K = f.domain
    q = K.order
    assert q is not None
    while True:
        a = Poly.from_raw(K, [K.random(rng) for _ in range(f.degree)], f.var)
        if a.degree < 1:
            continue
        if q % 2:
            b = a.pow_mod((q**d - 1) // 2, f) - 1
        else:
            b, s = a % f, a % f
            for _ in range(int(math.log2(q)) * d - 1):
                s = (s * s) % f
                b = b + s
        g = f.gcd(b)
        if 0 < g.degree < f.degree:
            return _edf(g, d, rng) + _edf(f // g, d, rng)


def first_irreducible(field: PrimeField, degree: int) -> Poly:
    """F_p 上字典序最小的首一不可约多项式 (系数从高次到低次比较)"""
    p = field.p
    for tail in product(range(p), repeat=degree):
        coeffs = [1, *tail]
        if gf_irreducible_p(ZZ.map(coeffs), p, ZZ):
            return Poly.from_raw(field, list(reversed(coeffs)))
    raise AlgebraException(f"no irreducible polynomial of degree {degree} over F_{p}")


# ---- 有理数域 ----


def _yun(f: Poly) -> Factors:
    fp = f.diff()
    a = f.gcd(fp)
    b, c = f // a, fp // a
    d = c - b.diff()
    result: Factors = []
    i = 1
    while b.degree > 0:
        a = b.gcd(d)
        b, c = b // a, d // a
        d = c - b.diff()
        if a.degree > 0:
            result.append((a.monic(), i))
        i += 1
    return result


def integer_coefficients(f: Poly) -> list[int]:
    """乘以分母的最小公倍数并除去内容, 常数项在前"""
    lcm = math.lcm(*(Fraction(c).denominator for c in f.coeffs))
    ints = [int(Fraction(c) * lcm) for c in f.coeffs]
    content = math.gcd(*ints)
    return [c // content for c in ints] if content else ints


def rational_roots(f: Poly) -> list[Fraction]:
    """有理根定理"""
    ints = integer_coefficients(f)
    roots: set[Fraction] = set()
    if ints[0] == 0:
        roots.add(Fraction(0))
        while ints and ints[0] == 0:
            ints = ints[1:]
    if len(ints) > 1:
        for num in divisors(abs(ints[0])):
            for den in divisors(abs(ints[-1])):
                for cand in (Fraction(num, den), Fraction(-num, den)):
                    if f.eval_raw(cand) == 0:
                        roots.add(cand)
    return sorted(roots)


def certify_irreducible(f: Poly, bound: int) -> int | None:
    """找一个素数 p <= bound, 使 f mod p 同次, 无平方且不可约"""
    ints = integer_coefficients(f)
    for p in primerange(2, bound + 1):
        if ints[-1] % p == 0:
            continue
        reduced = ZZ.map([c % p for c in reversed(ints)])
        if gf_sqf_p(reduced, p, ZZ) and gf_irreducible_p(reduced, p, ZZ):
            return int(p)
    return None


def _q_split(g: Poly, bound: int, *, trusted: bool = False) -> list[Poly]:
    """无平方首一多项式分成已证明不可约的因子

    先分出有理根对应的一次因子. 剩余部分次数 <= 3 时没有有理根即不可约, 不需要素数见证;
    次数 >= 4 时需要 ``certify_irreducible`` 找到一个素数见证.
    ``trusted`` 为真时 (用户给出的因式分解中的因子) 找不到见证就按给定的因子保留.
    """
    K: Domain = g.domain
    factors: list[Poly] = []
    for root in rational_roots(g):
        linear = Poly.from_raw(K, [K.neg(Fraction(root)), K.one], g.var)
        factors.append(linear)
        g = g // linear
    if g.degree <= 0:
        return factors
    if g.degree <= 3:
        # 无有理根的二次或三次多项式不可约
        return [*factors, g]
    witness = certify_irreducible(g, bound)
    if witness is None:
        if trusted:
            logger.debug(f"keeping the given factor {g} without a prime witness <= {bound}")
            return [*factors, g]
        raise UncertifiedFactorException(g, bound)
    logger.debug(f"{g} certified irreducible over Q by the prime {witness}")
    return [*factors, g]


def galois_field(p: int, degree: int = 1) -> Domain:
    """F_{p^d}, d > 1 时模多项式取字典序最小的不可约多项式"""
    base = PrimeField(p)
    if degree == 1:
        return base
    modulus = first_irreducible(base, degree)
    return ExtensionField(base, modulus.coeffs)
