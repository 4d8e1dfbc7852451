"""Dense univariate polynomials over an abstract coefficient domain.

Polynomials are lists of raw coefficients, constant term first. ``K`` is a
coefficient domain (see :mod:`.fields`) providing ``zero``, ``one``, ``add``,
``sub``, ``neg``, ``mul``, ``inv``, ``is_zero`` and ``from_int``. None of the
routines check that their arguments are normalized beyond stripping.
"""

from typing import Any

Dense = list[Any]


def dup_strip(f: Dense, K) -> Dense:
    """去掉高次零系数"""
    n = len(f)
    while n and K.is_zero(f[n - 1]):
        n -= 1
    return f[:n]


def dup_degree(f: Dense) -> int:
    """次数, 零多项式为 -1"""
    return len(f) - 1


def dup_LC(f: Dense, K):
    return f[-1] if f else K.zero


def dup_TC(f: Dense, K):
    return f[0] if f else K.zero


def dup_add(f: Dense, g: Dense, K) -> Dense:
    if len(f) < len(g):
        f, g = g, f
    h = list(f)
    for i, c in enumerate(g):
        h[i] = K.add(h[i], c)
    return dup_strip(h, K)


def dup_neg(f: Dense, K) -> Dense:
    return [K.neg(c) for c in f]


def dup_sub(f: Dense, g: Dense, K) -> Dense:
    return dup_add(f, dup_neg(g, K), K)


def dup_mul_ground(f: Dense, a, K) -> Dense:
    if K.is_zero(a):
        return []
    return dup_strip([K.mul(c, a) for c in f], K)


def dup_mul(f: Dense, g: Dense, K) -> Dense:
    if not f or not g:
        return []
    h = [K.zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if K.is_zero(a):
            continue
        for j, b in enumerate(g):
            h[i + j] = K.add(h[i + j], K.mul(a, b))
    return dup_strip(h, K)


def dup_mul_xn(f: Dense, n: int, K) -> Dense:
    """乘以 t^n"""
    return [K.zero] * n + list(f) if f else []


def dup_divmod(f: Dense, g: Dense, K) -> tuple[Dense, Dense]:
    """带余除法, 要求 g 的首项系数可逆"""
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(f)
    dg = len(g) - 1
    inv_lc = K.inv(g[-1])
    if len(r) - 1 < dg:
        return [], dup_strip(r, K)
    q = [K.zero] * (len(r) - dg)
    for i in range(len(r) - 1 - dg, -1, -1):
        c = K.mul(r[i + dg], inv_lc)
        q[i] = c
        if K.is_zero(c):
            continue
        for j, b in enumerate(g):
            r[i + j] = K.sub(r[i + j], K.mul(c, b))
    return dup_strip(q, K), dup_strip(r[:dg], K)


def dup_rem(f: Dense, g: Dense, K) -> Dense:
    return dup_divmod(f, g, K)[1]


def dup_quo(f: Dense, g: Dense, K) -> Dense:
    return dup_divmod(f, g, K)[0]


def dup_monic(f: Dense, K) -> Dense:
    if not f:
        return []
    inv_lc = K.inv(f[-1])
    return [K.mul(c, inv_lc) for c in f]


def dup_gcd(f: Dense, g: Dense, K) -> Dense:
    """首一的最大公因式, 仅限系数为域"""
    while g:
        f, g = g, dup_rem(f, g, K)
    return dup_monic(f, K)


def dup_gcdex(f: Dense, g: Dense, K) -> tuple[Dense, Dense, Dense]:
    """扩展欧几里得: 返回 (s, t, h) 使 s*f + t*g = h = gcd(f, g) 且 h 首一"""
    r0, r1 = f, g
    s0, s1 = [K.one], []
    t0, t1 = [], [K.one]
    while r1:
        q, r = dup_divmod(r0, r1, K)
        r0, r1 = r1, r
        s0, s1 = s1, dup_sub(s0, dup_mul(q, s1, K), K)
        t0, t1 = t1, dup_sub(t0, dup_mul(q, t1, K), K)
    if not r0:
        return [], [], []
    inv_lc = K.inv(r0[-1])
    return dup_mul_ground(s0, inv_lc, K), dup_mul_ground(t0, inv_lc, K), dup_monic(r0, K)


def dup_eval(f: Dense, a, K):
    """Horner 求值"""
    v = K.zero
    for c in reversed(f):
        v = K.add(K.mul(v, a), c)
    return v


def dup_diff(f: Dense, K) -> Dense:
    return dup_strip([K.mul(K.from_int(i), c) for i, c in enumerate(f)][1:], K)


def dup_pow(f: Dense, n: int, K) -> Dense:
    result: Dense = [K.one]
    base = f
    while n:
        if n & 1:
            result = dup_mul(result, base, K)
        n >>= 1
        if n:
            base = dup_mul(base, base, K)
    return result


def dup_pow_mod(f: Dense, n: int, g: Dense, K) -> Dense:
    """f^n mod g"""
    result: Dense = dup_rem([K.one], g, K)
    base = dup_rem(f, g, K)
    while n:
        if n & 1:
            result = dup_rem(dup_mul(result, base, K), g, K)
        n >>= 1
        if n:
            base = dup_rem(dup_mul(base, base, K), g, K)
    return result


def dup_compose(f: Dense, g: Dense, K) -> Dense:
    """f(g(t))"""
    h: Dense = []
    for c in reversed(f):
        h = dup_add(dup_mul(h, g, K), [c] if not K.is_zero(c) else [], K)
    return h


def dup_shift(f: Dense, a, K) -> Dense:
    """Taylor 平移 f(t + a)"""
    return dup_compose(f, dup_strip([a, K.one], K), K)


def dup_reverse(f: Dense, n: int, K) -> Dense:
    """t^n * f(1/t), 要求 n >= deg f"""
    padded = list(f) + [K.zero] * (n + 1 - len(f))
    return dup_strip(list(reversed(padded)), K)


def dup_valuation(f: Dense, K) -> int:
    """t 的最高整除次数, 零多项式无意义"""
    for i, c in enumerate(f):
        if not K.is_zero(c):
            return i
    raise ValueError("zero polynomial has no valuation")
