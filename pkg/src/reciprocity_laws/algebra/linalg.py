from .fields import Domain, FieldElem, ExtensionField
from ..exception import FieldMismatchException

Matrix = list[list]


def determinant(matrix: Matrix, K: Domain):
    """高斯消元求行列式, 矩阵元素为 K 的原始值"""
    rows = [list(row) for row in matrix]
    n = len(rows)
    det = K.one
    for col in range(n):
        pivot = next((r for r in range(col, n) if not K.is_zero(rows[r][col])), None)
        if pivot is None:
            return K.zero
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = K.neg(det)
        lead = rows[col][col]
        det = K.mul(det, lead)
        inv = K.inv(lead)
        for r in range(col + 1, n):
            factor = K.mul(rows[r][col], inv)
            if K.is_zero(factor):
                continue
            rows[r] = [K.sub(x, K.mul(factor, y)) for x, y in zip(rows[r], rows[col])]
    return det


def multiplication_matrix(e: FieldElem) -> Matrix:
    """乘以 e 的线性映射在基 1, a, ..., a^(d-1) 下的矩阵, 第 j 列是 e * a^j 的坐标"""
    L = e.domain
    if not isinstance(L, ExtensionField):
        raise FieldMismatchException(L.spec, "finite extension")
    columns = []
    power = L.one
    for _ in range(L.degree):
        columns.append(L.coordinates(L.mul(e.raw, power)))
        power = L.mul(power, L.generator)
    return [[columns[j][i] for j in range(L.degree)] for i in range(L.degree)]


def norm_and_trace(e: FieldElem) -> tuple[FieldElem, FieldElem]:
    """N_{k'/k}(e) 与 Tr_{k'/k}(e), k 是 e 所在扩张的基域"""
    L = e.domain
    if not isinstance(L, ExtensionField):
        raise FieldMismatchException(L.spec, "finite extension")
    K = L.base
    m = multiplication_matrix(e)
    tr = K.zero
    for i in range(L.degree):
        tr = K.add(tr, m[i][i])
    return FieldElem(K, determinant(m, K)), FieldElem(K, tr)


def norm(e: FieldElem, base: Domain) -> FieldElem:
    """沿扩张塔逐层取范数直到 base"""
    while e.domain != base:
        if not isinstance(e.domain, ExtensionField):
            raise FieldMismatchException(e.domain.spec, base.spec)
        e = norm_and_trace(e)[0]
    return e


def trace(e: FieldElem, base: Domain) -> FieldElem:
    """沿扩张塔逐层取迹直到 base"""
    while e.domain != base:
        if not isinstance(e.domain, ExtensionField):
            raise FieldMismatchException(e.domain.spec, base.spec)
        e = norm_and_trace(e)[1]
    return e
