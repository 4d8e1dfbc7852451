class ReciprocityException(Exception):
    """异常基类"""

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message


class AlgebraException(ReciprocityException):
    """代数运算异常"""

    pass


class NonUnitException(AlgebraException):
    """对非单位元求逆"""

    def __init__(self, element: object | None = None):
        super().__init__(f"{element} is not a unit" if element is not None else "element is not a unit")
        self.element = element


class FieldMismatchException(AlgebraException):
    """运算对象不在同一个系数域上"""

    def __init__(self, left: object, right: object):
        super().__init__(f"coefficient domains differ: {left} vs {right}")


class FactorizationException(ReciprocityException):
    """因式分解异常"""

    pass


class ZeroPolynomialException(FactorizationException):
    """零多项式无法分解"""

    def __init__(self):
        super().__init__("cannot factor the zero polynomial")


class UncertifiedFactorException(FactorizationException):
    """无法在素数上界内证明有理系数因子不可约"""

    def __init__(self, polynomial: object, bound: int):
        super().__init__(f"irreducibility of {polynomial} over Q could not be certified with primes <= {bound}")
        self.polynomial = polynomial
        self.bound = bound


class PlaceException(ReciprocityException):
    """非法的点 (place)"""

    pass


class PoleException(ReciprocityException):
    """函数在该点有极点"""

    def __init__(self, function: object, place: object):
        super().__init__(f"{function} has a pole at {place}")


class ZeroFunctionException(ReciprocityException):
    """零函数没有赋值"""

    def __init__(self):
        super().__init__("the zero function has no valuation")


class SymbolException(ReciprocityException):
    """符号计算的结构检查失败"""

    pass


class UnsupportedCurveException(ReciprocityException):
    """曲线不是图像或直线形状"""

    pass


class ExpressionException(ReciprocityException):
    """前端输入异常"""

    pass


class ExpressionSyntaxException(ExpressionException):
    """表达式语法错误"""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class UsageException(ExpressionException):
    """域 / 点 / 旗 / 坐标卡 描述串错误"""

    pass
