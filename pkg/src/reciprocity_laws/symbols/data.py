from dataclasses import field, dataclass

from ..algebra import FieldElem


@dataclass(frozen=True, slots=True)
class Provenance:
    """符号值的来源: 哪个公式, 在哪里, 对哪些输入"""

    symbol: str
    """符号名"""
    location: str
    """点或旗"""
    inputs: tuple[str, ...]
    """输入函数的规范字符串"""
    formula: str
    """计算所用的公式"""
    details: tuple[tuple[str, str], ...] = field(default=())
    """中间量, 例如赋值, 数字序列, 单值化参数"""


@dataclass(frozen=True, slots=True)
class SymbolValue:
    """局部符号的值, 乘法符号为域元素, 加法符号为整数"""

    value: FieldElem | int
    provenance: Provenance

    @property
    def is_trivial(self) -> bool:
        if isinstance(self.value, int):
            return self.value == 0
        return self.value.is_one

    def __str__(self) -> str:
        return str(self.value)
