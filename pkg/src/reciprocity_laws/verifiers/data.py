import msgspec
from msgspec import Struct


class LocalContribution(Struct):
    piece: str
    """点, 或 曲线/旗 的规范字符串"""
    value: str
    """局部符号值"""
    details: dict[str, str] = msgspec.field(default_factory=dict)
    """计算过程中的中间量"""


class SpotCheck(Struct):
    piece: str
    value: str
    trivial: bool


class EnumerationCertificate(Struct):
    support: list[str]
    """实际计算过的有限支撑集"""
    argument: str
    """支撑集之外的局部块为平凡的理由"""
    spot_checks: list[SpotCheck] = msgspec.field(default_factory=list)
    """支撑集之外的随机抽查"""

    @property
    def certified(self) -> bool:
        return all(check.trivial for check in self.spot_checks)


class ReciprocityReport(Struct):
    law: str
    field: str
    inputs: list[str]
    contributions: list[LocalContribution]
    aggregate: str
    """按规范顺序折叠后的整体值"""
    passed: bool
    certificate: EnumerationCertificate
    context: dict[str, str] = msgspec.field(default_factory=dict)
    """曲线, 点, 坐标卡等附加参数"""
