import msgspec
from msgspec import Struct

from ..constants import RenderType
from ..verifiers import ReciprocityReport


class CommandConfig(Struct):
    command: str
    field: str = "q"
    """域描述串"""
    functions: list[str] = msgspec.field(default_factory=list)
    """函数表达式"""
    place: str | None = None
    flag: str | None = None
    curve: str | None = None
    point: str | None = None
    chart: str = "xy"
    oracle: bool = False
    """parshin 命令同时计算迭代边界映射的结果"""
    law: str | None = None
    count: int = 10
    format: RenderType = RenderType.json


class Diagnostic(Struct):
    kind: str
    """异常类名"""
    message: str
    line: int | None = None
    column: int | None = None


class SurveySummary(Struct):
    law: str
    count: int
    passed: int
    failed: list[list[str]] = msgspec.field(default_factory=list)
    """未通过的实例的输入"""


class CommandReport(Struct):
    command: str
    field: str
    modulus: str | None = None
    """有限扩域的模多项式"""
    inputs: list[str] = msgspec.field(default_factory=list)
    value: str | None = None
    """单个符号或计算结果"""
    values: dict[str, str] = msgspec.field(default_factory=dict)
    """按规范顺序的逐块数值"""
    aggregate: str | None = None
    passed: bool | None = None
    details: dict[str, str] = msgspec.field(default_factory=dict)
    report: ReciprocityReport | None = None
    survey: SurveySummary | None = None
    error: Diagnostic | None = None

    @property
    def succeeded(self) -> bool:
        return self.error is None and self.passed is not False
