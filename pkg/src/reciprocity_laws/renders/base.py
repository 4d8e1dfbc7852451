from abc import ABC, abstractmethod
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from ..cli.data import CommandReport


class BaseRenderer(ABC):
    """统一的渲染器, 将命令报告转换为输出文本"""

    @abstractmethod
    def render(self, report: "CommandReport") -> str:
        """渲染一份报告

        Args:
            report (CommandReport): 命令报告

        Returns:
            str: 写到标准输出的文本
        """
        raise NotImplementedError
