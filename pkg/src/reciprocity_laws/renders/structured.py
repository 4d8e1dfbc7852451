from typing import TYPE_CHECKING
from typing_extensions import override

import msgspec

from .base import BaseRenderer

if TYPE_CHECKING:
    from ..cli.data import CommandReport


class JsonRenderer(BaseRenderer):
    """JSON 输出, 字段顺序即声明顺序"""

    @override
    def render(self, report: "CommandReport") -> str:
        if report.error is not None:
            payload = msgspec.json.encode({"error": report.error})
        else:
            payload = msgspec.json.encode(report)
        return msgspec.json.format(payload, indent=2).decode()
