from .base import BaseRenderer
from .plain import TextRenderer
from .structured import JsonRenderer
from ..constants import RenderType

_RENDERERS: dict[RenderType, BaseRenderer] = {
    RenderType.json: JsonRenderer(),
    RenderType.text: TextRenderer(),
}


def get_renderer(render_type: RenderType) -> BaseRenderer:
    """根据输出格式获取对应的 Renderer"""
    return _RENDERERS[render_type]
