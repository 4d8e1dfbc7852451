from enum import Enum
from typing import Final

INFINITY_NAME: Final[str] = "inf"
"""无穷远点的名字"""

EXTENSION_GENERATOR: Final[str] = "a"
"""有限扩域生成元的名字"""

RESIDUE_GENERATOR: Final[str] = "b"
"""扩域上的点的剩余域生成元的名字"""

LINE_VARIABLE: Final[str] = "t"
SURFACE_VARIABLES: Final[tuple[str, str]] = ("x", "y")

EPS_SQUARE_ZERO: Final[tuple[str, str]] = ("eps1", "eps2")
EPS_TRUNCATED: Final[str] = "eps"

SCHEMA_FILE: Final[str] = "report.schema.json"


class LawEnum(str, Enum):
    DEGREE = "degree"
    WEIL = "weil"
    RESIDUE = "residue"
    PARSHIN_POINTS = "parshin-points"
    PARSHIN_CURVES = "parshin-curves"

    def __str__(self) -> str:
        return self.value


class ChartEnum(str, Enum):
    """P^1 x P^1 的四个标准坐标卡, 大写表示取倒数的坐标"""

    XY = "xy"
    INV_X = "Xy"
    INV_Y = "xY"
    INV_XY = "XY"

    @property
    def inverts_x(self) -> bool:
        return self.value[0] == "X"

    @property
    def inverts_y(self) -> bool:
        return self.value[1] == "Y"

    def __str__(self) -> str:
        return self.value


class RenderType(str, Enum):
    json = "json"
    text = "text"
