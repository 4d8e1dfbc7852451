"""射影直线与 P^1 x P^1 上互反律的精确验证"""

from .config import Config as Config
from .config import pconfig as pconfig
from .verifiers import BaseVerifier as BaseVerifier
from .verifiers import ReciprocityReport as ReciprocityReport
from .verifiers import weil_check as weil_check
from .verifiers import degree_sum_check as degree_sum_check
from .verifiers import residue_sum_check as residue_sum_check
from .verifiers import parshin_curve_sum_check as parshin_curve_sum_check
from .verifiers import parshin_point_sum_check as parshin_point_sum_check

__version__ = "0.1.0"
