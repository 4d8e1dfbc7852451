from .base import BaseVerifier as BaseVerifier
from .data import SpotCheck as SpotCheck
from .data import LocalContribution as LocalContribution
from .data import ReciprocityReport as ReciprocityReport
from .data import EnumerationCertificate as EnumerationCertificate
from .line import WeilVerifier as WeilVerifier
from .line import DegreeVerifier as DegreeVerifier
from .line import ResidueVerifier as ResidueVerifier
from .line import weil_check as weil_check
from .line import degree_sum_check as degree_sum_check
from .line import residue_sum_check as residue_sum_check
from .surface import ParshinCurveVerifier as ParshinCurveVerifier
from .surface import ParshinPointVerifier as ParshinPointVerifier
from .surface import parshin_curve_sum_check as parshin_curve_sum_check
from .surface import parshin_point_sum_check as parshin_point_sum_check
