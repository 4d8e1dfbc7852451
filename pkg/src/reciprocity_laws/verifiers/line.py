"""射影直线上的互反律: 次数和, Weil 互反律, 留数定理"""

from abc import ABC
from random import Random

from .base import BaseVerifier
from .data import ReciprocityReport
from ..config import Config
from ..places import Place, divisor, valuation, residue_fdg
from ..algebra import Poly, Domain, RationalFunction
from ..symbols import Provenance, SymbolValue, tame_symbol, degree_symbol
from ..sampling import random_line_function, random_place_outside
from ..constants import LawEnum

LineFunctions = tuple[RationalFunction[Poly], ...]


class LineVerifier(BaseVerifier[Place], ABC):
    """局部块为直线上的点; 支撑集为所有输入的除子支撑并上无穷远点"""

    def support(self, functions: LineFunctions) -> list[Place]:
        places: set[Place] = {Place.infinity(self.domain, functions[0].num.var)}
        for f in functions:
            places.update(divisor(f, self.config).support)
        return sorted(places, key=Place.sort_key)

    def random_piece(self, rng: Random, functions: LineFunctions, excluded: set[Place]) -> Place | None:
        return random_place_outside(
            self.domain, rng, excluded, self.config.spot_check_degree, functions[0].num.var
        )

    @classmethod
    def sample(cls, domain: Domain, rng: Random, config: Config | None = None) -> tuple[BaseVerifier, tuple]:
        return cls(domain, config), tuple(random_line_function(domain, rng) for _ in range(cls.arity))


class DegreeVerifier(LineVerifier):
    law = LawEnum.DEGREE
    arity = 1
    additive = True
    argument = "v_p(f) = 0 at every place outside the divisor of f"

    @property
    def identity(self) -> int:
        return 0

    def local(self, functions: LineFunctions, piece: Place) -> SymbolValue:
        (f,) = functions
        return SymbolValue(
            degree_symbol(f, piece),
            Provenance("degree", str(piece), (str(f),), "[k(p):k] v_p(f)", (("v_p(f)", str(valuation(f, piece))),)),
        )


class WeilVerifier(LineVerifier):
    law = LawEnum.WEIL
    arity = 2
    argument = "outside both divisors f and g are units and the tame symbol of two units is 1"

    def local(self, functions: LineFunctions, piece: Place) -> SymbolValue:
        f, g = functions
        return tame_symbol(f, g, piece)


class ResidueVerifier(LineVerifier):
    law = LawEnum.RESIDUE
    arity = 2
    additive = True
    argument = "outside both divisors f dg is a regular differential, whose residue is 0"

    def local(self, functions: LineFunctions, piece: Place) -> SymbolValue:
        f, g = functions
        return SymbolValue(residue_fdg(f, g, piece), Provenance("residue", str(piece), (str(f), str(g)), "Res_p(f dg)"))


def degree_sum_check(f: RationalFunction[Poly], config: Config | None = None) -> ReciprocityReport:
    return DegreeVerifier(f.domain, config).verify(f)


def weil_check(f: RationalFunction[Poly], g: RationalFunction[Poly], config: Config | None = None) -> ReciprocityReport:
    return WeilVerifier(f.domain, config).verify(f, g)


def residue_sum_check(
    f: RationalFunction[Poly], g: RationalFunction[Poly], config: Config | None = None
) -> ReciprocityReport:
    return ResidueVerifier(f.domain, config).verify(f, g)
