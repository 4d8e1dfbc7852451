from .place import Place as Place
from .series import expand_at as expand_at
from .series import LaurentSeries as LaurentSeries
from .series import laurent_expand as laurent_expand
from .divisor import Divisor as Divisor
from .divisor import divisor as divisor
from .residue import residue_fdg as residue_fdg
from .residue import residue_form as residue_form
from .valuation import unit_part as unit_part
from .valuation import reduce_at as reduce_at
from .valuation import valuation as valuation
from .valuation import PlaceValuation as PlaceValuation
from .valuation import DiscreteValuation as DiscreteValuation
