from .data import Provenance as Provenance
from .data import SymbolValue as SymbolValue
from .curve import tame_symbol as tame_symbol
from .curve import eps3_pairing as eps3_pairing
from .curve import degree_symbol as degree_symbol
from .curve import pairing_residue as pairing_residue
from .curve import residue_pairing as residue_pairing
from .curve import nilpotent_symbol as nilpotent_symbol
from .curve import tame_from_boundary as tame_from_boundary
from .curve import degree_from_boundary as degree_from_boundary
from .milnor import MilnorSymbol as MilnorSymbol
from .milnor import milnor_boundary as milnor_boundary
