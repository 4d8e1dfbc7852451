from .poly import Poly as Poly
from .bipoly import BiPoly as BiPoly
from .factor import factorize as factorize
from .factor import factor_list as factor_list
from .factor import galois_field as galois_field
from .factor import is_irreducible as is_irreducible
from .factor import factor_rational as factor_rational
from .bifactor import factor_bivariate as factor_bivariate
from .fields import eps2 as eps2
from .fields import eps3 as eps3
from .fields import Domain as Domain
from .fields import FieldElem as FieldElem
from .fields import Rationals as Rationals
from .fields import PrimeField as PrimeField
from .fields import nil_inverse as nil_inverse
from .fields import ExtensionField as ExtensionField
from .fields import NilpotentExtension as NilpotentExtension
from .linalg import norm as norm
from .linalg import trace as trace
from .linalg import norm_and_trace as norm_and_trace
from .rational import FactoredForm as FactoredForm
from .rational import FunctionField as FunctionField
from .rational import RationalFunction as RationalFunction
