from .flag import Curve as Curve
from .flag import Flag2D as Flag2D
from .flag import pullback as pullback
from .flag import DigitSequence as DigitSequence
from .flag import CurveValuation as CurveValuation
from .flag import parshin_digits as parshin_digits
from .parshin import sign_exponent as sign_exponent
from .parshin import parshin_oracle as parshin_oracle
from .parshin import parshin_symbol as parshin_symbol
from .parshin import parshin_exponents as parshin_exponents
