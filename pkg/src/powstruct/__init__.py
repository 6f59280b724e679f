"""Powers of power series with exponents in the coefficient ring.

Exact computations over the integers and over Laurent polynomials in the
Lefschetz class ``L``, a computable model of the Grothendieck ring of complex
varieties localized at ``L``.
"""

from .errors import (
    DomainError,
    InvalidSubstitutionError,
    InvariantError,
    NotInvertibleError,
    OrderMismatchError,
    ParseError,
    PowStructError,
)
from .laurent import L, LaurentPoly
from .power import ZetaDecomposition, decompose, power, recompose, sym_pow
from .rings import (
    LAURENT,
    ZZ,
    euler_spec,
    euler_spec_series,
    multiset_binomial,
    zeta_int,
    zeta_laurent,
)
from .series import TruncSeries

__version__ = "0.1.0"

__all__ = [
    "DomainError",
    "InvalidSubstitutionError",
    "InvariantError",
    "NotInvertibleError",
    "OrderMismatchError",
    "ParseError",
    "PowStructError",
    "L",
    "LaurentPoly",
    "ZetaDecomposition",
    "decompose",
    "power",
    "recompose",
    "sym_pow",
    "LAURENT",
    "ZZ",
    "euler_spec",
    "euler_spec_series",
    "multiset_binomial",
    "zeta_int",
    "zeta_laurent",
    "TruncSeries",
]
