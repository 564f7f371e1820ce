"""qident: exact verification engine for q-binomial transformation identities.

Everything is exact arithmetic over Z[zeta_N] Laurent polynomials in
fractional powers of q; there is no floating point anywhere in the package.
"""

from .qpoly import (
    QPoly,
    QMonomial,
    FactoredRational,
    TruncSeries,
    NotDivisible,
    NonRationalCoefficient,
    InfinitePole,
    NonUnitConstantTerm,
    format_qpoly,
    parse_qpoly,
)
from .cyclotomic import CycInt, zeta_power

__all__ = [
    "QPoly",
    "QMonomial",
    "FactoredRational",
    "TruncSeries",
    "CycInt",
    "zeta_power",
    "NotDivisible",
    "NonRationalCoefficient",
    "InfinitePole",
    "NonUnitConstantTerm",
    "format_qpoly",
    "parse_qpoly",
]

__version__ = "0.1.0"
