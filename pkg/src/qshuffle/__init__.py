"""Exact symbolic engine for the negative half of a quantum group, its
bilinear form, braid symmetries, universal Verma modules and truncated
R-matrices, over any symmetrizable Cartan datum.

All coefficients live in Z[v^{±1}, s(p,i)^{±1}] (v^2 = q) or its fraction
field; every identity the package verifies is an exact Laurent-polynomial
equality.
"""

from .cartan import CartanDatum, CartanError, SizeError, named_datum, validate_datum
from .context import Context
from .scalars import LaurentPoly, ScalarFraction, ScalarRing, fraction_reduce, qnum

__all__ = [
    "CartanDatum", "CartanError", "SizeError", "named_datum", "validate_datum",
    "Context", "LaurentPoly", "ScalarFraction", "ScalarRing", "fraction_reduce",
    "qnum",
]

__version__ = "0.1.0"
