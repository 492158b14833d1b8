"""Exact computer algebra for noncommutative symmetric functions (NSym),
quasisymmetric functions (QSym) and the matching fragment of the classical
symmetric functions."""

from .compositions import compositions, complement, refines, reverse, transpose
from .nsym import NSymElem, convert, e, h, mul, phi, psi, r
from .qsym import F, For, M, Phi, Psi, QSymElem, pair, qconvert

__all__ = [
    "NSymElem", "QSymElem", "convert", "qconvert", "pair", "mul",
    "r", "h", "e", "psi", "phi", "M", "F", "For", "Psi", "Phi",
    "compositions", "reverse", "complement", "transpose", "refines",
]
__version__ = "0.1.0"
