from .cyclo import CycloScalar, cyclo_arith, cyclo_new, cyclotomic_polynomial, dbar
from .genericq import GenericQScalar
from .multipoly import MultiPoly, poly_arith, poly_substitute

__all__ = [
    "CycloScalar",
    "GenericQScalar",
    "MultiPoly",
    "cyclo_arith",
    "cyclo_new",
    "cyclotomic_polynomial",
    "dbar",
    "poly_arith",
    "poly_substitute",
]
