"""Skew polynomial rings over finite chain rings and their Petit algebras."""

from .algebra import AlgElem, PetitAlgebra, cyclic_algebra
from .chainring import (
    F4,
    F8,
    GR42,
    ChainRing,
    RingElement,
    RingMorphism,
    frobenius_lift,
    identity,
    inner_derivation,
)
from .codes import SkewCode, build_code, right_divisors
from .ggr import ggr_check, norm_map, reduce_algebra
from .pseudolinear import Matrix, PseudoLinearMap, companion, det
from .skewpoly import SkewPoly, SkewPolyContext, left_divmod, right_divmod

__version__ = "0.1.0"

__all__ = [
    "AlgElem", "PetitAlgebra", "cyclic_algebra",
    "F4", "F8", "GR42", "ChainRing", "RingElement", "RingMorphism",
    "frobenius_lift", "identity", "inner_derivation",
    "SkewCode", "build_code", "right_divisors",
    "ggr_check", "norm_map", "reduce_algebra",
    "Matrix", "PseudoLinearMap", "companion", "det",
    "SkewPoly", "SkewPolyContext", "left_divmod", "right_divmod",
]
