"""Exact polynomial and number-field arithmetic."""

from .intpoly import IntPoly, root_multiplicity, squarefree_decompose
from .factor import FactoredPoly, factor_irreducible
from .numberfield import AlgebraicRootClass, NumberFieldElem, kernel_basis, nf_div
from .realroots import (
    RealRootInterval,
    isolate_real_roots,
    largest_real_root_interval,
    sturm_chain,
)

__all__ = [
    "IntPoly",
    "FactoredPoly",
    "AlgebraicRootClass",
    "NumberFieldElem",
    "RealRootInterval",
    "factor_irreducible",
    "squarefree_decompose",
    "root_multiplicity",
    "nf_div",
    "kernel_basis",
    "isolate_real_roots",
    "largest_real_root_interval",
    "sturm_chain",
]
