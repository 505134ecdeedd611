"""Antipodes of permutations in the Malvenuto-Reutenauer Hopf algebra.

The recursive antipode in :mod:`mrantipode.hopf` is the reference; the
closed formulas for ``a b 1 ... n`` live in :mod:`mrantipode.closedform` and
:mod:`mrantipode.verify` checks one against the other.
"""

from .algebra import Element, concat, shifted_shuffle, shuffle
from .closedform import CaseId, SigmaSpec, classify, theorem_antipode, theorem_component
from .hopf import TensorElement, antipode, coproduct, counit
from .words import delta, eta, sigma_A, sigma_ab, standardize

__all__ = [
    "CaseId",
    "Element",
    "SigmaSpec",
    "TensorElement",
    "antipode",
    "classify",
    "concat",
    "coproduct",
    "counit",
    "delta",
    "eta",
    "shifted_shuffle",
    "shuffle",
    "sigma_A",
    "sigma_ab",
    "standardize",
    "theorem_antipode",
    "theorem_component",
]
