"""Exact engine for inversion-set combinatorics and cone-type automata
of finitely generated Coxeter groups."""

from .core import CoxeterMatrix, CoxeterSystem, Element, Root, system_from_json
from .field import AlgebraicReal, RealCyclotomicField, minimal_polynomial

__all__ = [
    "AlgebraicReal",
    "CoxeterMatrix",
    "CoxeterSystem",
    "Element",
    "RealCyclotomicField",
    "Root",
    "minimal_polynomial",
    "system_from_json",
]
