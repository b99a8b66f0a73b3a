"""Costas arrays: constructions, verification, enumeration, correlation and analysis."""

__version__ = "0.1.0"

from ._backend import BACKEND
from .core import (
    DifferenceTriangle,
    EquivalenceClass,
    Permutation,
    TRANSFORMS,
    as_permutation,
    difference_triangle,
    dihedral_transform,
    equivalence_class,
    is_costas,
    is_costas_fast,
    is_symmetric,
    naive_verify,
)
from .enumeration import EnumerationResult, enumerate_costas, forbidden_positions
from .errors import CostasError
from .finfield import FieldElement, FiniteField, field_of_order, make_field
from .generators import ConstructionSpec, enumerate_family, generate

__all__ = [
    "BACKEND",
    "ConstructionSpec",
    "CostasError",
    "DifferenceTriangle",
    "EnumerationResult",
    "EquivalenceClass",
    "FieldElement",
    "FiniteField",
    "Permutation",
    "TRANSFORMS",
    "as_permutation",
    "difference_triangle",
    "dihedral_transform",
    "enumerate_costas",
    "enumerate_family",
    "equivalence_class",
    "field_of_order",
    "forbidden_positions",
    "generate",
    "is_costas",
    "is_costas_fast",
    "is_symmetric",
    "make_field",
    "naive_verify",
]
