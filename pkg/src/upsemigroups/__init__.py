"""Finite UP-algebras paired with semigroups: checks, classes, power-set
models and exhaustive small-order enumeration."""

from .core import (
    AxiomError,
    CayleyTable,
    CheckReport,
    ClassLabel,
    DistributivityProfile,
    DomainError,
    SemigroupOp,
    UpAlgebra,
    Witness,
    check_associativity,
    check_derived_properties,
    check_distributivity_consequences,
    check_up_axioms,
    classify,
    distributivity_profile,
    left_distributes,
    right_distributes,
)
from .fileformat import AlgebraFile, ParseError, parse_algebra_file

__all__ = [
    "AlgebraFile",
    "AxiomError",
    "CayleyTable",
    "CheckReport",
    "ClassLabel",
    "DistributivityProfile",
    "DomainError",
    "ParseError",
    "SemigroupOp",
    "UpAlgebra",
    "Witness",
    "check_associativity",
    "check_derived_properties",
    "check_distributivity_consequences",
    "check_up_axioms",
    "classify",
    "distributivity_profile",
    "left_distributes",
    "parse_algebra_file",
    "right_distributes",
]
