"""Computational toolkit for finite unital rings: radicals, clean-type
decompositions, matrix-style constructions and executable ring theorems."""

from .classify import DecompKind, DecompMode, classify_all, decompositions, has_clean_property
from .core import (
    AxiomError,
    FiniteRing,
    RingError,
    SizeError,
    TableRing,
    materialize,
    require_valid,
    validate_axioms,
)
from .expr import ParseError, evaluate, parse
from .ideals import Ideal, QuotientMap, ideal_closure, quotient_ring
from .radicals import (
    JacobsonData,
    idempotents_lift_mod,
    jacobson_data,
    jacobson_quotient,
    jacobson_radical,
    sqrt_jacobson,
)
from .subsets import ElementSubset, center, idempotents, inverse, nilpotents, units

__version__ = "0.1.0"

__all__ = [
    "AxiomError",
    "DecompKind",
    "DecompMode",
    "ElementSubset",
    "FiniteRing",
    "Ideal",
    "JacobsonData",
    "ParseError",
    "QuotientMap",
    "RingError",
    "SizeError",
    "TableRing",
    "center",
    "classify_all",
    "decompositions",
    "evaluate",
    "has_clean_property",
    "idempotents",
    "idempotents_lift_mod",
    "ideal_closure",
    "inverse",
    "jacobson_data",
    "jacobson_quotient",
    "jacobson_radical",
    "materialize",
    "nilpotents",
    "parse",
    "quotient_ring",
    "require_valid",
    "sqrt_jacobson",
    "units",
    "validate_axioms",
]
