"""Exact-arithmetic Jacobi rings for quasi-smooth weighted complete intersections.

The library builds bigraded Jacobi rings over the rationals (or a prime
field as a fast pre-pass), certifies quasi-smoothness, computes middle
Hodge numbers, and realizes the differential of the period map as exact
multiplication matrices whose kernel is computed by elimination.
"""

from .errors import (
    CertificationError,
    FieldMismatchError,
    ParseError,
    TableMismatchError,
    WcitError,
)
from .field import QQ, FpElement, PrimeField, Rationals, field_from_spec
from .poly import (
    ANY_DEGREE,
    BiDegree,
    Polynomial,
    VariableTable,
    bidegree_of,
    parse_polynomial,
)
from .groebner import (
    GREVLEX,
    GroebnerBasis,
    HilbertSeries,
    buchberger,
    cone_is_origin_only,
    complete_intersection_numerator,
    graded_piece_basis,
    graded_piece_dim,
    monomial_ideal_hilbert_series,
    normal_form,
    quotient_hilbert_series,
    s_polynomial,
)
from .wci import CertificationReport, WeightedCI, validate
from .jacobi import ComponentMap, JacobiRing, build_jacobi
from .torelli import HodgeTable, TorelliReport, hodge_table, torelli_map
from .fano import (
    HyperellipticFano,
    InvariantTorelliReport,
    InvolutionReport,
    MacaulayReport,
    build_fano,
    standard_quadric,
)

__version__ = "0.1.0"

__all__ = [
    "ANY_DEGREE",
    "BiDegree",
    "CertificationError",
    "CertificationReport",
    "ComponentMap",
    "FieldMismatchError",
    "FpElement",
    "GREVLEX",
    "GroebnerBasis",
    "HilbertSeries",
    "HodgeTable",
    "HyperellipticFano",
    "InvariantTorelliReport",
    "InvolutionReport",
    "JacobiRing",
    "MacaulayReport",
    "ParseError",
    "Polynomial",
    "PrimeField",
    "QQ",
    "Rationals",
    "TableMismatchError",
    "TorelliReport",
    "VariableTable",
    "WcitError",
    "WeightedCI",
    "bidegree_of",
    "buchberger",
    "build_fano",
    "build_jacobi",
    "complete_intersection_numerator",
    "cone_is_origin_only",
    "field_from_spec",
    "graded_piece_basis",
    "graded_piece_dim",
    "hodge_table",
    "monomial_ideal_hilbert_series",
    "normal_form",
    "parse_polynomial",
    "quotient_hilbert_series",
    "s_polynomial",
    "torelli_map",
    "validate",
]
