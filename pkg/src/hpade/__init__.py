"""Exact construction of mutually inverse polynomial matrices from
simultaneous rational approximations.

Given a tuple [f_0, ..., f_m] of Laurent series at infinity with nonzero
leading coefficients, the library solves the type I and type II
approximation problems for the m+1 distinguished multi-indices of each
family, assembles the solutions into the polynomial matrices M1 (type I
rows) and M2 (type II columns), and verifies M1(z)*M2(z) == I over Q with
zero tolerance.  All arithmetic is exact; nothing here ever touches a
float.
"""

from .diagnostics import (
    DegreeDrop,
    Normal,
    OrderShortfall,
    Singular,
    Verdict,
    VerificationReport,
)
from .duality import (
    DualityReport,
    PolyMatrix,
    assemble_m1,
    assemble_m2,
    check_duality,
    polymatrix_det,
    polymatrix_mul,
    scalar_product,
)
from .errors import (
    DimensionMismatch,
    HermitePadeError,
    InsufficientTruncation,
    LeadingZero,
    MixedInputs,
    NotNormal,
    ParseError,
    SchemaError,
    SingularMatrix,
)
from .exact_linalg import BACKEND, RatMatrix, nullspace, rank, solve_square
from .normality import NormalityReport, check_general_position, random_tuple
from .series_core import (
    LaurentSeries,
    OrderBound,
    Polynomial,
    SeriesTuple,
    format_polynomial,
    poly_shift_mul_series,
    residual_order,
    series_add,
    series_reciprocal,
)
from .type1_hp import MultiIndexType1, Type1Solution, solve_type1, verify_type1
from .type2_hp import MultiIndexType2, Type2Solution, solve_type2, verify_type2

__version__ = "1.0.0"

__all__ = [
    "BACKEND",
    "DegreeDrop",
    "DimensionMismatch",
    "DualityReport",
    "HermitePadeError",
    "InsufficientTruncation",
    "LaurentSeries",
    "LeadingZero",
    "MixedInputs",
    "MultiIndexType1",
    "MultiIndexType2",
    "Normal",
    "NormalityReport",
    "NotNormal",
    "OrderBound",
    "OrderShortfall",
    "ParseError",
    "PolyMatrix",
    "Polynomial",
    "RatMatrix",
    "SchemaError",
    "SeriesTuple",
    "Singular",
    "SingularMatrix",
    "Type1Solution",
    "Type2Solution",
    "Verdict",
    "VerificationReport",
    "assemble_m1",
    "assemble_m2",
    "check_duality",
    "check_general_position",
    "format_polynomial",
    "nullspace",
    "poly_shift_mul_series",
    "polymatrix_det",
    "polymatrix_mul",
    "random_tuple",
    "rank",
    "residual_order",
    "scalar_product",
    "series_add",
    "series_reciprocal",
    "solve_square",
    "solve_type1",
    "solve_type2",
    "verify_type1",
    "verify_type2",
]
