from .algebra import (
    enumerate_affine,
    evaluate,
    is_affine,
    pprm_expand,
    pprm_to_function,
    sign_decode,
    sign_vector,
)
from .esop import bist_residue, cube_library, esop_distance_table, esop_min_cubes
from .models import (
    AffineCoeffs,
    BistResidue,
    BooleanFunction,
    Cube,
    Esop,
    LiteralKind,
    PprmExpansion,
    SignVector,
)
from .textio import format_truth_table, parse_truth_table

__all__ = [
    "AffineCoeffs",
    "BistResidue",
    "BooleanFunction",
    "Cube",
    "Esop",
    "LiteralKind",
    "PprmExpansion",
    "SignVector",
    "bist_residue",
    "cube_library",
    "enumerate_affine",
    "esop_distance_table",
    "esop_min_cubes",
    "evaluate",
    "format_truth_table",
    "is_affine",
    "parse_truth_table",
    "pprm_expand",
    "pprm_to_function",
    "sign_decode",
    "sign_vector",
]
