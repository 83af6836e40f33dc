"""Irreducible representations of the symmetric group from Young-tableau projectors.

Everything is exact: permutations, group-algebra elements with integer
coefficients, integer matrices.  Products of permutations are read left to
right (``a * b`` applies ``a`` first).
"""
from .characters import CharacterTable, character_table, mn_character, scaled_unit, verify_units
from .intmatrix import IntMatrix
from .perm import (
    AlgebraElement,
    CycleType,
    Permutation,
    SizeMismatchError,
    algebra_multiply,
    all_permutations,
    compose,
    conjugacy_classes,
    cycle_type,
    inverse,
    parity,
)
from .projectors import (
    IrrepBundle,
    brute_force_projector,
    g_matrix,
    irrep_bundle,
    projector_coordinate,
    projector_expand,
    verify_projector_relations,
)
from .report import CostGuardError, Report
from .representations import RepMatrix, rep_matrix, verify_duality, verify_homomorphism, y_matrix
from .tableaux import (
    Partition,
    StandardTableau,
    TableauFilling,
    column_antisymmetrizer,
    dimension,
    intertwiner,
    partitions,
    row_symmetrizer,
    standard_tableaux,
)

__version__ = "0.1.0"

__all__ = [
    "CharacterTable",
    "character_table",
    "mn_character",
    "scaled_unit",
    "verify_units",
    "IntMatrix",
    "AlgebraElement",
    "CycleType",
    "Permutation",
    "SizeMismatchError",
    "algebra_multiply",
    "all_permutations",
    "compose",
    "conjugacy_classes",
    "cycle_type",
    "inverse",
    "parity",
    "IrrepBundle",
    "brute_force_projector",
    "g_matrix",
    "irrep_bundle",
    "projector_coordinate",
    "projector_expand",
    "verify_projector_relations",
    "CostGuardError",
    "Report",
    "RepMatrix",
    "rep_matrix",
    "verify_duality",
    "verify_homomorphism",
    "y_matrix",
    "Partition",
    "StandardTableau",
    "TableauFilling",
    "column_antisymmetrizer",
    "dimension",
    "intertwiner",
    "partitions",
    "row_symmetrizer",
    "standard_tableaux",
]
