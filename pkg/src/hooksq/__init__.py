"""Exact multiplicities of irreducibles in the tensor, symmetric and exterior
squares of hook representations of symmetric groups.

Three independent engines answer the same question: closed-form formulas,
a character-theoretic oracle, and a direct Young-symmetrizer computation on
colored tableau bases.  Everything is exact integer arithmetic.
"""

from .characters import (
    ClassFunction,
    IntegrityError,
    MultiplicityTable,
    ORACLE_MAX_N,
    decompose_oracle,
    hook_rep_character,
    inner_product,
    irreducible_character,
    mn_character,
    restrict_character,
    square_characters,
)
from .closed_form import full_table, indicator, psi, remmel_multiplicity, sym_ext_multiplicity
from .partitions import (
    MAX_N,
    CycleType,
    DoubleHook,
    Hook,
    OtherShape,
    Partition,
    Permutation,
    add_box_column,
    branch_up,
    class_size,
    classify_shape,
    dimension,
    double_hook_partition,
    enumerate_partitions,
    hook_partition,
    power_square,
    transpose,
)
from .tableaux import (
    BudgetError,
    Coloring,
    DEFAULT_PAIR_BUDGET,
    SymmetrizerReport,
    TensorVector,
    action_sign,
    apply_column_antisymmetrizer,
    apply_restricted_symmetrizer,
    apply_row_symmetrizer,
    apply_symmetrizer,
    embed_perm,
    enumerate_colorings,
    expected_skew_sign,
    is_proper_swap,
    monotone_color_matching,
    project_to_standard,
    restriction_compatible,
    restriction_coloring,
    restriction_shape,
    tensor_complement,
    tensor_swap,
    verify_skew_symmetry,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetError",
    "ClassFunction",
    "Coloring",
    "CycleType",
    "DEFAULT_PAIR_BUDGET",
    "DoubleHook",
    "Hook",
    "IntegrityError",
    "MAX_N",
    "MultiplicityTable",
    "ORACLE_MAX_N",
    "OtherShape",
    "Partition",
    "Permutation",
    "SymmetrizerReport",
    "TensorVector",
    "action_sign",
    "add_box_column",
    "apply_column_antisymmetrizer",
    "apply_restricted_symmetrizer",
    "apply_row_symmetrizer",
    "apply_symmetrizer",
    "branch_up",
    "class_size",
    "classify_shape",
    "decompose_oracle",
    "dimension",
    "double_hook_partition",
    "embed_perm",
    "enumerate_colorings",
    "enumerate_partitions",
    "expected_skew_sign",
    "full_table",
    "hook_partition",
    "hook_rep_character",
    "indicator",
    "inner_product",
    "irreducible_character",
    "is_proper_swap",
    "mn_character",
    "monotone_color_matching",
    "power_square",
    "project_to_standard",
    "psi",
    "remmel_multiplicity",
    "restrict_character",
    "restriction_compatible",
    "restriction_coloring",
    "restriction_shape",
    "square_characters",
    "sym_ext_multiplicity",
    "tensor_complement",
    "tensor_swap",
    "transpose",
    "verify_skew_symmetry",
]
