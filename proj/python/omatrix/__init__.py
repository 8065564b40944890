"""Exact verification of operator solutions of the classical Yang-Baxter
equation and of the structures they induce: polynomial Poisson brackets,
phase-space models, crossed and semidirect doubles, and the one-derivation
differential family.

All scalars crossing this boundary are exact rationals rendered as strings
"p/q"."""

from _omatrix import (
    InputError,
    LieAlgebra,
    Representation,
    check_artin,
    check_qybe,
    clebsch_images,
    cybe_defect,
    explain,
    gmu_dual_parameter,
    induced_bracket_entries,
    is_o_operator,
    is_r_operator,
    linear_poisson_entry,
    list_checks,
    quadratic_poisson_entry,
    run_manifest,
    __version__,
)

__all__ = [
    "InputError",
    "LieAlgebra",
    "Representation",
    "check_artin",
    "check_qybe",
    "clebsch_images",
    "cybe_defect",
    "explain",
    "gmu_dual_parameter",
    "induced_bracket_entries",
    "is_o_operator",
    "is_r_operator",
    "linear_poisson_entry",
    "list_checks",
    "quadratic_poisson_entry",
    "run_manifest",
    "__version__",
]
