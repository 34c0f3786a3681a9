"""Mixed-norm inequality toolkit for non-negative multilinear forms."""

from mixnorm._core import (
    ExtReal,
    NormEstimate,
    OracleResult,
    Tensor,
    admissible,
    alternating_ascent,
    bayart_check,
    conjugate,
    contract,
    critical_exponents,
    delta,
    diagonal,
    diagonal_norm_closed_form,
    evaluate,
    falsify,
    grid_oracle,
    i0_index,
    mixed_norm,
    permute_axes,
    pinned_diagonal,
    pinned_norm_closed_form,
    reduce,
    reduced_spaces,
    sharpness_experiment,
    verify_random,
)

__all__ = [
    "ExtReal",
    "NormEstimate",
    "OracleResult",
    "Tensor",
    "admissible",
    "alternating_ascent",
    "bayart_check",
    "conjugate",
    "contract",
    "critical_exponents",
    "delta",
    "diagonal",
    "diagonal_norm_closed_form",
    "evaluate",
    "falsify",
    "grid_oracle",
    "i0_index",
    "mixed_norm",
    "permute_axes",
    "pinned_diagonal",
    "pinned_norm_closed_form",
    "reduce",
    "reduced_spaces",
    "sharpness_experiment",
    "verify_random",
]
