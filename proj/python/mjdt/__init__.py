"""Modified jeu de taquin on unshifted and shifted skew shapes."""

from ._core import (
    CountMatrix,
    Filling,
    MjdtError,
    Shape,
    a_matrix,
    apply_permutation,
    backward_jdt,
    bj,
    canonical_order,
    enumerate_standard,
    fj,
    forward_jdt,
    hook_product,
    inverse,
    modified_jdt,
    verify,
    verify_constancy,
)

__all__ = [
    "CountMatrix",
    "Filling",
    "MjdtError",
    "Shape",
    "a_matrix",
    "apply_permutation",
    "backward_jdt",
    "bj",
    "canonical_order",
    "enumerate_standard",
    "fj",
    "forward_jdt",
    "hook_product",
    "inverse",
    "modified_jdt",
    "verify",
    "verify_constancy",
]
