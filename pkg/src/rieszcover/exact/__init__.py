"""Exact scalar and linear-algebra kernel."""

from .algebraic import (
    AlgebraicNumber,
    SignClass,
    alg_compare,
    as_alg,
    isolate_roots,
    rational_between,
    sturm_sign,
)
from .linalg import Subspace, kernel_basis, preimage, rank, rref, solve
from .lp import FarkasCertificate, LPResult, solve_lp, solve_lp_many
from .poly import Poly
from .rational import Q, fmt, vec

__all__ = [
    "AlgebraicNumber",
    "FarkasCertificate",
    "LPResult",
    "Poly",
    "Q",
    "SignClass",
    "Subspace",
    "alg_compare",
    "as_alg",
    "fmt",
    "isolate_roots",
    "kernel_basis",
    "preimage",
    "rank",
    "rational_between",
    "rref",
    "solve",
    "solve_lp",
    "solve_lp_many",
    "sturm_sign",
    "vec",
]
