"""Exact pole combinatorics for unramified degenerate Eisenstein series.

Pipeline: build a root system from Cartan data, split it along a maximal
parabolic node, grade the dual-nilradical coroots, decompose each level
under the principal sl2 of the dual Levi, and read off the pole
polynomial.  An independent residue-function route cross-checks every
answer.
"""

from .parabolic import (
    GradedEigenvalues,
    ParabolicData,
    affine_form,
    coroot_level,
    graded_eigenvalues,
    parabolic_data,
)
from .polemap import (
    PolePolynomial,
    numerator_zeros,
    pole_polynomial,
    pole_table,
)
from .residue_oracle import (
    AffineForm,
    FactorLists,
    cross_check,
    raw_residue_function,
    reduce,
)
from .rootsys import (
    RootSystem,
    RootSystemKind,
    Weight,
    build_root_system,
    dual,
    kostant_multisets,
    rho,
)
from .sl2decomp import NotARepresentationError, SL2Decomposition, decompose

__all__ = [
    "AffineForm",
    "FactorLists",
    "GradedEigenvalues",
    "NotARepresentationError",
    "ParabolicData",
    "PolePolynomial",
    "RootSystem",
    "RootSystemKind",
    "SL2Decomposition",
    "Weight",
    "affine_form",
    "build_root_system",
    "coroot_level",
    "cross_check",
    "decompose",
    "dual",
    "graded_eigenvalues",
    "kostant_multisets",
    "numerator_zeros",
    "parabolic_data",
    "pole_polynomial",
    "pole_table",
    "raw_residue_function",
    "reduce",
    "rho",
]

__version__ = "0.1.0"
