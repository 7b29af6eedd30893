"""Adjoint representation, block residue patterns, and T-count obstructions."""

from qutrit_exact.adjoint.basis import AdjointBasis, BASIS_NORM, build_basis
from qutrit_exact.adjoint.patterns import (
    BORDERED_ONES,
    BORDERED_TWOS,
    ObstructionVerdict,
    ResiduePattern,
    pattern_equiv,
    residue_pattern,
    single_qutrit_ct_obstruction,
)
from qutrit_exact.adjoint.rep import (
    AdjointMatrix,
    adjoint_of,
    basis,
    block_lde,
    identity_adjoint,
)

__all__ = [
    "AdjointBasis",
    "AdjointMatrix",
    "BASIS_NORM",
    "BORDERED_ONES",
    "BORDERED_TWOS",
    "ObstructionVerdict",
    "ResiduePattern",
    "adjoint_of",
    "basis",
    "block_lde",
    "build_basis",
    "identity_adjoint",
    "pattern_equiv",
    "residue_pattern",
    "single_qutrit_ct_obstruction",
]
