"""Exact unitary simulation."""

from .gates import circuit_matrix, gate_local, gate_matrix, MAX_QUTRITS
from .matrix import (
    PhaseMatch,
    UnitaryMatrix,
    controlled_target,
    equal_exact,
    equal_up_to_phase,
)

__all__ = [
    "MAX_QUTRITS",
    "PhaseMatch",
    "UnitaryMatrix",
    "circuit_matrix",
    "controlled_target",
    "equal_exact",
    "equal_up_to_phase",
    "gate_local",
    "gate_matrix",
]
