"""Circuit intermediate representation, text format, and macro expansion."""

from qutrit_exact.circuit.core import (
    BASE_KINDS,
    Circuit,
    Op,
    SINGLE_QUTRIT_KINDS,
    adjoint,
    compose,
    op_text,
    print_circuit,
    tensor,
)
from qutrit_exact.circuit.macros import (
    DATA_ENV,
    circuits_dir,
    expand_macros,
    load_named,
    macro_names,
    t_count,
)
from qutrit_exact.circuit.parse import parse_circuit
from qutrit_exact.circuit.perm import TAU_LABELS, Permutation, perm_compose

__all__ = [
    "BASE_KINDS",
    "Circuit",
    "DATA_ENV",
    "Op",
    "Permutation",
    "SINGLE_QUTRIT_KINDS",
    "TAU_LABELS",
    "adjoint",
    "circuits_dir",
    "compose",
    "expand_macros",
    "load_named",
    "macro_names",
    "op_text",
    "parse_circuit",
    "perm_compose",
    "print_circuit",
    "t_count",
    "tensor",
]
