"""Circuit intermediate representation: gates, circuits, structural operations."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Callable, Iterable

from ..errors import DimMismatchError
from .perm import TAU_LABELS

__all__ = [
    "Op",
    "Circuit",
    "compose",
    "adjoint",
    "tensor",
    "print_circuit",
    "SINGLE_QUTRIT_KINDS",
    "BASE_KINDS",
]

# single-qutrit gate kinds (usable as controlled targets)
SINGLE_QUTRIT_KINDS = frozenset(
    {"X", "Z", "S", "SDG", "H", "HDG", "T", "TDG", "R", "TAU", "ZPHASE", "XPHASE"}
)
# the base set that full expansion is allowed to emit
BASE_KINDS = frozenset({"X", "Z", "S", "SDG", "H", "HDG", "T", "TDG", "TAU", "CX"})
_ALL_KINDS = SINGLE_QUTRIT_KINDS | {"CX", "C2", "LAMBDA"}


def _check_third(value: Fraction, name: str) -> Fraction:
    if value.denominator not in (1, 3):
        raise ValueError(f"{name} must be an integer or a third, got {value}")
    return value % 3


@dataclass(frozen=True)
class Op:
    """One gate application.

    ``kind`` is the canonical gate mnemonic.  ``params`` carries the
    permutation label for TAU and the two phase exponents (in units of
    omega = exp(2*pi*i/3), thirds allowed) for ZPHASE/XPHASE.  Controlled
    gates (C2, LAMBDA) store the target gate in ``inner`` (whose single wire
    is the absolute target wire) and C2 may carry a controlled global phase
    ``phase`` = (sign, e) meaning sign * zeta_9**e.
    """

    kind: str
    wires: tuple[int, ...]
    params: tuple = ()
    inner: "Op | None" = None
    phase: tuple[int, int] | None = None

    def __post_init__(self):
        if self.kind not in _ALL_KINDS:
            raise ValueError(f"unknown gate kind {self.kind!r}")
        if self.kind in ("C2", "LAMBDA"):
            if len(self.wires) != 1:
                raise ValueError(f"{self.kind} takes one control wire")
            if self.inner is None:
                raise ValueError(f"{self.kind} requires a target gate")
            if self.inner.kind not in SINGLE_QUTRIT_KINDS:
                raise ValueError(f"{self.kind} target must be a single-qutrit gate")
            if self.inner.wires[0] == self.wires[0]:
                raise ValueError("control and target wires must differ")
        elif self.kind == "CX":
            if len(self.wires) != 2 or self.wires[0] == self.wires[1]:
                raise ValueError("CX takes two distinct wires")
        else:
            if len(self.wires) != 1:
                raise ValueError(f"{self.kind} takes one wire")
        if self.kind == "TAU":
            if len(self.params) != 1 or self.params[0] not in TAU_LABELS:
                raise ValueError(f"TAU takes a cycle label from {TAU_LABELS}")
        elif self.kind in ("ZPHASE", "XPHASE"):
            if len(self.params) != 2:
                raise ValueError(f"{self.kind} takes two phase exponents")
            a = _check_third(Fraction(self.params[0]), "first exponent")
            b = _check_third(Fraction(self.params[1]), "second exponent")
            object.__setattr__(self, "params", (a, b))
        elif self.params:
            raise ValueError(f"{self.kind} takes no parameters")
        if self.phase is not None:
            if self.kind != "C2":
                raise ValueError("only C2 carries a controlled phase")
            s, e = self.phase
            if s not in (1, -1):
                raise ValueError("phase sign must be +1 or -1")
            object.__setattr__(self, "phase", (s, e % 9))
            if self.phase == (1, 0):
                object.__setattr__(self, "phase", None)

    def all_wires(self) -> tuple[int, ...]:
        if self.inner is not None:
            return self.wires + self.inner.wires
        return self.wires

    def remap(self, where: Callable[[int], int]) -> Op:
        inner = self.inner.remap(where) if self.inner is not None else None
        return replace(self, wires=tuple(where(w) for w in self.wires), inner=inner)


@dataclass(frozen=True)
class Circuit:
    """A gate list over ``n`` qutrits; earlier ops act first."""

    n: int
    ops: tuple[Op, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("a circuit needs at least one qutrit")
        object.__setattr__(self, "ops", tuple(self.ops))
        for op in self.ops:
            for w in op.all_wires():
                if not 0 <= w < self.n:
                    raise ValueError(f"wire {w} out of range for {self.n} qutrits")

    def __len__(self) -> int:
        return len(self.ops)


def compose(first: Circuit, second: Circuit) -> Circuit:
    """Run ``first`` then ``second``; the matrix is matrix(second) @ matrix(first)."""
    if first.n != second.n:
        raise DimMismatchError(f"{first.n} vs {second.n} qutrits")
    return Circuit(first.n, first.ops + second.ops)


_ADJOINT_SIMPLE = {
    "S": "SDG",
    "SDG": "S",
    "H": "HDG",
    "HDG": "H",
    "T": "TDG",
    "TDG": "T",
    "R": "R",
}
_ADJOINT_TAU = {"01": "01", "02": "02", "12": "12", "012": "021", "021": "012"}


def _adjoint_ops(op: Op) -> tuple[Op, ...]:
    k = op.kind
    if k in _ADJOINT_SIMPLE:
        return (replace(op, kind=_ADJOINT_SIMPLE[k]),)
    if k == "X":
        return (Op("TAU", op.wires, ("021",)),)
    if k == "Z":
        return (Op("ZPHASE", op.wires, (Fraction(2), Fraction(1))),)
    if k == "TAU":
        return (Op("TAU", op.wires, (_ADJOINT_TAU[op.params[0]],)),)
    if k in ("ZPHASE", "XPHASE"):
        a, b = op.params
        return (Op(k, op.wires, (-a % 3, -b % 3)),)
    if k == "CX":
        return (op, op)
    if k in ("C2", "LAMBDA"):
        (inner_adj,) = _adjoint_ops(op.inner)
        phase = None
        if op.phase is not None:
            s, e = op.phase
            phase = (s, (-e) % 9)
        return (Op(k, op.wires, inner=inner_adj, phase=phase),)
    raise AssertionError(k)


def adjoint(circ: Circuit) -> Circuit:
    """The inverse circuit: reversed gate order, each gate inverted."""
    ops: list[Op] = []
    for op in reversed(circ.ops):
        ops.extend(_adjoint_ops(op))
    return Circuit(circ.n, tuple(ops))


def tensor(top: Circuit, bottom: Circuit) -> Circuit:
    """Side-by-side product; qutrit 0 of ``top`` stays most significant."""
    shifted = tuple(op.remap(lambda w: w + top.n) for op in bottom.ops)
    return Circuit(top.n + bottom.n, top.ops + shifted)


def _fmt_third(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _fmt_phase(phase: tuple[int, int]) -> str:
    s, e = phase
    sign = "-" if s < 0 else ""
    if e == 0:
        return f"{sign}1"
    return f"{sign}zeta^{e}"


def op_text(op: Op) -> str:
    k = op.kind
    if k == "TAU":
        return f"TAU({op.params[0]}) {op.wires[0]}"
    if k in ("ZPHASE", "XPHASE"):
        a, b = op.params
        return f"{k} {_fmt_third(a)} {_fmt_third(b)} {op.wires[0]}"
    if k == "CX":
        return f"CX {op.wires[0]} {op.wires[1]}"
    if k in ("C2", "LAMBDA"):
        text = f"{k}[{op_text(op.inner)}] {op.wires[0]}"
        if op.phase is not None:
            text += f" phase={_fmt_phase(op.phase)}"
        return text
    return f"{k} {op.wires[0]}"


def print_circuit(circ: Circuit, header: Iterable[str] = ()) -> str:
    """Render a circuit in its canonical text form (parse round-trips it)."""
    lines = [f"# {h}" for h in header]
    lines.append(f"qutrits {circ.n}")
    lines.extend(op_text(op) for op in circ.ops)
    return "\n".join(lines) + "\n"
