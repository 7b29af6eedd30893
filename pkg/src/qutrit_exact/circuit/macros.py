"""Expansion of circuits over the base gate set {X, Z, S, S†, H, H†, T, T†, CX, τ}.

Controlled gates expand by splicing in pre-derived two-qutrit circuits stored
as data files (see the ``circuits/`` directory; ``QUTRIT_EXACT_CIRCUITS``
overrides the location).  Phase gates expand algebraically:
ZPHASE a b = Z^a S^(b-2a) for integer exponents, with one T or T† peeled off
first when the exponents are proper thirds; XPHASE conjugates that by H.

A controlled gate C2[g] phase=p is expandable only if det(p*g) is +1 or -1:
every base gate on two qutrits has determinant +1 or -1 (one-qutrit gates embed
as G tensor I with det(G)^3 = +1 or -1, and CX is an even permutation), so a
controlled block whose determinant is any other ninth root of unity cannot be
reached exactly.  Such requests raise UNEXPANDABLE; expandable targets without
a registered data file raise UNKNOWN_MACRO.
"""

from __future__ import annotations

import os
from fractions import Fraction
from pathlib import Path

from ..errors import UnexpandableError, UnknownMacroError
from .core import BASE_KINDS, Circuit, Op
from .parse import parse_circuit

__all__ = [
    "DATA_ENV",
    "circuits_dir",
    "load_named",
    "macro_names",
    "expand_macros",
    "t_count",
]

DATA_ENV = "QUTRIT_EXACT_CIRCUITS"

# C2 expansions: (inner kind, inner params, phase) -> data file stem
_C2_FILES: dict[tuple, str] = {
    ("X", (), None): "c2x",
    ("TAU", ("012",), None): "c2x",
    ("TAU", ("021",), None): "c2xdg",
    ("TAU", ("12",), None): "c2tau12",
    ("TAU", ("01",), None): "c2tau01",
    ("TAU", ("02",), None): "c2tau02",
    ("SDG", (), (1, 1)): "c2sdg_phase",
    ("ZPHASE", (Fraction(1), Fraction(1)), (1, 7)): "c2z11_phase",
    ("HDG", (), (-1, 0)): "c2neg_hdg",
    ("TAU", ("12",), (-1, 0)): "c2neg_tau12",
}

_STANDALONE = ("r_construction", "r_construction_naive")


def macro_names() -> tuple[str, ...]:
    """Stems of every circuit data file the package relies on."""
    return tuple(sorted(set(_C2_FILES.values()))) + _STANDALONE


def circuits_dir() -> Path:
    """Directory holding the .qc data files."""
    override = os.environ.get(DATA_ENV)
    if override:
        return Path(override)
    for parent in Path(__file__).resolve().parents:
        cand = parent / "circuits"
        if cand.is_dir():
            return cand
    return Path.cwd() / "circuits"


_CACHE: dict[Path, Circuit] = {}


def load_named(name: str) -> Circuit:
    """Load and cache a circuit data file by stem name."""
    path = (circuits_dir() / f"{name}.qc").resolve()
    if path not in _CACHE:
        try:
            text = path.read_text()
        except OSError as exc:
            raise UnknownMacroError(f"cannot read circuit file {path}") from exc
        circ = parse_circuit(text)
        if circ.n != 2:
            raise UnknownMacroError(f"{path} must be a two-qutrit circuit")
        for op in circ.ops:
            if op.kind not in BASE_KINDS:
                raise UnknownMacroError(f"{path} contains non-base gate {op.kind}")
        _CACHE[path] = circ
    return _CACHE[path]


def _det_exponent(op: Op) -> Fraction | None:
    """e with det(gate) = zeta_9**(3e), or None for det -1 gates."""
    k = op.kind
    if k == "R":
        return None  # det diag(1, 1, -1) = -1
    if k in ("X", "Z", "T", "TDG", "H", "HDG"):
        return Fraction(0)
    if k == "TAU":
        return Fraction(0) if op.params[0] in ("012", "021") else None
    if k in ("ZPHASE", "XPHASE"):
        a, b = op.params
        return (a + b) % 3
    if k in ("S",):
        return Fraction(1)
    if k == "SDG":
        return Fraction(2)
    raise AssertionError(k)


def _c2_obstruction(op: Op) -> str | None:
    """Reason the controlled gate cannot be reached exactly, or None."""
    e = _det_exponent(op.inner)
    sign_flips = e is None
    e_val = Fraction(0) if e is None else e
    if op.phase is not None:
        _, pe = op.phase
        e_val += pe
    if e_val % 3 != 0:
        zeta_exp = int(3 * (e_val % 3))
        det = f"omega^{zeta_exp // 3}" if zeta_exp % 3 == 0 else f"zeta^{zeta_exp}"
        return (
            f"controlled block has determinant {det}, but every two-qutrit "
            "circuit over the base set has determinant +1 or -1"
        )
    _ = sign_flips  # determinant -1 blocks are fine: tau layers supply -1
    return None


def _int_zphase_ops(wire: int, a: int, b: int) -> list[Op]:
    """Z(a, b) = Z^a * S^(b - 2a) exactly (all exponents mod 3)."""
    ops = [Op("Z", (wire,))] * (a % 3)
    ops += [Op("S", (wire,))] * ((b - 2 * a) % 3)
    return ops


def _zphase_ops(wire: int, a: Fraction, b: Fraction) -> list[Op]:
    if (a + b) % 1 != 0:
        raise UnexpandableError(
            f"ZPHASE {a} {b} has determinant zeta^{int(3 * ((a + b) % 3))}, "
            "not reachable over the base set"
        )
    if a.denominator == 1:
        return _int_zphase_ops(wire, int(a % 3), int(b % 3))
    m = int(3 * a)  # not divisible by 3
    j0 = ((m + 1) % 3) - 1  # balanced residue in {-1, 0, 1}; here +-1
    ops = [Op("T" if j0 == 1 else "TDG", (wire,))]
    ops += _int_zphase_ops(wire, (m - j0) // 3 % 3, (int(3 * b) + j0) // 3 % 3)
    return ops


_SQUARE_SIMPLE = {
    "X": ("TAU", ("021",), None),
    "Z": ("ZPHASE", (Fraction(2), Fraction(1)), None),
    "S": ("SDG", (), None),
    "SDG": ("S", (), None),
    "H": ("TAU", ("12",), (-1, 0)),
    "HDG": ("TAU", ("12",), (-1, 0)),
}


def _square_c2(op: Op) -> Op | None:
    """C2 applying inner^2 (with controlled phase where needed), or None if inner^2 = I."""
    inner = op.inner
    k = inner.kind
    phase = None
    if k in _SQUARE_SIMPLE:
        kind, params, phase = _SQUARE_SIMPLE[k]
        sq = Op(kind, inner.wires, params)
    elif k == "TAU":
        label = inner.params[0]
        if label in ("01", "02", "12"):
            return None
        sq = Op("TAU", inner.wires, ("021" if label == "012" else "012",))
    elif k == "R":
        return None
    elif k in ("T", "TDG"):
        a, b = (Fraction(2, 3), Fraction(-2, 3)) if k == "T" else (Fraction(-2, 3), Fraction(2, 3))
        sq = Op("ZPHASE", inner.wires, (a % 3, b % 3))
    elif k in ("ZPHASE", "XPHASE"):
        a, b = inner.params
        if (2 * a) % 3 == 0 and (2 * b) % 3 == 0:
            return None
        sq = Op(k, inner.wires, ((2 * a) % 3, (2 * b) % 3))
    else:
        raise AssertionError(k)
    return Op("C2", op.wires, inner=sq, phase=phase)


def _expand_op(op: Op, n: int, out: list[Op]) -> None:
    k = op.kind
    if k in BASE_KINDS:
        out.append(op)
        return
    w = op.wires[0]
    if k == "ZPHASE":
        out.extend(_zphase_ops(w, *op.params))
        return
    if k == "XPHASE":
        out.append(Op("HDG", (w,)))
        out.extend(_zphase_ops(w, *op.params))
        out.append(Op("H", (w,)))
        return
    if k == "R":
        if n < 2:
            raise UnexpandableError(
                "R on a lone qutrit: the construction borrows a second qutrit"
            )
        partner = min(x for x in range(n) if x != w)
        body = load_named("r_construction")
        table = {0: w, 1: partner}
        out.extend(sub.remap(lambda x: table[x]) for sub in body.ops)
        return
    if k == "C2":
        reason = _c2_obstruction(op)
        if reason is not None:
            raise UnexpandableError(reason)
        key = (op.inner.kind, op.inner.params, op.phase)
        stem = _C2_FILES.get(key)
        if stem is None:
            raise UnknownMacroError(
                f"no registered expansion for C2[{op.inner.kind}] with phase {op.phase}"
            )
        body = load_named(stem)
        table = {0: op.wires[0], 1: op.inner.wires[0]}
        out.extend(sub.remap(lambda x: table[x]) for sub in body.ops)
        return
    if k == "LAMBDA":
        c, t = op.wires[0], op.inner.wires[0]
        if op.inner.kind == "X" or (op.inner.kind == "TAU" and op.inner.params[0] == "012"):
            out.append(Op("CX", (c, t)))
            return
        if op.inner.kind == "TAU" and op.inner.params[0] == "021":
            out.append(Op("CX", (c, t)))
            out.append(Op("CX", (c, t)))
            return
        # level-1 trigger: conjugate the control by X so 1 -> 2
        out.append(Op("X", (c,)))
        _expand_op(Op("C2", (c,), inner=op.inner), n, out)
        out.append(Op("TAU", (c,), ("021",)))
        square = _square_c2(op)
        if square is not None:
            _expand_op(square, n, out)
        return
    raise AssertionError(k)


def expand_macros(circ: Circuit) -> Circuit:
    """Rewrite a circuit over the base gate set; exact to the matrix, phases included."""
    out: list[Op] = []
    for op in circ.ops:
        _expand_op(op, circ.n, out)
    return Circuit(circ.n, tuple(out))


def t_count(circ: Circuit) -> int:
    """Number of T/T† gates after full macro expansion."""
    return sum(1 for op in expand_macros(circ).ops if op.kind in ("T", "TDG"))
