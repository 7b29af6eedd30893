"""Text format for circuits.

A file is a ``qutrits N`` header followed by one gate per line; ``#`` starts
a comment.  Wires are 0-based, qutrit 0 most significant.  Examples::

    qutrits 2
    # phase gate on the top qutrit
    T 0
    TAU(12) 1
    ZPHASE 1/3 -1/3 0
    CX 0 1
    C2[TAU(12) 1] 0 phase=-1

``C2[g t] c`` applies ``g`` to ``t`` when the control holds level 2; the
optional ``phase=`` suffix (values ``1``, ``-1``, ``zeta^k``, ``-zeta^k``)
multiplies the controlled block by that scalar.  ``C1[...]``/``C0[...]`` are
sugar for conjugating the control by X so the trigger level moves to 1 or 0.
``LAMBDA[g t] c`` applies ``g`` once per control level.
"""

from __future__ import annotations

import re
from fractions import Fraction

from ..errors import ParseError
from .core import Circuit, Op, SINGLE_QUTRIT_KINDS
from .perm import TAU_LABELS

__all__ = ["parse_circuit"]

_TOKEN = re.compile(r"\[|\]|[^\s\[\]]+")
_TAU = re.compile(r"TAU\((01|02|12|012|021)\)\Z", re.IGNORECASE)
_PHASE = re.compile(r"phase=(-?)(1|zeta(?:\^(-?\d+))?)\Z", re.IGNORECASE)
_INT = re.compile(r"[+-]?\d+\Z")
_THIRD = re.compile(r"([+-]?\d+)/3\Z")

_PLAIN = {"X", "Z", "S", "SDG", "H", "HDG", "T", "TDG", "R"}


class _Tokens:
    def __init__(self, text: str, line_no: int):
        self.items = [(m.group(0), m.start() + 1) for m in _TOKEN.finditer(text)]
        self.pos = 0
        self.line_no = line_no
        self.line_len = len(text)

    def peek(self) -> tuple[str, int] | None:
        if self.pos < len(self.items):
            return self.items[self.pos]
        return None

    def take(self, what: str) -> tuple[str, int]:
        item = self.peek()
        if item is None:
            raise ParseError(f"expected {what}", self.line_no, self.line_len + 1)
        self.pos += 1
        return item

    def expect(self, literal: str) -> None:
        tok, col = self.take(repr(literal))
        if tok != literal:
            raise ParseError(f"expected {literal!r}, got {tok!r}", self.line_no, col)


def _parse_wire(toks: _Tokens, n: int) -> int:
    tok, col = toks.take("a wire index")
    if not _INT.match(tok):
        raise ParseError(f"expected a wire index, got {tok!r}", toks.line_no, col)
    w = int(tok)
    if not 0 <= w < n:
        raise ParseError(f"wire {w} out of range for {n} qutrits", toks.line_no, col)
    return w


def _parse_third(toks: _Tokens) -> Fraction:
    tok, col = toks.take("a phase exponent")
    if _INT.match(tok):
        return Fraction(int(tok))
    m = _THIRD.match(tok)
    if m:
        return Fraction(int(m.group(1)), 3)
    raise ParseError(
        f"expected an integer or a multiple of 1/3, got {tok!r}", toks.line_no, col
    )


def _parse_simple_gate(toks: _Tokens, n: int) -> Op:
    tok, col = toks.take("a gate name")
    name = tok.upper()
    if name in _PLAIN:
        return Op(name, (_parse_wire(toks, n),))
    m = _TAU.match(tok)
    if m:
        label = m.group(1)
        if label not in TAU_LABELS:
            raise ParseError(f"unknown cycle label {label!r}", toks.line_no, col)
        return Op("TAU", (_parse_wire(toks, n),), (label,))
    if name in ("ZPHASE", "XPHASE"):
        a = _parse_third(toks)
        b = _parse_third(toks)
        return Op(name, (_parse_wire(toks, n),), (a, b))
    raise ParseError(f"unknown gate {tok!r}", toks.line_no, col)


def _parse_phase_suffix(toks: _Tokens) -> tuple[int, int] | None:
    item = toks.peek()
    if item is None:
        return None
    tok, col = item
    m = _PHASE.match(tok)
    if m is None:
        raise ParseError(f"unexpected trailing token {tok!r}", toks.line_no, col)
    toks.pos += 1
    sign = -1 if m.group(1) == "-" else 1
    body = m.group(2).lower()
    if body == "1":
        return (sign, 0)
    exp = 1 if m.group(3) is None else int(m.group(3))
    return (sign, exp % 9)


def _parse_controlled(toks: _Tokens, n: int, head: str, col: int) -> list[Op]:
    toks.expect("[")
    inner = _parse_simple_gate(toks, n)
    if inner.kind not in SINGLE_QUTRIT_KINDS:
        raise ParseError("controlled target must be a single-qutrit gate", toks.line_no, col)
    toks.expect("]")
    control = _parse_wire(toks, n)
    if control == inner.wires[0]:
        raise ParseError("control and target wires must differ", toks.line_no, col)
    if head == "LAMBDA":
        if toks.peek() is not None:
            tok, pcol = toks.peek()
            raise ParseError(f"unexpected trailing token {tok!r}", toks.line_no, pcol)
        return [Op("LAMBDA", (control,), inner=inner)]
    phase = _parse_phase_suffix(toks)
    if toks.peek() is not None:
        tok, pcol = toks.peek()
        raise ParseError(f"unexpected trailing token {tok!r}", toks.line_no, pcol)
    core = Op("C2", (control,), inner=inner, phase=phase)
    if head == "C2":
        return [core]
    x = Op("X", (control,))
    xdg = Op("TAU", (control,), ("021",))
    if head == "C1":
        # conjugate so the trigger level is 1: X maps 1 -> 2
        return [x, core, xdg]
    # C0: X^2 = Xdg maps 0 -> 2
    return [xdg, core, x]


def parse_circuit(text: str) -> Circuit:
    """Parse circuit text; raises ParseError with line/col on bad input."""
    n: int | None = None
    ops: list[Op] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        if not body.strip():
            continue
        toks = _Tokens(body, line_no)
        tok, col = toks.take("a statement")
        if n is None:
            if tok.lower() != "qutrits":
                raise ParseError("first statement must be 'qutrits N'", line_no, col)
            count, ccol = toks.take("a qutrit count")
            if not count.isdigit() or int(count) < 1:
                raise ParseError(f"bad qutrit count {count!r}", line_no, ccol)
            n = int(count)
            if toks.peek() is not None:
                extra, ecol = toks.peek()
                raise ParseError(f"unexpected trailing token {extra!r}", line_no, ecol)
            continue
        head = tok.upper()
        if head in ("C0", "C1", "C2", "LAMBDA"):
            try:
                ops.extend(_parse_controlled(toks, n, head, col))
            except ValueError as exc:
                if isinstance(exc, ParseError):
                    raise
                raise ParseError(str(exc), line_no, col) from None
        elif head == "CX":
            control = _parse_wire(toks, n)
            target = _parse_wire(toks, n)
            if control == target:
                raise ParseError("control and target wires must differ", line_no, col)
            if toks.peek() is not None:
                extra, ecol = toks.peek()
                raise ParseError(f"unexpected trailing token {extra!r}", line_no, ecol)
            ops.append(Op("CX", (control, target)))
        else:
            toks.pos = 0
            try:
                ops.append(_parse_simple_gate(toks, n))
            except ValueError as exc:
                if isinstance(exc, ParseError):
                    raise
                raise ParseError(str(exc), line_no, col) from None
            if toks.peek() is not None:
                extra, ecol = toks.peek()
                raise ParseError(f"unexpected trailing token {extra!r}", line_no, ecol)
    if n is None:
        raise ParseError("empty circuit text", 1, 1)
    return Circuit(n, tuple(ops))
