"""Parser for target-matrix expressions used by the verify command.

Grammar (tokens separated by whitespace; brackets may hug):

    EXPR  := TERM ('x' TERM)*            tensor product, left to right
    TERM  := '-'? ATOM
    ATOM  := 'I' | 'CX' | GATE | 'C2' '[' '-'? GATE ']' PHASE?
    GATE  := name, optionally with parameters: TAU(12), ZPHASE(1/3,-1/3), ...
    PHASE := 'phase=' '-'? ('1' | 'omega'['^'k] | 'zeta'['^'k])

'I' is the 3 x 3 identity, 'zeta' the primitive ninth root of unity, and
'omega' the primitive cube root.  C2[g] is the two-qutrit gate applying g
(times the optional phase) when the control qutrit is in state 2.
"""

from __future__ import annotations

import re
from fractions import Fraction

from qutrit_exact.circuit.core import Op, SINGLE_QUTRIT_KINDS
from qutrit_exact.errors import ParseError
from qutrit_exact.rings.cyclo import Cyclo36, MINUS_ONE, ONE
from qutrit_exact.sim.gates import gate_matrix
from qutrit_exact.sim.matrix import UnitaryMatrix, controlled_target

_TOKEN = re.compile(r"\[|\]|[^\s\[\]]+")
_GATE = re.compile(r"^([A-Z][A-Z0-9]*)(?:\(([^()]*)\))?$")
_PHASE = re.compile(r"^(-)?(1|omega|zeta)(?:\^(\d+))?$")


def parse_phase_value(text: str) -> Cyclo36:
    """'-zeta^2', 'omega', '1', ... as an exact unit."""
    m = _PHASE.match(text)
    if m is None:
        raise ParseError(f"bad phase value {text!r}", 1, 1)
    sign = MINUS_ONE if m.group(1) else ONE
    base = m.group(2)
    e = int(m.group(3)) if m.group(3) else 1
    if base == "1":
        return sign
    if base == "omega":
        return sign * Cyclo36.omega_pow(e)
    return sign * Cyclo36.zeta9_pow(e)


class _Stream:
    def __init__(self, text: str):
        self.toks = [(m.group(0), m.start() + 1) for m in _TOKEN.finditer(text)]
        self.pos = 0

    def peek(self) -> str | None:
        return self.toks[self.pos][0] if self.pos < len(self.toks) else None

    def col(self) -> int:
        if self.pos < len(self.toks):
            return self.toks[self.pos][1]
        return self.toks[-1][1] + len(self.toks[-1][0]) if self.toks else 1

    def take(self) -> str:
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of target expression", 1, self.col())
        self.pos += 1
        return tok


def _parse_gate_token(tok: str, col: int) -> Op:
    m = _GATE.match(tok)
    if m is None:
        raise ParseError(f"bad gate name {tok!r}", 1, col)
    kind, raw = m.group(1), m.group(2)
    if kind not in SINGLE_QUTRIT_KINDS:
        raise ParseError(f"unknown single-qutrit gate {kind!r}", 1, col)
    params: tuple = ()
    if raw is not None:
        parts = [p.strip() for p in raw.split(",")]
        if kind == "TAU":
            params = (parts[0],) if len(parts) == 1 else tuple(parts)
        else:
            try:
                params = tuple(Fraction(p) for p in parts)
            except (ValueError, ZeroDivisionError) as e:
                raise ParseError(f"bad parameters in {tok!r}: {e}", 1, col) from None
    try:
        return Op(kind, (0,), params=params)
    except ValueError as e:
        raise ParseError(str(e), 1, col) from None


def _parse_atom(s: _Stream) -> UnitaryMatrix:
    col = s.col()
    tok = s.take()
    if tok == "I":
        return UnitaryMatrix.identity(3)
    if tok == "CX":
        return gate_matrix(Op("CX", (0, 1)), 2)
    if tok == "C2":
        if s.peek() != "[":
            raise ParseError("C2 requires a bracketed target gate", 1, s.col())
        s.take()
        sign = ONE
        inner_tok = s.take()
        inner_col = col
        if inner_tok == "-":
            sign = MINUS_ONE
            inner_tok = s.take()
        elif inner_tok.startswith("-"):
            sign = MINUS_ONE
            inner_tok = inner_tok[1:]
        inner = gate_matrix(_parse_gate_token(inner_tok, inner_col), 1)
        if s.take() != "]":
            raise ParseError("expected ']' after C2 target", 1, s.col())
        phase = sign
        nxt = s.peek()
        if nxt is not None and nxt.startswith("phase="):
            s.take()
            phase = sign * parse_phase_value(nxt[len("phase="):])
        return controlled_target(inner, phase)
    return gate_matrix(_parse_gate_token(tok, col), 1)


def _parse_term(s: _Stream) -> UnitaryMatrix:
    tok = s.peek()
    if tok == "-":
        s.take()
        return _parse_atom(s).scale(MINUS_ONE)
    if tok is not None and tok.startswith("-") and tok not in ("-",):
        # '-H' hugs the sign; rewrite in place
        s.toks[s.pos] = (tok[1:], s.toks[s.pos][1] + 1)
        return _parse_atom(s).scale(MINUS_ONE)
    return _parse_atom(s)


def parse_target(text: str) -> UnitaryMatrix:
    """Evaluate a target expression to an exact matrix."""
    s = _Stream(text)
    if s.peek() is None:
        raise ParseError("empty target expression", 1, 1)
    out = _parse_term(s)
    while s.peek() is not None:
        col = s.col()
        tok = s.take()
        if tok != "x":
            raise ParseError(
                f"expected tensor separator 'x', got {tok!r}", 1, col
            )
        out = out.tensor(_parse_term(s))
    return out
