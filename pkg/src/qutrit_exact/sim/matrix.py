"""Dense exact matrices over Q(zeta_36)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from ..errors import DimMismatchError
from ..rings.cyclo import Cyclo36, ONE, ZERO

__all__ = [
    "UnitaryMatrix",
    "equal_exact",
    "equal_up_to_phase",
    "controlled_target",
    "PhaseMatch",
]


def _coerce(entry) -> Cyclo36:
    if isinstance(entry, Cyclo36):
        return entry
    if isinstance(entry, (int, Fraction)):
        return Cyclo36.from_fraction(Fraction(entry))
    raise TypeError(f"cannot use {type(entry).__name__} as a matrix entry")


class UnitaryMatrix:
    """A square matrix with entries in Q(zeta_36); equality is exact."""

    __slots__ = ("_rows",)

    def __init__(self, rows: Iterable[Sequence]):
        rs = tuple(tuple(_coerce(e) for e in row) for row in rows)
        dim = len(rs)
        if any(len(r) != dim for r in rs):
            raise ValueError("matrix must be square")
        self._rows = rs

    @classmethod
    def identity(cls, dim: int) -> UnitaryMatrix:
        return cls(
            tuple(tuple(ONE if r == c else ZERO for c in range(dim)) for r in range(dim))
        )

    @property
    def dim(self) -> int:
        return len(self._rows)

    @property
    def rows(self) -> tuple[tuple[Cyclo36, ...], ...]:
        return self._rows

    def entry(self, r: int, c: int) -> Cyclo36:
        return self._rows[r][c]

    def __matmul__(self, other: UnitaryMatrix) -> UnitaryMatrix:
        if self.dim != other.dim:
            raise DimMismatchError(f"{self.dim} vs {other.dim}")
        cols = tuple(zip(*other._rows))
        out = []
        for row in self._rows:
            out_row = []
            for col in cols:
                acc = ZERO
                for a, b in zip(row, col):
                    if not a.is_zero() and not b.is_zero():
                        acc = acc + a * b
                out_row.append(acc)
            out.append(tuple(out_row))
        return UnitaryMatrix(out)

    def dag(self) -> UnitaryMatrix:
        return UnitaryMatrix(
            tuple(
                tuple(self._rows[c][r].conjugate() for c in range(self.dim))
                for r in range(self.dim)
            )
        )

    def tensor(self, other: UnitaryMatrix) -> UnitaryMatrix:
        out = []
        for arow in self._rows:
            for brow in other._rows:
                out.append(tuple(a * b for a in arow for b in brow))
        return UnitaryMatrix(out)

    def scale(self, c) -> UnitaryMatrix:
        c = _coerce(c)
        return UnitaryMatrix(tuple(tuple(c * e for e in row) for row in self._rows))

    def trace(self) -> Cyclo36:
        acc = ZERO
        for i in range(self.dim):
            acc = acc + self._rows[i][i]
        return acc

    def is_unitary(self) -> bool:
        return self @ self.dag() == UnitaryMatrix.identity(self.dim)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UnitaryMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        return f"UnitaryMatrix(dim={self.dim})"

    def to_complex(self) -> list[list[complex]]:
        """Floating approximation; advisory rendering only."""
        return [[e.to_complex() for e in row] for row in self._rows]


def equal_exact(a: UnitaryMatrix, b: UnitaryMatrix) -> bool:
    """Entrywise exact equality; DIM_MISMATCH if shapes differ."""
    if a.dim != b.dim:
        raise DimMismatchError(f"{a.dim} vs {b.dim}")
    return a.rows == b.rows


@dataclass(frozen=True)
class PhaseMatch:
    """Result of a phase-insensitive comparison; truthy iff the match holds."""

    equal: bool
    phase: Cyclo36 | None = None

    def __bool__(self) -> bool:
        return self.equal


def equal_up_to_phase(a: UnitaryMatrix, b: UnitaryMatrix) -> PhaseMatch:
    """Test a == c*b for a unit scalar c; the witness c is returned.

    The candidate is fixed by the first nonzero entry of b and then verified
    against every entry, so a positive answer is a proof.
    """
    if a.dim != b.dim:
        raise DimMismatchError(f"{a.dim} vs {b.dim}")
    witness: Cyclo36 | None = None
    for r in range(b.dim):
        for c in range(b.dim):
            e = b.entry(r, c)
            if not e.is_zero():
                num = a.entry(r, c)
                if num.is_zero():
                    return PhaseMatch(False)
                witness = num * e.inverse()
                break
        if witness is not None:
            break
    if witness is None:  # b == 0; only a == 0 matches, with phase 1
        return PhaseMatch(all(e.is_zero() for row in a.rows for e in row), ONE)
    if witness * witness.conjugate() != ONE:
        return PhaseMatch(False)
    for arow, brow in zip(a.rows, b.rows):
        for ae, be in zip(arow, brow):
            if ae != witness * be:
                return PhaseMatch(False)
    return PhaseMatch(True, witness)


def controlled_target(inner: UnitaryMatrix, phase: Cyclo36 = ONE) -> UnitaryMatrix:
    """blockdiag(I, I, phase*inner): apply phase*inner when the control holds 2."""
    if inner.dim != 3:
        raise DimMismatchError("controlled target must be a single-qutrit matrix")
    out = [[ZERO] * 9 for _ in range(9)]
    for k in range(6):
        out[k][k] = ONE
    for r in range(3):
        for c in range(3):
            out[6 + r][6 + c] = phase * inner.entry(r, c)
    return UnitaryMatrix(out)
