"""Orthogonal basis for the traceless Hermitian 3x3 matrices.

From each Pauli word P in {Z, X, XZ, XZ^2} two Hermitian combinations are
formed: P_plus = P^dag + P and P_minus = i(P - P^dag).  The eight results
are traceless, pairwise orthogonal under <M, N> = Tr(M N), and each has
Tr(M^2) = 6.  They are kept UNNORMALIZED: the normalizing factors involve
square roots outside the coefficient field, and they cancel in the ratio
Tr(m_i U m_j U^dag) / Tr(m_i^2) used to build adjoint representations.

Basis order: Z_plus, X_plus, (XZ)_plus, (XZ^2)_plus, then the same four
minus-type elements.
"""

from __future__ import annotations

from dataclasses import dataclass

from qutrit_exact.rings.cyclo import Cyclo36, embed
from qutrit_exact.sim.matrix import UnitaryMatrix

#: Tr(m^2) shared by all eight basis elements.
BASIS_NORM = Cyclo36.from_int(6)

_LABELS = (
    "Z_plus", "X_plus", "(XZ)_plus", "(XZ^2)_plus",
    "Z_minus", "X_minus", "(XZ)_minus", "(XZ^2)_minus",
)


@dataclass(frozen=True)
class AdjointBasis:
    """The eight unnormalized basis elements, in the documented order."""

    mats: tuple[UnitaryMatrix, ...]
    labels: tuple[str, ...] = _LABELS

    def __len__(self) -> int:
        return 8

    def __getitem__(self, i: int) -> UnitaryMatrix:
        return self.mats[i]


def _pauli_words() -> tuple[UnitaryMatrix, ...]:
    zero = Cyclo36.from_int(0)
    one = Cyclo36.from_int(1)
    z = UnitaryMatrix(
        [[one, zero, zero],
         [zero, Cyclo36.omega_pow(1), zero],
         [zero, zero, Cyclo36.omega_pow(2)]]
    )
    x = UnitaryMatrix(
        [[zero, zero, one],
         [one, zero, zero],
         [zero, one, zero]]
    )
    return z, x, x @ z, x @ z @ z


def build_basis() -> AdjointBasis:
    """Construct the basis and verify all its structural invariants."""
    i_unit = embed("i")
    zero = Cyclo36.from_int(0)
    mats = []
    for p in _pauli_words():
        pd = p.dag()
        plus_rows = [
            [pd.entry(r, c) + p.entry(r, c) for c in range(3)] for r in range(3)
        ]
        mats.append(UnitaryMatrix(plus_rows))
    for p in _pauli_words():
        pd = p.dag()
        minus_rows = [
            [i_unit * (p.entry(r, c) - pd.entry(r, c)) for c in range(3)]
            for r in range(3)
        ]
        mats.append(UnitaryMatrix(minus_rows))

    for m in mats:
        if m.trace() != zero:
            raise AssertionError("basis element is not traceless")
        if m.dag() != m:
            raise AssertionError("basis element is not Hermitian")
    for i, a in enumerate(mats):
        for j, b in enumerate(mats):
            t = (a @ b).trace()
            want = BASIS_NORM if i == j else zero
            if t != want:
                raise AssertionError(
                    f"<{_LABELS[i]}, {_LABELS[j]}> = {t}, expected {want}"
                )
    return AdjointBasis(tuple(mats))
