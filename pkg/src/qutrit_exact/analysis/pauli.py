"""Pauli-group elements and the exact phase-aware Pauli test.

A phase-free Pauli on n qutrits is a tensor product of per-wire factors
X^a Z^b (a, b in Z_3); its matrix has exactly one nonzero entry per column,
at the digitwise-translated row, with value a power of omega that is linear
in the column digits.  The recognizer accepts any unitary equal to such an
element times a unit from the finite witness set {+-zeta_9^k} (18 units),
the global phases reachable by circuits over the supported gate set.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from qutrit_exact.errors import DimMismatchError
from qutrit_exact.rings.cyclo import Cyclo36, MINUS_ONE, ONE
from qutrit_exact.sim.matrix import UnitaryMatrix

#: Units w such that w * (phase-free Pauli) is still accepted: +-zeta_9^k.
WITNESS_UNITS: tuple[Cyclo36, ...] = tuple(
    sign * Cyclo36.zeta9_pow(k) for sign in (ONE, MINUS_ONE) for k in range(9)
)
_WITNESS_SET = frozenset(WITNESS_UNITS)


def digits(index: int, n: int) -> tuple[int, ...]:
    """Base-3 digits of a basis index, qutrit 0 most significant."""
    out = []
    for w in range(n):
        out.append((index // 3 ** (n - 1 - w)) % 3)
    return tuple(out)


def undigits(ds: tuple[int, ...]) -> int:
    index = 0
    for d in ds:
        index = 3 * index + d % 3
    return index


@dataclass(frozen=True)
class PauliElement:
    """w * tensor_w X^{x_exps[w]} Z^{z_exps[w]} with unit phase w."""

    x_exps: tuple[int, ...]
    z_exps: tuple[int, ...]
    phase: Cyclo36 = field(default=ONE)

    def __post_init__(self):
        if len(self.x_exps) != len(self.z_exps):
            raise ValueError("x_exps and z_exps must have equal length")
        object.__setattr__(self, "x_exps", tuple(a % 3 for a in self.x_exps))
        object.__setattr__(self, "z_exps", tuple(b % 3 for b in self.z_exps))

    @property
    def n(self) -> int:
        return len(self.x_exps)

    def is_identity_up_to_phase(self) -> bool:
        return not any(self.x_exps) and not any(self.z_exps)

    def matrix(self) -> UnitaryMatrix:
        n = self.n
        dim = 3**n
        rows = [[Cyclo36.from_int(0)] * dim for _ in range(dim)]
        for col in range(dim):
            ds = digits(col, n)
            row = undigits(tuple(d + a for d, a in zip(ds, self.x_exps)))
            e = sum(b * d for b, d in zip(self.z_exps, ds))
            rows[row][col] = self.phase * Cyclo36.omega_pow(e)
        return UnitaryMatrix(rows)

    def label(self) -> str:
        parts = [
            f"X^{a}Z^{b}" for a, b in zip(self.x_exps, self.z_exps)
        ]
        return " (x) ".join(parts)

    def __str__(self) -> str:
        w = str(self.phase)
        return self.label() if w == "1" else f"({w}) * {self.label()}"


def pauli_elements(n: int, include_identity: bool = False):
    """All 9^n phase-free Pauli elements (minus identity unless asked)."""
    import itertools

    for xs in itertools.product(range(3), repeat=n):
        for zs in itertools.product(range(3), repeat=n):
            p = PauliElement(xs, zs)
            if p.is_identity_up_to_phase() and not include_identity:
                continue
            yield p


@dataclass(frozen=True)
class PauliWitness:
    """Result of the Pauli test; truthy iff the matrix is a Pauli element."""

    found: bool
    element: PauliElement | None = None

    def __bool__(self) -> bool:
        return self.found

    def text(self) -> str:
        if not self.found:
            return "not a Pauli element for any witness phase"
        return f"Pauli element: {self.element}"


def _check_n(m: UnitaryMatrix, limit: int = 2) -> int:
    n = 0
    dim = m.dim
    while dim > 1:
        if dim % 3:
            raise DimMismatchError(f"dimension {m.dim} is not a power of 3")
        dim //= 3
        n += 1
    if not 1 <= n <= limit:
        raise DimMismatchError(
            f"expected between 1 and {limit} qutrits, got dimension {m.dim}"
        )
    return n


def is_pauli(m: UnitaryMatrix, limit: int = 2) -> PauliWitness:
    """Test whether ``m`` = w * X(a)Z(b) with w in the 18-unit witness set."""
    n = _check_n(m, limit)
    dim = m.dim
    zero = Cyclo36.from_int(0)

    # translation part from column 0
    col0 = [m.entry(r, 0) for r in range(dim)]
    support = [r for r in range(dim) if col0[r] != zero]
    if len(support) != 1:
        return PauliWitness(False)
    a = digits(support[0], n)
    w = col0[support[0]]
    if w not in _WITNESS_SET:
        return PauliWitness(False)

    # phase exponents from the unit-digit columns
    b = []
    for wire in range(n):
        col = undigits(tuple(1 if k == wire else 0 for k in range(n)))
        row = undigits(tuple(d + x for d, x in zip(digits(col, n), a)))
        val = m.entry(row, col)
        for cand in range(3):
            if val == w * Cyclo36.omega_pow(cand):
                b.append(cand)
                break
        else:
            return PauliWitness(False)
    element = PauliElement(a, tuple(b), w)

    # full verification against the candidate element
    for col in range(dim):
        ds = digits(col, n)
        row = undigits(tuple(d + x for d, x in zip(ds, a)))
        e = sum(bb * d for bb, d in zip(element.z_exps, ds))
        want = w * Cyclo36.omega_pow(e)
        for r in range(dim):
            got = m.entry(r, col)
            if r == row:
                if got != want:
                    return PauliWitness(False)
            elif got != zero:
                return PauliWitness(False)
    return PauliWitness(True, element)
