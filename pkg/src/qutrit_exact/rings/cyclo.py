"""Exact arithmetic in the 36th cyclotomic field.

Every matrix entry the toolkit touches lives in Q(zeta) with
zeta = exp(2*pi*i/36).  This one field contains omega = zeta^12 (third root
of unity), zeta_9 = zeta^4 (ninth root), i = zeta^9, i*sqrt(3) = omega - omega^2
and alpha = sin(2*pi/9) = (zeta^5 - zeta^13)/2, so a single 12-coordinate
representation covers every gate entry and every derived quantity exactly.

Elements are stored as 12 integer numerators over one positive integer
denominator, reduced mod Phi_36(x) = x^12 - x^6 + 1 and gcd-normalized, so
equality is plain tuple comparison.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from typing import Iterable, Union

__all__ = ["Cyclo36", "ZERO", "ONE", "MINUS_ONE", "OMEGA", "OMEGA2", "ZETA9", "embed"]

_DEGREE = 12

Scalar = Union[int, Fraction, "Cyclo36"]


def _reduced_power(e: int) -> tuple[int, ...]:
    """Coordinate vector of zeta^e in the power basis 1, zeta, ..., zeta^11."""
    e %= 36
    if e < 12:
        vec = [0] * _DEGREE
        vec[e] = 1
        return tuple(vec)
    if e < 18:
        # zeta^e = zeta^(e-6) - zeta^(e-12)
        vec = [0] * _DEGREE
        vec[e - 6] = 1
        vec[e - 12] = -1
        return tuple(vec)
    # zeta^18 = -1
    return tuple(-c for c in _reduced_power(e - 18))


_POWER_TABLE: tuple[tuple[int, ...], ...] = tuple(_reduced_power(e) for e in range(36))
# conj(zeta^k) = zeta^(36-k)
_CONJ_TABLE: tuple[tuple[int, ...], ...] = tuple(
    _reduced_power((36 - k) % 36) for k in range(_DEGREE)
)


def _mul_vectors(a: Iterable[int], b: tuple[int, ...]) -> list[int]:
    prod = [0] * (2 * _DEGREE - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    prod[i + j] += ai * bj
    for e in range(2 * _DEGREE - 2, _DEGREE - 1, -1):
        c = prod[e]
        if c:
            prod[e] = 0
            if e >= 18:
                prod[e - 18] -= c
            else:
                prod[e - 6] += c
                prod[e - 12] -= c
    return prod[:_DEGREE]


class Cyclo36:
    """An element of Q(zeta_36), exact and hashable."""

    __slots__ = ("_num", "_den")

    def __init__(self, numerators: Iterable[int] = (), denominator: int = 1):
        nums = list(numerators) + [0] * _DEGREE
        nums = nums[:_DEGREE]
        if denominator == 0:
            raise ZeroDivisionError("zero denominator")
        if denominator < 0:
            nums = [-c for c in nums]
            denominator = -denominator
        g = math.gcd(denominator, *nums)
        if g > 1:
            nums = [c // g for c in nums]
            denominator //= g
        self._num = tuple(nums)
        self._den = denominator

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_int(cls, n: int) -> Cyclo36:
        return cls((n,), 1)

    @classmethod
    def from_fraction(cls, q: Fraction | int) -> Cyclo36:
        q = Fraction(q)
        return cls((q.numerator,), q.denominator)

    @classmethod
    def zeta_pow(cls, e: int) -> Cyclo36:
        """zeta_36 ** e."""
        return cls(_POWER_TABLE[e % 36], 1)

    @classmethod
    def omega_pow(cls, e: int) -> Cyclo36:
        """omega ** e with omega = zeta^12."""
        return cls(_POWER_TABLE[(12 * e) % 36], 1)

    @classmethod
    def zeta9_pow(cls, e: int) -> Cyclo36:
        """zeta_9 ** e with zeta_9 = zeta^4."""
        return cls(_POWER_TABLE[(4 * e) % 36], 1)

    @classmethod
    def from_fraction_vector(cls, coeffs: Iterable[Fraction]) -> Cyclo36:
        coeffs = [Fraction(c) for c in coeffs]
        den = math.lcm(*(c.denominator for c in coeffs)) if coeffs else 1
        nums = [int(c * den) for c in coeffs]
        return cls(nums, den)

    # -- basic queries -----------------------------------------------------

    @property
    def numerators(self) -> tuple[int, ...]:
        return self._num

    @property
    def denominator(self) -> int:
        return self._den

    def as_fractions(self) -> tuple[Fraction, ...]:
        d = self._den
        return tuple(Fraction(c, d) for c in self._num)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self._num)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self._num[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("not a rational number")
        return Fraction(self._num[0], self._den)

    def conjugate(self) -> Cyclo36:
        acc = [0] * _DEGREE
        for k, c in enumerate(self._num):
            if c:
                tab = _CONJ_TABLE[k]
                for idx in range(_DEGREE):
                    acc[idx] += c * tab[idx]
        return Cyclo36(acc, self._den)

    def is_real(self) -> bool:
        return self.conjugate() == self

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other: Scalar) -> Cyclo36 | None:
        if isinstance(other, Cyclo36):
            return other
        if isinstance(other, int):
            return Cyclo36((other,), 1)
        if isinstance(other, Fraction):
            return Cyclo36((other.numerator,), other.denominator)
        return None

    def __add__(self, other: Scalar) -> Cyclo36:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d1, d2 = self._den, o._den
        nums = [a * d2 + b * d1 for a, b in zip(self._num, o._num)]
        return Cyclo36(nums, d1 * d2)

    __radd__ = __add__

    def __neg__(self) -> Cyclo36:
        return Cyclo36(tuple(-c for c in self._num), self._den)

    def __sub__(self, other: Scalar) -> Cyclo36:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Scalar) -> Cyclo36:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other: Scalar) -> Cyclo36:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Cyclo36(_mul_vectors(self._num, o._num), self._den * o._den)

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> Cyclo36:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: Scalar) -> Cyclo36:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int) -> Cyclo36:
        if e < 0:
            return self.inverse() ** (-e)
        acc = ONE
        base = self
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    def mul_zeta_pow(self, e: int) -> Cyclo36:
        """Fast multiplication by zeta^e (exponent shift plus reduction)."""
        e %= 36
        if e == 0:
            return self
        prod = [0] * (_DEGREE + 35)
        for i, c in enumerate(self._num):
            if c:
                prod[i + e] += c
        for idx in range(len(prod) - 1, _DEGREE - 1, -1):
            c = prod[idx]
            if c:
                prod[idx] = 0
                if idx >= 18:
                    prod[idx - 18] -= c
                else:
                    prod[idx - 6] += c
                    prod[idx - 12] -= c
        return Cyclo36(prod[:_DEGREE], self._den)

    def inverse(self) -> Cyclo36:
        """Multiplicative inverse via extended Euclid in Q[x] mod Phi_36."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if self.is_rational():
            q = self.as_fraction()
            return Cyclo36.from_fraction(1 / q)
        inv_coeffs = _poly_invert(self.as_fractions())
        return Cyclo36.from_fraction_vector(inv_coeffs)

    # -- comparisons, rendering -------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self._coerce(other)
        if not isinstance(other, Cyclo36):
            return NotImplemented
        return self._num == other._num and self._den == other._den

    def __hash__(self) -> int:
        return hash((self._num, self._den))

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __repr__(self) -> str:
        return f"Cyclo36({list(self._num)}, {self._den})"

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        if self.is_rational():
            return str(Fraction(self._num[0], self._den))
        terms = self._symbolic_terms()
        if terms is not None:
            out = ""
            for coef, name in terms:
                if name == "1":
                    piece = str(abs(coef))
                elif abs(coef) == 1:
                    piece = name
                else:
                    piece = f"{abs(coef)}*{name}"
                if not out:
                    out = piece if coef > 0 else f"-{piece}"
                else:
                    out += f" + {piece}" if coef > 0 else f" - {piece}"
            return out
        body = ",".join(str(c) for c in self._num)
        if self._den == 1:
            return f"({body})"
        return f"({body})/{self._den}"

    def _symbolic_terms(self) -> list[tuple[Fraction, str]] | None:
        """Terms over {1, omega, omega^2, zeta^k}, or None if not expressible."""
        if any(self._num[k] for k in range(1, 12, 2)):
            return None
        # zeta_9 coordinates: zeta^k = zeta_36^(4k) reduced mod Phi_36
        d = [
            self._num[0] + self._num[6],
            self._num[4] + self._num[10],
            self._num[8],
            self._num[6],
            self._num[10],
            -self._num[2],
        ]
        names = ["1", "zeta", "zeta^2", "omega", "zeta^4", "zeta^5"]
        if d[1] == d[2] == d[4] == d[5] == 0:
            # polynomial in omega alone: a + b*omega, with a = b meaning -omega^2
            if d[0] == d[3]:
                pairs = [(-d[0], "omega^2")]
            else:
                pairs = [(d[0], "1"), (d[3], "omega")]
        else:
            # single higher zeta powers (zeta^6 = omega^2 is caught above):
            # zeta^7 = -zeta-zeta^4, zeta^8 = -zeta^2-zeta^5
            reductions = {
                "zeta^7": (0, -1, 0, 0, -1, 0),
                "zeta^8": (0, 0, -1, 0, 0, -1),
            }
            pairs = None
            for name, pat in reductions.items():
                idx = [k for k, p in enumerate(pat) if p]
                if all(d[k] == 0 for k in range(6) if k not in idx):
                    c = -d[idx[0]]
                    if c and all(d[k] == -c for k in idx):
                        pairs = [(c, name)]
                        break
            if pairs is None:
                pairs = list(zip(d, names))
        return [
            (Fraction(c, self._den), name) for c, name in pairs if c
        ] or None

    def to_complex(self) -> complex:
        """Floating approximation; advisory rendering only, never for verdicts."""
        z = 0j
        for k, c in enumerate(self._num):
            if c:
                z += c * cmath.exp(2j * cmath.pi * k / 36)
        return z / self._den


# -- polynomial helpers for inversion --------------------------------------

_PHI36: tuple[Fraction, ...] = tuple(
    Fraction(c) for c in (1, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 1)
)


def _poly_trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = a[:]
    q = [Fraction(0)] * max(1, len(a) - len(b) + 1)
    inv_lead = 1 / b[-1]
    while len(a) >= len(b) and _poly_trim(a):
        shift = len(a) - len(b)
        coef = a[-1] * inv_lead
        q[shift] = coef
        for i, bc in enumerate(b):
            a[shift + i] -= coef * bc
        _poly_trim(a)
    return _poly_trim(q), a


def _poly_invert(coeffs: tuple[Fraction, ...]) -> list[Fraction]:
    """s with s*a == 1 mod Phi_36, for a nonzero (Phi_36 is irreducible)."""
    a = _poly_trim(list(coeffs))
    r0, r1 = list(_PHI36), a
    s0, s1 = [Fraction(0)], [Fraction(1)]
    while True:
        q, r = _poly_divmod(r0, r1)
        if not r:
            break
        # s = s0 - q*s1
        s = s0[:] + [Fraction(0)] * max(0, len(q) + len(s1) - 1 - len(s0))
        for i, qc in enumerate(q):
            if qc:
                for j, sc in enumerate(s1):
                    s[i + j] -= qc * sc
        r0, r1 = r1, r
        s0, s1 = s1, _poly_trim(s)
    # r1 is a nonzero constant gcd
    g = r1[0]
    inv = [c / g for c in s1]
    _, inv = _poly_divmod(inv, list(_PHI36))
    inv += [Fraction(0)] * (_DEGREE - len(inv))
    return inv[:_DEGREE]


ZERO = Cyclo36()
ONE = Cyclo36.from_int(1)
MINUS_ONE = Cyclo36.from_int(-1)
OMEGA = Cyclo36.zeta_pow(12)
OMEGA2 = Cyclo36.zeta_pow(24)
ZETA9 = Cyclo36.zeta_pow(4)

_EMBED = {
    "omega": OMEGA,
    "zeta9": ZETA9,
    "i": Cyclo36.zeta_pow(9),
    "sqrt3_times_i": OMEGA - OMEGA2,
    "alpha": (Cyclo36.zeta_pow(5) - Cyclo36.zeta_pow(13)) * Fraction(1, 2),
}


def embed(symbol: str) -> Cyclo36:
    """Return the canonical image of a named constant in Q(zeta_36).

    Known symbols: omega, zeta9, i, sqrt3_times_i, alpha (= sin(2*pi/9)).
    """
    try:
        return _EMBED[symbol]
    except KeyError:
        raise ValueError(f"unknown embedding symbol: {symbol!r}") from None
