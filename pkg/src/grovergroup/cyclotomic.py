"""Exact arithmetic in the cyclotomic field Q(zeta_n).

Elements are polynomials in ``zeta_n`` reduced modulo the n-th cyclotomic
polynomial, so two elements are equal exactly when their coefficient vectors
are equal.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Sequence


class IncompatibleFieldError(ValueError):
    """Raised when operands live in different cyclotomic fields."""


# --- integer polynomial helpers (coefficient lists, lowest degree first) ---

def _trim(p: list) -> list:
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _poly_mul(a: Sequence, b: Sequence) -> list:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _poly_divmod(num: Sequence, den: Sequence) -> tuple[list, list]:
    """Long division over Q. Returns (quotient, remainder)."""
    num = [Fraction(c) for c in num]
    den = _trim([Fraction(c) for c in den])
    if den == [0]:
        raise ZeroDivisionError("polynomial division by zero")
    if len(num) < len(den):
        return [Fraction(0)], _trim(num)
    q = [Fraction(0)] * (len(num) - len(den) + 1)
    lead = den[-1]
    for k in range(len(q) - 1, -1, -1):
        c = num[k + len(den) - 1] / lead
        q[k] = c
        if c:
            for i, d in enumerate(den):
                num[k + i] -= c * d
    rem = _trim(num[: len(den) - 1] or [Fraction(0)])
    return _trim(q), rem


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first.

    Phi_n = (x^n - 1) / prod(Phi_d for d | n, d < n).
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            q, r = _poly_divmod(num, cyclotomic_polynomial(d))
            assert r == [0]
            num = q
    assert all(c.denominator == 1 for c in num)
    return tuple(int(c) for c in num)


def euler_phi(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


@lru_cache(maxsize=None)
def power_table(n: int) -> tuple[tuple[int, ...], ...]:
    """Row k holds the integer coefficients of x^k mod Phi_n, for k < n.

    Phi_n is monic with integer coefficients, so the reductions stay integral.
    """
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    rows = []
    cur = [0] * deg
    cur[0] = 1
    for _ in range(n):
        rows.append(tuple(cur))
        # multiply by x, then fold the overflow term back using Phi_n
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            cur = [c - top * p for c, p in zip(cur, phi[:-1])]
    return tuple(rows)


def reduce_powers(coeffs: Sequence, n: int) -> list:
    """Reduce a polynomial in zeta (any length, exponents taken mod n)."""
    table = power_table(n)
    deg = euler_phi(n)
    out = [0] * deg
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        row = table[k % n]
        for i in range(deg):
            if row[i]:
                out[i] += c * row[i]
    return out


class CycNum:
    """An element of Q(zeta_n) stored as its canonical coefficient vector."""

    __slots__ = ("n", "coeffs", "_hash")

    def __init__(self, n: int, coeffs: Sequence = ()):
        if n < 1:
            raise ValueError(f"n must be positive, got {n}")
        deg = euler_phi(n)
        coeffs = [Fraction(c) for c in coeffs]
        if len(coeffs) > deg:
            coeffs = reduce_powers(coeffs, n)
        coeffs = coeffs + [Fraction(0)] * (deg - len(coeffs))
        self.n = n
        self.coeffs: tuple[Fraction, ...] = tuple(Fraction(c) for c in coeffs)
        self._hash = None

    # -- constructors --
    @classmethod
    def zero(cls, n: int) -> CycNum:
        return cls(n)

    @classmethod
    def one(cls, n: int) -> CycNum:
        return cls(n, [1])

    @classmethod
    def rational(cls, n: int, q) -> CycNum:
        return cls(n, [Fraction(q)])

    # -- helpers --
    def _coerce(self, other) -> CycNum:
        if isinstance(other, CycNum):
            if other.n != self.n:
                raise IncompatibleFieldError(
                    f"cannot combine elements of Q(zeta_{self.n}) and Q(zeta_{other.n})"
                )
            return other
        if isinstance(other, (int, Rational)):
            return CycNum(self.n, [Fraction(other)])
        return NotImplemented

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    # -- arithmetic --
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycNum(self.n, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self) -> CycNum:
        return CycNum(self.n, [-a for a in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        prod = _poly_mul(self.coeffs, other.coeffs)
        return CycNum(self.n, reduce_powers(prod, self.n))

    __rmul__ = __mul__

    def inv(self) -> CycNum:
        """Multiplicative inverse via the extended Euclidean algorithm against Phi_n."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        # invariant: s * self == r (mod Phi_n)
        r0, r1 = list(cyclotomic_polynomial(self.n)), _trim(list(self.coeffs))
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while r1 != [0] and len(r1) > 1:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            s_next = _trim([a - b for a, b in _zip_pad(s0, _poly_mul(q, s1))])
            s0, s1 = s1, s_next
        # r1 is now a nonzero constant (Phi_n is irreducible)
        c = Fraction(r1[0])
        return CycNum(self.n, [x / c for x in s1])

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inv()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inv()

    def __pow__(self, k: int) -> CycNum:
        if k < 0:
            return self.inv() ** (-k)
        result, base = CycNum.one(self.n), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conj(self) -> CycNum:
        """Complex conjugate: zeta -> zeta^(n-1)."""
        out = [Fraction(0)] * self.n
        for k, c in enumerate(self.coeffs):
            out[(-k) % self.n] += c
        return CycNum(self.n, reduce_powers(out, self.n))

    # -- comparison / conversion --
    def __eq__(self, other) -> bool:
        if isinstance(other, CycNum):
            return self.n == other.n and self.coeffs == other.coeffs
        if isinstance(other, (int, Rational)):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.coeffs))
        return self._hash

    def __complex__(self) -> complex:
        z = cmath.exp(2j * cmath.pi / self.n)
        return complex(sum(float(c) * z**k for k, c in enumerate(self.coeffs)))

    def __repr__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append(str(c) if k == 0 else f"{c}*z^{k}")
        return f"CycNum[{self.n}]({' + '.join(terms) or '0'})"


def _zip_pad(a: list, b: list):
    m = max(len(a), len(b))
    a = a + [0] * (m - len(a))
    b = b + [0] * (m - len(b))
    return zip(a, b)


def zeta_pow(n: int, k: int) -> CycNum:
    """zeta_n ** k in canonical form."""
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    return CycNum(n, power_table(n)[k % n])
