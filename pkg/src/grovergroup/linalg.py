"""Dense matrices over Q(zeta_n) and the walk's matrices built exactly.

A ``CycMatrix`` is packed as ``num / den`` where ``num`` is an integer array of
shape ``(phi(n), dim, dim)`` (slice ``k`` holds the coefficient of ``zeta^k``)
and ``den`` is a single positive integer.  The packing is kept canonical
(``gcd(num, den) == 1``) so matrix equality is array equality.

The normalized DFT matrix ``A`` involves ``1/sqrt(n)``, which is usually not in
the field.  Only the unnormalized ``F = sqrt(n) A`` is ever built and every
conjugation ``A^-1 X A`` is computed as ``F* X F / n``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .cyclotomic import CycNum, IncompatibleFieldError, euler_phi, power_table


class DimensionError(ValueError):
    pass


def _zeros(shape) -> np.ndarray:
    out = np.empty(shape, dtype=object)
    out.fill(0)
    return out


def _reduce_slices(slices: np.ndarray, n: int) -> np.ndarray:
    """Fold coefficient slices of zeta^0..zeta^(L-1) down to phi(n) slices."""
    deg = euler_phi(n)
    if slices.shape[0] == deg:
        return slices
    table = power_table(n)
    out = _zeros((deg,) + slices.shape[1:])
    for k in range(slices.shape[0]):
        s = slices[k]
        if not s.any():
            continue
        row = table[k % n]
        for i, c in enumerate(row):
            if c:
                out[i] += c * s
    return out


class CycMatrix:
    """Square matrix with entries in Q(zeta_n). Immutable."""

    __slots__ = ("n", "dim", "num", "den", "_hash")

    def __init__(self, n: int, num: np.ndarray, den: int = 1):
        num = np.asarray(num, dtype=object)
        if num.ndim != 3 or num.shape[1] != num.shape[2]:
            raise DimensionError(f"expected (L, d, d) coefficient array, got {num.shape}")
        num = _reduce_slices(num, n)
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            num, den = -num, -den
        g = math.gcd(den, *(int(x) for x in num.flat))
        if g == 0:
            den = 1
        elif g > 1:
            num = num // g
            den //= g
        num.flags.writeable = False
        self.n = n
        self.dim = num.shape[1]
        self.num = num
        self.den = int(den)
        self._hash = None

    # -- constructors --
    @classmethod
    def zeros(cls, n: int, dim: int) -> CycMatrix:
        return cls(n, _zeros((euler_phi(n), dim, dim)))

    @classmethod
    def identity(cls, n: int, dim: int) -> CycMatrix:
        num = _zeros((euler_phi(n), dim, dim))
        for i in range(dim):
            num[0, i, i] = 1
        return cls(n, num)

    @classmethod
    def from_rationals(cls, n: int, rows: Sequence[Sequence]) -> CycMatrix:
        rows = [[Fraction(x) for x in r] for r in rows]
        den = math.lcm(*(x.denominator for r in rows for x in r))
        num = _zeros((euler_phi(n), len(rows), len(rows)))
        for i, r in enumerate(rows):
            for j, x in enumerate(r):
                num[0, i, j] = x.numerator * (den // x.denominator)
        return cls(n, num, den)

    @classmethod
    def from_entries(cls, n: int, rows: Sequence[Sequence[CycNum]]) -> CycMatrix:
        dim = len(rows)
        den = math.lcm(*(c.denominator for r in rows for x in r for c in x.coeffs))
        num = _zeros((euler_phi(n), dim, dim))
        for i, r in enumerate(rows):
            if len(r) != dim:
                raise DimensionError("matrix must be square")
            for j, x in enumerate(r):
                if x.n != n:
                    raise IncompatibleFieldError(f"entry from Q(zeta_{x.n}) in a Q(zeta_{n}) matrix")
                for k, c in enumerate(x.coeffs):
                    num[k, i, j] = c.numerator * (den // c.denominator)
        return cls(n, num, den)

    @classmethod
    def diagonal(cls, entries: Sequence[CycNum]) -> CycMatrix:
        n = entries[0].n
        zero = CycNum.zero(n)
        rows = [[entries[i] if i == j else zero for j in range(len(entries))]
                for i in range(len(entries))]
        return cls.from_entries(n, rows)

    # -- element access --
    def __getitem__(self, idx) -> CycNum:
        i, j = idx
        return CycNum(self.n, [Fraction(int(c), self.den) for c in self.num[:, i, j]])

    def entries(self) -> list[list[CycNum]]:
        return [[self[i, j] for j in range(self.dim)] for i in range(self.dim)]

    def is_diagonal(self) -> bool:
        off = ~np.eye(self.dim, dtype=bool)
        return not self.num[:, off].any()

    def diagonal_entries(self) -> list[CycNum]:
        return [self[i, i] for i in range(self.dim)]

    def to_complex(self) -> np.ndarray:
        z = np.exp(2j * np.pi * np.arange(self.num.shape[0]) / self.n)
        out = np.tensordot(z, self.num.astype(float), axes=1)
        return out / self.den

    # -- arithmetic --
    def _check(self, other: CycMatrix) -> None:
        if not isinstance(other, CycMatrix):
            raise TypeError(f"expected CycMatrix, got {type(other).__name__}")
        if other.n != self.n:
            raise IncompatibleFieldError(f"Q(zeta_{self.n}) vs Q(zeta_{other.n})")
        if other.dim != self.dim:
            raise DimensionError(f"dimension {self.dim} vs {other.dim}")

    def __matmul__(self, other: CycMatrix) -> CycMatrix:
        return matmul(self, other)

    def __add__(self, other: CycMatrix) -> CycMatrix:
        self._check(other)
        den = math.lcm(self.den, other.den)
        num = self.num * (den // self.den) + other.num * (den // other.den)
        return CycMatrix(self.n, num, den)

    def __neg__(self) -> CycMatrix:
        return CycMatrix(self.n, -self.num, self.den)

    def __sub__(self, other: CycMatrix) -> CycMatrix:
        return self + (-other)

    def scale(self, q) -> CycMatrix:
        """Multiply by a rational scalar."""
        q = Fraction(q)
        return CycMatrix(self.n, self.num * q.numerator, self.den * q.denominator)

    def __pow__(self, k: int) -> CycMatrix:
        return mat_pow(self, k)

    def inverse(self) -> CycMatrix:
        """Inverse of a unitary matrix (all group elements here are unitary)."""
        ct = conj_transpose(self)
        if self @ ct != CycMatrix.identity(self.n, self.dim):
            raise ValueError("inverse() is only supported for unitary matrices")
        return ct

    # -- equality / hashing --
    def __eq__(self, other) -> bool:
        if not isinstance(other, CycMatrix):
            return NotImplemented
        return (self.n == other.n and self.den == other.den
                and self.num.shape == other.num.shape
                and bool((self.num == other.num).all()))

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.den, self.num.shape, tuple(self.num.flat)))
        return self._hash

    def __repr__(self) -> str:
        return f"CycMatrix(n={self.n}, dim={self.dim}, den={self.den})"


def matmul(x: CycMatrix, y: CycMatrix) -> CycMatrix:
    x._check(y)
    deg = x.num.shape[0]
    out = _zeros((2 * deg - 1, x.dim, x.dim))
    ys = [(l, y.num[l]) for l in range(deg) if y.num[l].any()]
    for k in range(deg):
        xk = x.num[k]
        if not xk.any():
            continue
        for l, yl in ys:
            out[k + l] += xk @ yl
    return CycMatrix(x.n, out, x.den * y.den)


def mat_pow(x: CycMatrix, k: int) -> CycMatrix:
    """Repeated squaring; k >= 0."""
    if k < 0:
        raise ValueError("mat_pow exponent must be non-negative")
    result = CycMatrix.identity(x.n, x.dim)
    base = x
    while k:
        if k & 1:
            result = result @ base
        k >>= 1
        if k:
            base = base @ base
    return result


def conj_transpose(x: CycMatrix) -> CycMatrix:
    n = x.n
    deg = x.num.shape[0]
    spread = _zeros((n, x.dim, x.dim))
    for k in range(deg):
        spread[(-k) % n] += x.num[k].T
    return CycMatrix(n, spread, x.den)


def commutator(x: CycMatrix, y: CycMatrix) -> CycMatrix:
    """x y x^-1 y^-1 for unitary x, y."""
    return x @ y @ x.inverse() @ y.inverse()


def kron(x: CycMatrix, y: CycMatrix) -> CycMatrix:
    if x.n != y.n:
        raise IncompatibleFieldError(f"Q(zeta_{x.n}) vs Q(zeta_{y.n})")
    deg = x.num.shape[0]
    dim = x.dim * y.dim
    out = _zeros((2 * deg - 1, dim, dim))
    for k in range(deg):
        if not x.num[k].any():
            continue
        for l in range(deg):
            if not y.num[l].any():
                continue
            block = x.num[k][:, None, :, None] * y.num[l][None, :, None, :]
            out[k + l] += block.reshape(dim, dim)
    return CycMatrix(x.n, out, x.den * y.den)


def block_diag(blocks: Sequence[CycMatrix]) -> CycMatrix:
    n = blocks[0].n
    deg = euler_phi(n)
    den = math.lcm(*(b.den for b in blocks))
    dim = sum(b.dim for b in blocks)
    num = _zeros((deg, dim, dim))
    at = 0
    for b in blocks:
        if b.n != n:
            raise IncompatibleFieldError("blocks from different fields")
        num[:, at:at + b.dim, at:at + b.dim] = b.num * (den // b.den)
        at += b.dim
    return CycMatrix(n, num, den)


# --- the walk's matrices ---

def _check_n(n: int) -> None:
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")


def build_P(n: int, j: int) -> CycMatrix:
    """Row j carries 2/n, with 2/n - 1 on the diagonal; every other row is zero."""
    _check_n(n)
    if not 0 <= j < n:
        raise IndexError(f"P index {j} out of range for n={n}")
    rows = [[Fraction(0)] * n for _ in range(n)]
    rows[j] = [Fraction(2, n) - (1 if c == j else 0) for c in range(n)]
    return CycMatrix.from_rationals(n, rows)


def build_G(n: int) -> CycMatrix:
    _check_n(n)
    two_n = Fraction(2, n)
    return CycMatrix.from_rationals(
        n, [[two_n - 1 if r == c else two_n for c in range(n)] for r in range(n)])


def build_S(n: int) -> CycMatrix:
    _check_n(n)
    num = _zeros((euler_phi(n), n, n))
    table = power_table(n)
    for k in range(n):
        num[:, k, k] = table[k]
    return CycMatrix(n, num)


def build_A(n: int) -> CycMatrix:
    """Unnormalized DFT matrix F with F[j, k] = zeta^(j k); A = F / sqrt(n)."""
    _check_n(n)
    num = _zeros((euler_phi(n), n, n))
    table = power_table(n)
    for r in range(n):
        for c in range(n):
            num[:, r, c] = table[(r * c) % n]
    return CycMatrix(n, num)


def _conjugate_by(f: CycMatrix, x: CycMatrix, scale: int) -> CycMatrix:
    return (conj_transpose(f) @ x @ f).scale(Fraction(1, scale))


def conjugate_by_A(x: CycMatrix) -> CycMatrix:
    """A^-1 X A, computed as F* X F / n."""
    f = build_A(x.n)
    if x.dim != x.n:
        raise DimensionError(f"expected a {x.n}x{x.n} matrix, got dim {x.dim}")
    return _conjugate_by(f, x, x.n)


def build_U(n: int) -> CycMatrix:
    """Block-circulant evolution matrix: block (r, c) is P_((c - r) mod n)."""
    _check_n(n)
    ps = [build_P(n, j) for j in range(n)]
    deg = euler_phi(n)
    num = _zeros((deg, n * n, n * n))
    for r in range(n):
        for c in range(n):
            p = ps[(c - r) % n]
            num[:, r * n:(r + 1) * n, c * n:(c + 1) * n] = p.num * (n // p.den)
    return CycMatrix(n, num, n)


def diagonalized_blocks(n: int) -> list[CycMatrix]:
    """[G, SG, S^2 G, ..., S^(n-1) G]."""
    g, s = build_G(n), build_S(n)
    blocks, sj = [], CycMatrix.identity(n, n)
    for _ in range(n):
        blocks.append(sj @ g)
        sj = sj @ s
    return blocks


def check_diagonalization(n: int, u: CycMatrix | None = None) -> bool:
    """Whether (A (x) I)^-1 U (A (x) I) is block diagonal with blocks S^j G."""
    if u is None:
        u = build_U(n)
    fi = kron(build_A(n), CycMatrix.identity(n, n))
    return _conjugate_by(fi, u, n) == block_diag(diagonalized_blocks(n))


def minimal_identity_power(x: CycMatrix, limit: int) -> int | None:
    """Smallest m in 1..limit with x^m = I, multiplying one step at a time."""
    eye = CycMatrix.identity(x.n, x.dim)
    power = x
    for m in range(1, limit + 1):
        if power == eye:
            return m
        power = power @ x
    return None


def product(mats: Iterable[CycMatrix], n: int, dim: int) -> CycMatrix:
    out = CycMatrix.identity(n, dim)
    for m in mats:
        out = out @ m
    return out
