"""Signed cyclic shifts: group elements in the DFT-conjugated basis.

After conjugating by the Fourier matrix, ``S`` becomes the cyclic shift
``e_b -> e_(b+1)`` and ``G`` becomes ``diag(1, -1, ..., -1)``.  Every product of
these is ``diag(signs) @ shift^k``, which is all a ``SignedShift`` stores.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cyclotomic import IncompatibleFieldError, euler_phi
from .linalg import CycMatrix, _zeros


@dataclass(frozen=True)
class SignedShift:
    """The monomial matrix ``diag(signs) @ C^shift`` with ``C e_b = e_(b+1)``.

    Entry ``(a, b)`` is ``signs[a]`` when ``a == b + shift (mod n)``, else 0.
    """

    n: int
    shift: int
    signs: tuple[int, ...]

    def __post_init__(self):
        if len(self.signs) != self.n:
            raise ValueError(f"need {self.n} signs, got {len(self.signs)}")
        if not 0 <= self.shift < self.n:
            object.__setattr__(self, "shift", self.shift % self.n)

    @classmethod
    def identity(cls, n: int) -> SignedShift:
        return cls(n, 0, (1,) * n)

    def __matmul__(self, other: SignedShift) -> SignedShift:
        return compose(self, other)

    def inverse(self) -> SignedShift:
        return inverse(self)

    def is_identity(self) -> bool:
        return self.shift == 0 and all(s == 1 for s in self.signs)

    def to_matrix(self) -> CycMatrix:
        return to_matrix(self)


def gen_S_hat(n: int) -> SignedShift:
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    return SignedShift(n, 1, (1,) * n)


def gen_G_hat(n: int) -> SignedShift:
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    return SignedShift(n, 0, (1,) + (-1,) * (n - 1))


def compose(a: SignedShift, b: SignedShift) -> SignedShift:
    # D_a C^s D_b = D_a (C^s D_b C^-s) C^s, and C^s D C^-s has D[i - s] at i.
    if a.n != b.n:
        raise IncompatibleFieldError(f"cannot compose n={a.n} with n={b.n}")
    n, s = a.n, a.shift
    bs = b.signs
    signs = tuple(a.signs[i] * bs[(i - s) % n] for i in range(n))
    return SignedShift(n, (s + b.shift) % n, signs)


def inverse(a: SignedShift) -> SignedShift:
    # (D C^s)^-1 = C^-s D = (C^-s D C^s) C^-s, entry i is D[i + s].
    n, s = a.n, a.shift
    signs = tuple(a.signs[(i + s) % n] for i in range(n))
    return SignedShift(n, (-s) % n, signs)


def in_H(a: SignedShift) -> bool:
    """Membership in the subgroup generated by the conjugated commutators.

    Those commutators are diagonal with -1 at positions 0 and j, and such
    vectors span exactly the even-weight sign patterns.
    """
    return a.shift == 0 and a.signs.count(-1) % 2 == 0


def to_matrix(a: SignedShift) -> CycMatrix:
    n = a.n
    num = _zeros((euler_phi(n), n, n))
    for b in range(n):
        r = (b + a.shift) % n
        num[0, r, b] = a.signs[r]
    return CycMatrix(n, num)


def from_matrix(m: CycMatrix) -> SignedShift:
    """Read a signed cyclic shift back from its matrix; raises if it is not one."""
    n = m.n
    if m.dim != n or m.den != 1 or m.num[1:].any():
        raise ValueError("not a signed cyclic shift matrix")
    block = np.array(m.num[0], dtype=np.int64)
    col0 = np.nonzero(block[:, 0])[0]
    if len(col0) != 1:
        raise ValueError("not a signed cyclic shift matrix")
    shift = int(col0[0])
    signs = tuple(int(block[(b + shift) % n, b]) for b in range(n))
    signs = tuple(signs[(r - shift) % n] for r in range(n))
    out = SignedShift(n, shift, signs)
    if to_matrix(out) != m:
        raise ValueError("not a signed cyclic shift matrix")
    return out


def evaluate_word(word, n: int) -> SignedShift:
    """Multiply out a word over {"S", "G", "s"} ("s" is S^-1), left to right."""
    gens = {"S": gen_S_hat(n), "G": gen_G_hat(n)}
    gens["s"] = inverse(gens["S"])
    out = SignedShift.identity(n)
    for letter in word:
        out = out @ gens[letter]
    return out
