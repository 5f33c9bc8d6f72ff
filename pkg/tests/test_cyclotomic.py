import cmath
import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grovergroup.cyclotomic import (
    CycNum,
    IncompatibleFieldError,
    cyclotomic_polynomial,
    euler_phi,
    zeta_pow,
)


def _phi_by_roots(n):
    """Independent oracle: expand prod (x - zeta^k) over primitive roots numerically."""
    roots = [cmath.exp(2j * cmath.pi * k / n) for k in range(1, n + 1) if math.gcd(k, n) == 1]
    return tuple(int(round(c.real)) for c in np.poly(roots)[::-1])


def test_phi_base_cases():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)


def test_phi_12():
    # frozen from _phi_by_roots(12)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


@pytest.mark.parametrize("n", range(1, 31))
def test_phi_matches_root_expansion(n):
    assert cyclotomic_polynomial(n) == _phi_by_roots(n)
    assert euler_phi(n) == sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


def test_phi_rejects_zero():
    with pytest.raises(ValueError):
        cyclotomic_polynomial(0)


def test_zeta_pow_examples():
    assert zeta_pow(5, 0) == CycNum.one(5)
    assert zeta_pow(5, 5) == CycNum.one(5)
    assert zeta_pow(4, 2) == CycNum.rational(4, -1)
    assert zeta_pow(4, 2) == -1


def test_roots_of_unity_sum_to_zero():
    total = CycNum.zero(3)
    for k in range(3):
        total = total + zeta_pow(3, k)
    assert total.is_zero()


def test_i_squared():
    z = zeta_pow(4, 1)
    assert z * z == -1


def test_conj_times_self_is_one():
    z = zeta_pow(6, 1)
    assert z.conj() * z == 1


def test_inverse_of_zero():
    with pytest.raises(ZeroDivisionError):
        CycNum.zero(5).inv()


def test_mismatched_fields():
    with pytest.raises(IncompatibleFieldError):
        zeta_pow(3, 1) + zeta_pow(4, 1)


def test_zeta_is_root_of_phi():
    for n in (2, 3, 5, 8, 12):
        z = zeta_pow(n, 1)
        acc = CycNum.zero(n)
        for k, c in enumerate(cyclotomic_polynomial(n)):
            acc = acc + c * z ** k
        assert acc.is_zero()


def test_complex_value():
    assert abs(complex(zeta_pow(8, 3)) - cmath.exp(2j * cmath.pi * 3 / 8)) < 1e-12


# --- property tests ---

moduli = st.sampled_from([2, 3, 4, 5, 6, 7, 8, 9, 12])
fracs = st.fractions(min_value=-5, max_value=5, max_denominator=7)


@st.composite
def field_pair(draw):
    n = draw(moduli)
    d = euler_phi(n)
    a = CycNum(n, draw(st.lists(fracs, min_size=d, max_size=d)))
    b = CycNum(n, draw(st.lists(fracs, min_size=d, max_size=d)))
    return a, b


@settings(max_examples=150, deadline=None)
@given(field_pair())
def test_mul_then_divide(pair):
    a, b = pair
    if not b.is_zero():
        assert (a * b) * b.inv() == a
        assert b * b.inv() == 1


@settings(max_examples=100, deadline=None)
@given(moduli, st.integers(-40, 40), st.integers(-40, 40))
def test_zeta_exponent_law(n, k, m):
    assert zeta_pow(n, k) * zeta_pow(n, m) == zeta_pow(n, k + m)


@settings(max_examples=100, deadline=None)
@given(field_pair())
def test_conj_is_automorphism(pair):
    a, b = pair
    assert (a * b).conj() == a.conj() * b.conj()
    assert (a + b).conj() == a.conj() + b.conj()
    assert a.conj().conj() == a


@settings(max_examples=100, deadline=None)
@given(field_pair())
def test_arithmetic_matches_complex(pair):
    a, b = pair
    assert abs(complex(a * b) - complex(a) * complex(b)) < 1e-9
    assert abs(complex(a.conj()) - complex(a).conjugate()) < 1e-9


def test_canonical_equality_not_mod_xn_minus_1():
    # 1 + z + ... + z^(n-1) vanishes; it must reduce to the zero vector
    n = 7
    assert CycNum(n, [1] * n).is_zero()
    assert CycNum(n, [Fraction(1, 2)] * n) == 0
