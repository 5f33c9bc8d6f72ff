from collections import Counter

import numpy as np
import pytest

from grovergroup import groups
from grovergroup.groups import (
    AbelianType,
    ClosureLimitError,
    NotNormalError,
    abelian_type_from_orders,
    coset_representative_check,
    coset_swap_check,
    cyclic_product,
    expected_quotient,
    generate_closure,
    generate_H,
    generate_K,
    identify_abelian_structure,
    is_normal,
    membership_suite,
    minimal_common_exponent,
    quotient,
)
from grovergroup.monomial import SignedShift, gen_G_hat, gen_S_hat


def float_closure_size(n):
    """Oracle: closure of <S, G> as complex matrices keyed by rounded entries."""
    w = np.exp(2j * np.pi / n)
    s = np.diag(w ** np.arange(n))
    g = np.full((n, n), 2 / n) - np.eye(n)
    key = lambda m: tuple(np.round(m, 8).ravel().tolist())
    seen = {key(np.eye(n))}
    frontier = [np.eye(n, dtype=complex)]
    while frontier:
        nxt = []
        for x in frontier:
            for gen in (s, g):
                y = x @ gen
                k = key(y)
                if k not in seen:
                    seen.add(k)
                    nxt.append(y)
        frontier = nxt
    return len(seen)


def test_float_oracle_values():
    # frozen below as the |K| expectations
    assert float_closure_size(3) == 12
    assert float_closure_size(4) == 64


def test_trivial_closure():
    e = SignedShift.identity(4)
    assert generate_closure([e]).order == 1


@pytest.mark.parametrize("engine", groups.ENGINES)
@pytest.mark.parametrize("n,order", [(2, 8), (3, 12), (4, 64)])
def test_K_order(engine, n, order):
    assert generate_K(n, engine).order == order


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_K_is_closed(n):
    assert generate_K(n).is_closed()
    assert generate_H(n).is_closed()


def test_closure_ceiling():
    with pytest.raises(ClosureLimitError):
        generate_closure([gen_S_hat(6), gen_G_hat(6)], max_elements=100)


@pytest.mark.parametrize("n,order", [(2, 2), (5, 16)])
def test_H_order(n, order):
    assert generate_H(n).order == order


def test_H_elementary_abelian_n6():
    h = generate_H(6)
    assert all(h.element_order(x) == 2 for x in h if x != h.identity)


@pytest.mark.parametrize("n", [4, 7])
def test_H_normal(n):
    assert is_normal(generate_H(n), generate_K(n))


def test_trivial_subgroup_normal():
    k = generate_K(5)
    triv = generate_closure([k.identity], k.identity)
    assert is_normal(triv, k)


def test_non_normal_detected():
    # <G_hat> is not normal in K for n = 3
    k = generate_K(3)
    sub = generate_closure([gen_G_hat(3)])
    assert not is_normal(sub, k)
    with pytest.raises(NotNormalError):
        quotient(k, sub)


@pytest.mark.parametrize("n,order", [(4, 8), (5, 5)])
def test_quotient_order(n, order):
    q = quotient(generate_K(n), generate_H(n))
    assert q.order == order
    assert q.order * generate_H(n).order == generate_K(n).order
    assert q.is_group()


def test_quotient_by_whole_group():
    k = generate_K(3)
    assert quotient(k, k).order == 1


@pytest.mark.parametrize("n", [2, 4, 5])
def test_coset_representatives(n):
    assert coset_representative_check(n)
    assert len(groups.paper_representatives(n)) == (2 * n if n % 2 == 0 else n)


@pytest.mark.parametrize("n,name", [(6, "Z_6 x Z_2"), (7, "Z_7"), (2, "Z_2 x Z_2")])
def test_identify_structure(n, name):
    q = quotient(generate_K(n), generate_H(n))
    t = identify_abelian_structure(q, expected_quotient(n))
    assert t.name == name
    assert t == expected_quotient(n)


def test_identify_rejects_wrong_expectation():
    q = quotient(generate_K(4), generate_H(4))
    with pytest.raises(groups.TheoremViolation):
        identify_abelian_structure(q, AbelianType((8,)))


def test_abelian_type_normalization():
    assert cyclic_product(6, 2) == AbelianType((2, 6))
    assert cyclic_product(3, 2) == AbelianType((6,))
    assert cyclic_product(4, 2).name == "Z_4 x Z_2"
    assert AbelianType(()).order_multiset() == Counter({1: 1})


@pytest.mark.parametrize("factors", [(2,), (2, 2), (2, 4), (2, 6), (3, 3), (2, 2, 4), (12,), (2, 12)])
def test_type_from_orders_roundtrip(factors):
    t = AbelianType(factors)
    assert abelian_type_from_orders(t.order_multiset()) == t


def test_membership_examples():
    assert membership_suite(3).facts["G"] is True
    f4 = membership_suite(4).facts
    assert f4["G"] is False and f4["S^2"] is False and f4["S^3G"] is False
    assert membership_suite(2).facts["S^1"] is False


@pytest.mark.parametrize("n", [3, 6])
def test_coset_swap(n):
    assert coset_swap_check(n)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_minimal_common_exponent(n):
    assert minimal_common_exponent(n) == 2 * n
    assert minimal_common_exponent(n, "exact") == 2 * n


def test_period_facts():
    for n in range(2, 8):
        assert all(groups.period_facts(n).values())


def test_group_report():
    r = groups.build_group_report(3)
    assert (r.order_K, r.order_H, r.order_quotient, r.quotient_structure) == (12, 4, 3, "Z_3")
    assert r.to_dict()["membership_facts"]["G"] is True


@pytest.mark.parametrize("n", range(2, 9))
def test_fast_in_H_agrees_with_closure(n):
    from grovergroup.monomial import in_H
    h = generate_H(n)
    assert all(in_H(x) == (x in h) for x in generate_K(n))
    assert sum(in_H(x) for x in generate_K(n)) == 2 ** (n - 1)


def test_unknown_engine():
    with pytest.raises(ValueError):
        groups.make_engine(3, "bogus")
