"""Finite group machinery for K = <S, G> and its commutator subgroup H.

Everything here works on any element type that supports ``a @ b``,
``a.inverse()``, equality and hashing.  Two element backends are provided:
exact ``CycMatrix`` in the original basis and ``SignedShift`` in the
Fourier-conjugated basis.
"""

from __future__ import annotations

import math
from collections import Counter, deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Hashable, Iterable, Sequence

from . import linalg
from .linalg import CycMatrix
from .monomial import SignedShift, gen_G_hat, gen_S_hat

DEFAULT_MAX_ELEMENTS = 2**18
ENGINES = ("monomial", "exact")


class ClosureLimitError(RuntimeError):
    """A closure grew past the configured element ceiling."""


class TheoremViolation(AssertionError):
    """A computed fact disagrees with the structure theorem being certified."""


class NotNormalError(ValueError):
    pass


class NotAbelianError(ValueError):
    pass


@dataclass
class FiniteGroup:
    elements: list
    generators: list
    identity: Any
    index: dict = field(repr=False, default_factory=dict)

    def __post_init__(self):
        if not self.index:
            self.index = {x: i for i, x in enumerate(self.elements)}

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x) -> bool:
        return x in self.index

    def __iter__(self):
        return iter(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def element_order(self, x) -> int:
        k, y = 1, x
        while y != self.identity:
            y = y @ x
            k += 1
            if k > len(self.elements):
                raise ValueError("element does not have finite order within this group")
        return k

    def is_closed(self) -> bool:
        """Full closure and inverse check. Quadratic in the order; small groups only."""
        if self.identity not in self.index:
            return False
        for a in self.elements:
            if a.inverse() not in self.index:
                return False
            for b in self.elements:
                if a @ b not in self.index:
                    return False
        return True


def generate_closure(generators: Sequence[Hashable], identity=None,
                     max_elements: int = DEFAULT_MAX_ELEMENTS) -> FiniteGroup:
    """Breadth-first closure under right multiplication by generators and their inverses."""
    if not generators:
        raise ValueError("need at least one generator")
    gens = list(generators)
    if identity is None:
        identity = gens[0] @ gens[0].inverse()
    steps = []
    for g in gens:
        for h in (g, g.inverse()):
            if h not in steps:
                steps.append(h)
    elements = [identity]
    index = {identity: 0}
    queue = deque([identity])
    while queue:
        x = queue.popleft()
        for g in steps:
            y = x @ g
            if y not in index:
                if len(elements) >= max_elements:
                    raise ClosureLimitError(
                        f"closure exceeded {max_elements} elements; raise --max-elements")
                index[y] = len(elements)
                elements.append(y)
                queue.append(y)
    return FiniteGroup(elements, gens, identity, index)


def power(x, k: int, identity):
    out = identity
    for _ in range(k):
        out = out @ x
    return out


@dataclass(frozen=True)
class Engine:
    """The two generators of K and the identity in one element representation."""

    name: str
    n: int
    S: Any
    G: Any
    identity: Any

    def S_pow(self, j: int):
        return power(self.S, j % self.n, self.identity)

    def commutator(self, j: int):
        sj = self.S_pow(j)
        return sj @ self.G @ sj.inverse() @ self.G.inverse()


@lru_cache(maxsize=None)
def make_engine(n: int, name: str = "monomial") -> Engine:
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    if name == "monomial":
        return Engine(name, n, gen_S_hat(n), gen_G_hat(n), SignedShift.identity(n))
    if name == "exact":
        return Engine(name, n, linalg.build_S(n), linalg.build_G(n), CycMatrix.identity(n, n))
    raise ValueError(f"unknown engine {name!r}; choose from {ENGINES}")


@lru_cache(maxsize=32)
def generate_K(n: int, engine: str = "monomial",
               max_elements: int = DEFAULT_MAX_ELEMENTS) -> FiniteGroup:
    e = make_engine(n, engine)
    return generate_closure([e.S, e.G], e.identity, max_elements)


@lru_cache(maxsize=32)
def generate_H(n: int, engine: str = "monomial",
               max_elements: int = DEFAULT_MAX_ELEMENTS) -> FiniteGroup:
    """Closure of the commutators [S^j, G], j = 1..n-1."""
    e = make_engine(n, engine)
    return generate_closure([e.commutator(j) for j in range(1, n)], e.identity, max_elements)


def is_normal(sub: FiniteGroup, parent: FiniteGroup) -> bool:
    """Conjugating by the parent's generators is enough to test normality."""
    for h in sub.generators:
        if h not in parent:
            raise ValueError("subgroup generator is not in the parent group")
    for g in parent.generators:
        g_inv = g.inverse()
        for h in sub:
            if g @ h @ g_inv not in sub:
                return False
    return True


@dataclass
class QuotientGroup:
    coset_representatives: list
    multiplication_table: list[list[int]]
    parent: FiniteGroup = field(repr=False)
    normal_subgroup: FiniteGroup = field(repr=False)
    coset_of: dict = field(repr=False, default_factory=dict)

    @property
    def order(self) -> int:
        return len(self.coset_representatives)

    def coset_index(self, x) -> int:
        return self.coset_of[x]

    def is_abelian(self) -> bool:
        t = self.multiplication_table
        return all(t[i][j] == t[j][i] for i in range(self.order) for j in range(i))

    def element_order(self, i: int) -> int:
        k, cur = 1, i
        while cur != 0:
            cur = self.multiplication_table[cur][i]
            k += 1
        return k

    def element_orders(self) -> Counter:
        return Counter(self.element_order(i) for i in range(self.order))

    def is_group(self) -> bool:
        """Identity at 0, every row a permutation (Latin square), associativity."""
        t, m = self.multiplication_table, self.order
        full = set(range(m))
        if any(set(row) != full for row in t) or any({t[i][j] for i in range(m)} != full for j in range(m)):
            return False
        if any(t[0][i] != i or t[i][0] != i for i in range(m)):
            return False
        return all(t[t[a][b]][c] == t[a][t[b][c]]
                   for a in range(m) for b in range(m) for c in range(m))


def quotient(parent: FiniteGroup, normal: FiniteGroup) -> QuotientGroup:
    """Partition into cosets H g; representatives are first seen in parent order."""
    if not is_normal(normal, parent):
        raise NotNormalError("quotient requires a normal subgroup")
    coset_of: dict = {}
    reps = []
    for g in parent:
        if g in coset_of:
            continue
        idx = len(reps)
        reps.append(g)
        for h in normal:
            coset_of[h @ g] = idx
    if len(coset_of) != len(parent):
        raise ValueError("subgroup cosets do not partition the parent group")
    table = [[coset_of[a @ b] for b in reps] for a in reps]
    return QuotientGroup(reps, table, parent, normal, coset_of)


@dataclass(frozen=True)
class AbelianType:
    """A finite abelian group by invariant factors d_1 | d_2 | ... (all > 1)."""

    invariant_factors: tuple[int, ...]

    @property
    def order(self) -> int:
        return math.prod(self.invariant_factors)

    @property
    def name(self) -> str:
        if not self.invariant_factors:
            return "Z_1"
        return " x ".join(f"Z_{d}" for d in sorted(self.invariant_factors, reverse=True))

    def order_multiset(self) -> Counter:
        """Element orders of Z_d1 x ... x Z_dk, by direct enumeration."""
        orders: Counter = Counter({1: 1})
        for d in self.invariant_factors:
            cyc = Counter(d // math.gcd(d, a) for a in range(d))
            nxt: Counter = Counter()
            for o1, c1 in orders.items():
                for o2, c2 in cyc.items():
                    nxt[math.lcm(o1, o2)] += c1 * c2
            orders = nxt
        return orders

    def __str__(self) -> str:
        return self.name


def cyclic_product(*orders: int) -> AbelianType:
    """Normalize Z_a x Z_b x ... into invariant factor form."""
    primary: dict[int, list[int]] = {}
    for m in orders:
        for p, e in _factorize(m).items():
            primary.setdefault(p, []).append(p**e)
    return _from_primary(primary)


def expected_quotient(n: int) -> AbelianType:
    """Z_n x Z_2 for even n, Z_n for odd n."""
    return cyclic_product(n, 2) if n % 2 == 0 else cyclic_product(n)


def _factorize(m: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= m:
        while m % p == 0:
            out[p] = out.get(p, 0) + 1
            m //= p
        p += 1
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return out


def _from_primary(primary: dict[int, list[int]]) -> AbelianType:
    width = max((len(v) for v in primary.values()), default=0)
    factors = [1] * width
    for powers in primary.values():
        for i, q in enumerate(sorted(powers, reverse=True)):
            factors[width - 1 - i] *= q
    return AbelianType(tuple(f for f in factors if f > 1))


def abelian_type_from_orders(orders: Counter) -> AbelianType:
    """Recover the abelian type from an element-order multiset.

    For the p-part Z_(p^e1) x ... the number of elements killed by p^k is
    p^(sum_i min(k, e_i)); differencing those exponents gives the partition.
    """
    total = sum(orders.values())
    primary: dict[int, list[int]] = {}
    for p, top in _factorize(total).items():
        logs = [0]
        for k in range(1, top + 1):
            cnt = sum(c for o, c in orders.items() if (p**k) % o == 0)
            logs.append(round(math.log(cnt, p)))
        # at_least[k] = number of cyclic p-factors with exponent >= k
        at_least = [logs[k] - logs[k - 1] for k in range(1, top + 1)] + [0]
        exps = []
        for k in range(1, top + 1):
            exps += [k] * (at_least[k - 1] - at_least[k])
        primary[p] = [p**e for e in exps]
    return _from_primary(primary)


def identify_abelian_structure(q: QuotientGroup, expected: AbelianType | None = None) -> AbelianType:
    """Identify q from its element-order multiset, optionally against an expected type."""
    if not q.is_abelian():
        raise NotAbelianError("quotient group is not abelian")
    orders = q.element_orders()
    found = abelian_type_from_orders(orders)
    if found.order_multiset() != orders:
        raise TheoremViolation(f"order multiset {dict(orders)} matches no abelian group")
    if expected is not None and expected.order_multiset() != orders:
        raise TheoremViolation(f"quotient is {found.name}, expected {expected.name}")
    return found


# --- checks tied to the Grover walk groups ---

def quotient_KH(n: int, engine: str = "monomial",
                max_elements: int = DEFAULT_MAX_ELEMENTS) -> QuotientGroup:
    return quotient(generate_K(n, engine, max_elements), generate_H(n, engine, max_elements))


def paper_representatives(n: int, engine: str = "monomial") -> list:
    """S^j G^l with l in {0, 1} for even n, just S^j for odd n."""
    e = make_engine(n, engine)
    reps = [e.S_pow(j) for j in range(n)]
    if n % 2 == 0:
        reps += [e.S_pow(j) @ e.G for j in range(n)]
    return reps


def coset_representative_check(n: int, engine: str = "monomial",
                               max_elements: int = DEFAULT_MAX_ELEMENTS) -> bool:
    q = quotient_KH(n, engine, max_elements)
    hit = [q.coset_index(r) for r in paper_representatives(n, engine)]
    return len(set(hit)) == len(hit) == q.order


def coset_swap_check(n: int, engine: str = "monomial",
                     max_elements: int = DEFAULT_MAX_ELEMENTS) -> bool:
    """S^j G^k H == G^k S^j H for j mod n and k mod 2."""
    e = make_engine(n, engine)
    h = generate_H(n, engine, max_elements)
    for j in range(n):
        sj = e.S_pow(j)
        for k in (0, 1):
            gk = e.G if k else e.identity
            if (sj @ gk) @ (gk @ sj).inverse() not in h:
                return False
    return True


@dataclass
class MembershipFacts:
    facts: dict[str, bool]
    expected: dict[str, bool]

    @property
    def ok(self) -> bool:
        return self.facts == self.expected

    def mismatches(self) -> list[str]:
        return [k for k in self.facts if self.facts[k] != self.expected[k]]


def membership_suite(n: int, engine: str = "monomial",
                     max_elements: int = DEFAULT_MAX_ELEMENTS) -> MembershipFacts:
    e = make_engine(n, engine)
    h = generate_H(n, engine, max_elements)
    facts, expected = {}, {}
    facts["G"] = e.G in h
    expected["G"] = n % 2 == 1
    for j in range(1, n):
        sj = e.S_pow(j)
        facts[f"S^{j}"] = sj in h
        expected[f"S^{j}"] = False
        facts[f"S^{j}G"] = (sj @ e.G) in h
        expected[f"S^{j}G"] = False
    return MembershipFacts(facts, expected)


def minimal_common_exponent(n: int, engine: str = "monomial",
                            max_elements: int = DEFAULT_MAX_ELEMENTS) -> int:
    """Smallest m >= 1 with (S^j G)^m = I for every j = 0..n-1."""
    e = make_engine(n, engine)
    bases = [e.S_pow(j) @ e.G for j in range(n)]
    powers = list(bases)
    bound = generate_K(n, engine, max_elements).order
    for m in range(1, bound + 1):
        if all(p == e.identity for p in powers):
            return m
        powers = [p @ b for p, b in zip(powers, bases)]
    raise TheoremViolation(f"no common exponent up to |K| = {bound}")


def period_facts(n: int, engine: str = "monomial",
                 max_elements: int = DEFAULT_MAX_ELEMENTS) -> dict[str, bool]:
    """Intermediate facts used on the way to the period: (S^jG)^n in H, etc."""
    e = make_engine(n, engine)
    h = generate_H(n, engine, max_elements)
    sg = e.S @ e.G
    out = {
        "(S^jG)^n in H for all j": all(
            power(e.S_pow(j) @ e.G, n, e.identity) in h for j in range(n)),
        "n is the least k with (SG)^k in H": (
            all(power(sg, k, e.identity) not in h for k in range(1, n))
            and power(sg, n, e.identity) in h),
        "non-identity elements of H have order 2": all(
            x == e.identity or x @ x == e.identity for x in h),
    }
    if n % 2 == 0:
        out["(SG)^n is not the identity"] = power(sg, n, e.identity) != e.identity
    else:
        out["G^n is not the identity"] = power(e.G, n, e.identity) != e.identity
    return out


@dataclass
class GroupReport:
    n: int
    engine: str
    order_K: int
    order_H: int
    order_quotient: int
    quotient_structure: str
    quotient_invariant_factors: list[int]
    membership_facts: dict[str, bool]
    minimal_exponent_m: int

    def __post_init__(self):
        if self.order_quotient * self.order_H != self.order_K:
            raise TheoremViolation("|K/H| * |H| != |K|")

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "engine": self.engine,
            "order_K": self.order_K,
            "order_H": self.order_H,
            "order_quotient": self.order_quotient,
            "quotient_structure": self.quotient_structure,
            "quotient_invariant_factors": self.quotient_invariant_factors,
            "membership_facts": self.membership_facts,
            "minimal_exponent_m": self.minimal_exponent_m,
        }


def build_group_report(n: int, engine: str = "monomial",
                       max_elements: int = DEFAULT_MAX_ELEMENTS) -> GroupReport:
    k = generate_K(n, engine, max_elements)
    h = generate_H(n, engine, max_elements)
    q = quotient(k, h)
    structure = identify_abelian_structure(q)
    return GroupReport(
        n=n,
        engine=engine,
        order_K=k.order,
        order_H=h.order,
        order_quotient=q.order,
        quotient_structure=structure.name,
        quotient_invariant_factors=list(structure.invariant_factors),
        membership_facts=membership_suite(n, engine, max_elements).facts,
        minimal_exponent_m=minimal_common_exponent(n, engine, max_elements),
    )


def words_to_element(word: Iterable[str], n: int, engine: str = "monomial"):
    """Evaluate a word over {"S", "G", "s"} (s = S^-1) in the chosen engine."""
    e = make_engine(n, engine)
    gens = {"S": e.S, "G": e.G, "s": e.S.inverse()}
    out = e.identity
    for letter in word:
        out = out @ gens[letter]
    return out
