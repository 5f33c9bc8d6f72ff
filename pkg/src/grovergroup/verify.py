"""The full check suite behind ``grovergroup verify``."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from . import groups, linalg, walk
from .linalg import CycMatrix
from .monomial import in_H

SCHEMA_VERSION = 1
CROSS_CHECK_LIMIT = 8
EXACT_LIMIT = 12


@dataclass
class Check:
    name: str
    passed: bool | None  # None means skipped
    details: str = ""

    def to_dict(self) -> dict:
        status = "skipped" if self.passed is None else ("pass" if self.passed else "fail")
        return {"name": self.name, "status": status, "details": self.details}


@dataclass
class VerificationReport:
    n: int
    engine: str
    checks: list[Check] = field(default_factory=list)
    elapsed: float = 0.0
    seed: int = 0

    @property
    def ok(self) -> bool:
        return all(c.passed is not False for c in self.checks)

    def failed(self) -> list[Check]:
        return [c for c in self.checks if c.passed is False]

    def to_dict(self, timing: bool = False) -> dict:
        out = {
            "schema_version": SCHEMA_VERSION,
            "kind": "verification",
            "n": self.n,
            "engine": self.engine,
            "seed": self.seed,
            "all_passed": self.ok,
            "checks": [c.to_dict() for c in self.checks],
        }
        if timing:
            out["elapsed_seconds"] = round(self.elapsed, 3)
        return out


def _exact_checks(n: int, exact_limit: int) -> list[Check]:
    g, s = linalg.build_G(n), linalg.build_S(n)
    eye = CycMatrix.identity(n, n)
    out = [
        Check("G_involutory", g @ g == eye, "G^2 = I"),
        Check("S_order_n", linalg.mat_pow(s, n) == eye, "S^n = I"),
        Check("P_sum_is_G",
              sum((linalg.build_P(n, j) for j in range(1, n)), linalg.build_P(n, 0)) == g),
    ]
    noncomm, forms, invol, symm = [], [], [], []
    sj = eye
    for j in range(1, n):
        sj = sj @ s
        noncomm.append(g @ sj != sj @ g)
        c = linalg.commutator(sj, g)
        conj = linalg.conjugate_by_A(c)
        want = [-1 if i in (0, j) else 1 for i in range(n)]
        forms.append(conj.is_diagonal() and conj.diagonal_entries() == want)
        invol.append(c @ c == eye)
        symm.append(c == linalg.commutator(g, sj))
    out.append(Check("noncommutativity", all(noncomm), "G S^j != S^j G for j = 1..n-1"))
    out.append(Check("commutator_form", all(forms),
                     "A^-1 [S^j,G] A = diag with -1 at positions 1 and j+1"))
    out.append(Check("commutator_involutory", all(invol), "[S^j,G]^2 = I"))
    out.append(Check("commutator_symmetric", all(symm), "[S^j,G] = [G,S^j]"))
    if n <= exact_limit:
        u = linalg.build_U(n)
        out.append(Check("diagonalization", linalg.check_diagonalization(n, u),
                         "(A x I)^-1 U (A x I) = diag[G, SG, ..., S^(n-1)G]"))
        m = linalg.minimal_identity_power(u, 2 * n)
        out.append(Check("U_period_exact", m == 2 * n, f"least m with U^m = I: {m}"))
    else:
        for name in ("diagonalization", "U_period_exact"):
            out.append(Check(name, None, f"n > exact limit {exact_limit}"))
    return out


def _engine_checks(n: int, engine: str, max_elements: int) -> list[Check]:
    tag = f"[{engine}]"
    k = groups.generate_K(n, engine, max_elements)
    h = groups.generate_H(n, engine, max_elements)
    out = [
        Check(f"H_order{tag}", h.order == 2 ** (n - 1), f"|H| = {h.order}, expected {2 ** (n - 1)}"),
        Check(f"H_elementary_abelian{tag}",
              all(x == h.identity or x @ x == h.identity for x in h),
              "every element of H has order <= 2"),
        Check(f"H_normal{tag}", groups.is_normal(h, k), f"|K| = {k.order}"),
        Check(f"coset_swap{tag}", groups.coset_swap_check(n, engine, max_elements),
              "S^j G^k H = G^k S^j H"),
    ]
    facts = groups.membership_suite(n, engine, max_elements)
    out.append(Check(f"membership{tag}", facts.ok,
                     "mismatches: " + ", ".join(facts.mismatches()) if not facts.ok
                     else f"G in H: {facts.facts['G']}"))
    out.append(Check(f"coset_representatives{tag}",
                     groups.coset_representative_check(n, engine, max_elements)))
    q = groups.quotient(k, h)
    expected = groups.expected_quotient(n)
    try:
        found = groups.identify_abelian_structure(q, expected)
        out.append(Check(f"quotient_structure{tag}", found == expected and q.order == expected.order,
                         f"K/H = {found.name}"))
    except (groups.TheoremViolation, groups.NotAbelianError) as exc:
        out.append(Check(f"quotient_structure{tag}", False, str(exc)))
    m = groups.minimal_common_exponent(n, engine, max_elements)
    out.append(Check(f"minimal_exponent{tag}", m == 2 * n, f"m = {m}"))
    pf = groups.period_facts(n, engine, max_elements)
    bad = [name for name, ok in pf.items() if not ok]
    out.append(Check(f"period_facts{tag}", not bad, "failed: " + "; ".join(bad) if bad else ""))
    if engine == "monomial":
        out.append(Check(f"in_H_fast_path{tag}", all(in_H(x) == (x in h) for x in k),
                         "parity test agrees with closure membership on all of K"))
    return out


def run_verification(n: int, engine: str = "monomial", seed: int = 0,
                     max_elements: int = groups.DEFAULT_MAX_ELEMENTS,
                     exact_limit: int = EXACT_LIMIT,
                     cross_limit: int = CROSS_CHECK_LIMIT) -> VerificationReport:
    """Run every check for one n. ClosureLimitError propagates to the caller."""
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    start = time.perf_counter()
    if engine == "both" or n <= cross_limit:
        engines = list(groups.ENGINES)
    else:
        engines = [engine]
    report = VerificationReport(n, engine, seed=seed)
    report.checks += _exact_checks(n, exact_limit)
    for e in engines:
        report.checks += _engine_checks(n, e, max_elements)
    if len(engines) > 1:
        sizes = {e: (groups.generate_K(n, e, max_elements).order,
                     groups.generate_H(n, e, max_elements).order) for e in engines}
        same = len(set(sizes.values())) == 1
        report.checks.append(Check("engine_agreement", same,
                                   ", ".join(f"{e}: |K|={k} |H|={h}" for e, (k, h) in sizes.items())))
    p = walk.detect_period(n, seed=seed)
    report.checks.append(Check("walk_period_float", p == 2 * n, f"detected period {p}"))
    report.elapsed = time.perf_counter() - start
    return report
