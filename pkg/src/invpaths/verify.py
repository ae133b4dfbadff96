"""Exhaustive checks of the identities and of the involution contracts."""

from __future__ import annotations

import time
import warnings
from collections import Counter
from dataclasses import dataclass, field
from math import comb
from typing import Iterator

from .bijections import to_grand
from .errors import BoundError
from .genfun import GenFunSpec, family_size, genfun
from .identities import IDENTITY_IDS, closed_form, get_identity
from .paths import b_subset_index, sump
from .perms import FILTER_BOUND, Family
from .qpoly import LaurentPolynomial
from .sign_involutions import Case, apply, build_fixed, builders_for, geometric_fixed

# permutation-length bounds for exhaustive checks
MAIN_BOUND = 19
BONUS_BOUND = 9
CONTRACT_BOUND = 4


@dataclass
class VerificationReport:
    id: str
    n: int
    lhs: LaurentPolynomial
    rhs: LaurentPolynomial
    equal: bool
    elapsed_ms: int
    counts: dict[str, int] = field(default_factory=dict)
    params: dict[str, int] = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)

    @property
    def label(self) -> str:
        extra = "".join(f",{k}={v}" for k, v in self.params.items())
        return f"{self.id}(n={self.n}{extra})"

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "n": self.n,
            "params": dict(self.params),
            "lhs": self.lhs.to_pairs(),
            "rhs": self.rhs.to_pairs(),
            "lhs_text": str(self.lhs),
            "rhs_text": str(self.rhs),
            "equal": self.equal,
            "elapsed_ms": self.elapsed_ms,
            "counts": dict(self.counts),
            "failures": list(self.failures),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "VerificationReport":
        return cls(
            id=d["id"],
            n=d["n"],
            lhs=LaurentPolynomial.from_pairs(d["lhs"]),
            rhs=LaurentPolynomial.from_pairs(d["rhs"]),
            equal=d["equal"],
            elapsed_ms=d["elapsed_ms"],
            counts=dict(d.get("counts", {})),
            params=dict(d.get("params", {})),
            failures=list(d.get("failures", [])),
        )


def _bound_for(family: Family) -> int:
    return BONUS_BOUND if family in (Family.S321, Family.S123) else MAIN_BOUND


def _enforce(what: str, length: int, bound: int, allow_large: bool) -> None:
    if length <= bound:
        return
    if not allow_large:
        raise BoundError(what, length, bound, "permutation length")
    hard = FILTER_BOUND if bound == BONUS_BOUND else None
    if hard is not None and length > hard:
        raise BoundError(what, length, hard, "permutation length")
    warnings.warn(f"{what}: length {length} beyond the desk-scale bound {bound}", stacklevel=3)


def check(identity_id: str, n: int, *, k: int | None = None, ell: int | None = None,
          allow_large: bool = False) -> VerificationReport:
    """Enumerate both sides of an identity and compare them exactly."""
    ident = get_identity(identity_id)
    params = {name: v for name, v in (("k", k), ("ell", ell)) if v is not None}
    if n < ident.n_min:
        raise ValueError(f"{identity_id} is stated for n >= {ident.n_min}")
    length = ident.length(n)
    _enforce(identity_id, length, _bound_for(ident.family), allow_large)
    start = time.perf_counter()
    rhs = closed_form(identity_id, n, **params)
    spec = ident.lhs_spec(n, **params)
    lhs = genfun(spec)
    elapsed = int((time.perf_counter() - start) * 1000)
    counts = {f"{ident.family.value}_{length}": family_size(ident.family, length)}
    for fam, m in ident.rhs_families(n):
        counts[f"{fam.value}_{m}"] = family_size(fam, m)
    return VerificationReport(identity_id, n, lhs, rhs, lhs == rhs, elapsed, counts, params)


def check_range(identity_id: str, n: int, allow_large: bool = False) -> list[VerificationReport]:
    """All parameter values of a parametrised identity at ``n`` (a single report otherwise)."""
    ident = get_identity(identity_id)
    if not ident.param:
        return [check(identity_id, n, allow_large=allow_large)]
    return [check(identity_id, n, allow_large=allow_large, **{ident.param: v}) for v in ident.param_range(n)]


# -- involution contracts -------------------------------------------------------


def _subset_size(north: int, east: int, j: int) -> int:
    """``|B_j(north, east)|``."""
    if not 0 <= j <= north or east < 1:
        return 0
    return comb(north - j + east - 1, east - 1)


def _expected_fixed_counts(case: Case, n: int, j: int) -> tuple[int, int]:
    """Expected fixed-set sizes ``(|F_2j|, |F_2j+1|)`` from the half-size path counts."""
    b_nn = _subset_size(n, n, j)
    b_nn1 = _subset_size(n, n + 1, j)
    return {
        Case.PHI1: (b_nn, 0),
        Case.PHI2: (b_nn1, b_nn1),
        Case.PHI3: (2 * b_nn1, b_nn1),
        Case.PHI4: (b_nn1, b_nn1 - b_nn),
    }[case]


def _signed(paths) -> LaurentPolynomial:
    return LaurentPolynomial.from_counts(
        (b_subset_index(p) + 1 for p in paths), (-1 if sump(p) % 2 else 1 for p in paths)
    )


def check_involution_contracts(case: Case | str, n: int, allow_large: bool = False) -> VerificationReport:
    """Sweep one involution over its whole domain.

    The report's ``lhs`` is ``sum over the domain of (-1)^sump q^(j+1)`` and
    its ``rhs`` the same sum over the constructed fixed points; ``failures``
    lists every contract violated (first few witnesses each).
    """
    case = Case(case)
    if n < case.n_min:
        raise ValueError(f"{case.value} needs n >= {case.n_min}")
    if n > CONTRACT_BOUND:
        if not allow_large:
            raise BoundError(f"{case.value} contracts", n, CONTRACT_BOUND)
        warnings.warn(f"{case.value} contracts at n={n} beyond bound {CONTRACT_BOUND}", stacklevel=2)
    start = time.perf_counter()
    problems: dict[str, list[str]] = {}

    def fail(kind: str, witness: str) -> None:
        problems.setdefault(kind, []).append(witness)

    domain = list(case.domain(n))
    fixed: set[str] = set()
    for pi in domain:
        image = apply(case, pi)
        if apply(case, image) != pi:
            fail("involutivity", pi)
        if b_subset_index(image) != b_subset_index(pi):
            fail("subset preservation", pi)
        if image == pi:
            fixed.add(pi)
        elif (sump(image) + sump(pi)) % 2 == 0:
            fail("parity reversal", pi)
        if geometric_fixed(case, pi) != (image == pi):
            fail("geometric characterisation", pi)

    constructed: set[str] = set()
    for b in builders_for(case):
        for omega in b.sources(n):
            built = build_fixed(b, omega)
            constructed.add(built)
            if b_subset_index(built) != b.target_subset(b_subset_index(omega)):
                fail(f"{b.value} target subset", omega)
            if sump(built) % 2 != int(b.odd_sump):
                fail(f"{b.value} sump parity", omega)
    if constructed != fixed:
        for pi in sorted(constructed ^ fixed):
            fail("fixed-set equality", pi)

    by_subset = Counter(b_subset_index(p) for p in fixed)
    for j in range(0, n + 1):
        want = _expected_fixed_counts(case, n, j)
        got = (by_subset[2 * j], by_subset[2 * j + 1])
        if got != want:
            fail("fixed-set cardinality", f"j={j}: {got} != {want}")

    lhs = _signed(domain)
    rhs = _signed(sorted(constructed))
    fixed_signed = _signed(sorted(fixed))
    if lhs != fixed_signed:
        fail("cancellation", f"{lhs} != {fixed_signed}")

    length = case.perm_length(n)
    perm_side = genfun(GenFunSpec(Family.I321, length, "lead", "maj"))
    if perm_side != lhs:
        fail("transport from I_n(321)", f"{perm_side} != {lhs}")

    failures = [f"{kind}: {', '.join(ws[:3])}" + (f" (+{len(ws) - 3})" if len(ws) > 3 else "")
                for kind, ws in problems.items()]
    counts = {"domain": len(domain), "fixed": len(fixed), "constructed": len(constructed)}
    elapsed = int((time.perf_counter() - start) * 1000)
    return VerificationReport(case.value, n, lhs, rhs, lhs == rhs and not failures, elapsed, counts,
                              failures=failures)


# -- whole suite -----------------------------------------------------------------


def suite_plan(n_max: int = MAIN_BOUND) -> list[tuple[str, int]]:
    """``(id, n)`` pairs with permutation length at most ``n_max`` and within bounds."""
    plan = []
    for identity_id in IDENTITY_IDS:
        ident = get_identity(identity_id)
        cap = min(n_max, _bound_for(ident.family))
        n = ident.n_min
        while ident.length(n) <= cap:
            plan.append((identity_id, n))
            n += 1
    for case in Case:
        n = case.n_min
        while n <= CONTRACT_BOUND and case.perm_length(n) <= n_max:
            plan.append((case.value, n))
            n += 1
    return plan


def run_suite(n_max: int = MAIN_BOUND) -> Iterator[VerificationReport]:
    """Every identity and every involution case, ordered by (id, n)."""
    for identity_id, n in suite_plan(n_max):
        if identity_id in Case._value2member_map_:
            yield check_involution_contracts(identity_id, n)
        else:
            yield from check_range(identity_id, n)


