"""Signed, weighted generating functions over the enumerated families."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .errors import BoundError
from .perms import (
    FILTER_BOUND,
    STAT_NAMES,
    Family,
    Perm,
    enumerate_family,
    involutions,
    longest_monotone,
    all_permutations,
    stat_value,
)
from .qpoly import LaurentPolynomial

ORACLE_BOUND = 12


@dataclass(frozen=True)
class GenFunSpec:
    """``sum (-1)^sign_stat * q^(weight_scale * weight_stat)`` over a family.

    ``where`` restricts the sum to members with ``stat == value``.
    """

    family: Family
    n: int
    weight_stat: str | None
    sign_stat: str | None = None
    weight_scale: int = 1
    where: tuple[str, int] | None = None

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        for name in (self.weight_stat, self.sign_stat, self.where and self.where[0]):
            if name is not None and name not in STAT_NAMES:
                raise ValueError(f"unknown statistic {name!r}; expected one of {STAT_NAMES}")


def genfun(spec: GenFunSpec) -> LaurentPolynomial:
    acc: Counter[int] = Counter()
    for p in enumerate_family(spec.family, spec.n):
        if spec.where and stat_value(p, spec.where[0]) != spec.where[1]:
            continue
        e = spec.weight_scale * stat_value(p, spec.weight_stat) if spec.weight_stat else 0
        sign = -1 if spec.sign_stat and stat_value(p, spec.sign_stat) % 2 else 1
        acc[e] += sign
    return LaurentPolynomial(acc)


def family_size(family: Family | str, n: int) -> int:
    return sum(1 for _ in enumerate_family(family, n))


# -- independent recomputation ------------------------------------------------


def _scan_stat(p: Perm, name: str) -> int:
    # statistics straight from their definitions, one pass over adjacent pairs
    if name == "lead":
        return p[0] if p else 0
    if name == "inv":
        return sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])
    descents = [i + 1 for i in range(len(p) - 1) if p[i] > p[i + 1]]
    if name == "des":
        return len(descents)
    if name == "maj":
        return sum(descents)
    if name == "ldes":
        return max(descents, default=0)
    raise ValueError(f"unknown statistic {name!r}")


def _oracle_members(family: Family, n: int):
    if family.involutions_only:
        source = involutions(n)
    else:
        source = all_permutations(n)
    pattern = family.pattern
    for p in source:
        if pattern == "321" and longest_monotone(p, decreasing=True) >= 3:
            continue
        if pattern == "123" and longest_monotone(p) >= 3:
            continue
        yield p


def brute_force_oracle(family: Family | str, n: int, stat_pair: tuple[str, str]) -> dict[tuple[int, int], int]:
    """Joint distribution of two statistics by plain filtering.

    Involution families filter every involution of ``[n]`` and the ``S``
    families every permutation; pattern containment is decided by longest
    monotone subsequences rather than the scanner used for generation.
    """
    family = Family(family)
    bound = ORACLE_BOUND if family.involutions_only else FILTER_BOUND
    if n > bound:
        raise BoundError(f"oracle {family.value}", n, bound)
    a, b = stat_pair
    table: Counter[tuple[int, int]] = Counter()
    for p in _oracle_members(family, n):
        table[_scan_stat(p, a), _scan_stat(p, b)] += 1
    return dict(table)


def genfun_from_table(table: dict[tuple[int, int], int], weight_scale: int = 1, signed: bool = True) -> LaurentPolynomial:
    """Collapse a ``(sign_stat, weight_stat)`` table into a generating function."""
    acc: Counter[int] = Counter()
    for (s, w), count in table.items():
        acc[weight_scale * w] += -count if signed and s % 2 else count
    return LaurentPolynomial(acc)
