"""
Permutations in one-line notation, their descent statistics, and the
pattern-avoiding involution families.

A permutation is a plain tuple of the values ``1..n``.  Positions in the
statistics below are 1-based, matching the usual conventions:

>>> stats((2, 1, 4, 3))
StatRecord(inv=2, des_set=(1, 3), des=2, maj=4, ldes=3, lead=2)
"""

from __future__ import annotations

import itertools
from bisect import bisect_left
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterator

from .errors import BoundError, DomainError, ParseError

Perm = tuple[int, ...]

# families enumerated by filtering all of S_n
FILTER_BOUND = 10

STAT_NAMES = ("inv", "des", "maj", "ldes", "lead")
FILTER_STATS = ("lead", "des", "maj", "ldes")


class Family(str, Enum):
    I321 = "I321"
    I123 = "I123"
    S321 = "S321"
    S123 = "S123"
    INV = "Inv"
    ALL = "All"

    @property
    def pattern(self) -> str | None:
        return {"I321": "321", "S321": "321", "I123": "123", "S123": "123"}.get(self.value)

    @property
    def involutions_only(self) -> bool:
        return self in (Family.I321, Family.I123, Family.INV)


@dataclass(frozen=True)
class StatRecord:
    inv: int
    des_set: tuple[int, ...]
    des: int
    maj: int
    ldes: int
    lead: int | None

    def get(self, name: str) -> int:
        """Statistic by name; an absent ``lead`` (empty permutation) reads as 0."""
        if name not in STAT_NAMES:
            raise ValueError(f"unknown statistic {name!r}; expected one of {STAT_NAMES}")
        value = getattr(self, name)
        return 0 if value is None else value


def parse_perm(text: str) -> Perm:
    """Parse space-separated 1-based values, e.g. ``"2 1 3"``."""
    try:
        entries = tuple(int(tok) for tok in text.replace(",", " ").split())
    except ValueError as exc:
        raise ParseError(f"not a permutation: {text!r}") from exc
    if not is_permutation(entries):
        raise ParseError(f"not a permutation of 1..{len(entries)}: {text!r}")
    return entries


def format_perm(p: Perm) -> str:
    return " ".join(map(str, p))


def is_permutation(p) -> bool:
    return sorted(p) == list(range(1, len(p) + 1))


def is_involution(p: Perm) -> bool:
    return all(p[v - 1] == i for i, v in enumerate(p, 1))


def cycles(p: Perm) -> list[tuple[int, ...]]:
    """Cycle decomposition, each cycle starting at its least element."""
    seen = set()
    out = []
    for start in range(1, len(p) + 1):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        v = p[start - 1]
        while v != start:
            cyc.append(v)
            seen.add(v)
            v = p[v - 1]
        out.append(tuple(cyc))
    return out


def format_cycles(p: Perm) -> str:
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles(p))


def contains_pattern(p: Perm, pattern: str) -> bool:
    """Whether ``p`` has a decreasing (``"321"``) or increasing (``"123"``) subsequence of length 3."""
    if pattern == "321":
        # hi: largest value so far; mid: largest value with something larger before it
        hi = mid = 0
        for v in p:
            if v < mid:
                return True
            if v < hi:
                mid = max(mid, v)
            hi = max(hi, v)
        return False
    if pattern == "123":
        n = len(p) + 1
        lo = mid = n
        for v in p:
            if v > mid:
                return True
            if v > lo:
                mid = min(mid, v)
            lo = min(lo, v)
        return False
    raise ValueError(f"unsupported pattern {pattern!r}; expected '321' or '123'")


def longest_monotone(p: Perm, decreasing: bool = False) -> int:
    """Length of a longest increasing (or decreasing) subsequence, by patience sorting."""
    tails: list[int] = []
    for v in p:
        v = -v if decreasing else v
        i = bisect_left(tails, v)
        if i == len(tails):
            tails.append(v)
        else:
            tails[i] = v
    return len(tails)


def descent_set(p: Perm) -> tuple[int, ...]:
    return tuple(i for i in range(1, len(p)) if p[i - 1] > p[i])


def inversions(p: Perm) -> int:
    return sum(1 for a, b in itertools.combinations(p, 2) if a > b)


def maj(p: Perm) -> int:
    return sum(descent_set(p))


def des(p: Perm) -> int:
    return len(descent_set(p))


def ldes(p: Perm) -> int:
    """Last descent position; 0 for a permutation without descents."""
    ds = descent_set(p)
    return ds[-1] if ds else 0


def lead(p: Perm) -> int | None:
    return p[0] if p else None


def stats(p: Perm) -> StatRecord:
    ds = descent_set(p)
    return StatRecord(
        inv=inversions(p),
        des_set=ds,
        des=len(ds),
        maj=sum(ds),
        ldes=ds[-1] if ds else 0,
        lead=p[0] if p else None,
    )


def stat_value(p: Perm, name: str) -> int:
    if name == "inv":
        return inversions(p)
    if name == "des":
        return des(p)
    if name == "maj":
        return maj(p)
    if name == "ldes":
        return ldes(p)
    if name == "lead":
        return p[0] if p else 0
    raise ValueError(f"unknown statistic {name!r}; expected one of {STAT_NAMES}")


# -- generation ---------------------------------------------------------------


def involutions(n: int) -> Iterator[Perm]:
    """All involutions of ``[n]`` in lexicographic order, built from fixed points and 2-cycles."""
    sigma = [0] * (n + 1)

    def rec(i: int) -> Iterator[Perm]:
        while i <= n and sigma[i]:
            i += 1
        if i > n:
            yield tuple(sigma[1:])
            return
        for v in range(i, n + 1):
            if sigma[v]:
                continue
            sigma[i], sigma[v] = v, i
            yield from rec(i + 1)
            sigma[i] = sigma[v] = 0

    return rec(1)


def _avoiding_involutions(n: int, pattern: str) -> list[Perm]:
    """Involutions avoiding ``pattern``, lexicographic.

    Involutions are assembled position by position (choose ``sigma_i`` among
    the free values; a 2-cycle also fixes ``sigma_v = i``) and a branch is cut
    as soon as the prefix contains the pattern or some value still to be
    placed to the right could no longer be placed without creating it.
    """
    inc = pattern == "123"
    sigma = [0] * (n + 1)
    in_prefix = [False] * (n + 2)
    out: list[Perm] = []

    def feasible(mid: int) -> bool:
        rest = [v for v in range(1, n + 1) if not in_prefix[v]]
        if not rest:
            return True
        return max(rest) <= mid if inc else min(rest) >= mid

    def rec(i: int, edge: int, mid: int) -> None:
        pushed = []
        while i <= n and sigma[i]:
            v = sigma[i]
            if inc:
                if v > mid:
                    break
                if v > edge:
                    mid = min(mid, v)
                edge = min(edge, v)
            else:
                if v < mid:
                    break
                if v < edge:
                    mid = max(mid, v)
                edge = max(edge, v)
            in_prefix[v] = True
            pushed.append(v)
            i += 1
        else:
            if i > n:
                out.append(tuple(sigma[1:]))
            else:
                for v in range(i, n + 1):
                    if sigma[v]:
                        continue
                    if inc:
                        if v > mid:
                            break
                        e2, m2 = min(edge, v), (min(mid, v) if v > edge else mid)
                    else:
                        if v < mid:
                            continue
                        e2, m2 = max(edge, v), (max(mid, v) if v < edge else mid)
                    sigma[i], sigma[v] = v, i
                    in_prefix[v] = True
                    if feasible(m2):
                        rec(i + 1, e2, m2)
                    sigma[i] = sigma[v] = 0
                    in_prefix[v] = False
        for v in pushed:
            in_prefix[v] = False

    if inc:
        rec(1, n + 1, n + 1)
    else:
        rec(1, 0, 0)
    return out


@lru_cache(maxsize=64)
def members(family: Family, n: int) -> tuple[Perm, ...]:
    """The whole family as a cached tuple, lexicographic."""
    family = Family(family)
    if n < 0:
        raise ValueError("n must be non-negative")
    if family in (Family.I321, Family.I123):
        return tuple(_avoiding_involutions(n, family.pattern))
    if family is Family.INV:
        return tuple(involutions(n))
    if n > FILTER_BOUND:
        raise BoundError(f"enumerate {family.value}", n, FILTER_BOUND)
    perms = itertools.permutations(range(1, n + 1))
    if family is Family.ALL:
        return tuple(perms)
    return tuple(p for p in perms if not contains_pattern(p, family.pattern))


def enumerate_family(family: Family | str, n: int) -> Iterator[Perm]:
    """Stream the members of ``family`` of length ``n`` in lexicographic order.

    ``I321``/``I123`` use pruned involution generation and work up to n≈20;
    the ``S`` families and ``All`` filter ``S_n`` and refuse ``n > 10``.
    """
    return iter(members(Family(family), n))


def enumerate_filtered(family: Family | str, n: int, stat: str, value: int) -> Iterator[Perm]:
    if stat not in FILTER_STATS:
        raise ValueError(f"cannot filter on {stat!r}; expected one of {FILTER_STATS}")
    return (p for p in enumerate_family(family, n) if stat_value(p, stat) == value)


def parse_where(text: str) -> tuple[str, int]:
    """Parse a ``stat=value`` constraint."""
    name, sep, value = text.partition("=")
    name = name.strip()
    if not sep or name not in FILTER_STATS:
        raise ValueError(f"bad constraint {text!r}; expected STAT=VALUE with STAT in {FILTER_STATS}")
    return name, int(value)


def check_member(p: Perm, family: Family | str) -> None:
    """Raise :class:`DomainError` unless ``p`` belongs to ``family``."""
    family = Family(family)
    if not is_permutation(p):
        raise DomainError(f"{p} is not a permutation")
    if family.involutions_only and not is_involution(p):
        raise DomainError(f"{format_perm(p)} is not an involution")
    if family.pattern and contains_pattern(p, family.pattern):
        raise DomainError(f"{format_perm(p)} contains {family.pattern}")


def all_permutations(n: int) -> Iterator[Perm]:
    """All of ``S_n`` in lexicographic order, refusing ``n`` beyond the filter bound."""
    if n > FILTER_BOUND:
        raise BoundError("enumerate S_n", n, FILTER_BOUND)
    return itertools.permutations(range(1, n + 1))
