"""
Lattice paths as words over ``N`` (north, ``(0,1)``) and ``E`` (east, ``(1,0)``).

Paths are plain ``str`` values.  ``B(n, m)`` follows the convention of
north-count first: paths with ``n`` north and ``m`` east steps, i.e. paths
from the origin to the point ``(m, n)``.
"""

from __future__ import annotations

import itertools
from typing import Iterator, NamedTuple

from .errors import DomainError, ParseError

Path = str


class Point(NamedTuple):
    x: int
    y: int

    @property
    def position(self) -> int:
        """Number of steps taken to reach the point."""
        return self.x + self.y

    @property
    def odd(self) -> bool:
        return (self.x + self.y) % 2 == 1

    @property
    def parity(self) -> str:
        return "odd" if self.odd else "even"


def parse_path(text: str) -> Path:
    """Parse an ``N``/``E`` word (case-insensitive); whitespace is ignored."""
    out = []
    for i, ch in enumerate(text, 1):
        if ch.isspace():
            continue
        c = ch.upper()
        if c not in "NE":
            raise ParseError(f"unexpected character {ch!r} in path", position=i)
        out.append(c)
    return "".join(out)


def format_path(p: Path) -> str:
    return p


def endpoint(p: Path) -> Point:
    n = p.count("N")
    return Point(len(p) - n, n)


def points(p: Path) -> list[Point]:
    """The ``len(p) + 1`` lattice points visited, starting at the origin."""
    x = y = 0
    out = [Point(0, 0)]
    for c in p:
        if c == "N":
            y += 1
        else:
            x += 1
        out.append(Point(x, y))
    return out


def _corners(p: Path, first: str, second: str) -> list[Point]:
    pts = points(p)
    return [pts[i + 1] for i in range(len(p) - 1) if p[i] == first and p[i + 1] == second]


def peaks(p: Path) -> list[Point]:
    """Points between adjacent ``NE`` steps, left to right."""
    return _corners(p, "N", "E")


def valleys(p: Path) -> list[Point]:
    """Points between adjacent ``EN`` steps, left to right."""
    return _corners(p, "E", "N")


def sump(p: Path) -> int:
    """Sum of ``x + y`` over all peaks."""
    return sum(i + 1 for i in range(len(p) - 1) if p[i] == "N" and p[i + 1] == "E")


def peak_positions(p: Path) -> list[int]:
    return [i + 1 for i in range(len(p) - 1) if p[i] == "N" and p[i + 1] == "E"]


def is_partial_dyck(p: Path, n: int | None = None) -> bool:
    """``n`` steps (when given) and never below the diagonal ``y = x``."""
    if n is not None and len(p) != n:
        return False
    h = 0
    for c in p:
        h += 1 if c == "N" else -1
        if h < 0:
            return False
    return True


def is_dyck(p: Path) -> bool:
    return is_partial_dyck(p) and p.count("N") == p.count("E")


def primal_factorization(p: Path) -> tuple[str, ...]:
    """Maximal runs ``mu_0 mu_1 ... mu_d`` with north runs at even indices.

    ``mu_0`` is the empty string when the path starts with an east step.

    >>> primal_factorization("EENN")
    ('', 'EE', 'NN')
    """
    runs = ["".join(g) for _, g in itertools.groupby(p)]
    if p.startswith("E"):
        runs.insert(0, "")
    return tuple(runs)


def b_subset_index(p: Path) -> int:
    """``j`` such that the path starts ``N^j E``."""
    if "E" not in p:
        raise DomainError(f"path {p!r} has no east step; subset index undefined")
    return p.index("E")


def in_grand(p: Path, n: int, m: int) -> bool:
    """Membership in ``B(n, m)``: ``n`` north and ``m`` east steps."""
    return len(p) == n + m and p.count("N") == n


def grand_paths(n: int, m: int) -> Iterator[Path]:
    """All of ``B(n, m)`` in lexicographic order (``E`` before ``N``)."""
    if n < 0 or m < 0:
        return
    total = n + m
    for east in itertools.combinations(range(total), m):
        s = ["N"] * total
        for i in east:
            s[i] = "E"
        yield "".join(s)


def grand_subset(n: int, m: int, j: int) -> Iterator[Path]:
    """``B_j(n, m)``: paths of ``B(n, m)`` through ``(0, j)`` and ``(1, j)``."""
    if not 0 <= j <= n or m < 1:
        return
    prefix = "N" * j + "E"
    for rest in grand_paths(n - j, m - 1):
        yield prefix + rest


def partial_dyck_paths(n: int) -> Iterator[Path]:
    for w in itertools.product("EN", repeat=n):
        p = "".join(w)
        if is_partial_dyck(p):
            yield p
