"""Schensted row insertion, its inverse, and the tableau-transpose map on involutions."""

from __future__ import annotations

import json
from bisect import bisect_right
from dataclasses import dataclass

from .errors import DomainError
from .perms import Perm, contains_pattern, is_involution, is_permutation


@dataclass(frozen=True)
class StandardTableau:
    rows: tuple[tuple[int, ...], ...]

    @classmethod
    def from_rows(cls, rows) -> "StandardTableau":
        return cls(tuple(tuple(r) for r in rows if len(r)))

    @classmethod
    def from_json(cls, text: str) -> "StandardTableau":
        return cls.from_rows(json.loads(text))

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    @property
    def size(self) -> int:
        return sum(self.shape)

    def transpose(self) -> "StandardTableau":
        if not self.rows:
            return self
        width = len(self.rows[0])
        return StandardTableau.from_rows(
            [r[c] for r in self.rows if c < len(r)] for c in range(width)
        )

    def is_standard(self) -> bool:
        shape = self.shape
        if any(a < b for a, b in zip(shape, shape[1:])):
            return False
        if sorted(v for r in self.rows for v in r) != list(range(1, self.size + 1)):
            return False
        for r in self.rows:
            if any(a >= b for a, b in zip(r, r[1:])):
                return False
        for upper, lower in zip(self.rows, self.rows[1:]):
            if any(upper[c] >= lower[c] for c in range(len(lower))):
                return False
        return True

    def row_of(self, value: int) -> int:
        for i, r in enumerate(self.rows):
            if value in r:
                return i
        raise KeyError(value)

    def to_json(self) -> str:
        return json.dumps([list(r) for r in self.rows])


def rsk(sigma: Perm) -> tuple[StandardTableau, StandardTableau]:
    """Insertion tableau ``P`` and recording tableau ``Q`` of ``sigma``."""
    P: list[list[int]] = []
    Q: list[list[int]] = []
    for step, v in enumerate(sigma, 1):
        row = 0
        while True:
            if row == len(P):
                P.append([v])
                Q.append([step])
                break
            r = P[row]
            # bump the leftmost entry greater than v
            c = bisect_right(r, v)
            if c == len(r):
                r.append(v)
                Q[row].append(step)
                break
            r[c], v = v, r[c]
            row += 1
    return StandardTableau.from_rows(P), StandardTableau.from_rows(Q)


def inverse_rsk(P: StandardTableau, Q: StandardTableau) -> Perm:
    if P.shape != Q.shape:
        raise DomainError(f"tableaux of different shapes {P.shape} and {Q.shape}")
    if not (P.is_standard() and Q.is_standard()):
        raise DomainError("inverse_rsk needs standard tableaux")
    rows = [list(r) for r in P.rows]
    where = {v: i for i, r in enumerate(Q.rows) for v in r}
    n = P.size
    sigma = [0] * n
    for step in range(n, 0, -1):
        row = where[step]
        v = rows[row].pop()
        # reverse bumping: replace the rightmost entry smaller than v
        for up in range(row - 1, -1, -1):
            r = rows[up]
            c = bisect_right(r, v) - 1
            r[c], v = v, r[c]
        sigma[step - 1] = v
        if not rows[row]:
            rows.pop(row)
    return tuple(sigma)


def transpose_involution(sigma: Perm) -> Perm:
    """``sigma -> sigma^T``: reverse-insert ``(Q^T, Q^T)`` where ``(Q, Q) = rsk(sigma)``.

    Swaps ``I_n(321)`` and ``I_n(123)`` and complements the descent set.
    """
    if not (is_permutation(sigma) and is_involution(sigma)):
        raise DomainError(f"{sigma} is not an involution")
    if contains_pattern(sigma, "321") and contains_pattern(sigma, "123"):
        raise DomainError(f"{sigma} avoids neither 321 nor 123")
    _, Q = rsk(sigma)
    Qt = Q.transpose()
    return inverse_rsk(Qt, Qt)
