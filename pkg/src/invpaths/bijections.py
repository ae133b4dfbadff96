"""
The two-stage bijection between 321-avoiding involutions and grand Dyck paths.

``delta`` sends an involution ``sigma`` in ``I_n(321)`` to the ``n``-step
partial Dyck path with ``N`` at position ``i`` iff ``sigma_i >= i``.  ``xi``
then turns that path into a path of ``B(n//2, ceil(n/2))`` by flipping the
first half (rounded up) of its unmatched north steps.  Both stages carry
descents of ``sigma`` to peaks at the same positions, so ``maj = sump``.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass

from .errors import DomainError
from .paths import Path, in_grand, is_partial_dyck
from .perms import Family, Perm, check_member


@dataclass(frozen=True)
class CoupledPath:
    """A path with a pairing of some north steps to east steps (1-based labels)."""

    path: Path
    couples: tuple[tuple[int, int], ...]
    unmatched: tuple[int, ...]


def delta(sigma: Perm) -> Path:
    check_member(sigma, Family.I321)
    return "".join("N" if v >= i else "E" for i, v in enumerate(sigma, 1))


def coupling(tau: Path) -> CoupledPath:
    """Right to left, couple each ``E`` with the nearest uncoupled ``N`` on its left.

    ``unmatched`` lists the north steps left over (fixed points of the involution).
    """
    if not is_partial_dyck(tau):
        raise DomainError(f"{tau!r} is not a partial Dyck path")
    free = [i for i, c in enumerate(tau, 1) if c == "N"]
    couples = []
    for e in range(len(tau), 0, -1):
        if tau[e - 1] != "E":
            continue
        k = bisect_left(free, e) - 1
        couples.append((free.pop(k), e))
    return CoupledPath(tau, tuple(sorted(couples)), tuple(free))


def delta_inv(tau: Path) -> Perm:
    cp = coupling(tau)
    sigma = list(range(1, len(tau) + 1))
    for a, b in cp.couples:
        sigma[a - 1], sigma[b - 1] = b, a
    return tuple(sigma)


def facing_matching(p: Path) -> CoupledPath:
    """Match north and east steps that face each other.

    Scan left to right, push each ``N`` and pop it on the next ``E``; an
    ``E`` met with an empty stack stays unmatched.  ``unmatched`` holds the
    labels of every unmatched step, north or east, in ascending order.
    """
    stack: list[int] = []
    couples = []
    unmatched = []
    for i, c in enumerate(p, 1):
        if c == "N":
            stack.append(i)
        elif stack:
            couples.append((stack.pop(), i))
        else:
            unmatched.append(i)
    unmatched.extend(stack)
    return CoupledPath(p, tuple(sorted(couples)), tuple(sorted(unmatched)))


def xi(tau: Path) -> Path:
    if not is_partial_dyck(tau):
        raise DomainError(f"{tau!r} is not a partial Dyck path")
    unmatched = facing_matching(tau).unmatched
    flip = set(unmatched[: (len(unmatched) + 1) // 2])
    return "".join("E" if i in flip else c for i, c in enumerate(tau, 1))


def xi_inv(pi: Path, n: int | None = None) -> Path:
    """Undo :func:`xi`; with ``n`` given the endpoint is checked against it."""
    n = len(pi) if n is None else n
    if not in_grand(pi, n // 2, n - n // 2):
        raise DomainError(f"{pi!r} does not end at {(n - n // 2, n // 2)}")
    flip = {i for i in facing_matching(pi).unmatched if pi[i - 1] == "E"}
    return "".join("N" if i in flip else c for i, c in enumerate(pi, 1))


def to_grand(sigma: Perm) -> Path:
    return xi(delta(sigma))


def from_grand(pi: Path, n: int) -> Perm:
    if len(pi) != n:
        raise DomainError(f"path of length {len(pi)} given for n={n}")
    return delta_inv(xi_inv(pi, n))


def unmatched_north(tau: Path) -> tuple[int, ...]:
    """Labels of the north steps of ``tau`` left unmatched by the facing rule."""
    return tuple(i for i in facing_matching(tau).unmatched if tau[i - 1] == "N")


def grand_shape(n: int) -> tuple[int, int]:
    """``(north, east)`` step counts of the image of ``I_n(321)``."""
    return n // 2, n - n // 2


