"""
Sump-parity-reversing involutions on grand Dyck paths.

Four cases, one per residue of the permutation length mod 4:

=======  ====================  ==========  =======================
case     domain                endpoint    permutation length
=======  ====================  ==========  =======================
Phi1     ``B(2n, 2n)``         (2n, 2n)    4n
Phi2     ``B(2n+1, 2n+1)``     (2n+1,2n+1) 4n + 2
Phi3     ``B(2n+1, 2n+2)``     (2n+2,2n+1) 4n + 3
Phi4     ``B(2n, 2n+1)``       (2n+1, 2n)  4n + 1
=======  ====================  ==========  =======================

Every map keeps the initial north run (hence the subset ``B_j``) and, on
non-fixed paths, flips exactly one odd peak into an odd valley or back, so
``sump`` changes parity.  The fixed points are produced by the builders in
:data:`BUILDERS` from paths of half the size.
"""

from __future__ import annotations

from enum import Enum

from .errors import DomainError
from .paths import Path, b_subset_index, endpoint, grand_paths, peaks, primal_factorization, valleys


class Case(str, Enum):
    PHI1 = "Phi1"
    PHI2 = "Phi2"
    PHI3 = "Phi3"
    PHI4 = "Phi4"

    def shape(self, n: int) -> tuple[int, int]:
        """``(north, east)`` step counts of the domain at scale ``n``."""
        return {
            Case.PHI1: (2 * n, 2 * n),
            Case.PHI2: (2 * n + 1, 2 * n + 1),
            Case.PHI3: (2 * n + 1, 2 * n + 2),
            Case.PHI4: (2 * n, 2 * n + 1),
        }[self]

    @property
    def n_min(self) -> int:
        """Smallest scale with a non-empty path in the domain."""
        return 1 if self in (Case.PHI1, Case.PHI4) else 0

    def perm_length(self, n: int) -> int:
        return {Case.PHI1: 4 * n, Case.PHI2: 4 * n + 2, Case.PHI3: 4 * n + 3, Case.PHI4: 4 * n + 1}[self]

    def domain(self, n: int):
        return grand_paths(*self.shape(n))

    def scale_of(self, pi: Path) -> int:
        """Recover ``n`` from a path, raising :class:`DomainError` on a wrong endpoint."""
        x, y = endpoint(pi)
        for n in (y // 2, (y - 1) // 2):
            if n >= 0 and self.shape(n) == (y, x):
                return n
        raise DomainError(f"{pi!r} ends at {(x, y)}, outside every {self.value} domain")


def _swap_into(pi: Path, runs: tuple[str, ...], k: int) -> Path:
    """Exchange the first step of run ``k`` with the last step of run ``k - 1``."""
    pos = sum(len(r) for r in runs[:k])
    return pi[: pos - 1] + pi[pos] + pi[pos - 1] + pi[pos + 1 :]


def _last_odd_run(runs: tuple[str, ...]) -> int | None:
    for k in range(len(runs) - 1, -1, -1):
        if len(runs[k]) % 2:
            return k
    return None


def even_method(pi: Path) -> Path:
    """The even method: usable on any path with even north and east counts."""
    runs = primal_factorization(pi)
    k = _last_odd_run(runs)
    if k is None:
        return pi
    # both counts even forces k >= 2, so mu_0 is untouched
    return _swap_into(pi, runs, k)


def odd_method(pi: Path) -> Path:
    """The odd method: usable on any path with odd north and east counts.

    Fixed: ``mu_0`` odd and ``mu_1`` the last odd run, or ``mu_0`` even,
    ``mu_1 = E`` and ``mu_2`` the last odd run.  Otherwise swap at the last
    odd run, which lies at index 2 or beyond.
    """
    runs = primal_factorization(pi)
    k = _last_odd_run(runs)
    if len(runs[0]) % 2:
        if k == 1:
            return pi
    elif k == 2 and runs[1] == "E":
        return pi
    return _swap_into(pi, runs, k)


def _require(case: Case, pi: Path) -> int:
    if set(pi) - {"N", "E"}:
        raise DomainError(f"{pi!r} is not an N/E path")
    return case.scale_of(pi)


def phi1(pi: Path) -> Path:
    _require(Case.PHI1, pi)
    return even_method(pi)


def phi2(pi: Path) -> Path:
    _require(Case.PHI2, pi)
    return odd_method(pi)


def phi3(pi: Path) -> Path:
    _require(Case.PHI3, pi)
    head, z = pi[:-1], pi[-1]
    # z = N: head ends at (2n+2, 2n); z = E: head ends at (2n+1, 2n+1)
    return (even_method(head) if z == "N" else odd_method(head)) + z


def phi4(pi: Path) -> Path:
    _require(Case.PHI4, pi)
    head, z = pi[:-1], pi[-1]
    # z = E: head ends at (2n, 2n); z = N: head ends at (2n+1, 2n-1)
    return (even_method(head) if z == "E" else odd_method(head)) + z


INVOLUTIONS = {Case.PHI1: phi1, Case.PHI2: phi2, Case.PHI3: phi3, Case.PHI4: phi4}


def apply(case: Case | str, pi: Path) -> Path:
    return INVOLUTIONS[Case(case)](pi)


def is_fixed(case: Case | str, pi: Path) -> bool:
    return apply(case, pi) == pi


def geometric_fixed(case: Case | str, pi: Path) -> bool:
    """Fixed-point test from odd peaks and valleys alone, without running the map.

    Phi1: no odd peak and no odd valley.  Phi2: a single odd valley, on
    ``x = 1``, and no odd peak; or a single odd peak, on ``x = 0``, and no
    odd valley.  Phi3 and Phi4: no odd valley with ``x >= 2`` and no odd
    peak with ``x >= 1``.
    """
    case = Case(case)
    _require(case, pi)
    odd_p = [p for p in peaks(pi) if p.odd]
    odd_v = [v for v in valleys(pi) if v.odd]
    if case is Case.PHI1:
        return not odd_p and not odd_v
    if case is Case.PHI2:
        return (not odd_p and len(odd_v) == 1 and odd_v[0].x == 1) or (
            not odd_v and len(odd_p) == 1 and odd_p[0].x == 0
        )
    return all(v.x < 2 for v in odd_v) and all(p.x < 1 for p in odd_p)


# -- fixed-point builders -----------------------------------------------------


def duplicate(omega: Path) -> Path:
    """``gamma``: every step doubled in place."""
    return "".join(c + c for c in omega)


class Builder(str, Enum):
    GAMMA = "gamma"
    PHI1 = "phi1"
    PHI2 = "phi2"
    PSI0 = "psi0"
    PSI1 = "psi1"
    PSI2 = "psi2"
    VARPHI0 = "varphi0"
    VARPHI1 = "varphi1"
    VARPHI2 = "varphi2"

    @property
    def case(self) -> Case:
        if self is Builder.GAMMA:
            return Case.PHI1
        return {"phi": Case.PHI2, "psi": Case.PHI3, "varphi": Case.PHI4}[self.value[:-1]]

    @property
    def odd_sump(self) -> bool:
        return self in (Builder.PHI2, Builder.PSI2, Builder.VARPHI2)

    @property
    def last_step(self) -> str | None:
        """Required last step of the source path, if any."""
        return {Builder.VARPHI0: "E", Builder.VARPHI1: "N", Builder.VARPHI2: "N"}.get(self)

    def target_subset(self, j: int) -> int:
        """Index ``i`` of the ``B_i`` that the image of a ``B_j`` path lies in."""
        return 2 * j + 1 if self.odd_sump else 2 * j

    def source_shape(self, n: int) -> tuple[int, int]:
        """``(north, east)`` of the source set: ``B(n, n)`` for gamma, else ``B(n, n+1)``."""
        return (n, n) if self is Builder.GAMMA else (n, n + 1)

    def sources(self, n: int):
        for omega in grand_paths(*self.source_shape(n)):
            if self.last_step is None or omega.endswith(self.last_step):
                yield omega


def _split_gamma(omega: Path) -> tuple[int, Path]:
    """``(j, beta)`` with ``duplicate(omega) = N^2j E E beta``."""
    j = b_subset_index(omega)
    return j, duplicate(omega)[2 * j + 2 :]


def build_fixed(builder: Builder | str, omega: Path) -> Path:
    """Construct the fixed point of ``builder.case`` attached to ``omega``."""
    builder = Builder(builder)
    north, east = omega.count("N"), omega.count("E")
    if builder is Builder.GAMMA:
        if north != east:
            raise DomainError(f"gamma needs a path of B(n, n), got {omega!r}")
        return duplicate(omega)
    if east != north + 1:
        raise DomainError(f"{builder.value} needs a path of B(n, n+1), got {omega!r}")
    if builder.last_step and not omega.endswith(builder.last_step):
        raise DomainError(f"{builder.value} needs a path ending in {builder.last_step}, got {omega!r}")
    j, beta = _split_gamma(omega)
    lead = "N" * (2 * j)
    if builder is Builder.PHI1:
        return lead + "EN" + beta
    if builder is Builder.PHI2:
        return lead + "NE" + beta
    if builder is Builder.PSI0:
        return duplicate(omega) + "N"
    if builder is Builder.PSI1:
        return lead + "EN" + beta + "E"
    if builder is Builder.PSI2:
        return lead + "NE" + beta + "E"
    if builder is Builder.VARPHI0:
        return duplicate(omega)[:-1]
    # varphi1/varphi2: beta ends with the doubled final N, which is dropped
    if builder is Builder.VARPHI1:
        return lead + "EN" + beta[:-2] + "N"
    return lead + "NE" + beta[:-2] + "N"


def builders_for(case: Case | str) -> tuple[Builder, ...]:
    case = Case(case)
    return tuple(b for b in Builder if b.case is case)


def constructed_fixed_set(case: Case | str, n: int) -> dict[int, set[Path]]:
    """``F_i`` for each subset index ``i``, built from the half-size paths."""
    out: dict[int, set[Path]] = {}
    for b in builders_for(case):
        for omega in b.sources(n):
            pi = build_fixed(b, omega)
            out.setdefault(b_subset_index(pi), set()).add(pi)
    return out
