"""
Named identities: the enumerated left-hand side and the right-hand side of each.

Right-hand sides that are themselves sums over a smaller family are built by
enumerating that family through :func:`invpaths.genfun.genfun`; closed forms
in Gaussian binomials are used only for the joint-distribution formulas.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Callable

from .genfun import GenFunSpec, genfun
from .perms import Family
from .qpoly import LaurentPolynomial, catalan, q, q_binomial

# identities whose statement carries an extra parameter
PARAMS = {"JD-des": "k", "JD-lead": "ell", "Cor123": "k"}


def _sum2(family: Family, n: int, stat: str) -> LaurentPolynomial:
    return genfun(GenFunSpec(family, n, weight_stat=stat, weight_scale=2))


def jd_des(n: int, k: int) -> LaurentPolynomial:
    """``q^(k^2) [ceil(n/2), k]_q [floor(n/2), k]_q``."""
    return q_binomial(n - n // 2, k) * q_binomial(n // 2, k) * q ** (k * k)


def jd_lead(n: int, ell: int) -> LaurentPolynomial:
    """``sum_k q^(k^2 + k*ell + ell - 1) [ceil(n/2)-1, k]_q [floor(n/2)-ell+1, k]_q``."""
    total = LaurentPolynomial()
    top_a, top_b = n - n // 2 - 1, n // 2 - ell + 1
    for k in range(0, max(top_a, top_b, 0) + 1):
        total += (q_binomial(top_a, k) * q_binomial(top_b, k)).shift(k * k + k * ell + ell - 1)
    return total


def cor123(n: int, k: int) -> LaurentPolynomial:
    """``q^(C(n,2) + k^2 - n*k) [ceil(n/2), k]_q [floor(n/2), k]_q``."""
    return (q_binomial(n - n // 2, k) * q_binomial(n // 2, k)).shift(comb(n, 2) + k * k - n * k)


def _lead_rhs(variant: str, n: int) -> LaurentPolynomial:
    inv_q = q ** -1
    if variant == "I":
        return inv_q * _sum2(Family.I321, 2 * n, "lead")
    odd = _sum2(Family.I321, 2 * n + 1, "lead")
    if variant == "II":
        return (inv_q - 1) * odd
    if variant == "III":
        return (2 * inv_q - 1) * odd
    return (inv_q - 1) * odd + _sum2(Family.I321, 2 * n, "lead")


def _des321_rhs(variant: str, n: int) -> LaurentPolynomial:
    if variant == "III":
        return _sum2(Family.I321, n, "des")
    base = _sum2(Family.I321, 2 * n, "des")
    return base if variant == "I" else (1 - q) * base


def _des123_rhs(variant: str, n: int) -> LaurentPolynomial:
    if variant == "III":
        return (-1) ** n * q ** 2 * _sum2(Family.I123, n, "des")
    base = _sum2(Family.I123, 2 * n, "des")
    return q * base if variant == "I" else (1 - q) * q ** 2 * base


def _ar_rhs(variant: str, n: int) -> LaurentPolynomial:
    base = _sum2(Family.S321, n, "ldes")
    return base if variant == "odd" else (1 - q) * base


def _ss_rhs(n: int) -> LaurentPolynomial:
    return LaurentPolynomial.constant(catalan((n - 1) // 2) if n % 2 else 0)


@dataclass(frozen=True)
class Identity:
    """One checkable identity.

    ``length(n)`` is the permutation length of the left-hand family, the
    quantity the desk-scale bounds apply to; ``n_min`` is the smallest ``n``
    for which the statement is made.
    """

    id: str
    family: Family
    length: Callable[[int], int]
    sign_stat: str | None
    weight_stat: str | None
    rhs: Callable[..., LaurentPolynomial]
    n_min: int = 1
    where: Callable[..., tuple[str, int]] | None = None
    rhs_families: Callable[[int], list[tuple[Family, int]]] = lambda n: []

    @property
    def param(self) -> str | None:
        return PARAMS.get(self.id)

    def lhs_spec(self, n: int, **params) -> GenFunSpec:
        where = self.where(n, **params) if self.where else None
        return GenFunSpec(self.family, self.length(n), self.weight_stat, self.sign_stat, 1, where)

    def param_range(self, n: int) -> range:
        """Parameter values checked by default, one past the support on each side."""
        if self.param == "ell":
            return range(1, n // 2 + 3)
        return range(0, n // 2 + 2)


def _lead(variant: str, length: Callable[[int], int]) -> Identity:
    return Identity(
        f"Lead-{variant}", Family.I321, length, "maj", "lead", lambda n: _lead_rhs(variant, n),
        rhs_families=lambda n: [(Family.I321, 2 * n + (variant != "I"))] + ([(Family.I321, 2 * n)] if variant == "IV" else []),
    )


def _des(family: Family, variant: str, length: Callable[[int], int], rhs) -> Identity:
    tag = "321" if family is Family.I321 else "123"
    half = (lambda n: n) if variant == "III" else (lambda n: 2 * n)
    return Identity(
        f"Des{tag}-{variant}", family, length, "maj", "des", lambda n: rhs(variant, n),
        rhs_families=lambda n: [(family, half(n))],
    )


REGISTRY: dict[str, Identity] = {
    i.id: i
    for i in [
        Identity("JD-des", Family.I321, lambda n: n, None, "maj", jd_des, n_min=0,
                 where=lambda n, k: ("des", k)),
        Identity("JD-lead", Family.I321, lambda n: n, None, "maj", jd_lead,
                 where=lambda n, ell: ("lead", ell)),
        _lead("I", lambda n: 4 * n),
        _lead("II", lambda n: 4 * n + 2),
        _lead("III", lambda n: 4 * n + 3),
        _lead("IV", lambda n: 4 * n + 1),
        _des(Family.I321, "I", lambda n: 4 * n, _des321_rhs),
        _des(Family.I321, "II", lambda n: 4 * n + 2, _des321_rhs),
        _des(Family.I321, "III", lambda n: 2 * n + 1, _des321_rhs),
        _des(Family.I123, "I", lambda n: 4 * n, _des123_rhs),
        _des(Family.I123, "II", lambda n: 4 * n + 2, _des123_rhs),
        _des(Family.I123, "III", lambda n: 2 * n + 1, _des123_rhs),
        Identity("Cor123", Family.I123, lambda n: n, None, "maj", cor123,
                 where=lambda n, k: ("des", n - 1 - k)),
        Identity("AR-odd", Family.S321, lambda n: 2 * n + 1, "inv", "ldes", lambda n: _ar_rhs("odd", n),
                 rhs_families=lambda n: [(Family.S321, n)]),
        Identity("AR-even", Family.S321, lambda n: 2 * n, "inv", "ldes", lambda n: _ar_rhs("even", n),
                 rhs_families=lambda n: [(Family.S321, n)]),
        Identity("SS", Family.S321, lambda n: n, "inv", None, _ss_rhs),
    ]
}

IDENTITY_IDS = tuple(REGISTRY)


def get_identity(identity_id: str) -> Identity:
    try:
        return REGISTRY[identity_id]
    except KeyError:
        raise ValueError(f"unknown identity {identity_id!r}; expected one of {IDENTITY_IDS}") from None


def closed_form(identity_id: str, n: int, **params) -> LaurentPolynomial:
    """Right-hand side of ``identity_id`` at ``n`` (plus ``k`` or ``ell`` where required)."""
    ident = get_identity(identity_id)
    if ident.param:
        if set(params) != {ident.param}:
            raise ValueError(f"{identity_id} takes exactly the parameter {ident.param!r}")
    elif params:
        raise ValueError(f"{identity_id} takes no parameters, got {sorted(params)}")
    if n < ident.n_min:
        raise ValueError(f"{identity_id} is stated for n >= {ident.n_min}")
    return ident.rhs(n, **params)

