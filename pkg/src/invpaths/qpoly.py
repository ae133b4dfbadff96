"""
Exact Laurent polynomials in ``q`` with integer coefficients, plus the
q-analogues built on them.

Canonical text form lists terms by ascending exponent::

    >>> str((1 - q) * q**-1 + 2 * q**3)
    'q^-1 - 1 + 2*q^3'
"""

from __future__ import annotations

import json
import re
from functools import lru_cache
from math import comb
from typing import Iterable, Mapping, Union

from .errors import ParseError

Number = int


class LaurentPolynomial:
    """Sparse map ``exponent -> coefficient`` with no zero coefficients stored."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] | None = None):
        acc: dict[int, int] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for e, c in items:
                acc[int(e)] = acc.get(int(e), 0) + int(c)
        self._terms = {e: c for e, c in sorted(acc.items()) if c}

    @classmethod
    def constant(cls, c: int) -> "LaurentPolynomial":
        return cls({0: c})

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPolynomial":
        return cls({exponent: coeff})

    @classmethod
    def from_counts(cls, exponents: Iterable[int], signs: Iterable[int] | None = None) -> "LaurentPolynomial":
        """Sum of ``sign * q**e``; signs default to +1."""
        acc: dict[int, int] = {}
        if signs is None:
            for e in exponents:
                acc[e] = acc.get(e, 0) + 1
        else:
            for e, s in zip(exponents, signs):
                acc[e] = acc.get(e, 0) + s
        return cls(acc)

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def coeff(self, e: int) -> int:
        return self._terms.get(e, 0)

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def degree(self) -> int | None:
        return max(self._terms) if self._terms else None

    @property
    def low_degree(self) -> int | None:
        return min(self._terms) if self._terms else None

    def coefficients(self) -> list[int]:
        """Dense coefficient list from ``low_degree`` to ``degree``."""
        if not self._terms:
            return []
        lo, hi = self.low_degree, self.degree
        return [self._terms.get(e, 0) for e in range(lo, hi + 1)]

    # -- ring operations --------------------------------------------------

    @staticmethod
    def _coerce(other) -> "LaurentPolynomial":
        if isinstance(other, LaurentPolynomial):
            return other
        if isinstance(other, int):
            return LaurentPolynomial.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self._terms)
        for e, c in other._terms.items():
            acc[e] = acc.get(e, 0) + c
        return LaurentPolynomial(acc)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return LaurentPolynomial(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if len(self._terms) == 1:
                (e, c), = self._terms.items()
                if c in (1, -1):
                    return LaurentPolynomial({e * k: c ** (-k)})
            raise ValueError("negative powers exist only for unit monomials")
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, e: int) -> "LaurentPolynomial":
        """Multiply by ``q**e``."""
        return LaurentPolynomial({x + e: c for x, c in self._terms.items()})

    scale_by_power = shift

    def substitute_inverse(self) -> "LaurentPolynomial":
        """``f(q) -> f(1/q)``."""
        return LaurentPolynomial({-e: c for e, c in self._terms.items()})

    def divmod(self, divisor: "LaurentPolynomial") -> tuple["LaurentPolynomial", "LaurentPolynomial"]:
        """Long division over the integers.

        Stops early, leaving a larger remainder, when a leading coefficient
        is not divisible by the divisor's, so the pair is exact only when the
        remainder is zero or the divisor is monic up to sign.
        """
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        lead_e = divisor.degree
        lead_c = divisor._terms[lead_e]
        rem = dict(self._terms)
        quot: dict[int, int] = {}
        low = divisor.low_degree
        span = lead_e - low
        while rem:
            top = max(rem)
            if top - min(rem) < span:
                break
            c, r = divmod(rem[top], lead_c)
            if r:
                break
            shift = top - lead_e
            quot[shift] = c
            for e, d in divisor._terms.items():
                k = e + shift
                v = rem.get(k, 0) - c * d
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        return LaurentPolynomial(quot), LaurentPolynomial(rem)

    def exact_div(self, divisor: "LaurentPolynomial") -> "LaurentPolynomial":
        quot, rem = self.divmod(divisor)
        if not rem.is_zero():
            raise ArithmeticError(f"{divisor} does not divide {self}")
        return quot

    def evaluate(self, x: int) -> int:
        """Integer value at ``q = x``; negative exponents need ``x`` in {1, -1}."""
        if self._terms and min(self._terms) < 0 and x not in (1, -1):
            raise ValueError(f"cannot evaluate a Laurent polynomial with negative exponents at {x}")
        total = 0
        for e, c in self._terms.items():
            total += c * (x ** abs(e) if e < 0 else x ** e)
        return total

    evaluate_at_integer = evaluate

    # -- comparison and text ----------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    def __hash__(self):
        return hash(tuple(self._terms.items()))

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        return f"LaurentPolynomial({str(self)!r})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in self._terms.items():
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                power = "q" if e == 1 else f"q^{e}"
                body = power if mag == 1 else f"{mag}*{power}"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def to_pairs(self) -> list[list[int]]:
        return [[e, c] for e, c in self._terms.items()]

    def to_json(self) -> str:
        return json.dumps(self.to_pairs())

    @classmethod
    def from_pairs(cls, pairs) -> "LaurentPolynomial":
        return cls((e, c) for e, c in pairs)

    @classmethod
    def from_json(cls, text: str) -> "LaurentPolynomial":
        return cls.from_pairs(json.loads(text))

    @classmethod
    def parse(cls, text: str) -> "LaurentPolynomial":
        """Inverse of ``str``; also accepts any order of terms and spacing."""
        s = text.replace(" ", "")
        if s == "0":
            return cls()
        if not s:
            raise ParseError("empty polynomial")
        if s[0] not in "+-":
            s = "+" + s
        acc: dict[int, int] = {}
        pos = 0
        while pos < len(s):
            m = _TERM.match(s, pos)
            if not m or m.end() == pos:
                raise ParseError(f"cannot parse polynomial {text!r}", position=pos + 1)
            sign = -1 if m["sign"] == "-" else 1
            if m["var"]:
                coeff = int(m["coeff"]) if m["coeff"] else 1
                exp = int(m["exp"]) if m["exp"] is not None else 1
            elif m["const"]:
                coeff, exp = int(m["const"]), 0
            else:
                raise ParseError(f"cannot parse polynomial {text!r}", position=pos + 1)
            acc[exp] = acc.get(exp, 0) + sign * coeff
            pos = m.end()
        return cls(acc)


_TERM = re.compile(
    r"(?P<sign>[+-])(?:(?:(?P<coeff>\d+)\*)?(?P<var>q)(?:\^(?P<exp>-?\d+))?|(?P<const>\d+))"
)

Poly = LaurentPolynomial
ZERO = LaurentPolynomial()
ONE = LaurentPolynomial.constant(1)
q = LaurentPolynomial.monomial(1)

PolyLike = Union[LaurentPolynomial, int]


# -- q-analogues ------------------------------------------------------------


def q_int(n: int) -> LaurentPolynomial:
    """``[n]_q = 1 + q + ... + q^(n-1)``."""
    return LaurentPolynomial({i: 1 for i in range(max(n, 0))})


@lru_cache(maxsize=None)
def q_factorial(n: int) -> LaurentPolynomial:
    if n <= 1:
        return ONE
    return q_factorial(n - 1) * q_int(n)


@lru_cache(maxsize=None)
def q_binomial(n: int, k: int) -> LaurentPolynomial:
    """Gaussian binomial ``[n choose k]_q`` as an exact quotient of q-factorials."""
    if not 0 <= k <= n:
        return ZERO
    return q_factorial(n).exact_div(q_factorial(k) * q_factorial(n - k))


@lru_cache(maxsize=None)
def q_binomial_pascal(n: int, k: int) -> LaurentPolynomial:
    """Same value via ``[n,k] = [n-1,k-1] + q^k [n-1,k]``."""
    if not 0 <= k <= n:
        return ZERO
    if k == 0 or k == n:
        return ONE
    return q_binomial_pascal(n - 1, k - 1) + q_binomial_pascal(n - 1, k).shift(k)


def e_spec(k: int, a: int, b: int) -> LaurentPolynomial:
    """Elementary symmetric ``e_k(q^a, q^(a+1), ..., q^b)``; empty alphabet when ``b < a``."""
    if k < 0:
        return ZERO
    table = [ONE] + [ZERO] * k
    for x in range(a, b + 1):
        for i in range(k, 0, -1):
            table[i] = table[i] + table[i - 1].shift(x)
    return table[k]


def q_binomial_at_minus_one(n: int, k: int) -> int:
    """``[n choose k]_q`` at ``q = -1``: 0 for even ``n`` and odd ``k``, else ``C(n//2, k//2)``."""
    if not 0 <= k <= n:
        return 0
    if n % 2 == 0 and k % 2 == 1:
        return 0
    return comb(n // 2, k // 2)


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)
