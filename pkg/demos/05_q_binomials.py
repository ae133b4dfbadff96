"""
Gaussian binomials, their specialisations and their value at q = -1.
"""

from __future__ import annotations

from math import comb

from invpaths.qpoly import LaurentPolynomial, e_spec, q, q_binomial, q_binomial_at_minus_one

for n in range(7):
    print(f"[{n} choose 3]_q = {q_binomial(n, 3)}")

# %% e_k on the alphabet 1, q, ..., q^(n-1) is a shifted Gaussian binomial.
n, k = 6, 3
print(f"\ne_{k}(1, q, ..., q^{n - 1}) = {e_spec(k, 0, n - 1)}")
print(f"q^{comb(k, 2)} [{n} choose {k}]_q = {q_binomial(n, k).shift(comb(k, 2))}")

# %% At q = -1 only a binomial survives, or nothing at all.
print("\n n  values at q = -1 for k = 0..n")
for n in range(9):
    row = [q_binomial_at_minus_one(n, k) for k in range(n + 1)]
    assert row == [q_binomial(n, k).evaluate(-1) for k in range(n + 1)]
    print(f"{n:2d}  {row}")

# %% Laurent polynomials parse and print in one canonical form.
p = LaurentPolynomial.parse("2*q^3 + q^-1 - 1")
print("\ncanonical:", p, " JSON:", p.to_json(), " times q:", p * q)
