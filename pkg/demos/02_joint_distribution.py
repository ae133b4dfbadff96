"""
Counting 321-avoiding involutions by descents and major index.

The enumerated sums agree with products of two Gaussian binomials.
"""

from __future__ import annotations

from invpaths.genfun import GenFunSpec, genfun
from invpaths.identities import jd_des, jd_lead
from invpaths.qpoly import q_binomial

n = 10
print(f"sum of q^maj over I_{n}(321), split by number of descents\n")
for k in range(n // 2 + 1):
    enumerated = genfun(GenFunSpec("I321", n, "maj", where=("des", k)))
    formula = jd_des(n, k)
    mark = "ok" if enumerated == formula else "MISMATCH"
    print(f"des={k}: {enumerated}   [{mark}]")

# %% The same family split by its first entry instead.
print("\nsplit by lead, with the count at q = 1")
for ell in range(1, n // 2 + 2):
    enumerated = genfun(GenFunSpec("I321", n, "maj", where=("lead", ell)))
    assert enumerated == jd_lead(n, ell)
    print(f"lead={ell}: {enumerated.evaluate(1):4d} involutions")

# %% Setting q = 1 in the descent formula recovers a product of binomials.
print("\nat q = 1:", [q_binomial(n - n // 2, k).evaluate(1) * q_binomial(n // 2, k).evaluate(1)
                       for k in range(n // 2 + 1)])
