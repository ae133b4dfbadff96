"""
Sign-reversing involutions on grand Dyck paths.

Each map pairs up paths whose sump has opposite parity, so the signed count
of a whole domain collapses to the signed count of its fixed points.
"""

from __future__ import annotations

from collections import Counter

from invpaths.paths import b_subset_index, primal_factorization, sump
from invpaths.sign_involutions import Case, apply, build_fixed, geometric_fixed
from invpaths.verify import check_involution_contracts

# %% One move of the even method: swap across the boundary of the last odd run.
pi = "NENE"
print("runs of", pi, "->", primal_factorization(pi), "->", apply("Phi1", pi))

# %% The odd method keeps a few shapes fixed and moves everything else.
for pi in ("ENNNEE", "ENNENE", "EEENNN"):
    image = apply("Phi2", pi)
    print(f"Phi2: {pi} -> {image}  fixed={image == pi}  sump {sump(pi)} -> {sump(image)}")

# %% Fixed points come from half-size paths.
omega = "NEENE"
for builder in ("phi1", "phi2", "psi0", "psi1", "psi2"):
    built = build_fixed(builder, omega)
    print(f"{builder:5s}({omega}) = {built}  sump parity {sump(built) % 2}")

# %% Whole-domain sweep for each case at n = 2.
print()
for case in Case:
    n = 2
    domain = list(case.domain(n))
    fixed = [p for p in domain if apply(case, p) == p]
    assert all(geometric_fixed(case, p) for p in fixed)
    signed = Counter()
    for p in domain:
        signed[b_subset_index(p)] += -1 if sump(p) % 2 else 1
    print(f"{case.value}: {len(domain):4d} paths, {len(fixed):3d} fixed, signed count by subset {dict(sorted(signed.items()))}")

# %% The contract checker runs all of the above and compares with I_n(321).
report = check_involution_contracts("Phi3", 2)
print(f"\n{report.label}: equal={report.equal} counts={report.counts}")
print("signed sum over the domain:", report.lhs)
