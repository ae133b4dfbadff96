"""
Moving between 321-avoiding and 123-avoiding involutions with RSK.

Transposing the tableau of an involution complements its descent set,
which turns every statement about one family into one about the other.
"""

from __future__ import annotations

from math import comb

from invpaths.perms import descent_set, enumerate_family, format_perm, maj
from invpaths.rsk import rsk, transpose_involution
from invpaths.verify import check

sigma = (1, 3, 2)
P, Q = rsk(sigma)
print("sigma", format_perm(sigma), " P = Q =", P.to_json(), " transposed", Q.transpose().to_json())
print("sigma^T", format_perm(transpose_involution(sigma)))

# %% All of I_6(321), side by side with the image.
n = 6
print(f"\n{'sigma':>14s}  Des        {'sigma^T':>14s}  Des")
for s in enumerate_family("I321", n):
    t = transpose_involution(s)
    assert maj(t) == comb(n, 2) - maj(s)
    print(f"{format_perm(s):>14s}  {str(list(descent_set(s))):10s} {format_perm(t):>14s}  {list(descent_set(t))}")

# %% The 123-side identities, checked by enumeration.
print()
for identity_id, m in (("Des123-I", 2), ("Des123-II", 2), ("Des123-III", 4)):
    r = check(identity_id, m)
    print(f"{r.label}: {r.lhs}  equal={r.equal}")
