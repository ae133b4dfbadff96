"""
From a 321-avoiding involution to a grand Dyck path, one step at a time.

Run with ``python3 demos/01_worked_example.py``.
"""

from __future__ import annotations

from invpaths.bijections import coupling, delta, delta_inv, unmatched_north, xi, xi_inv
from invpaths.paths import peaks, sump
from invpaths.perms import format_cycles, format_perm, stats

# %% An involution of length 11 with no decreasing subsequence of length three.
sigma = (2, 1, 3, 6, 7, 4, 5, 8, 10, 9, 11)
s = stats(sigma)
print("sigma      ", format_perm(sigma))
print("cycles     ", format_cycles(sigma))
print(f"descents    {list(s.des_set)}  maj={s.maj}  lead={s.lead}")

# %% delta writes N where sigma_i >= i and E otherwise.  The result never
# dips below the diagonal, and each E is coupled with an N on its left.
tau = delta(sigma)
print("\ntau = delta(sigma)", tau)
cp = coupling(tau)
print("couples    ", cp.couples, " fixed points", cp.unmatched)
assert delta_inv(tau) == sigma

# %% xi flips the first half of the north steps that face no east step.
print("\nunmatched north steps", unmatched_north(tau))
pi = xi(tau)
print("pi = xi(tau)        ", pi)
assert xi_inv(pi) == tau

# %% Peaks move, but they stay at the same step positions, so sump is kept.
for name, path in (("tau", tau), ("pi ", pi)):
    pts = peaks(path)
    print(f"{name} peaks {[tuple(p) for p in pts]}  positions {[p.position for p in pts]}  sump {sump(path)}")
assert sump(pi) == s.maj
print(f"\npi starts with {pi.index('E')} north step(s), and lead(sigma) = {s.lead}")
