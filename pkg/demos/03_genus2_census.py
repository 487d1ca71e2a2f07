# %% [markdown]
# # Boundary degrees and slope of the genus-2 Hurwitz curve
#
# |A_d| (irreducible one-nodal covers) comes from |M_d|; |B_d| (two elliptic
# components) is solved from a divisor recursion and, independently, counted
# as pairs of sublattices that jointly generate Z^2. With D0 = 4|A_d| and
# D1 = 4|B_d| the slope 10(D0 + D1)/(D0 + 2 D1) comes out as 5 + 6/d.

# %%
from fractions import Fraction

from hurslope.covercount import brute_force_b, census, solve_b_recursion, verify_genus2_slope

for row in census(12):
    print(f"d={row.d:2d}  A={row.a_count:4d}  B={row.b_count:5d}  slope={row.slope}  5+6/d={5 + Fraction(6, row.d)}")

# %% [markdown]
# Recursion against brute force.

# %%
b = solve_b_recursion(40)
print(all(brute_force_b(d) == b[d] for d in range(2, 41)))

# %% [markdown]
# The full check, and what a single wrong value looks like.

# %%
print(verify_genus2_slope(1000))
b = solve_b_recursion(20)
b[7] += 1
print(verify_genus2_slope(20, b))
