# %% [markdown]
# # Sublattices of Z^2 and marked cyclic quotients
#
# Index-d sublattices are Hermite triples (a, b, c): basis (a, 0), (c, b),
# ab = d, 0 <= c < a. There are sigma_1(d) of them. M_d collects the ones
# with cyclic quotient together with a chosen generator of that quotient.

# %%
from hurslope.arithfn import sigma
from hurslope.lattice import (
    count_marked_closed_form,
    enumerate_marked,
    enumerate_sublattices,
    is_cyclic_quotient,
    quotient_generators,
    smith_invariants,
)

for m in enumerate_sublattices(4):
    print(m, "quotient invariants", smith_invariants(m), "cyclic" if is_cyclic_quotient(m) else "")
print("count vs sigma_1:", [(len(enumerate_sublattices(d)), sigma(1, d)) for d in range(1, 13)])

# %%
for m in enumerate_sublattices(6):
    if is_cyclic_quotient(m):
        print(m, quotient_generators(m))

# %% [markdown]
# |M_d| by enumeration against phi(d) * prod (p^n + p^(n-1)).

# %%
for d in (2, 6, 12, 36, 97, 128):
    print(d, len(enumerate_marked(d)), count_marked_closed_form(d))
