# %% [markdown]
# # Divisor classes and the 5 + 6/d relation
#
# lambda and delta are assembled from ch_2 of the Tschirnhausen bundle E,
# the Casnati-Ekedahl bundle F and Sym^2 E, as classes in the basis
# eps_{1,1}, eps_2, phi_2 with coefficients rational in d. The relation
# (5 + 6/d) lambda - delta = Bog(F) + (6-d)(d-1)/d Bog(E) is checked as an
# identity of rational functions.

# %%
from hurslope.picard import (
    bog_e,
    bog_f,
    delta_class,
    derive_rank_f,
    lambda_class,
    slope_relation_residual,
    verify_slope_relation,
)

print("lambda  =", lambda_class())
print("delta   =", delta_class())
print("Bog(E)  =", bog_e())
print("Bog(F)  =", bog_f())
print("rank F  =", derive_rank_f())
print("residual:", slope_relation_residual())

# %% [markdown]
# Fixed degree, e.g. trigonal and tetragonal covers.

# %%
for d in (3, 4, 5):
    print(d, delta_class(d), "|", bog_e(d), "|", bog_f(d))

# %%
print(verify_slope_relation())
