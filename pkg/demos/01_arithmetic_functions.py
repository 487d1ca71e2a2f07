# %% [markdown]
# # Multiplicative functions and the two Dirichlet identities
#
# `F` is the multiplicative function with F(p^n) = (p^2 - 1) p^(2n - 2).
# Convolving it with sigma_1 gives two closed forms, and sigma_1 convolved
# additively with itself is a combination of sigma_1 and sigma_3.

# %%
from hurslope.arithfn import (
    BIG_F,
    IOTA,
    SIGMA1,
    SieveTable,
    check_multiplicative,
    dirichlet_convolve,
    pointwise_product,
    ramanujan_rhs,
    sigma,
    sigma1_additive_convolution,
)

print("F(1..12):", [BIG_F(d) for d in range(1, 13)])
print("F multiplicative up to 500:", check_multiplicative(BIG_F, 500))

# %% [markdown]
# ((iota . F) * sigma_1)(d) = sigma_3(d) and (F * sigma_1)(d) = d sigma_1(d)

# %%
iota_f = pointwise_product(IOTA, BIG_F)
for d in (6, 12, 30, 97, 360):
    print(
        d,
        dirichlet_convolve(iota_f, SIGMA1, d), sigma(3, d),
        dirichlet_convolve(BIG_F, SIGMA1, d), d * sigma(1, d),
    )

# %% [markdown]
# The additive convolution, summed term by term, against its closed form.

# %%
table = SieveTable.build(1000)
for d in (1, 2, 4, 10, 100, 1000):
    print(d, sigma1_additive_convolution(d, table), ramanujan_rhs(d))
