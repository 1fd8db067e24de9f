# %% [markdown]
# # Formal degrees against the adjoint gamma-factor prediction
#
# Two families of SL2 supercuspidals, then every simple type at once.

# %%
from fractions import Fraction

from langlands_desk import formal_degree as fd
from langlands_desk.cartan import SAMPLE_TYPES, cartan_data

# %% [markdown]
# ## Depth zero
# Induce a cuspidal representation of dimension (p-1)/2 from SL2(Z_p).
# With Haar measure giving that subgroup volume #SL2(F_p)/p^3, the degree is
# p^2 / (2(p+1)).  The prediction uses a tame parameter with centralizer of
# order 4 and Artin conductor 2.

# %%
for p in (3, 5, 7, 11, 13):
    rep = fd.depth_zero_report(p)
    print(f"p={p:>2}  degree={rep.degree!s:>7}  predicted={rep.hii!s:>7}  match={rep.match}")

# %% [markdown]
# ## Simple supercuspidals
# Wild parameters with Swan conductor equal to the rank give
# q^(l+N) / #Z(q) for every simple type.

# %%
q = 7
for name in SAMPLE_TYPES:
    rep = fd.simple_sc_report(cartan_data(name), q)
    size = rep.degree.numerator.bit_length()
    print(f"{name:>3}  conductor={rep.conductor:>3}  degree ~ 2^{size:<4} match={rep.match}")

# %%
print("SL2 at p=3:", fd.simple_sc_degree(cartan_data("A1"), 3), "==", Fraction(9, 2))
