# %% [markdown]
# # Counting automorphic representations from zeta values
#
# Over a function field the main term is a product of special values of the
# polynomial zeta_{S,T}; over Q it is a product of Bernoulli numbers.

# %%
from langlands_desk import zeta_count as zc
from langlands_desk.cartan import SAMPLE_TYPES, cartan_data

S = zc.PlaceSet((1,), "S")
T = zc.PlaceSet((1,), "T")

# %% [markdown]
# ## The projective line
# With one rational point in S and one in T the polynomial is 1, so every
# group has exactly one representation with the prescribed local behaviour.

# %%
line = zc.validate_curve(5, 0, [1])
print({name: str(zc.count_ff(cartan_data(name), line, S, T).count) for name in SAMPLE_TYPES})

# %% [markdown]
# ## An elliptic curve over F_2
# y^2 + y = x^3 has three points, hence P(Z) = 1 + 2Z^2.

# %%
curve = zc.validate_curve(2, 1, [1, 0, 2])
poly = zc.zeta_ST(curve, S, T)
print("zeta_ST =", poly)
for name in ("A1", "G2", "E8"):
    rep = zc.count_ff(cartan_data(name), curve, S, T)
    print(name, rep.count, rep.caveats)

# %% [markdown]
# ## G2 over Q
# (1/4) zeta(-1) zeta(-5) = 1/12096.

# %%
g2 = cartan_data("G2")
for S_, T_ in (([], []), ([2], []), ([2], [3]), ([2], [3, 5])):
    rep = zc.count_nf(g2, S_, T_, 1)
    print(f"S={S_!s:<4} T={T_!s:<7} count={rep.count!s:<12} exact={rep.exact}")
