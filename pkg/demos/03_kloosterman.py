# %% [markdown]
# # Kloosterman sums as Satake traces
#
# Sums are exact elements of Z[zeta_p].  We check the Galois symmetry, then
# look at the distribution of normalised angles for Kl_2 over F_p.

# %%
import numpy as np

from langlands_desk import kloosterman as kl

# %%
for q in (3, 5, 7, 9, 25):
    r = kl.rationality_report(2, q)
    print(f"q={q:>2}  integral={r.integral}  galois={r.galois_ok}  sum={r.sum_ok}  weil={r.weil_ok}")

# %% [markdown]
# For prime q the sums Kl_2(t) are real, and Kl_2(t) / (2 sqrt q) = cos(theta_t).
# The angles follow the semicircle law as q grows.

# %%
p = 101
values = np.array([kl.kloosterman_sum(kl.KloostermanQuery(2, p, t)).embeddings()[0].real for t in range(1, p)])
theta = np.arccos(np.clip(values / (2 * np.sqrt(p)), -1, 1))
hist, edges = np.histogram(theta, bins=8, range=(0, np.pi))
expected = (p - 1) * np.diff(edges - np.sin(2 * edges) / 2) * 2 / np.pi / 2
for lo, hi, n, e in zip(edges[:-1], edges[1:], hist, expected):
    print(f"[{lo:4.2f}, {hi:4.2f})  {'#' * n:<24} observed {n:>2}  semicircle {e:5.1f}")
