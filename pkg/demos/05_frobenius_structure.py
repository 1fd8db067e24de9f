# %% [markdown]
# # A Frobenius structure for the sl_2 Kloosterman connection
#
# Solve the Frobenius equation over Q_p(lambda), lambda^(p-1) = -p, evaluate
# at Teichmueller points, and compare traces with Kloosterman sums pushed
# into Q_p(lambda) through zeta_p = 1 + lambda + ...

# %%
from langlands_desk import frobenius_crystal as fc

# %%
for p in (3, 5, 7):
    cfg = fc.CrystalConfig.default(p)
    phi = fc.solve_frobenius_ode(cfg)
    cal = fc.calibration_report(phi)
    print(f"p={p}: residual ok={fc.residual_vanishes(phi)}, det=p ok={fc.determinant_is_constant(phi)}, "
          f"projection layer {phi.projection_layer}, tail valuation {phi.tail_valuation}")
    print(f"      trace/Kl_2 constant: {'-1' if cal.constant == -1 else cal.constant}, "
          f"t-independent={cal.t_independent}, valuations={sorted({str(v) for v in cal.ordinary.values()})}")

# %% [markdown]
# Points of degree two: the trace of phi(X) phi(X^p) against Kl_2 over F_9.

# %%
phi = fc.solve_frobenius_ode(fc.CrystalConfig.default(3))
cal = fc.calibration_report(phi, degree=2)
print("F_9 points:", cal.t_independent, "constant -1:", cal.constant == -1)
