# %% [markdown]
# # The connection d + N dt/t + E dt
#
# Regular singular at 0 with unipotent monodromy, irregular at infinity.
# After the cover u^h = 1/t and the gauge u^(-rho) the connection matrix is
# -h(N+E)/u^2 - rho/u, whose leading term is regular semisimple.

# %%
from langlands_desk import gauge_connection as gc

# %%
data = gc.MatrixLieData.sl(3)
pipe = gc.run_pipeline(data)
for label, conn in (("t", pipe.original), ("s", pipe.at_infinity), ("cover", pipe.covered), ("gauged", pipe.gauged)):
    print(f"--- {label}")
    for row in conn.A:
        print("   ", [e.to_text() for e in row])
print("matches closed form:", pipe.matches_closed_form)

# %%
for n in range(2, 7):
    d = gc.MatrixLieData.sl(n)
    slope = gc.slope_at_infinity(gc.run_pipeline(d).at_infinity)
    cox = gc.coxeter_eigenvalues(d)
    print(f"sl_{n}: slope {slope}, exponents {cox.exponents}, non-primitive {cox.non_primitive}")
