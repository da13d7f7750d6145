# %% [markdown]
# # Independent checks
#
# A brute-force grid over the half-circle box, finite differences of the
# log-likelihood, and a damped Newton baseline.

# %%
from cauchymle import GridSpec, fd_score_check, fit, grid_mle, newton_raphson_baseline

xs = [-8, -5, -3, -1, 2, 7, 10]
g = GridSpec.for_sample(xs, cell=1e-4)
print("grid  :", grid_mle(xs, g).theta, "cell", g.final_cell())
print("fit   :", fit(xs).theta)

# %%
for h in (0.02, 0.01, 0.005):
    print(h, fd_score_check([-1, 0, 1], 0.4 + 0.8j, step=h))

# %% [markdown]
# Newton converges on the well-behaved sample and stalls on the singular
# ones, where the fixed-point iteration still converges.

# %%
for data in (xs, [-10065, -8678, -6, 0], [-10**7, -9 * 10**6, 0, 1, 10, 10**5]):
    r = newton_raphson_baseline(data)
    print(r.converged, r.iterations, r.reason, r.last)
