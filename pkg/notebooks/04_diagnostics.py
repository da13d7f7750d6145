# %% [markdown]
# # Where the estimate sits
#
# Mapping the sample range onto [-1, 1] puts the MLE in the closed upper
# half-disc.  Estimates near the rim come from samples on which the
# iteration is slow.

# %%
from cauchymle import (
    cdf_symmetry_residuals,
    construct_sample_with_position,
    fit,
    fit_iterative,
    relative_position,
)

for data in ([-1, 0, 1], [-10065, -8678, -6, 0], [-10**7, -9 * 10**6, 0, 1, 10, 10**5]):
    rep = fit(data, max_iter=10**5)
    pos = rep.diagnostics
    print(f"xi = {pos.xi:.7f}  distance = {pos.relative_distance:.4f}  steps = {rep.iterations}")

# %% [markdown]
# CDF identities at the estimate for n = 3 and n = 4.

# %%
print(cdf_symmetry_residuals([-1, 0, 1], fit([-1, 0, 1]).theta))
print(cdf_symmetry_residuals([-2, -1, 1, 2], fit([-2, -1, 1, 2]).theta))

# %% [markdown]
# Any point of the open half-disc is the relative position of some even-size
# sample; the construction pairs points whose Mobius images cancel.

# %%
s = construct_sample_with_position(0.3 + 0.4j, 6)
print(s.values)
print(relative_position(s, fit_iterative(s, tol=1e-15)[0]).xi)
