# %% [markdown]
# # The exact polynomial R_n
#
# Clearing denominators in ``z = Q(z)`` and removing the trivial factors
# leaves an integer polynomial whose upper-half-plane root is the MLE.

# %%
import time

from cauchymle import build_Rn, construct_Rn, emit_coefficients, fit_algebraic

c = construct_Rn([-3, -1, 2, 3, 4])
print("deg N =", c.N.degree, " deg gcd(N, B) =", c.common.degree, " deg R =", c.R.degree)
print(emit_coefficients(c.R))

# %% [markdown]
# A symmetric sample gives an even polynomial and a purely imaginary root.

# %%
fit = fit_algebraic([-2, -1, 0, 1, 2])
print(emit_coefficients(fit))
print("selected:", fit.chosen.theta)

# %% [markdown]
# Samples spanning seven orders of magnitude need extended-precision root
# finding; the precision is raised until the likelihood residual is small.

# %%
t0 = time.perf_counter()
wide = fit_algebraic([-10**7, -9 * 10**6, 0, 1, 10, 10**5])
print(wide.chosen.theta, "residual", wide.residual, f"{time.perf_counter() - t0:.2f} s")
print(emit_coefficients(build_Rn([-1, 0, 1]), format="json"))
