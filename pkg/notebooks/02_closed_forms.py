# %% [markdown]
# # Closed forms for three and four observations
#
# For n = 3 and n = 4 the MLE has an explicit formula.  With exact input the
# location and squared scale come out as rationals.

# %%
from cauchymle import closed_form_exact, fit, fit_n3, fit_n4, r4_factors

print(fit_n3([-3, -1, 2]).theta)
print(closed_form_exact([-3, -1, 2]))
print(fit_n4([0, 1, 2, 3]).theta)

# %% [markdown]
# The sextic for n = 4 splits into three quadratics.  Only the middle one
# has a negative discriminant, and its upper root is the estimate.

# %%
f1, f2, f3 = r4_factors([-10065, -8678, -6, 0])
print([f.discriminant for f in (f1, f2, f3)])
print("upper root of F2:", f2.upper_root())
print("iteration       :", fit([-10065, -8678, -6, 0], method="iterate").theta)
