# %% [markdown]
# # Circular Cauchy
#
# A Mobius map carries the Cauchy family on the line to the wrapped Cauchy
# family on the circle.  The disc iteration starts at the centre.

# %%
import math

import numpy as np

from cauchymle import Q_tilde, Q_tilde_conjugated, fit_circular, fit_iterative, mobius, sample_cauchy

y = sample_cauchy(0.5 + 1.2j, 12, 4)
theta = -1 + 0.7j
angles = np.mod(np.angle(mobius(theta, y.array)), 2 * math.pi)
cf = fit_circular(angles)
print("disc fit          :", cf.psi, "in", cf.iterations, "steps")
print("line fit, mapped  :", mobius(theta, fit_iterative(y, tol=1e-15)[0].theta))
print("fixed-point check :", abs(cf.psi - Q_tilde(angles, cf.psi)))

# %% [markdown]
# The disc map does not depend on which Mobius chart is used.

# %%
w = 0.2 - 0.3j
for t in (1j, 2 + 0.5j, -3 + 4j):
    print(t, Q_tilde_conjugated(angles, t, w) - Q_tilde(angles, w))
