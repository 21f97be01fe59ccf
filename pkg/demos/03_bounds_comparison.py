# %% [markdown]
# # Comparing zero bounds
#
# Every bound is a ball around the origin whose radius depends only on the
# coefficient norms.  The ratio of the largest zero norm to the radius shows
# how tight each one is.

# %%
import numpy as np

from qroots import all_origin_bounds, solve
from qroots.bounds import HolderPair
from qroots.harness import gen_random_poly

rng = np.random.default_rng(3)
pairs = [HolderPair(2, 2), HolderPair(3, 1.5), HolderPair(1.5, 3)]

# %%
for degree in (2, 4, 8):
    p = gen_random_poly(rng, degree, 10.0)
    top = max(z.norm for z in solve(p).zeros)
    print(f"degree {degree}: largest zero norm {top:.4f}")
    for reg in all_origin_bounds(p, pairs):
        print(f"   {reg.label:<26} radius {reg.radius:9.4f}  tightness {top / reg.radius:.3f}")

# %% [markdown]
# As `r` grows the Hölder bound approaches the Cauchy radius.

# %%
from qroots import cauchy_bound, kmt_bound

p = gen_random_poly(rng, 5, 10.0)
print("cauchy", cauchy_bound(p).radius)
for r in (1.5, 2, 4, 16, 1e3, 1e6):
    print(f"r = {r:<8g} kmt radius {kmt_bound(p, HolderPair.from_r(r)).radius:.6f}")
