# %% [markdown]
# # The two-ball region
#
# When the descending coefficient norms `|b_k| / r^k` are non-increasing
# from `k = 2` on, the zeros lie in the union of an origin ball and a ball
# centred at `-b_1`.  A large `b_1` pushes some zeros far out, and the
# shifted ball captures them much more tightly than any origin ball.

# %%
from qroots import QPolynomial, Quaternion, cauchy_bound, solve
from qroots.bounds import feasible_r, rather_region, region_contains

coeffs = [Quaternion(0.01, 0, 0.02, 0), Quaternion(0, 0.1, 0, 0.05), Quaternion(0.5, 0, 0.5, 0),
          Quaternion(0, 40, 0, 0), Quaternion(1.0)]
p = QPolynomial(tuple(coeffs))
r = feasible_r(p)
region = rather_region(p, r)
print("smallest admissible r:", r)
print("origin ball radius:   ", region.radius1)
print("shifted ball:          centre", region.center2, "radius", region.radius2)
print("cauchy radius:        ", cauchy_bound(p).radius)

# %%
for z in solve(p).zeros:
    print(f"{z.kind.value:<9} |z| = {z.norm:8.4f}  {region_contains(region, z).value}")

# %% An infeasible case: a vanishing middle coefficient followed by a nonzero one
q = QPolynomial.from_coeffs(["1", "0", "2", "0", "1"])
print("feasible r:", feasible_r(q))
