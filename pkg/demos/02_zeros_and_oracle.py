# %% [markdown]
# # Finding every zero
#
# The oracle reduces a one-sided polynomial to its real companion
# polynomial, finds the complex roots, and turns each root into either an
# isolated quaternion zero or a whole 2-sphere of zeros.

# %%
from qroots import QPolynomial, Quaternion, Side, solve
from qroots.polynomial import companion, evaluate

ONE = Quaternion(1.0)

# %% A real polynomial: q^2 + 1 vanishes on the unit sphere of pure quaternions
sphere = QPolynomial((ONE, Quaternion(), ONE))
for z in solve(sphere).zeros:
    print(z.kind.value, "re =", z.re, "radius =", z.im_radius)
    for pt in z.points(4):
        print("   p(", pt, ") =", evaluate(sphere, pt))

# %% A genuinely quaternionic one: q^2 + q j + (1 - k)
p = QPolynomial.from_coeffs(["1-k", "j", "1"], Side.RIGHT)
res = solve(p)
print("companion:", companion(p).coeffs)
for z in res.zeros:
    print(z.kind.value, z.point, "residual", z.residual)

# %% [markdown]
# The same coefficients read as a left polynomial give different zeros.

# %%
left = QPolynomial(p.coeffs, Side.LEFT)
for z in solve(left).zeros:
    print(z.kind.value, z.point, "residual", z.residual)
