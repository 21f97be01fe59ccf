# %% [markdown]
# # Quaternion arithmetic
#
# Quaternions are 4-tuples `w + xi + yj + zk` with the Hamilton product.
# Multiplication does not commute, which is why polynomials carry a side.

# %%
from qroots import I, J, K, Quaternion, similarity_data

print("i*j =", I * J)
print("j*i =", J * I)
print("i*j*k =", I * J * K)

# %% Norm, conjugate, inverse
q = Quaternion.from_any("1+2i-j+0.5k")
print("q        =", q)
print("|q|      =", abs(q))
print("conj(q)  =", q.conj())
print("q*q^-1   =", q * q.inverse())

# %% [markdown]
# Two quaternions are similar (`p = h q h^-1`) exactly when they share the
# real part and the length of the vector part.  That pair is what identifies
# a sphere of zeros later on.

# %%
h = Quaternion(0.3, -1.0, 2.0, 0.7)
p = h * q * h.inverse()
print("similarity data of q:       ", similarity_data(q))
print("similarity data of h q h^-1:", similarity_data(p))
