# %% [markdown]
# Quadratic symbols drive every congruence argument in this package.
# Two independent routes agree: the binary Jacobi algorithm and Euler's
# criterion a^((p-1)/2) mod p.

# %%
from sgdiophantine import jacobi_symbol, legendre_symbol, mod_pow

# %%
# 2 is a non-residue mod 5, so 2^x is a square mod 5 only for even x
print("(2/5) =", legendre_symbol(2, 5))
print("(-2/5) =", legendre_symbol(-2, 5))
print("squares mod 5:", sorted({r * r % 5 for r in range(5)}))

# %%
# Euler's criterion side by side
p = 83
for a in (2, 3, 41, -1):
    e = mod_pow(a, (p - 1) // 2, p)
    print(f"a={a:>3}: legendre={legendre_symbol(a, p):>2}  euler={e if e < 2 else e - p:>2}")

# %%
# reciprocity for a Sophie Germain pair p = 3 (mod 4), q = 2p + 1
for p in (3, 11, 23, 83):
    q = 2 * p + 1
    print(f"(p/q)={legendre_symbol(p, q):>2}  (q/p)={legendre_symbol(q, p):>2}   p={p}, q={q}")

# %%
# the Jacobi symbol needs no factorisation of the modulus
print("(2/15) =", jacobi_symbol(2, 15), "even though 2 is not a square mod 15")
