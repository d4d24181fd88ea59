# %% [markdown]
# Sophie Germain primes p (2p+1 also prime) split by p mod 8. Each class
# keeps growing as the limit rises, which is what one expects if every
# class is infinite.

# %%
from sgdiophantine import enumerate_sg, sg_density_stats, sg_residue_class

# %%
print("first few pairs:", [(pp.p, pp.q) for pp in enumerate_sg(60)])

# %%
for k in (1, 3, 5, 7):
    print(f"p = {k} mod 8, p < 1000:", sg_residue_class(1000, 3, k))

# %%
for limit in (10**3, 10**4, 10**5, 10**6):
    st = sg_density_stats(limit, 3)
    print(f"{limit:>8}: {st.counts}  total {st.total}")

# %%
# finer classes mod 16 are all populated as well
print(sg_density_stats(10**6, 4).counts)
