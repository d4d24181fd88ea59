# %% [markdown]
# Odd Sophie Germain primes. Which results apply depends on the signs, the
# residue of p mod 8 and the parity of k; everything else is "unsupported"
# but still searchable.

# %%
from sgdiophantine import EquationSpec, SearchBounds, brute_force, classify, closed_form
from sgdiophantine.theorems import unsupported_reason

# %%
for p in (3, 5, 11, 23, 29, 41):
    row = []
    for sig in ((0, 0), (0, 1), (1, 0)):
        for k in (1, 2):
            row.append(f"{sig}k{k}:{classify(EquationSpec(*sig, p, k)).value}")
    print(f"p={p:>2} (mod 8 = {p % 8})", "  ".join(row))

# %%
# the sporadic solutions, all at p = 3 or 11
for args in [(0, 0, 3, 5), (0, 0, 3, 4), (0, 0, 3, 6), (0, 1, 3, 3),
             (1, 0, 3, 1), (1, 0, 3, 2), (1, 0, 11, 2)]:
    spec = EquationSpec(*args)
    print(f"{str(spec):<32} {closed_form(spec).triples()}")

# %%
# an uncovered case: p = 23 = 7 mod 8
spec = EquationSpec(0, 0, 23, 2)
print(classify(spec).value, "-", unsupported_reason(spec))
print("brute force:", [s.triple for s in brute_force(spec, SearchBounds(30, 8))])

# %%
# the k = 0 case left out for p = 3 mod 8 does have solutions
spec = EquationSpec(0, 0, 3, 0)
print(str(spec), [s.triple for s in brute_force(spec, SearchBounds(30, 8))])
