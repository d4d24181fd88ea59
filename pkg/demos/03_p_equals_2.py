# %% [markdown]
# p = 2, q = 5: the three sign patterns 2^x + (2^k 5)^y, 2^x - (2^k 5)^y
# and -2^x + (2^k 5)^y. The first and third carry infinite one-parameter
# families; for each fixed k only finitely many solutions remain.

# %%
from sgdiophantine import EquationSpec, SearchBounds, brute_force, closed_form, cross_check
from sgdiophantine.theorems import FamilyTag, expand_family, families_for

# %%
for fam in families_for(FamilyTag.A1) + families_for(FamilyTag.A3):
    print(fam.name, fam.describe())
    for s in expand_family(fam, 1, 3):
        print(f"    n-th member: k={s.k}  (x,y,z)=({s.x},{s.y},{s.z})")

# %%
for k in range(0, 7):
    sset = closed_form(EquationSpec(1, 0, 2, k))
    print(f"-2^x + (2^{k}*5)^y = z^2:", sset.triples())

# %%
# closed form against the brute-force oracle
for sig in ((0, 0), (0, 1), (1, 0)):
    for k in range(0, 9):
        rep = cross_check(EquationSpec(*sig, 2, k), SearchBounds(40, 12))
        assert rep.equal
print("all p = 2 cases agree with brute force for x <= 40, y <= 12")

# %%
# k = 0 in the first pattern is the older 2^x + 5^y = z^2 result
print([s.triple for s in brute_force(EquationSpec(0, 0, 2, 0), SearchBounds(60, 20))])
