# %% [markdown]
# 5^x = 4 + y^2 and 2*5^x = 1 + y^2 split by x mod 3 into the Mordell
# curves y^2 = x^3 - 4, x^3 - 100, x^3 - 2500.

# %%
from sgdiophantine.mordell import (
    integral_points,
    known_curve,
    solve_2_5x_eq_1_plus_square,
    solve_5x_eq_4_plus_square,
)
from sgdiophantine.search import EquationSpec, modular_obstruction

# %%
for n in (-4, -100, -2500):
    curve = known_curve(n)
    pts = integral_points(curve, 10**5)
    print(f"y^2 = x^3 {n:+d}: {[(p.x, p.y) for p in pts]}  table matches: "
          f"{tuple(pts) == curve.known_complete_points}")

# %%
print("5^x = 4 + y^2:    ", solve_5x_eq_4_plus_square(60))
print("2*5^x = 1 + y^2:  ", solve_2_5x_eq_1_plus_square(60))

# %% [markdown]
# Modular obstructions certify empty branches without any search: for
# p = 41 the quantity -41^x is a non-residue mod q = 83, so the branch
# y >= 1 of -41^x + (2^k 83)^y = z^2 is empty.

# %%
for k in range(0, 4):
    spec = EquationSpec(1, 0, 41, k)
    print(k, modular_obstruction(spec, 83, y_min=1).value)
