"""
Structure functions and the multi-point Serre constraint
========================================================

In the affine setting the twist becomes a family of rational functions
``F_ij(z)``.  The constraints they satisfy are checked exactly, after
clearing denominators.
"""

# %%
from qcox import build_F, check_fg_constraints, jing_identity, parse_datum, serre_series_identity, solve_n, taylor_solve_F
from qcox.qseries import has_constancy_dichotomy

a2 = parse_datum("A2")
n = solve_n(a2, (0, 1))
for i in range(2):
    for j in range(2):
        f = build_F(a2, n, i, j)
        print(f"F_{i + 1}{j + 1}: constant={f.is_constant()}  series {f.series(3).render()}")

# %% [markdown]
# The two-point constraint determines ``F`` from its constant terms.

# %%
print(taylor_solve_F(a2, n, 0, 1, 5).render())
print("agrees with the expansion:", taylor_solve_F(a2, n, 0, 1, 20) == build_F(a2, n, 0, 1).series(20))
print("constraints:", check_fg_constraints(a2, n).ok, " one side constant:", has_constancy_dichotomy(a2, n))

# %% [markdown]
# The multi-point Serre constraint, cleared of denominators, is a polynomial
# identity in ``v, z_1, ..., z_m, w``.  G2 needs four ``z`` variables.

# %%
g2 = parse_datum("G2")
ng = solve_n(g2, (0, 1))
for i, j in ((0, 1), (1, 0)):
    print(f"G2 ({i + 1},{j + 1}):", serre_series_identity(g2, ng, i, j).ok)
for m in (0, -1, -2, -3):
    print(f"symmetric identity m={m}:", jing_identity(m).ok)
