"""
The level-k twist and generalized characters
============================================

At level ``k`` the positive modes of the twist solve a linear system whose
right-hand side is the logarithm of ``F_ij``.
"""

# %%
import random

from qcox import affine_series_pack, check_Kq, generalized_character_check, parse_datum, solve_Kq, solve_n
from qcox.laurent import LaurentPoly
from qcox.qseries import check_Kq_forms

c3 = parse_datum("C3")
perm = (2, 0, 1)
n = solve_n(c3, perm)
twist = solve_Kq(c3, perm, n, level=1, rmax=6)
for r in (1, 2):
    print(f"r={r}:", [[x.render() for x in row] for row in twist.n_pos[r]])

# %% [markdown]
# The direct equations and the log-form agree.

# %%
print(check_Kq_forms(twist))

# %% [markdown]
# Nonzero negative modes are allowed as well; then the system is solved
# over Q(v).

# %%
rng = random.Random(0)
n_neg = {r: [[rng.randint(-1, 1) for _ in range(3)] for _ in range(3)] for r in (1, 2)}
print(check_Kq(solve_Kq(c3, perm, n, level=1, rmax=2, n_neg=n_neg)))

# %%
pack = affine_series_pack(c3, n, 1, 4)
print("g_12 =", pack["g"][(0, 1)].render())
print("G_12 =", pack["G"][(0, 1)].render())

# %% [markdown]
# Any commuting Laurent polynomials can stand in for the currents.

# %%
phis = [{0: 1, 2: LaurentPoly({2: 3})}, {-1: 2}, {1: -1, 3: 1}]
print(generalized_character_check(c3, n, phis, 16))
