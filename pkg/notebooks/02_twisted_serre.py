"""
Twisted Serre relations by normal ordering
==========================================

Generators are sent to ``L^lam X^+`` and ``L^-lam X^-``.  Moving the lattice
parts to the left produces exactly the twist powers ``q^(k c)`` that turn the
deformed Serre combination into a multiple of the ordinary one.
"""

# %%
from qcox import check_theorem1, parse_datum, psi_images, solve_n
from qcox.coxeter import cayley_pairing
from qcox.ncalg import check_deformed_serre_images, deformed_serre, serre_element

b2 = parse_datum("B2")
perm = (1, 0)
n = solve_n(b2, perm)
img = psi_images(b2, n)
alg = img["alg"]
print("e_1 ->", img["e"][0].render())
print("f_2 ->", img["f"][1].render())

# %% [markdown]
# ``e_1 f_1`` differs from ``f_1 e_1`` by the usual Cartan term.

# %%
e1, f1 = img["e"][0], img["f"][0]
print((e1 * f1 - f1 * e1).render())

# %% [markdown]
# The deformed Serre combination for the pair (1, 2) collapses onto one
# lattice monomial times the ordinary Serre element.

# %%
c = cayley_pairing(b2, perm)
s = deformed_serre(alg, img["e"], 0, 1, c[0][1])
print("deformed :", s.render())
print("plain    :", serre_element(alg, 0, 1).render())
print("verdict  :", check_deformed_serre_images(b2, perm, n, pairs=[(0, 1)]))

# %% [markdown]
# Dropping the twist breaks the relation, and so does the reversed
# orientation ``g_i^(m-r) g_j g_i^r`` with ``q^(r c)``.

# %%
print("no twist :", check_deformed_serre_images(b2, perm, n, twist=False).ok)
print("reversed :", check_deformed_serre_images(b2, perm, n, form="descending").ok)
print("all relations:", check_theorem1(b2, perm, n).ok)
