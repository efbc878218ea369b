"""
Coxeter elements and the integer twist
======================================

A Coxeter element picks an order on the simple reflections.  Its Cayley
transform gives a skew pairing ``c`` on the simple roots, and that pairing
is realized by an integer matrix ``n``.
"""

# %%
from qcox import cayley_pairing, coxeter_matrix, matrix_order, parse_datum, solve_n
from qcox.coxeter import all_perms, c_from_n, epsilon_matrix, render_perm
from qcox.qnum import nogo_scalar, serre_character_scalar

g2 = parse_datum("G2")
print("Cartan matrix:", g2.a)
print("symmetrizers d:", g2.d, " b = diag(d) a:", g2.b)

# %% [markdown]
# The product of the two reflections has order 6, the Coxeter number of G2.

# %%
for perm in all_perms(2):
    m = coxeter_matrix(g2, perm)
    print(render_perm(perm), "s =", m, " order", matrix_order(m))

# %% [markdown]
# The Cayley pairing is the form ``b`` with signs set by the order of the
# reflections.

# %%
perm = (0, 1)
c = cayley_pairing(g2, perm)
print("c       =", [[str(x) for x in row] for row in c])
print("eps     =", epsilon_matrix(perm, 2))
n = solve_n(g2, perm)
print("n       =", n)
print("from n  =", c_from_n(g2, n))

# %% [markdown]
# With the twist, the Serre scalar of a non-singular character vanishes.
# Without it (``c = 0``) it does not.

# %%
i, j = 0, 1
m = 1 - g2.a[i][j]
print("twisted  :", serre_character_scalar(m, c[i][j], g2.d[i]).render() or "0")
print("untwisted:", serre_character_scalar(m, 0, g2.d[i]).render())
print("A2 no-go :", nogo_scalar(1).render())
