"""The two-dimensional twisted group algebra of Z/2.

omega is -1 on (x, x, x) and 1 elsewhere, so the multiplication of kZ2 is
not associative in Comod.  It has no antipode with eps S = eps, but it does
have a preantipode, and that is enough to dualize every comodule.
"""

import numpy as np

from coquasi import zoo as cz
from coquasi.comodcat import check_dual, dual_comodule, line_comodule
from coquasi.cqb import check_preantipode, epsilon_s_identities, solve_preantipode, validate_coquasi

show = np.vectorize(str, otypes=[object])

e = cz.z2_omega()
h = e.h
print(h.name, "dim", h.dim)
print("omega on the group basis:\n", show(h.W))
print(validate_coquasi(h).render_text())

S = solve_preantipode(h)
print("S =\n", show(S.S))
print(check_preantipode(h, S).render_text())

# eps S differs from eps, so S is not an ordinary antipode
rep = epsilon_s_identities(h, S)
print("eps S =", show(np.einsum("k,kx->x", h.E, S.S)), "flags:", rep.flags)

# the sign line k_x: its dual needs ev * db = -1
x = e.grouplikes[1][1]
dd = dual_comodule(line_comodule(h, x, "k_x"), S)
print("ev =", show(dd.ev.entries.ravel()), " db =", show(dd.db.entries.ravel()))
print(check_dual(dd).render_text())
