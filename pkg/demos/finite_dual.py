"""Functions on Z/2 with the associator Phi, and its dual.

k^Z2 with Phi = sum omega(a,b,c) e_a (x) e_b (x) e_c is a quasi-bialgebra.
Its linear dual is a coquasi-bialgebra, and the identity on coordinates
pairs it with the twisted group algebra.  We also run the identities
around p, q and the anti-multiplicativity of S.
"""

import numpy as np

from coquasi import zoo as cz
from coquasi.cqb import check_morphism, check_preantipode, validate_coquasi
from coquasi.exactla import QQ, LinearMap
from coquasi.qb import appendix_report, compute_pq, finite_dual, function_algebra, validate_quasi

show = np.vectorize(str, otypes=[object])

z = cz.z2_omega()
a, s = function_algebra(z.group, z.cocycle, QQ)
print(validate_quasi(a).render_text())
print("S =\n", show(s.S))

pq = compute_pq(a, s)
print("p agrees with its expanded form:", bool(np.all(pq.p == pq.p_expanded)))
print("q agrees with its expanded form:", bool(np.all(pq.q == pq.q_expanded)))
print(appendix_report(a, s).render_text())

h, sh = finite_dual(a, s)
print(validate_coquasi(h).render_text())
print(check_preantipode(h, sh).render_text())
print(check_morphism(LinearMap.identity(2), h, z.h, sh, z.S).render_text())
