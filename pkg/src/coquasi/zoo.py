"""Example generator: twisted group (co)quasi-bialgebras and friends.

Groups are multiplication tables ``table[g][h] = gh`` with the identity at
index 0.  A cocycle is an array ``w[g, h, k]`` of nonzero scalars.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

import numpy as np

from .coalg import Coalgebra
from .cqb import CoquasiBialgebra, CoquasiHopfData, Preantipode, base_change
from .exactla import QQ, Field, LinearMap, random_invertible
from .report import Report


# groups -------------------------------------------------------------------


@dataclass(frozen=True)
class Group:
    name: str
    table: tuple

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, g: int, h: int) -> int:
        return self.table[g][h]

    def inv(self, g: int) -> int:
        return next(h for h in range(self.order) if self.table[g][h] == 0)

    def validate(self) -> None:
        n = self.order
        for g in range(n):
            if self.table[0][g] != g or self.table[g][0] != g:
                raise ValueError("index 0 is not the identity")
            if sorted(self.table[g]) != list(range(n)):
                raise ValueError(f"row {g} is not a permutation")
        for g, h, k in itertools.product(range(n), repeat=3):
            if self.mul(self.mul(g, h), k) != self.mul(g, self.mul(h, k)):
                raise ValueError(f"not associative at {(g, h, k)}")


def cyclic(n: int) -> Group:
    return Group(f"Z{n}", tuple(tuple((a + b) % n for b in range(n)) for a in range(n)))


def direct_product(g1: Group, g2: Group) -> Group:
    n2 = g2.order
    elems = [(a, b) for a in range(g1.order) for b in range(n2)]
    table = tuple(tuple(g1.mul(a, c) * n2 + g2.mul(b, d) for (c, d) in elems) for (a, b) in elems)
    return Group(f"{g1.name}x{g2.name}", table)


def symmetric3() -> Group:
    perms = list(itertools.permutations(range(3)))
    perms.sort(key=lambda p: p != (0, 1, 2))
    idx = {p: i for i, p in enumerate(perms)}
    table = tuple(tuple(idx[tuple(p[q[i]] for i in range(3))] for q in perms) for p in perms)
    return Group("S3", table)


def sign_s3(g: int) -> int:
    """Sign homomorphism S3 -> Z2 for the ordering used by ``symmetric3``."""
    perms = list(itertools.permutations(range(3)))
    perms.sort(key=lambda p: p != (0, 1, 2))
    p = perms[g]
    inversions = sum(1 for i in range(3) for j in range(i + 1, 3) if p[i] > p[j])
    return inversions % 2


# cocycles -----------------------------------------------------------------


def trivial_cocycle(g: Group, fld: Field = QQ) -> np.ndarray:
    w = np.empty((g.order,) * 3, dtype=object)
    w.fill(fld.one)
    return w


def cyclic_cocycle(n: int, k: int, zeta, fld: Field = QQ) -> np.ndarray:
    """``w(a, b, c) = zeta**(k a floor((b + c)/n))``; needs ``zeta**n = 1``."""
    zeta = fld(zeta)
    if zeta**n != fld.one:
        raise ValueError(f"{zeta} is not an {n}-th root of unity")
    w = np.empty((n, n, n), dtype=object)
    for a, b, c in itertools.product(range(n), repeat=3):
        w[a, b, c] = zeta ** (k * a * ((b + c) // n))
    return w


def product_cocycle(w1: np.ndarray, w2: np.ndarray) -> np.ndarray:
    """Cocycle on ``G1 x G2`` (ordered as in ``direct_product``) from one on each factor."""
    n1, n2 = w1.shape[0], w2.shape[0]
    w = np.empty((n1 * n2,) * 3, dtype=object)
    for (a1, a2), (b1, b2), (c1, c2) in itertools.product(itertools.product(range(n1), range(n2)), repeat=3):
        w[a1 * n2 + a2, b1 * n2 + b2, c1 * n2 + c2] = w1[a1, b1, c1] * w2[a2, b2, c2]
    return w


def klein_mixed_cocycle(fld: Field = QQ) -> np.ndarray:
    """``(-1)**(a1 b2 c2)`` on Z2 x Z2; trilinear, hence a cocycle."""
    w = np.empty((4, 4, 4), dtype=object)
    for a, b, c in itertools.product(range(4), repeat=3):
        w[a, b, c] = fld(-1) ** ((a >> 1) * (b & 1) * (c & 1))
    return w


def pullback_cocycle(w: np.ndarray, hom, order: int) -> np.ndarray:
    out = np.empty((order,) * 3, dtype=object)
    for a, b, c in itertools.product(range(order), repeat=3):
        out[a, b, c] = w[hom(a), hom(b), hom(c)]
    return out


def coboundary(g: Group, beta: np.ndarray) -> np.ndarray:
    """``beta(h,k) beta(g,hk) / (beta(gh,k) beta(g,h))`` for a normalized 2-cochain."""
    n = g.order
    out = np.empty((n, n, n), dtype=object)
    for a, b, c in itertools.product(range(n), repeat=3):
        out[a, b, c] = beta[b, c] * beta[a, g.mul(b, c)] / (beta[g.mul(a, b), c] * beta[a, b])
    return out


def random_cochain(g: Group, fld: Field, rng: np.random.Generator) -> np.ndarray:
    n = g.order
    beta = np.empty((n, n), dtype=object)
    for a, b in itertools.product(range(n), repeat=2):
        if a == 0 or b == 0:
            beta[a, b] = fld.one
        elif fld == QQ:
            beta[a, b] = Fraction(int(rng.integers(1, 4)), int(rng.integers(1, 4))) * int(rng.choice([-1, 1]))
        else:
            beta[a, b] = fld.random(rng, nonzero=True)
    return beta


def check_cocycle(g: Group, w: np.ndarray) -> Report:
    """Normalized 3-cocycle test; failures name the first bad tuple."""
    rep = Report("group 3-cocycle")
    n = g.order
    for a, b in itertools.product(range(n), repeat=2):
        for t in ((0, a, b), (a, 0, b), (a, b, 0)):
            if w[t] != 1:
                rep.fail("normalized", t)
                return rep
    rep.checked.append("normalized")
    rep.checked.append("cocycle")
    for a, b, c, d in itertools.product(range(n), repeat=4):
        lhs = w[b, c, d] * w[a, g.mul(b, c), d] * w[a, b, c]
        rhs = w[g.mul(a, b), c, d] * w[a, b, g.mul(c, d)]
        if lhs != rhs:
            rep.fail("cocycle", (a, b, c, d))
            return rep
    return rep


class CocycleError(ValueError):
    def __init__(self, rep: Report):
        f = rep.failures[0]
        super().__init__(f"{f.axiom} condition fails at {list(f.index)}")
        self.report = rep


@dataclass(frozen=True)
class ZooSpec:
    group: Group
    cocycle: np.ndarray
    field: Field = QQ
    kind: str = "coquasi"
    name: str = ""


# twisted group algebras ---------------------------------------------------


def gen_group_coquasi(z: ZooSpec, check: bool = True) -> tuple[CoquasiBialgebra, Preantipode, CoquasiHopfData]:
    """``kG`` with group-like basis and reassociator ``w``, plus closed-form ``S`` and ``(s, alpha, beta)``."""
    g, w, fld = z.group, z.cocycle, z.field
    if check:
        rep = check_cocycle(g, w)
        if not rep.passed:
            raise CocycleError(rep)
    n = g.order
    delta = fld.zeros((n * n, n))
    mult = fld.zeros((n, n * n))
    for a in range(n):
        delta[a * n + a, a] = fld.one
        for b in range(n):
            mult[g.mul(a, b), a * n + b] = fld.one
    counit = np.array([[fld.one] * n], dtype=object)
    unit = fld.zeros((n, 1))
    unit[0, 0] = fld.one
    wf = np.frompyfunc(fld, 1, 1)(w).astype(object)
    omega = wf.reshape(1, -1)
    h = CoquasiBialgebra(
        Coalgebra(LinearMap(delta, fld), LinearMap(counit, fld)),
        LinearMap(mult, fld),
        LinearMap(unit, fld),
        LinearMap(omega, fld),
        z.name or g.name,
    )
    h.with_omega_inverse(np.frompyfunc(lambda x: fld.one / x, 1, 1)(wf).astype(object))
    S = fld.zeros((n, n))
    s = fld.zeros((n, n))
    beta = fld.zeros((1, n))
    for a in range(n):
        ai = g.inv(a)
        S[ai, a] = fld.one / wf[a, ai, a]
        s[ai, a] = fld.one
        beta[0, a] = fld.one / wf[a, ai, a]
    hopf = CoquasiHopfData(LinearMap(s, fld), LinearMap(counit, fld), LinearMap(beta, fld))
    return h, Preantipode(LinearMap(S, fld)), hopf


def sweedler(fld: Field = QQ) -> tuple[CoquasiBialgebra, Preantipode]:
    """Sweedler's four-dimensional Hopf algebra on ``1, g, x, gx``, trivial reassociator."""
    if fld != QQ and fld.p == 2:
        raise ValueError("needs characteristic other than 2")
    n = 4
    one, gg, x, gx = range(4)
    # products of monomials g^i x^j, with x g = -g x
    def mono(i, j):
        return (i % 2) + 2 * j  # index: 1, g, x, gx

    mult = fld.zeros((n, n * n))
    for a, b in itertools.product(range(n), repeat=2):
        i1, j1 = a % 2, a // 2
        i2, j2 = b % 2, b // 2
        if j1 + j2 > 1:
            continue
        sign = -1 if (j1 and i2) else 1
        mult[mono(i1 + i2, j1 + j2), a * n + b] = fld(sign)
    delta = fld.zeros((n * n, n))

    def put(col, a, b, c=1):
        delta[a * n + b, col] = delta[a * n + b, col] + fld(c)

    put(one, one, one)
    put(gg, gg, gg)
    put(x, x, one)
    put(x, gg, x)
    put(gx, gx, gg)
    put(gx, one, gx)
    counit = np.array([[fld.one, fld.one, fld.zero, fld.zero]], dtype=object)
    unit = fld.zeros((n, 1))
    unit[0, 0] = fld.one
    omega = np.empty((1, n**3), dtype=object)
    eps = counit[0]
    for a, b, c in itertools.product(range(n), repeat=3):
        omega[0, (a * n + b) * n + c] = eps[a] * eps[b] * eps[c]
    h = CoquasiBialgebra(
        Coalgebra(LinearMap(delta, fld), LinearMap(counit, fld)),
        LinearMap(mult, fld),
        LinearMap(unit, fld),
        LinearMap(omega, fld),
        "H4",
    )
    S = fld.zeros((n, n))
    S[one, one] = fld.one
    S[gg, gg] = fld.one
    S[gx, x] = fld(-1)
    S[x, gx] = fld.one
    return h, Preantipode(LinearMap(S, fld))


# catalogue ----------------------------------------------------------------


@dataclass
class ZooEntry:
    """A coquasi-bialgebra with its closed-form preantipode and side data.

    ``grouplikes`` lists ``(label, vector)`` for group-like elements; over a
    twisted group algebra they are all of them.  ``lines`` are the columns
    of ``P^{-1}`` used to transport structure after a base change.
    """

    name: str
    h: CoquasiBialgebra
    S: Preantipode
    hopf: CoquasiHopfData | None = None
    group: Group | None = None
    cocycle: np.ndarray | None = None
    grouplikes: list = dc_field(default_factory=list)
    basis_change: LinearMap | None = None  # P^{-1}: old coordinates -> new

    @property
    def field(self) -> Field:
        return self.h.field


def group_entry(name: str, g: Group, w: np.ndarray, fld: Field = QQ) -> ZooEntry:
    h, S, hopf = gen_group_coquasi(ZooSpec(g, w, fld, name=name))
    gl = []
    for a in range(g.order):
        v = fld.zeros(g.order)
        v[a] = fld.one
        gl.append((a, v))
    return ZooEntry(name, h, S, hopf, g, w, gl)


def rebase(entry: ZooEntry, P: LinearMap, name: str | None = None) -> ZooEntry:
    """The same object written in the basis given by the columns of ``P``."""
    h2, Pi = base_change(entry.h, P)
    S2 = Preantipode(Pi @ entry.S.s_map @ P)
    hopf2 = None
    if entry.hopf is not None:
        q = entry.hopf
        hopf2 = CoquasiHopfData(Pi @ q.s @ P, q.alpha @ P, q.beta @ P)
    gl = [(lab, Pi @ v) for lab, v in entry.grouplikes]
    prev = entry.basis_change
    bc = Pi if prev is None else Pi @ prev
    return ZooEntry(name or entry.name + "'", h2, S2, hopf2, entry.group, entry.cocycle, gl, bc)


def random_rebase(entry: ZooEntry, rng: np.random.Generator, name: str | None = None) -> ZooEntry:
    P = random_invertible(entry.h.dim, entry.field, rng)
    return rebase(entry, P, name)


def trivial_entry(fld: Field = QQ) -> ZooEntry:
    return group_entry("k", Group("1", ((0,),)), trivial_cocycle(Group("1", ((0,),)), fld), fld)


def z2_omega(fld: Field = QQ) -> ZooEntry:
    return group_entry("Z2_omega", cyclic(2), cyclic_cocycle(2, 1, -1, fld), fld)


def z2_hopf(fld: Field = QQ) -> ZooEntry:
    return group_entry("Z2", cyclic(2), trivial_cocycle(cyclic(2), fld), fld)


def z4_omega(fld: Field = QQ) -> ZooEntry:
    """Z4 with ``(-1)**(a floor((b+c)/4))`` (the class twice a generator of H^3)."""
    w = cyclic_cocycle(4, 1, -1, fld)
    return group_entry("Z4_omega", cyclic(4), w, fld)


def klein_omega(fld: Field = QQ) -> ZooEntry:
    z2 = cyclic_cocycle(2, 1, -1, fld)
    w = product_cocycle(z2, z2) * klein_mixed_cocycle(fld)
    return group_entry("Z2xZ2_omega", direct_product(cyclic(2), cyclic(2)), w, fld)


def klein_product(fld: Field = QQ) -> ZooEntry:
    z2 = cyclic_cocycle(2, 1, -1, fld)
    return group_entry("Z2xZ2_prod", direct_product(cyclic(2), cyclic(2)), product_cocycle(z2, trivial_cocycle(cyclic(2), fld)), fld)


def s3_omega(fld: Field = QQ) -> ZooEntry:
    w = pullback_cocycle(cyclic_cocycle(2, 1, -1, fld), sign_s3, 6)
    return group_entry("S3_omega", symmetric3(), w, fld)


def z3_twisted(fld: Field, rng: np.random.Generator) -> ZooEntry:
    g = cyclic(3)
    w = trivial_cocycle(g, fld) * coboundary(g, random_cochain(g, fld, rng))
    return group_entry("Z3_coboundary", g, w, fld)


def z4_fp5() -> ZooEntry:
    from .exactla import GF

    fld = GF(5)
    return group_entry("Z4_omega_F5", cyclic(4), cyclic_cocycle(4, 1, 2, fld), fld)


def z3_fp7() -> ZooEntry:
    from .exactla import GF

    fld = GF(7)
    return group_entry("Z3_omega_F7", cyclic(3), cyclic_cocycle(3, 1, 2, fld), fld)


def zoo(seed: int = 0, include_large: bool = False) -> list[ZooEntry]:
    """The standard catalogue of coquasi-bialgebras with preantipode."""
    rng = np.random.default_rng(seed)
    out = [
        trivial_entry(),
        z2_hopf(),
        z2_omega(),
        z4_omega(),
        klein_omega(),
        klein_product(),
        z3_twisted(QQ, rng),
        z4_fp5(),
        z3_fp7(),
    ]
    h4, s4 = sweedler()
    out.append(ZooEntry("H4", h4, s4))
    out.append(random_rebase(z2_omega(), rng, "Z2_omega_rebased"))
    out.append(random_rebase(z4_omega(), rng, "Z4_omega_rebased"))
    out.append(random_rebase(ZooEntry("H4", h4, s4), rng, "H4_rebased"))
    if include_large:
        out.append(s3_omega())
    return out


def random_population(count: int, seed: int = 1, max_order: int = 4) -> list[ZooEntry]:
    """Randomized twisted group algebras: random cocycle class, coboundary twist and basis."""
    rng = np.random.default_rng(seed)
    out = []
    makers = [
        lambda: (cyclic(2), cyclic_cocycle(2, int(rng.integers(0, 2)), -1)),
        lambda: (cyclic(3), trivial_cocycle(cyclic(3))),
        lambda: (cyclic(4), cyclic_cocycle(4, int(rng.integers(0, 2)), -1)),
        lambda: (
            direct_product(cyclic(2), cyclic(2)),
            product_cocycle(cyclic_cocycle(2, int(rng.integers(0, 2)), -1), cyclic_cocycle(2, int(rng.integers(0, 2)), -1))
            * (klein_mixed_cocycle() if rng.integers(0, 2) else trivial_cocycle(cyclic(4))),
        ),
    ]
    makers = [m for m, order in zip(makers, (2, 3, 4, 4)) if order <= max_order]
    for t in range(count):
        g, w = makers[t % len(makers)]()
        w = w * coboundary(g, random_cochain(g, QQ, rng))
        e = group_entry(f"random_{t}_{g.name}", g, w)
        out.append(random_rebase(e, rng, e.name))
    return out
