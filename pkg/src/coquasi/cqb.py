"""Coquasi-bialgebras, preantipodes and coquasi-Hopf data.

The reassociator is stored as a ``1 x n**3`` map; as a tensor,
``W[i, j, k] = omega(e_i, e_j, e_k)``.  ``S[i, j]`` is the coefficient of
``e_i`` in ``S(e_j)``; the preantipode solver vectorizes the unknowns
row-major, so unknown ``i*n + j`` is ``S[i, j]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .coalg import (
    Algebra,
    Coalgebra,
    NotInvertibleError,
    check_algebra,
    check_coalgebra,
    convolve_bimodule,
    convolve_forms,
    counit_form,
    einsum,
    form_convolution_inverse,
)
from .exactla import Field, LinearMap, Subspace, is_zero, nullspace, same_field, solve_affine
from .report import Report


class NonUniquePreantipodeError(ArithmeticError):
    """The preantipode equations have a positive-dimensional solution space."""

    def __init__(self, nullity: int):
        super().__init__(f"preantipode system has a {nullity}-dimensional nullspace")
        self.nullity = nullity


@dataclass(frozen=True, eq=False)
class CoquasiBialgebra:
    coalgebra: Coalgebra
    mult: LinearMap
    unit: LinearMap
    omega: LinearMap
    name: str = ""

    def __post_init__(self):
        n = self.coalgebra.dim
        if self.mult.shape != (n, n * n) or self.unit.shape != (n, 1):
            raise ValueError("multiplication or unit has the wrong shape")
        if self.omega.shape != (1, n**3):
            raise ValueError(f"omega must be 1x{n**3}, got {self.omega.shape}")
        same_field(self.coalgebra.field, self.mult.field, self.unit.field, self.omega.field)

    @property
    def dim(self) -> int:
        return self.coalgebra.dim

    @property
    def field(self) -> Field:
        return self.coalgebra.field

    @property
    def algebra(self) -> Algebra:
        return Algebra(self.mult, self.unit)

    @property
    def D(self):
        return self.coalgebra.D

    @property
    def E(self):
        return self.coalgebra.E

    @property
    def D3(self):
        return self.coalgebra.D3

    @cached_property
    def M(self):
        n = self.dim
        return self.mult.entries.reshape(n, n, n)

    @cached_property
    def U(self):
        return self.unit.entries[:, 0]

    @cached_property
    def W(self):
        n = self.dim
        return self.omega.entries.reshape(n, n, n)

    @cached_property
    def Winv(self):
        """Convolution inverse of omega; raises ``NotInvertibleError``."""
        return form_convolution_inverse(self.W, self.coalgebra)

    @property
    def omega_inv(self) -> LinearMap:
        return LinearMap(self.Winv.reshape(1, -1), self.field)

    def with_omega_inverse(self, winv) -> "CoquasiBialgebra":
        """Attach a known inverse of omega (still verified by ``validate_coquasi``)."""
        self.__dict__["Winv"] = np.asarray(winv, dtype=object).reshape((self.dim,) * 3)
        return self

    def is_trivial_omega(self) -> bool:
        return is_zero(self.W - counit_form(self.E, 3))


@dataclass(frozen=True, eq=False)
class Preantipode:
    s_map: LinearMap

    @property
    def S(self):
        return self.s_map.entries


@dataclass(frozen=True, eq=False)
class CoquasiHopfData:
    s: LinearMap
    alpha: LinearMap
    beta: LinearMap


def validate_coquasi(h: CoquasiBialgebra) -> Report:
    """Check every coquasi-bialgebra axiom, normalized unit constraints included."""
    rep = Report("coquasi-bialgebra")
    rep.merge(check_coalgebra(h.coalgebra))
    n, D, E, M, U, W = h.dim, h.D, h.E, h.M, h.U, h.W
    fld = h.field
    one = fld.one
    eye = fld.eye(n)

    # m and u are coalgebra maps
    lhs = einsum("kxy,pqk->xypq", M, D)
    rhs = einsum("acx,bdy,pab,qcd->xypq", D, D, M, M)
    rep.compare("m comultiplicative", lhs, rhs, 2)
    rep.compare("m counital", einsum("kxy,k->xy", M, E), np.multiply.outer(E, E), 2)
    rep.compare("u comultiplicative", einsum("k,pqk->pq", U, D), np.multiply.outer(U, U))
    rep.compare("u counital", np.array([U @ E if n else fld.zero], dtype=object), np.array([one], dtype=object))

    # normalized quasi-unitality
    rep.compare("left unit", einsum("i,tij->jt", U, M), eye, 1)
    rep.compare("right unit", einsum("j,tij->it", U, M), eye, 1)
    rep.compare("omega unital", einsum("xky,k->xy", W, U), np.multiply.outer(E, E), 2)

    # convolution invertibility of omega
    try:
        winv = h.Winv
    except NotInvertibleError as err:
        rep.fail("omega invertible", (), str(err))
        winv = None
    if winv is not None:
        unit3 = counit_form(E, 3)
        rep.compare("omega inverse right", convolve_forms(W, winv, D), unit3)
        rep.compare("omega inverse left", convolve_forms(winv, W, D), unit3)

    # 3-cocycle condition
    a = einsum("xyk,kzw->xyzw", W, M)  # omega(x, y, zw)
    b = einsum("kzw,kxy->xyzw", W, M)  # omega(xy, z, w)
    lhs = convolve_forms(a, b, D)
    p = np.multiply.outer(E, W)  # eps(x) omega(y, z, w)
    q = einsum("xkw,kyz->xyzw", W, M)  # omega(x, yz, w)
    r = np.multiply.outer(W, E)  # omega(x, y, z) eps(w)
    rhs = convolve_forms(convolve_forms(p, q, D), r, D)
    rep.compare("3-cocycle", lhs, rhs)

    # quasi-associativity: x1(y1 z1) omega(x2, y2, z2) = omega(x1, y1, z1)(x2 y2) z2
    right_nested = einsum("tas,sbc->tabc", M, M)
    left_nested = einsum("sab,tsc->tabc", M, M)
    lhs = einsum("adx,bey,cfz,tabc,def->xyzt", D, D, D, right_nested, W)
    rhs = einsum("adx,bey,cfz,abc,tdef->xyzt", D, D, D, W, left_nested)
    rep.compare("quasi-associativity", lhs, rhs, 3)

    if rep.passed and h.is_trivial_omega():
        rep.flag("ordinary bialgebra")
    return rep


def preantipode_sides(h: CoquasiBialgebra, S: np.ndarray):
    """Left and right sides of the three preantipode axioms, inputs first."""
    D, M, U, W, E = h.D, h.M, h.U, h.W, h.E
    a1 = einsum("abx,ia,pqi,tpb->xtq", D, S, D, M)
    r1 = np.multiply.outer(U, S).transpose(2, 0, 1)  # [x, t, q] = U[t] S[q, x]
    a2 = einsum("abx,ib,pqi,taq->xpt", D, S, D, M)
    r2 = np.multiply.outer(S, U).transpose(1, 0, 2)  # [x, p, t] = S[p, x] U[t]
    a3 = einsum("abcx,ib,aic->x", h.D3, S, W)
    return [("preantipode axiom 1", a1, r1), ("preantipode axiom 2", a2, r2), ("preantipode axiom 3", a3, E)]


def check_preantipode(h: CoquasiBialgebra, s: Preantipode | LinearMap) -> Report:
    S = (s.s_map if isinstance(s, Preantipode) else s).entries
    rep = Report("preantipode")
    for name, lhs, rhs in preantipode_sides(h, S):
        rep.compare(name, lhs, rhs, 1)
    return rep


def preantipode_system(h: CoquasiBialgebra):
    """Linear system ``A vec(S) = b`` stacking axiom 1, axiom 2, axiom 3."""
    n, D, M, U, W, E = h.dim, h.D, h.M, h.U, h.W, h.E
    fld = h.field
    eye = fld.eye(n)
    a1 = einsum("abx,pqi,tpb->xtqia", D, D, M) - einsum("t,qi,ax->xtqia", U, eye, eye)
    a2 = einsum("abx,pqi,taq->xptib", D, D, M) - einsum("pi,bx,t->xptib", eye, eye, U)
    a3 = einsum("abcx,aic->xib", h.D3, W)
    A = np.concatenate([a1.reshape(n**3, n * n), a2.reshape(n**3, n * n), a3.reshape(n, n * n)])
    b = np.concatenate([fld.zeros(2 * n**3), E])
    return A, b


def solve_preantipode(h: CoquasiBialgebra) -> Preantipode | None:
    """Unique preantipode, ``None`` if none exists.

    Raises ``NonUniquePreantipodeError`` if the solution space has positive
    dimension, which would contradict uniqueness.
    """
    A, b = preantipode_system(h)
    sol = solve_affine(A, b, h.field)
    if sol is None:
        return None
    if sol.nullspace.dim:
        raise NonUniquePreantipodeError(sol.nullspace.dim)
    n = h.dim
    return Preantipode(LinearMap(sol.particular.reshape(n, n), h.field))


def _scalar_times_unit(f: LinearMap, h: CoquasiBialgebra) -> LinearMap:
    """``x -> f(x) 1_H`` for a functional ``f``."""
    return LinearMap(np.multiply.outer(h.U, f.entries[0]), h.field)


def preantipode_from_antipode(h: CoquasiBialgebra, q: CoquasiHopfData) -> Preantipode:
    """``S = beta * s * alpha``."""
    s = convolve_bimodule(_scalar_times_unit(q.beta, h), q.s, _scalar_times_unit(q.alpha, h), h.coalgebra, h.algebra)
    return Preantipode(s)


def validate_coquasi_hopf(h: CoquasiBialgebra, q: CoquasiHopfData) -> Report:
    rep = Report("coquasi-Hopf data")
    n, D, E, M, U, W = h.dim, h.D, h.E, h.M, h.U, h.W
    s, al, be = q.s.entries, q.alpha.entries[0], q.beta.entries[0]
    D3 = h.D3
    rep.compare("s anti-comultiplicative", einsum("kx,pqk->xpq", s, D), einsum("abx,pb,qa->xpq", D, s, s), 1)
    rep.compare("s counital", einsum("k,kx->x", E, s), E, 1)
    rep.compare(
        "beta axiom",
        einsum("abcx,b,kc,tak->xt", D3, be, s, M),
        np.multiply.outer(be, U),
        1,
    )
    rep.compare(
        "alpha axiom",
        einsum("abcx,ka,b,tkc->xt", D3, s, al, M),
        np.multiply.outer(al, U),
        1,
    )
    mid = convolve_bimodule(_scalar_times_unit(q.beta, h), q.s, _scalar_times_unit(q.alpha, h), h.coalgebra, h.algebra)
    rep.compare("omega five-fold", einsum("abcx,jb,ajc->x", D3, mid.entries, W), E, 1)
    ident = LinearMap.identity(n, h.field)
    mid2 = convolve_bimodule(_scalar_times_unit(q.alpha, h), ident, _scalar_times_unit(q.beta, h), h.coalgebra, h.algebra)
    try:
        winv = h.Winv
    except NotInvertibleError:
        rep.fail("omega invertible", ())
        return rep
    rep.compare(
        "omega-inverse five-fold",
        einsum("abcx,ia,jb,kc,ijk->x", D3, s, mid2.entries, s, winv),
        E,
        1,
    )
    return rep


def check_morphism(
    f: LinearMap,
    h: CoquasiBialgebra,
    l: CoquasiBialgebra,
    s_h: Preantipode | None = None,
    s_l: Preantipode | None = None,
) -> Report:
    """Morphism of coquasi-bialgebras ``f: H -> L``; optionally ``f S_H = S_L f``."""
    rep = Report("coquasi-bialgebra morphism")
    F = f.entries
    if f.shape != (l.dim, h.dim):
        rep.fail("shape", (), f"expected {(l.dim, h.dim)}, got {f.shape}")
        return rep
    rep.compare("comultiplicative", einsum("kx,pqk->xpq", F, l.D), einsum("abx,pa,qb->xpq", h.D, F, F), 1)
    rep.compare("counital", einsum("k,kx->x", l.E, F), h.E, 1)
    rep.compare("multiplicative", einsum("tab,ax,by->xyt", l.M, F, F), einsum("tk,kxy->xyt", F, h.M), 2)
    rep.compare("unital", F @ h.U if h.dim else l.field.zeros(l.dim), l.U)
    rep.compare("omega compatible", einsum("abc,ax,by,cz->xyz", l.W, F, F, F), h.W, 3)
    if s_h is not None and s_l is not None:
        rep.compare("preantipode intertwined", (f @ s_h.s_map).entries.T, (s_l.s_map @ f).entries.T, 1)
    return rep


@dataclass(frozen=True)
class HatEpsilon:
    """The counit component on the bicomodule ``H (x) H`` and its inverse."""

    coinvariants: Subspace
    eps_hat: LinearMap
    eps_hat_inv: LinearMap
    rho_right: LinearMap
    rho_left: LinearMap
    action: LinearMap


def hat_epsilon(h: CoquasiBialgebra, s: Preantipode) -> HatEpsilon | None:
    """Build the counit ``K (x) H -> H (x) H`` (``K`` the coinvariants) and its inverse.

    Returns ``None`` if the candidate inverse does not land in ``K (x) H``.
    """
    n, D, M, U, W = h.dim, h.D, h.M, h.U, h.W
    fld = h.field
    S = s.S
    # right coaction x (x) y -> x1 (x) y1 (x) x2 y2, H-leg last
    rr = einsum("pai,qbj,cab->pqcij", D, D, M).reshape(n**3, n * n)
    # left coaction x (x) y -> y1 (x) x (x) y2, H-leg first
    rl = einsum("cbj,pi,qb->cpqij", D, fld.eye(n), fld.eye(n)).reshape(n**3, n * n)
    act = einsum("pai,qbj,sck,rqs,abc->prijk", D, D, D, M, W).reshape(n * n, n**3)
    triv = einsum("pi,qj,c->pqcij", fld.eye(n), fld.eye(n), U).reshape(n**3, n * n)
    K = nullspace(rr - triv, fld)
    k = K.dim
    basis = K.rows.reshape(k, n * n)
    # eps_hat(t (x) e_j) = (basis vector t) . e_j
    act3 = act.reshape(n * n, n * n, n)
    eh = einsum("tv,wvj->wtj", basis, act3).reshape(n * n, k * n)
    # inverse on x (x) y: sum omega^{-1}(S(x2)_1, x3, y1) (x1 (x) S(x2)_2) (x) x4 y2
    D4 = einsum("abcx,dec->abdex", h.D3, D)
    winv = h.Winv
    z = einsum("abcdx,ib,eqi,ecf,gfy,rdg->aqrxy", D4, S, D, winv, D, M)
    z = z.reshape(n * n, n, n * n)  # (p q), r, (x y)
    inv = fld.zeros((k * n, n * n))
    for r in range(n):
        for col in range(n * n):
            coords = K.coordinates(z[:, r, col])
            if coords is None:
                return None
            for t in range(k):
                inv[t * n + r, col] = coords[t]
    return HatEpsilon(
        K,
        LinearMap(eh, fld),
        LinearMap(inv, fld),
        LinearMap(rr, fld),
        LinearMap(rl, fld),
        LinearMap(act, fld),
    )


def hat_epsilon_roundtrip(h: CoquasiBialgebra, s: Preantipode) -> Report:
    rep = Report("hat-epsilon round trip")
    he = hat_epsilon(h, s)
    if he is None:
        rep.fail("inverse lands in coinvariants", ())
        return rep
    n, k = h.dim, he.coinvariants.dim
    fld = h.field
    rep.require("coinvariant dimension", k * n == n * n, (k,), f"dim K = {k}, dim H = {n}")
    if he.eps_hat.dom_dim != he.eps_hat_inv.cod_dim:
        return rep
    rep.compare("eps_hat o eps_hat_inv", (he.eps_hat @ he.eps_hat_inv).entries.T, fld.eye(n * n), 1)
    rep.compare("eps_hat_inv o eps_hat", (he.eps_hat_inv @ he.eps_hat).entries.T, fld.eye(k * n), 1)
    return rep


def epsilon_s_identities(h: CoquasiBialgebra, s: Preantipode) -> Report:
    rep = Report("epsilon-S identities")
    D, M, U, E = h.D, h.M, h.U, h.E
    S = s.S
    eS = einsum("k,kx->x", E, S)
    target = np.multiply.outer(eS, U)
    rep.compare("h1 S(h2)", einsum("abx,ib,tai->xt", D, S, M), target, 1)
    rep.compare("S(h1) h2", einsum("abx,ia,tib->xt", D, S, M), target, 1)
    try:
        winv = h.Winv
    except NotInvertibleError:
        rep.fail("omega invertible", ())
        return rep
    rep.compare("omega-inverse S h S", einsum("abcx,ia,kc,ibk->x", h.D3, S, S, winv), eS, 1)
    if rep.passed and is_zero(eS - E):
        rep.flag("ordinary antipode")
    return rep


def hopf_antipode_identities(h: CoquasiBialgebra, s: Preantipode) -> Report:
    """``m(S (x) id)Delta = u eps = m(id (x) S)Delta`` and ``eps S = eps``."""
    rep = Report("Hopf antipode")
    D, M, U, E = h.D, h.M, h.U, h.E
    S = s.S
    target = np.multiply.outer(E, U)
    rep.compare("eps S = eps", einsum("k,kx->x", E, S), E, 1)
    rep.compare("m(S x id)Delta", einsum("abx,ia,tib->xt", D, S, M), target, 1)
    rep.compare("m(id x S)Delta", einsum("abx,ib,tai->xt", D, S, M), target, 1)
    return rep


def base_change(h: CoquasiBialgebra, P: LinearMap) -> tuple[CoquasiBialgebra, LinearMap]:
    """Transport the structure along ``P`` (new basis vectors = columns of ``P``).

    Returns the new coquasi-bialgebra and ``P^{-1}``; a map ``T`` on the old
    basis becomes ``P^{-1} T P``.
    """
    from .exactla import kron

    Pi = P.inverse()
    co = Coalgebra(kron(Pi, Pi) @ h.coalgebra.delta @ P, h.coalgebra.counit @ P)
    mult = Pi @ h.mult @ kron(P, P)
    unit = Pi @ h.unit
    omega = h.omega @ kron(kron(P, P), P)
    out = CoquasiBialgebra(co, mult, unit, omega, h.name + "'" if h.name else "")
    if "Winv" in h.__dict__:
        Pe = P.entries
        out.with_omega_inverse(einsum("abc,ax,by,cz->xyz", h.Winv, Pe, Pe, Pe))
    return out, Pi


def conjugate(T: LinearMap, P: LinearMap, Pi: LinearMap) -> LinearMap:
    return Pi @ T @ P
