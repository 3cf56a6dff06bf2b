"""Quasi-bialgebras with preantipode, their module categories and finite duals.

Conventions on a basis ``e_0..e_{n-1}`` of ``A``:

* ``M[k, i, j]`` coefficient of ``e_k`` in ``e_i e_j``; ``U`` the unit
* ``D[i, j, k]`` coefficient of ``e_i (x) e_j`` in ``Delta(e_k)``; ``E`` the counit
* ``F[i, j, k]`` coefficient of ``e_i (x) e_j (x) e_k`` in ``Phi``; ``Fi`` for ``Phi^{-1}``

A right module ``M`` of dimension ``d`` has action tensor ``Act[i, j, k]``:
the coefficient of ``m_i`` in ``m_j . e_k``.  As a matrix ``M (x) A -> M`` it
is ``d x (d*n)`` with column ``j*n + k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .coalg import Algebra, Coalgebra, NotInvertibleError, check_algebra, einsum
from .comodcat import Comodule
from .cqb import CoquasiBialgebra, NonUniquePreantipodeError, Preantipode, check_preantipode, validate_coquasi
from .exactla import Field, LinearMap, Subspace, is_zero, kron, nullspace, quotient, rref, solve_affine
from .report import Report


def _mul3(M: np.ndarray, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Product in ``A (x) A (x) A``."""
    return einsum("pad,qbe,rcf,abc,def->pqr", M, M, M, x, y)


def _mul4(M: np.ndarray, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    return einsum("pae,qbf,rcg,sdh,abcd,efgh->pqrs", M, M, M, M, x, y)


@dataclass(frozen=True, eq=False)
class QuasiBialgebra:
    algebra: Algebra
    delta: LinearMap
    counit: LinearMap
    phi: np.ndarray  # shape (n, n, n)
    name: str = ""

    def __post_init__(self):
        n = self.algebra.dim
        if self.delta.shape != (n * n, n) or self.counit.shape != (1, n):
            raise ValueError("Delta or counit has the wrong shape")
        object.__setattr__(self, "phi", np.asarray(self.phi, dtype=object).reshape(n, n, n))

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def field(self) -> Field:
        return self.algebra.field

    @property
    def M(self):
        return self.algebra.M

    @property
    def U(self):
        return self.algebra.U

    @cached_property
    def D(self):
        n = self.dim
        return self.delta.entries.reshape(n, n, n)

    @cached_property
    def E(self):
        return self.counit.entries[0]

    @property
    def F(self):
        return self.phi

    @cached_property
    def one3(self) -> np.ndarray:
        return einsum("i,j,k->ijk", self.U, self.U, self.U)

    @cached_property
    def Fi(self) -> np.ndarray:
        """``Phi^{-1}``, solved from ``Phi x = 1`` and checked on the other side."""
        n, fld = self.dim, self.field
        # left multiplication by Phi as an n^3 x n^3 matrix
        L = einsum("pad,qbe,rcf,abc->pqrdef", self.M, self.M, self.M, self.F).reshape(n**3, n**3)
        sol = solve_affine(L, self.one3.reshape(-1), fld)
        if sol is None:
            raise NotInvertibleError("right", "Phi is not invertible")
        x = sol.particular.reshape(n, n, n)
        if not is_zero(_mul3(self.M, x, self.F) - self.one3):
            raise NotInvertibleError("left", "Phi is not invertible")
        return x

    def with_phi_inverse(self, fi) -> "QuasiBialgebra":
        self.__dict__["Fi"] = np.asarray(fi, dtype=object).reshape((self.dim,) * 3)
        return self

    def is_trivial_phi(self) -> bool:
        return is_zero(self.F - self.one3)


@dataclass(frozen=True)
class QuasiPreantipode:
    s_map: LinearMap

    @property
    def S(self) -> np.ndarray:
        return self.s_map.entries


def validate_quasi(a: QuasiBialgebra) -> Report:
    rep = Report("quasi-bialgebra")
    n, M, U, D, E, F = a.dim, a.M, a.U, a.D, a.E, a.F
    fld = a.field
    eye = fld.eye(n)
    rep.merge(check_algebra(a.algebra))
    rep.compare("Delta multiplicative", einsum("pqk,kij->ijpq", D, M), einsum("abi,cdj,pac,qbd->ijpq", D, D, M, M), 2)
    rep.compare("Delta unital", einsum("pqk,k->pq", D, U), np.multiply.outer(U, U))
    rep.compare("counit multiplicative", einsum("k,kij->ij", E, M), np.multiply.outer(E, E), 2)
    rep.require("counit unital", is_zero(np.array([E @ U - fld.one], dtype=object)))
    rep.compare("left counit", einsum("a,abk->kb", E, D), eye, 1)
    rep.compare("right counit", einsum("b,abk->ka", E, D), eye, 1)
    for axis, name in ((0, "Phi counital 1"), (1, "Phi counital 2"), (2, "Phi counital 3")):
        rep.compare(name, np.tensordot(F, E, axes=([axis], [0])), np.multiply.outer(U, U))
    if not rep.passed:
        return rep
    try:
        Fi = a.Fi
    except NotInvertibleError as exc:
        rep.fail("Phi invertible", (), str(exc))
        return rep
    rep.compare("Phi inverse right", _mul3(M, F, Fi), a.one3)
    rep.compare("Phi inverse left", _mul3(M, Fi, F), a.one3)
    # Phi (Delta x A)Delta(x) = (A x Delta)Delta(x) Phi
    dd_left = einsum("abi,icx->xabc", D, D)
    dd_right = einsum("ajx,bcj->xabc", D, D)
    lhs = einsum("pad,qbe,rcf,abc,xdef->xpqr", M, M, M, F, dd_left)
    rhs = einsum("pad,qbe,rcf,xabc,def->xpqr", M, M, M, dd_right, F)
    rep.compare("quasi-coassociativity", lhs, rhs, 1)
    # (1 x Phi)(A x Delta x A)(Phi)(Phi x 1) = (A x A x Delta)(Phi)(Delta x A x A)(Phi)
    one_phi = einsum("i,jkl->ijkl", U, F)
    phi_one = einsum("ijk,l->ijkl", F, U)
    mid = einsum("ixk,abx->iabk", F, D)
    last = einsum("ijx,abx->ijab", F, D)
    first = einsum("xjk,abx->abjk", F, D)
    lhs = _mul4(M, _mul4(M, one_phi, mid), phi_one)
    rhs = _mul4(M, last, first)
    rep.compare("3-cocycle", lhs, rhs)
    if rep.passed and a.is_trivial_phi():
        rep.flag("ordinary bialgebra")
    return rep


def quasi_preantipode_sides(a: QuasiBialgebra, S: np.ndarray):
    """Left and right sides of the three preantipode axioms for a given ``S``."""
    M, D, E, F, U = a.M, a.D, a.E, a.F, a.U
    ax1 = einsum("pqa,rbq,sr,tps->abt", D, M, S, M)
    ax2 = einsum("pqa,rpb,sr,tsq->abt", D, M, S, M)
    target = einsum("a,tb->abt", E, S)
    ax3 = einsum("ijk,sj,uis,tuk->t", F, S, M, M)
    return (ax1, target), (ax2, target), (ax3, U)


def check_quasi_preantipode(a: QuasiBialgebra, s: QuasiPreantipode | LinearMap) -> Report:
    S = s.S if isinstance(s, QuasiPreantipode) else s.entries
    rep = Report("quasi preantipode")
    (l1, r1), (l2, r2), (l3, r3) = quasi_preantipode_sides(a, S)
    rep.compare("preantipode axiom 1", l1, r1, 2)
    rep.compare("preantipode axiom 2", l2, r2, 2)
    rep.compare("preantipode axiom 3", l3, r3, 0)
    return rep


def quasi_preantipode_system(a: QuasiBialgebra):
    """``(A, b)`` in the unknowns ``S[s, r]`` (flattened ``s*n + r``), axioms stacked in order."""
    n, M, D, E, F, U = a.dim, a.M, a.D, a.E, a.F, a.U
    fld = a.field
    eye = fld.eye(n)
    c1 = einsum("pqa,rbq,tps->abtsr", D, M, M) - einsum("a,ts,br->abtsr", E, eye, eye)
    c2 = einsum("pqa,rpb,tsq->abtsr", D, M, M) - einsum("a,ts,br->abtsr", E, eye, eye)
    c3 = einsum("ijk,uis,tuk->tsj", F, M, M)
    A = np.concatenate([c1.reshape(n**3, n * n), c2.reshape(n**3, n * n), c3.reshape(n, n * n)])
    b = np.concatenate([fld.zeros(2 * n**3), U])
    return A, b


def solve_quasi_preantipode(a: QuasiBialgebra) -> QuasiPreantipode | None:
    n = a.dim
    A, b = quasi_preantipode_system(a)
    sol = solve_affine(A, b, a.field)
    if sol is None:
        return None
    if sol.nullspace.dim:
        raise NonUniquePreantipodeError(sol.nullspace.dim)
    return QuasiPreantipode(LinearMap(sol.particular.reshape(n, n), a.field))


# Appendix calculus --------------------------------------------------------------


@dataclass(frozen=True)
class PQElements:
    """``p[i, t, a]``: coefficient of ``e_i (x) e_t`` in ``sum p^1 (x) p^2(e_a)``;
    ``q[t, k, a]``: coefficient of ``e_t (x) e_k`` in ``sum q^1(e_a) (x) q^2``.
    The ``*_expanded`` arrays come from the longer closed forms."""

    p: np.ndarray
    q: np.ndarray
    p_expanded: np.ndarray
    q_expanded: np.ndarray


def compute_pq(a: QuasiBialgebra, s: QuasiPreantipode) -> PQElements:
    M, D, F, Fi, S = a.M, a.D, a.F, a.Fi, s.S
    # p^1 (x) p^2(x) = phi1 (x) phi2 S(x phi3)
    p = einsum("ijk,rak,sr,tjs->ita", Fi, M, S, M)
    # q^1(x) (x) q^2 = S(x phi1) phi2 (x) phi3
    q = einsum("ijk,rai,sr,tsj->tka", Fi, M, S, M)

    # phi^1_1 psi^1 (x) phi^1_2 psi^2 Phi^1 S(x phi^2 psi^3_1 Phi^2) phi^3 psi^3_2 Phi^3
    # with phi = (i,j,k), psi = (l,m,o), Phi = (u,v,w)
    inner = einsum("raj,grc,hgv->ajcvh", M, M, M)  # coordinates of x e_j e_c e_v
    sinner = einsum("ajcvh,sh->ajcvs", inner, S)
    left = einsum("gbm,ygu->bmuy", M, M)  # e_b e_m e_u
    right = einsum("gkd,zgw->kdwz", M, M)  # e_k e_d e_w
    first = einsum("xel->elx", M)  # e_e e_l
    pe = einsum(
        "ijk,lmo,uvw,ebi,cdo,elx,bmuy,ajcvs,kdwz,gys,tgz->xta",
        Fi, Fi, F, a.D, a.D, first, left, sinner, right, M, M,
    )
    # Phi^1 phi^1_1 psi^1 S(Phi^2 phi^1_2 psi^2 x) Phi^3 phi^2 psi^3_1 (x) phi^3 psi^3_2
    a1 = einsum("gue,ygl->uely", M, M)  # e_u e_e e_l
    a2 = einsum("gvb,hgm,zha->vbmaz", M, M, M)  # e_v e_b e_m x
    sa2 = einsum("vbmaz,sz->vbmas", a2, S)
    a3 = einsum("gwj,hgc->wjch", M, M)  # e_w e_j e_c
    a4 = einsum("gkd->kdg", M)  # e_k e_d
    qe = einsum(
        "ijk,lmo,uvw,ebi,cdo,uely,vbmas,wjch,kdf,gys,tgh->tfa",
        Fi, Fi, F, a.D, a.D, a1, sa2, a3, a4, M, M,
    )
    return PQElements(p, q, pe, qe)


def check_pq_identities(a: QuasiBialgebra, s: QuasiPreantipode, pq: PQElements | None = None) -> Report:
    """Both closed forms of ``p`` and ``q`` agree, and the two invariance identities hold."""
    pq = pq or compute_pq(a, s)
    M, D = a.M, a.D
    rep = Report("p/q identities")
    rep.compare("p closed forms", pq.p.transpose(2, 0, 1), pq.p_expanded.transpose(2, 0, 1), 1)
    rep.compare("q closed forms", pq.q.transpose(2, 0, 1), pq.q_expanded.transpose(2, 0, 1), 1)
    P, Q = pq.p, pq.q
    # sum p^1 a (x) p^2(b) = sum a_11 p^1 (x) a_12 p^2(b a_2)
    lhs = einsum("itb,xia->abxt", P, M)
    rhs = einsum("fga,hkf,cbg,iuc,xhi,tku->abxt", D, D, M, P, M, M)
    rep.compare("p invariance", lhs, rhs, 2)
    # sum q^1(a) (x) b q^2 = sum q^1(b_1 a) b_21 (x) q^2 b_22
    lhs = einsum("tka,ybk->abty", Q, M)
    rhs = einsum("fgb,hlg,cfa,ukc,tuh,ykl->abty", D, D, M, Q, M, M)
    rep.compare("q invariance", lhs, rhs, 2)
    return rep


def check_s_recovery(a: QuasiBialgebra, s: QuasiPreantipode, pq: PQElements | None = None) -> Report:
    """``S(x) = sum q^1(1) S(p^1 x q^2) p^2(1) = sum S(phi1) phi2 S(psi1 x phi3) psi2 S(psi3)``."""
    pq = pq or compute_pq(a, s)
    M, U, S, Fi = a.M, a.U, s.S, a.Fi
    rep = Report("S recovery")
    P1 = einsum("itc,c->it", pq.p, U)
    Q1 = einsum("tkc,c->tk", pq.q, U)
    # e_i x e_k
    ixk = einsum("gia,hgk->iakh", M, M)
    form1 = einsum("tk,iu,iakh,sh,gts,zgu->za", Q1, P1, ixk, S, M, M)
    rep.compare("recovery via p, q", form1.T, S.T, 1)
    # S(phi1) phi2 S(psi1 x phi3) psi2 S(psi3)
    lxk = einsum("gla,hgk->lakh", M, M)
    left = einsum("ijk,ri,grj->kg", Fi, S, M)  # S(phi1) phi2, still keyed by phi3 = k
    right = einsum("lmo,ro,gmr->lg", Fi, S, M)  # psi2 S(psi3), keyed by psi1 = l
    form2 = einsum("kg,lakh,sh,ygs,lr,zyr->za", left, lxk, S, M, right, M)
    rep.compare("recovery via Phi^-1", form2.T, S.T, 1)
    return rep


def check_antimultiplicativity(a: QuasiBialgebra, s: QuasiPreantipode) -> Report:
    """``S(ab) = sum S(phi1 b) phi2 S(psi1 phi3) psi2 S(a psi3)`` for all basis pairs."""
    M, S, Fi = a.M, s.S, a.Fi
    rep = Report("anti-multiplicativity")
    lhs = einsum("kab,tk->abt", M, S)
    sb = einsum("rib,sr->ibs", M, S)  # S(phi1 b)
    sm = einsum("rlk,sr->lks", M, S)  # S(psi1 phi3)
    sa = einsum("rao,sr->aos", M, S)  # S(a psi3)
    t1 = einsum("ijk,ibs,gsj->bkg", Fi, sb, M)  # S(phi1 b) phi2, keyed by phi3
    t2 = einsum("bkg,lks,hgs->blh", t1, sm, M)  # ... S(psi1 phi3), keyed by psi1
    t3 = einsum("blh,lmo,xhm->box", t2, Fi, M)  # ... psi2, keyed by psi3
    rhs = einsum("box,aos,txs->abt", t3, sa, M)
    rep.compare("anti-multiplicativity", lhs, rhs, 2)
    return rep


def appendix_report(a: QuasiBialgebra, s: QuasiPreantipode) -> Report:
    rep = Report("appendix identities")
    pq = compute_pq(a, s)
    rep.merge(check_pq_identities(a, s, pq))
    rep.merge(check_s_recovery(a, s, pq))
    rep.merge(check_antimultiplicativity(a, s))
    return rep


# modules ----------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class RightModule:
    a: QuasiBialgebra
    action: LinearMap  # d x (d*n)
    name: str = ""

    @property
    def dim(self) -> int:
        return self.action.cod_dim

    @cached_property
    def Act(self) -> np.ndarray:
        d, n = self.dim, self.a.dim
        return self.action.entries.reshape(d, d, n)

    @classmethod
    def from_tensor(cls, a: QuasiBialgebra, act: np.ndarray, name: str = "") -> "RightModule":
        d, _, n = act.shape
        return cls(a, LinearMap(act.reshape(d, d * n), a.field), name)


def trivial_module(a: QuasiBialgebra) -> RightModule:
    return RightModule.from_tensor(a, a.E.reshape(1, 1, a.dim), "k")


def regular_module(a: QuasiBialgebra) -> RightModule:
    """``A`` acting on itself by right multiplication."""
    return RightModule.from_tensor(a, a.M, "regular")


def check_module(m: RightModule) -> Report:
    rep = Report("right module")
    M, U, T = m.a.M, m.a.U, m.Act
    # (v . x) . y = v . (x y)
    rep.compare("associativity", einsum("kjx,iky->jxyi", T, T), einsum("ijk,kxy->jxyi", T, M), 3)
    rep.compare("unit", einsum("ijk,k->ji", T, U), m.a.field.eye(m.dim), 1)
    return rep


def tensor_module(m: RightModule, n: RightModule) -> RightModule:
    """``(v (x) w) . x = v . x_1 (x) w . x_2``."""
    a = m.a
    T = einsum("pqx,ijp,klq->ikjlx", a.D, m.Act, n.Act)
    d = m.dim * n.dim
    return RightModule.from_tensor(a, T.reshape(d, d, a.dim), f"({m.name}*{n.name})")


def module_associator(m: RightModule, n: RightModule, p: RightModule, inverse: bool = False) -> LinearMap:
    """``(u (x) v) (x) w -> (u (x) (v (x) w)) . Phi^{-1}``; ``inverse=True`` uses ``Phi``."""
    a = m.a
    X = a.F if inverse else a.Fi
    A = einsum("xyz,ijx,kly,rsz->ikrjls", X, m.Act, n.Act, p.Act)
    d = m.dim * n.dim * p.dim
    return LinearMap(A.reshape(d, d), a.field)


def is_module_map(f: LinearMap, m: RightModule, n: RightModule) -> bool:
    return is_zero(einsum("ik,kjx->ijx", f.entries, m.Act) - einsum("ikx,kj->ijx", n.Act, f.entries))


@dataclass(frozen=True, eq=False)
class ModuleDual:
    base: RightModule
    dual: RightModule
    ev: LinearMap  # 1 x (d * d_dual)
    db: LinearMap  # (d_dual * d) x 1


class ModuleZigzagError(ArithmeticError):
    def __init__(self, report: Report):
        super().__init__(report.render_text())
        self.report = report


def check_module_dual(md: ModuleDual) -> Report:
    rep = Report("module dual")
    m, ms = md.base, md.dual
    a, fld = m.a, m.a.field
    k = trivial_module(a)
    rep.require("ev linear over A", is_module_map(md.ev, tensor_module(m, ms), k))
    rep.require("db linear over A", is_module_map(md.db, k, tensor_module(ms, m)))
    i, is_ = LinearMap.identity(m.dim, fld), LinearMap.identity(ms.dim, fld)
    zig = kron(md.ev, i) @ module_associator(m, ms, m, inverse=True) @ kron(i, md.db)
    rep.compare("zigzag M", zig.entries.T, fld.eye(m.dim), 1)
    zag = kron(is_, md.ev) @ module_associator(ms, m, ms) @ kron(md.db, is_)
    rep.compare("zigzag M*", zag.entries.T, fld.eye(ms.dim), 1)
    return rep


def module_dual(m: RightModule, s: QuasiPreantipode) -> ModuleDual:
    """``M* = A (x) M^* / A^+ (A (x) M^*)`` with ``ev(v (x) [x (x) f]) = f(v . S(x))``.

    ``A`` acts on ``A (x) M^*`` from the left diagonally,
    ``z . (x (x) f) = z_1 x (x) z_2 > f`` with ``(z > f)(v) = f(v . z)``,
    and from the right on the first factor only.
    """
    a = m.a
    fld, n, d = a.field, a.dim, m.dim
    M, D, U, S, T = a.M, a.D, a.U, s.S, m.Act
    big = n * d
    # basis e_x (x) m^f at x*d + f
    aplus = nullspace(a.E.reshape(1, n), fld)
    lact = einsum("pqz,cpx,fjq->zcjxf", D, M, T).reshape(n, big, big)  # z . (e_x (x) m^f)
    rel = einsum("rz,zuv->rvu", aplus.rows, lact).reshape(-1, big) if aplus.dim else fld.zeros((0, big))
    rows, piv = rref(rel, fld) if len(rel) else (fld.zeros((0, big)), [])
    qt = quotient(big, Subspace(big, rows, piv, fld))
    proj, sec = qt.proj.entries, qt.section.entries
    ds = proj.shape[0]
    # right action [x (x) f] . y = [x y (x) f]
    ract = einsum("cxy,fg->cfxgy", M, fld.eye(d)).reshape(big, big, n)
    act = einsum("tu,uvy,vs->tsy", proj, ract, sec)
    ev_big = einsum("rx,fmr->mxf", S, T).reshape(d, big)
    ev = einsum("mu,us->ms", ev_big, sec).reshape(1, d * ds)
    one = einsum("x,fi->xfi", U, fld.eye(d)).reshape(big, d)
    db = (proj @ one).reshape(ds * d, 1)
    rep = Report("module dual")
    if rows.shape[0]:
        rep.require("ev descends", is_zero(ev_big @ rows.T))
        moved = einsum("uvy,rv->ury", ract, rows)
        rep.require("action descends", is_zero(einsum("tu,ury->try", proj, moved)))
    md = ModuleDual(m, RightModule.from_tensor(a, act, m.name + "*"), LinearMap(ev, fld), LinearMap(db, fld))
    rep.merge(check_module_dual(md))
    if not rep.passed:
        raise ModuleZigzagError(rep)
    return md


# finite dual and the module/comodule dictionary ----------------------------------------


def finite_dual(a: QuasiBialgebra, s: QuasiPreantipode | None = None, name: str = "") -> tuple[CoquasiBialgebra, Preantipode | None]:
    """``A^* = A^o`` with ``Delta = m^T``, ``eps = u^T``, ``m = Delta^T``, ``u = eps^T``, ``omega = Phi``, ``S = S^T``."""
    co = Coalgebra(a.algebra.mult.T, a.algebra.unit.T)
    n = a.dim
    h = CoquasiBialgebra(co, a.delta.T, a.counit.T, LinearMap(a.F.reshape(1, n**3), a.field), name or (a.name + "^o" if a.name else ""))
    if "Fi" in a.__dict__:
        h.with_omega_inverse(a.Fi)
    return h, (Preantipode(s.s_map.T) if s is not None else None)


def quasi_dual_of(h: CoquasiBialgebra, s: Preantipode | None = None, name: str = "") -> tuple[QuasiBialgebra, QuasiPreantipode | None]:
    """The dual quasi-bialgebra ``H^*`` of a finite-dimensional coquasi-bialgebra."""
    alg = Algebra(h.coalgebra.delta.T, h.coalgebra.counit.T)
    a = QuasiBialgebra(alg, h.mult.T, h.unit.T, h.W, name or (h.name + "^*" if h.name else ""))
    if "Winv" in h.__dict__:
        a.with_phi_inverse(h.Winv)
    return a, (QuasiPreantipode(s.s_map.T) if s is not None else None)


def module_to_comodule(m: RightModule, h: CoquasiBialgebra) -> Comodule:
    """``rho(v) = sum_i (e^i . mu_v) (x) e_i`` over the finite dual ``h``."""
    d, n = m.dim, m.a.dim
    if h.dim != n:
        raise ValueError("finite dual has the wrong dimension")
    R = np.ascontiguousarray(m.Act.transpose(2, 0, 1))  # R[k, i, j] = Act[i, j, k]
    return Comodule.from_tensor(h, R, m.name)


def comodule_to_module(v: Comodule, a: QuasiBialgebra) -> RightModule:
    """``v . x = sum v_{-1}(x) v_0``."""
    if v.h.dim != a.dim:
        raise ValueError("algebra has the wrong dimension")
    return RightModule.from_tensor(a, np.ascontiguousarray(v.R.transpose(1, 2, 0)), v.name)


# catalogue --------------------------------------------------------------------------------


@dataclass
class QuasiEntry:
    name: str
    a: QuasiBialgebra
    S: QuasiPreantipode
    source: object = None  # the coquasi zoo entry it dualizes, if any


def function_algebra(group, cocycle, fld) -> tuple[QuasiBialgebra, QuasiPreantipode]:
    """``k^G`` with ``Phi = sum omega(a,b,c) e_a (x) e_b (x) e_c`` and ``S(e_h) = omega(h^-1,h,h^-1)^-1 e_{h^-1}``."""
    G = group.order
    M = fld.zeros((G, G, G))
    D = fld.zeros((G, G, G))
    for g in range(G):
        M[g, g, g] = fld.one
        for x in range(G):
            D[x, _solve_right(group, x, g), g] = fld.one
    U = fld.array([fld.one] * G)
    E = fld.zeros(G)
    e = [x for x in range(G) if group.mul(x, x) == x][0]
    E[e] = fld.one
    alg = Algebra(LinearMap(M.reshape(G, G * G), fld), LinearMap(U.reshape(G, 1), fld))
    a = QuasiBialgebra(alg, LinearMap(D.reshape(G * G, G), fld), LinearMap(E.reshape(1, G), fld), fld.array(cocycle))
    S = fld.zeros((G, G))
    for h in range(G):
        hi = group.inv(h)
        S[hi, h] = fld.one / a.F[hi, h, hi]
    return a, QuasiPreantipode(LinearMap(S, fld))


def _solve_right(group, x, g):
    """The ``y`` with ``x y = g``."""
    return group.mul(group.inv(x), g)


def quasi_zoo(seed: int = 0) -> list[QuasiEntry]:
    """Duals of the coquasi catalogue plus the function algebras written directly."""
    from . import zoo as cz
    from .exactla import QQ

    out = []
    for e in cz.zoo(seed):
        a, s = quasi_dual_of(e.h, e.S, e.name + "^*")
        out.append(QuasiEntry(a.name, a, s, e))
    for mk, label in ((cz.z2_omega, "k^Z2_Phi"), (cz.z4_omega, "k^Z4_Phi"), (cz.klein_omega, "k^Z2xZ2_Phi")):
        e = mk()
        a, s = function_algebra(e.group, e.cocycle, QQ)
        a = QuasiBialgebra(a.algebra, a.delta, a.counit, a.F, label)
        out.append(QuasiEntry(label, a, s, e))
    return out
