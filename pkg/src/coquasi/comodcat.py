"""Finite-dimensional comodules over a coquasi-bialgebra.

A left coaction ``rho: V -> H (x) V`` is an ``(n*d) x d`` map with the
H-leg first; as a tensor ``R[a, i, j]`` is the coefficient of
``h_a (x) v_i`` in ``rho(v_j)``.  Right coactions put the H-leg last:
``Rr[i, a, j]`` is the coefficient of ``v_i (x) h_a``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .coalg import einsum
from .cqb import CoquasiBialgebra, Preantipode
from .exactla import LinearMap, Subspace, is_zero, nullspace
from .report import Report


class ZigzagError(ArithmeticError):
    """Dual data that fails colinearity or a zigzag identity."""

    def __init__(self, report: Report):
        super().__init__(report.render_text())
        self.report = report


@dataclass(frozen=True, eq=False)
class Comodule:
    h: CoquasiBialgebra
    rho: LinearMap
    name: str = ""

    def __post_init__(self):
        n, d = self.h.dim, self.rho.dom_dim
        if self.rho.cod_dim != n * d:
            raise ValueError(f"coaction must be {n*d}x{d}, got {self.rho.shape}")

    @property
    def dim(self) -> int:
        return self.rho.dom_dim

    @cached_property
    def R(self) -> np.ndarray:
        d = self.dim
        return self.rho.entries.reshape(self.h.dim, d, d)

    @classmethod
    def from_tensor(cls, h: CoquasiBialgebra, R: np.ndarray, name: str = "") -> "Comodule":
        n, d, _ = R.shape
        return cls(h, LinearMap(R.reshape(n * d, d), h.field), name)


@dataclass(frozen=True, eq=False)
class RightComodule:
    h: CoquasiBialgebra
    rho: LinearMap
    name: str = ""

    @property
    def dim(self) -> int:
        return self.rho.dom_dim

    @cached_property
    def R(self) -> np.ndarray:
        d = self.dim
        return self.rho.entries.reshape(d, self.h.dim, d)


def trivial_comodule(h: CoquasiBialgebra) -> Comodule:
    return Comodule.from_tensor(h, h.U.reshape(h.dim, 1, 1), "k")


def regular_comodule(h: CoquasiBialgebra) -> Comodule:
    return Comodule(h, h.coalgebra.delta, "regular")


def regular_right_comodule(h: CoquasiBialgebra) -> RightComodule:
    return RightComodule(h, h.coalgebra.delta, "regular")


def line_comodule(h: CoquasiBialgebra, grouplike, name: str = "") -> Comodule:
    """One-dimensional comodule ``v -> g (x) v`` for a group-like ``g``."""
    g = h.field.array(np.asarray(grouplike, dtype=object).reshape(h.dim))
    return Comodule.from_tensor(h, g.reshape(h.dim, 1, 1), name)


def direct_sum(v: Comodule, w: Comodule) -> Comodule:
    h = v.h
    n, d, e = h.dim, v.dim, w.dim
    R = h.field.zeros((n, d + e, d + e))
    R[:, :d, :d] = v.R
    R[:, d:, d:] = w.R
    return Comodule.from_tensor(h, R, f"{v.name}+{w.name}")


def transport(v: Comodule, Q: LinearMap) -> Comodule:
    """The isomorphic comodule on the basis given by the columns of ``Q``."""
    Qi = Q.inverse()
    R = einsum("ki,aij,jl->akl", Qi.entries, v.R, Q.entries)
    return Comodule.from_tensor(v.h, R, v.name + "'")


def check_comodule(v: Comodule) -> Report:
    rep = Report("comodule")
    h, R = v.h, v.R
    rep.compare("coassociativity", einsum("abc,cij->jabi", h.D, R), einsum("akj,bik->jabi", R, R), 1)
    rep.compare("counit", einsum("a,aij->ji", h.E, R), h.field.eye(v.dim), 1)
    return rep


def check_right_comodule(v: RightComodule) -> Report:
    rep = Report("right comodule")
    h, R = v.h, v.R
    rep.compare("coassociativity", einsum("iaj,bca->jibc", R, h.D), einsum("kcj,ibk->jibc", R, R), 1)
    rep.compare("counit", einsum("a,iaj->ji", h.E, R), h.field.eye(v.dim), 1)
    return rep


def _same_h(*vs):
    h = vs[0].h
    for v in vs[1:]:
        if v.h is not h:
            raise ValueError("comodules over different coquasi-bialgebras")
    return h


def tensor_comodule(v: Comodule, w: Comodule) -> Comodule:
    """Diagonal coaction ``v (x) w -> v_{-1} w_{-1} (x) v_0 (x) w_0``."""
    h = _same_h(v, w)
    R = einsum("cab,aij,bkl->cikjl", h.M, v.R, w.R)
    d = v.dim * w.dim
    return Comodule.from_tensor(h, R.reshape(h.dim, d, d), f"({v.name}*{w.name})")


def associator(u: Comodule, v: Comodule, w: Comodule, inverse: bool = False) -> LinearMap:
    """``u (x) v (x) w -> omega^{-1}(u_{-1}, v_{-1}, w_{-1}) u_0 (x) v_0 (x) w_0``.

    With ``inverse=True`` the same formula with ``omega``.
    """
    h = _same_h(u, v, w)
    W = h.W if inverse else h.Winv
    A = einsum("abc,aij,bkl,cpq->ikpjlq", W, u.R, v.R, w.R)
    d = u.dim * v.dim * w.dim
    return LinearMap(A.reshape(d, d), h.field)


def is_colinear(f: LinearMap, v: Comodule, w: Comodule) -> bool:
    """``(H (x) f) rho_V = rho_W f``."""
    return is_zero(einsum("ik,akj->aij", f.entries, v.R) - einsum("aik,kj->aij", w.R, f.entries))


def colinearity_report(f: LinearMap, v: Comodule, w: Comodule, axiom: str = "colinear") -> Report:
    rep = Report(axiom)
    rep.compare(axiom, einsum("ik,akj->jai", f.entries, v.R), einsum("aik,kj->jai", w.R, f.entries), 1)
    return rep


def _ident(v: Comodule) -> LinearMap:
    return LinearMap.identity(v.dim, v.h.field)


def check_pentagon(u: Comodule, v: Comodule, w: Comodule, x: Comodule) -> Report:
    rep = Report("pentagon")
    from .exactla import kron

    lhs = kron(_ident(u), associator(v, w, x)) @ associator(u, tensor_comodule(v, w), x) @ kron(associator(u, v, w), _ident(x))
    rhs = associator(u, v, tensor_comodule(w, x)) @ associator(tensor_comodule(u, v), w, x)
    rep.compare("pentagon", lhs.entries.T, rhs.entries.T, 1)
    return rep


def check_triangle(v: Comodule, w: Comodule) -> Report:
    """With strict units the triangle axiom says ``a_{V,k,W}`` is the identity."""
    rep = Report("triangle")
    a = associator(v, trivial_comodule(v.h), w)
    rep.compare("triangle", a.entries.T, v.h.field.eye(v.dim * w.dim), 1)
    return rep


def coinvariants(m: RightComodule) -> Subspace:
    """``{v : rho(v) = v (x) 1}`` as a nullspace."""
    h, d = m.h, m.dim
    triv = einsum("ij,a->iaj", h.field.eye(d), h.U).reshape(d * h.dim, d)
    return nullspace(m.rho.entries - triv, h.field)


@dataclass(frozen=True, eq=False)
class DualComoduleData:
    """A right dual ``(X*, ev, db)`` of ``base`` inside the comodule category."""

    base: Comodule
    dual: Comodule
    ev: LinearMap  # 1 x (d * d_dual), on X (x) X*
    db: LinearMap  # (d_dual * d) x 1, into X* (x) X
    embedding: LinearMap | None = None  # X* inside V^* (x) H, when built from S

    def scaled(self, lam) -> "DualComoduleData":
        """Same dual object with ``ev`` scaled by ``1/lam`` and ``db`` by ``lam``."""
        fld = self.base.h.field
        lam = fld(lam)
        return DualComoduleData(self.base, self.dual, self.ev.scale(fld.one / lam), self.db.scale(lam), self.embedding)


def check_dual(dd: DualComoduleData) -> Report:
    """Colinearity of ``ev``, ``db`` and both zigzag identities."""
    from .exactla import kron

    rep = Report("right dual")
    x, xs = dd.base, dd.dual
    h, fld = x.h, x.h.field
    d, ds = x.dim, xs.dim
    if dd.ev.shape != (1, d * ds) or dd.db.shape != (ds * d, 1):
        rep.fail("shapes", (), f"ev {dd.ev.shape}, db {dd.db.shape}")
        return rep
    k = trivial_comodule(h)
    rep.merge(colinearity_report(dd.ev, tensor_comodule(x, xs), k, "ev colinear"))
    rep.merge(colinearity_report(dd.db, k, tensor_comodule(xs, x), "db colinear"))
    ix, ixs = _ident(x), _ident(xs)
    zig = kron(dd.ev, ix) @ associator(x, xs, x, inverse=True) @ kron(ix, dd.db)
    rep.compare("zigzag X", zig.entries.T, fld.eye(d), 1)
    zag = kron(ixs, dd.ev) @ associator(xs, x, xs) @ kron(dd.db, ixs)
    rep.compare("zigzag X*", zag.entries.T, fld.eye(ds), 1)
    return rep


def dual_comodule(v: Comodule, s: Preantipode) -> DualComoduleData:
    """Right dual built from the preantipode as coinvariants of ``V^* (x) H``.

    Raises ``ZigzagError`` unless the result is colinear and satisfies
    both zigzag identities.
    """
    h, fld = v.h, v.h.field
    n, d = h.dim, v.dim
    R, D, M, E = v.R, h.D, h.M, h.E
    S = s.S
    # right coaction on V^* (x) H: f (x) b -> f_0 (x) b_1 (x) f_1 b_2, H-leg last
    rr = einsum("ail,pqc,taq->lptic", R, D, M).reshape(d * n * n, d * n)
    K = coinvariants(RightComodule(h, LinearMap(rr, fld)))
    ds = K.dim
    basis = K.rows  # ds x (d*n)
    # left coaction on V^* (x) H: f (x) b -> b_1 (x) (f (x) b_2)
    left = einsum("pqc,il->piqlc", D, fld.eye(d)).reshape(n, d * n, d * n)
    Rs = fld.zeros((n, ds, ds))
    for s_idx in range(ds):
        img = einsum("pvw,w->pv", left, basis[s_idx])
        for p in range(n):
            coords = K.coordinates(img[p])
            if coords is None:
                rep = Report("right dual")
                rep.fail("dual coaction closes", (s_idx, p))
                raise ZigzagError(rep)
            Rs[p, :, s_idx] = coords
    dual = Comodule.from_tensor(h, Rs, f"{v.name}*")
    # ev(v_j (x) sum f (x) b) = sum f(v_j) eps(b)
    ev = einsum("sic,c->is", basis.reshape(ds, d, n), E).reshape(1, d * ds)
    # db(1) = sum_i (v^i_0 (x) S(v^i_1)) (x) v_i
    X = einsum("ail,ca->lci", R, S).reshape(d * n, d)
    db = fld.zeros((ds * d, 1))
    for i in range(d):
        coords = K.coordinates(X[:, i])
        if coords is None:
            rep = Report("right dual")
            rep.fail("db lands in coinvariants", (i,))
            raise ZigzagError(rep)
        for s_idx in range(ds):
            db[s_idx * d + i, 0] = coords[s_idx]
    dd = DualComoduleData(v, dual, LinearMap(ev, fld), LinearMap(db, fld), K.matrix())
    rep = check_dual(dd)
    if not rep.passed:
        raise ZigzagError(rep)
    return dd


def kappa(d1: DualComoduleData, d2: DualComoduleData) -> LinearMap:
    """Comparison ``X*_1 -> X*_2`` between two right duals of one comodule.

    Raises ``ZigzagError`` if the compatibility with ``ev`` and ``db`` fails.
    """
    from .exactla import kron

    x = d1.base
    if d2.base is not x and d2.base.rho != x.rho:
        raise ValueError("duals of different comodules")
    x1, x2 = d1.dual, d2.dual
    i1, i2 = _ident(x1), _ident(x2)
    k = kron(i2, d1.ev) @ associator(x2, x, x1) @ kron(d2.db, i1)
    rep = Report("kappa")
    ix = _ident(x)
    rep.compare("(kappa x id) db1 = db2", (kron(k, ix) @ d1.db).entries, d2.db.entries)
    rep.compare("ev2 (id x kappa) = ev1", (d2.ev @ kron(ix, k)).entries, d1.ev.entries)
    rep.require("kappa colinear", is_colinear(k, x1, x2))
    if not rep.passed:
        raise ZigzagError(rep)
    return k


def sample_comodules(h: CoquasiBialgebra, grouplikes=(), max_dim: int = 4, rng=None, extra=()) -> list[Comodule]:
    """A spread of comodules of dimension at most ``max_dim``.

    Trivial, the lines from ``grouplikes``, sums and tensor products of
    lines, the regular comodule when small enough, any ``extra`` ones, and
    random changes of basis of the above.
    """
    out = [trivial_comodule(h)]
    lines = [line_comodule(h, g, f"k_{lab}") for lab, g in grouplikes]
    out.extend(lines)
    if h.dim <= max_dim:
        out.append(regular_comodule(h))
    for i, a in enumerate(lines):
        for b in lines[i:]:
            out.append(direct_sum(a, b))
            out.append(tensor_comodule(a, b))
    if len(lines) >= 3:
        out.append(direct_sum(direct_sum(lines[0], lines[1]), lines[-1]))
    out.extend(extra)
    if rng is not None:
        from .exactla import random_invertible

        for v in list(out):
            if v.dim > 1:
                out.append(transport(v, random_invertible(v.dim, h.field, rng)))
    return [v for v in out if v.dim <= max_dim]
