"""Reconstruction of a coquasi-bialgebra from a finite rigid monoidal diagram.

A diagram lists objects with the dimension of their underlying space,
generating morphisms, and the tensor / unit / associator / dual data at the
level of underlying spaces.  The coend

    H = (sum_X U(X) (x) U(X)^*) / dinaturality relations

is computed as an exact quotient.  Block ``X`` of the big space has basis
``e_l (x) e^k`` at offset ``off_X + l*d_X + k``, and ``P_X[a, l, k]`` is the
coordinate of ``pi_X(e_l (x) e^k)`` on the quotient basis ``h_a``.

Units are strict: ``X (x) I`` and ``I (x) X`` are listed as ``X`` itself, and
the unit constraints are the identifications through ``phi``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

import numpy as np

from .coalg import Coalgebra, einsum
from .comodcat import Comodule, DualComoduleData, associator, check_dual, is_colinear, line_comodule
from .cqb import (
    CoquasiBialgebra,
    CoquasiHopfData,
    Preantipode,
    base_change,
    check_morphism,
    check_preantipode,
    preantipode_from_antipode,
    validate_coquasi,
    validate_coquasi_hopf,
)
from .exactla import QQ, Field, LinearMap, Quotient, is_zero, kron, nonzero_mask, quotient, rref, Subspace
from .report import Report


class DiagramError(ValueError):
    """Malformed diagram, or a structure map that does not descend to the quotient."""

    def __init__(self, message: str, label: str = ""):
        super().__init__(message)
        self.label = label


@dataclass
class Morphism:
    name: str
    src: str
    dst: str
    matrix: LinearMap


@dataclass
class MonoidalDiagram:
    """Finite presentation of a rigid monoidal category with a fiber functor.

    ``tensor[(x, y)] = (z, phi)`` with ``phi: U(x) (x) U(y) -> U(z)``;
    ``associators[(x, y, z)]`` is ``U(a)`` from ``U((xy)z)`` to ``U(x(yz))``;
    ``duals[x] = (x_star, ev, db)`` with ``ev = U(ev_x): U(x x_star) -> U(I)``
    and ``db = U(db_x): U(I) -> U(x_star x)``.
    """

    field: Field
    objects: dict  # name -> dim
    morphisms: list = field(default_factory=list)
    unit: tuple | None = None  # (object, phi0)
    tensor: dict = field(default_factory=dict)
    associators: dict = field(default_factory=dict)
    duals: dict = field(default_factory=dict)

    def dim(self, x: str) -> int:
        try:
            return self.objects[x]
        except KeyError:
            raise DiagramError(f"unknown object {x!r}", x) from None

    def tensor_of(self, x: str, y: str) -> tuple[str, LinearMap]:
        try:
            return self.tensor[(x, y)]
        except KeyError:
            raise DiagramError(f"no tensor entry for ({x}, {y})", f"{x}*{y}") from None

    def ev_u(self, x: str) -> LinearMap:
        """``phi0^{-1} U(ev_x) phi_{x, x*}`` on ``U(x) (x) U(x*)``."""
        xs, ev, _ = self.duals[x]
        _, phi = self.tensor_of(x, xs)
        return self.unit[1].inverse() @ ev @ phi

    def db_u(self, x: str) -> LinearMap:
        """``phi_{x*, x}^{-1} U(db_x) phi0`` into ``U(x*) (x) U(x)``."""
        xs, _, db = self.duals[x]
        _, phi = self.tensor_of(xs, x)
        return phi.inverse() @ db @ self.unit[1]

    def rescale_dual(self, x: str, lam) -> "MonoidalDiagram":
        """Same diagram with ``ev_x`` divided by ``lam`` and ``db_x`` multiplied by it."""
        lam = self.field(lam)
        xs, ev, db = self.duals[x]
        duals = dict(self.duals)
        duals[x] = (xs, ev.scale(self.field.one / lam), db.scale(lam))
        return MonoidalDiagram(self.field, dict(self.objects), list(self.morphisms), self.unit, dict(self.tensor), dict(self.associators), duals)


def _ident(d: MonoidalDiagram, x: str) -> LinearMap:
    return LinearMap.identity(d.dim(x), d.field)


def _u_tensor(d: MonoidalDiagram, f: LinearMap, x: str, y: str, g: LinearMap, x2: str, y2: str) -> LinearMap:
    """``U(f (x) g) = phi (Uf (x) Ug) phi^{-1}`` for ``f: x -> x2``, ``g: y -> y2``."""
    _, p1 = d.tensor_of(x, y)
    _, p2 = d.tensor_of(x2, y2)
    return p2 @ kron(f, g) @ p1.inverse()


def validate_diagram(d: MonoidalDiagram, pentagon: bool = True) -> Report:
    """Shapes, invertibility of ``phi``, neutrality, zigzags and (optionally) the pentagon."""
    rep = Report("monoidal diagram")
    fld = d.field
    for m in d.morphisms:
        ok = m.matrix.shape == (d.dim(m.dst), d.dim(m.src))
        rep.require(f"shape of {m.name}", ok, (), f"{m.matrix.shape}")
    if d.unit is None:
        rep.fail("unit object", ())
        return rep
    i_obj, phi0 = d.unit
    rep.require("phi0 invertible", phi0.shape == (d.dim(i_obj), 1) and phi0.is_invertible())
    for (x, y), (z, phi) in d.tensor.items():
        ok = phi.shape == (d.dim(z), d.dim(x) * d.dim(y)) and phi.is_invertible()
        rep.require(f"phi invertible ({x},{y})", ok)
    for (x, y, z), a in d.associators.items():
        n3 = d.dim(x) * d.dim(y) * d.dim(z)
        ok = a.shape == (n3, n3) and a.is_invertible()
        rep.require(f"associator invertible ({x},{y},{z})", ok)
    if not rep.passed:
        return rep
    # neutrality with strict units
    for x in d.objects:
        for key, order in (((i_obj, x), "left"), ((x, i_obj), "right")):
            if key not in d.tensor:
                continue
            z, phi = d.tensor[key]
            if z != x:
                rep.fail(f"strict {order} unit", (), f"{key} -> {z}")
                continue
            lhs = phi @ (kron(phi0, _ident(d, x)) if order == "left" else kron(_ident(d, x), phi0))
            rep.require(f"{order} neutrality {x}", lhs == _ident(d, x))
    # zigzags transported through phi
    for x, (xs, ev, db) in d.duals.items():
        try:
            rep.merge(_zigzags(d, x, xs, ev, db))
        except DiagramError as exc:
            rep.fail(f"zigzag data for {x}", (), str(exc))
    if pentagon:
        rep.merge(check_diagram_pentagon(d))
    return rep


def _assoc(d: MonoidalDiagram, x, y, z) -> LinearMap:
    try:
        return d.associators[(x, y, z)]
    except KeyError:
        raise DiagramError(f"no associator for ({x}, {y}, {z})", f"a({x},{y},{z})") from None


def _zigzags(d: MonoidalDiagram, x, xs, ev, db) -> Report:
    rep = Report("zigzag")
    i_obj = d.unit[0]
    ix, ixs = _ident(d, x), _ident(d, xs)
    xxs, _ = d.tensor_of(x, xs)
    xsx, _ = d.tensor_of(xs, x)
    # X -> X I -> X (X* X) -> (X X*) X -> I X -> X
    f = _u_tensor(d, ix, x, i_obj, db, x, xsx)
    f = _assoc(d, x, xs, x).inverse() @ f
    f = _u_tensor(d, ev, xxs, x, ix, i_obj, x) @ f
    rep.require(f"zigzag {x}", f == ix)
    # X* -> I X* -> (X* X) X* -> X* (X X*) -> X* I -> X*
    g = _u_tensor(d, db, i_obj, xs, ixs, xsx, xs)
    g = _assoc(d, xs, x, xs) @ g
    g = _u_tensor(d, ixs, xs, xxs, ev, xs, i_obj) @ g
    rep.require(f"zigzag {x}*", g == ixs)
    return rep


def check_diagram_pentagon(d: MonoidalDiagram) -> Report:
    """Pentagon on every quadruple for which all the needed entries are listed."""
    rep = Report("pentagon")
    names = list(d.objects)
    for x, y, z, w in product(names, repeat=4):
        try:
            xy, _ = d.tensor_of(x, y)
            yz, _ = d.tensor_of(y, z)
            zw, _ = d.tensor_of(z, w)
            xy_z, _ = d.tensor_of(xy, z)
            x_yz, _ = d.tensor_of(x, yz)
            yz_w, _ = d.tensor_of(yz, w)
            y_zw, _ = d.tensor_of(y, zw)
            lhs = _assoc(d, x, y, zw) @ _assoc(d, xy, z, w)
            rhs = (
                _u_tensor(d, _ident(d, x), x, yz_w, _assoc(d, y, z, w), x, y_zw)
                @ _assoc(d, x, yz, w)
                @ _u_tensor(d, _assoc(d, x, y, z), xy_z, w, _ident(d, w), x_yz, w)
            )
        except DiagramError:
            continue
        rep.require(f"pentagon", lhs == rhs, (names.index(x), names.index(y), names.index(z), names.index(w)))
    return rep


# the coend ------------------------------------------------------------------


@dataclass
class CoendCoalgebra:
    diagram: MonoidalDiagram
    coalgebra: Coalgebra
    quotient: Quotient
    offsets: dict  # object -> offset in the big space
    blocks: dict  # object -> P_X, shape (dim H, d, d)
    relations: np.ndarray  # rows spanning the dinaturality relations
    relation_labels: list  # morphism name per relation row

    @property
    def dim(self) -> int:
        return self.coalgebra.dim

    @property
    def field(self) -> Field:
        return self.diagram.field

    @property
    def big_dim(self) -> int:
        return self.quotient.proj.dom_dim

    def proj(self, x: str) -> LinearMap:
        """``pi_X`` on ``U(X) (x) U(X)^*``."""
        P = self.blocks[x]
        return LinearMap(P.reshape(P.shape[0], -1), self.field)

    def delta_univ(self, x: str, h: CoquasiBialgebra | None = None) -> Comodule:
        """The universal coaction ``delta_X(x) = sum_i pi_X(x (x) e^i) (x) e_i``."""
        R = np.ascontiguousarray(self.blocks[x].transpose(0, 2, 1))
        if h is None:
            h = _coalgebra_only(self.coalgebra)
        return Comodule.from_tensor(h, R, x)

    def descends(self, big: np.ndarray, axis: int = -1) -> list:
        """Labels of relations not killed by ``big`` along ``axis``."""
        if self.relations.shape[0] == 0:
            return []
        moved = np.moveaxis(big, axis, -1)
        img = np.tensordot(moved, self.relations.T, axes=1)
        bad = np.argwhere(nonzero_mask(img.reshape(-1, self.relations.shape[0])).any(axis=0)).ravel()
        return sorted({self.relation_labels[i] for i in bad})

    def on_quotient(self, big: np.ndarray, axes: tuple) -> np.ndarray:
        """Contract the big-space ``axes`` of ``big`` with the section."""
        sec = self.quotient.section.entries
        out = big
        for ax in axes:
            out = np.moveaxis(np.tensordot(np.moveaxis(out, ax, -1), sec, axes=1), -1, ax)
        return out


def _coalgebra_only(c: Coalgebra) -> CoquasiBialgebra:
    """Wrap a bare coalgebra so that comodule helpers accept it (no product is used)."""
    fld, n = c.field, c.dim
    return CoquasiBialgebra(c, LinearMap.zeros(n, n * n, fld), LinearMap.zeros(n, 1, fld), LinearMap.zeros(1, n**3, fld))


def _require_descends(c: CoendCoalgebra, big: np.ndarray, axis: int, what: str) -> None:
    bad = c.descends(big, axis)
    if bad:
        raise DiagramError(f"{what} is not well defined on the coend (relations from {', '.join(bad)})", bad[0])


def dinaturality_relations(d: MonoidalDiagram, offsets: dict, big: int) -> tuple[np.ndarray, list]:
    """Rows ``pi_X(x (x) psi U(f)) - pi_Y(U(f) x (x) psi)`` for each listed ``f``."""
    fld = d.field
    rows, labels = [], []
    for m in d.morphisms:
        dx, dy = d.dim(m.src), d.dim(m.dst)
        F = m.matrix.entries
        ox, oy = offsets[m.src], offsets[m.dst]
        for j in range(dx):
            for mm in range(dy):
                r = fld.zeros(big)
                for k in range(dx):
                    r[ox + j * dx + k] += F[mm, k]
                for l in range(dy):
                    r[oy + l * dy + mm] -= F[l, j]
                rows.append(r)
                labels.append(m.name)
    if not rows:
        return fld.zeros((0, big)), []
    return np.array(rows, dtype=object), labels


def coend_coalgebra(d: MonoidalDiagram) -> CoendCoalgebra:
    fld = d.field
    offsets, off = {}, 0
    for x, dx in d.objects.items():
        offsets[x] = off
        off += dx * dx
    big = off
    relations, labels = dinaturality_relations(d, offsets, big)
    rows, piv = rref(relations, fld) if len(relations) else (fld.zeros((0, big)), [])
    q = quotient(big, Subspace(big, rows, piv, fld))
    proj = q.proj.entries
    n = proj.shape[0]
    blocks = {x: proj[:, offsets[x] : offsets[x] + dx * dx].reshape(n, dx, dx) for x, dx in d.objects.items()}
    dbig = fld.zeros((n, n, big))
    ebig = fld.zeros(big)
    for x, dx in d.objects.items():
        P = blocks[x]
        dbig[:, :, offsets[x] : offsets[x] + dx * dx] = einsum("pli,qik->pqlk", P, P).reshape(n, n, dx * dx)
        for l in range(dx):
            ebig[offsets[x] + l * dx + l] = fld.one
    c = CoendCoalgebra(d, None, q, offsets, blocks, relations, labels)
    _require_descends(c, dbig, -1, "Delta")
    _require_descends(c, ebig, -1, "counit")
    sec = q.section.entries
    delta = LinearMap((dbig.reshape(n * n, big) @ sec) if n else fld.zeros((0, 0)), fld)
    counit = LinearMap((ebig @ sec).reshape(1, n), fld)
    c.coalgebra = Coalgebra(delta, counit)
    return c


def coend_bialgebra(d: MonoidalDiagram, c: CoendCoalgebra, name: str = "") -> CoquasiBialgebra:
    """``m``, ``u`` and ``omega`` on the coend, each checked to descend to the quotient."""
    fld = d.field
    n, N = c.dim, c.big_dim
    objs = list(d.objects)
    mbig = fld.zeros((n, N, N))
    for x, y in product(objs, repeat=2):
        dx, dy = d.dim(x), d.dim(y)
        z, phi = d.tensor_of(x, y)
        Phi = phi.entries.reshape(d.dim(z), dx, dy)
        Psi = phi.inverse().entries.reshape(dx, dy, d.dim(z))
        blk = einsum("apq,plm,knq->alkmn", c.blocks[z], Phi, Psi).reshape(n, dx * dx, dy * dy)
        mbig[:, c.offsets[x] : c.offsets[x] + dx * dx, c.offsets[y] : c.offsets[y] + dy * dy] = blk
    _require_descends(c, mbig, 1, "m")
    _require_descends(c, mbig, 2, "m")
    M = c.on_quotient(mbig, (1, 2))

    i_obj, phi0 = d.unit
    U = einsum("apq,p,q->a", c.blocks[i_obj], phi0.entries[:, 0], phi0.inverse().entries[0])

    wbig = fld.zeros((N, N, N))
    for x, y, z in product(objs, repeat=3):
        dx, dy, dz = d.dim(x), d.dim(y), d.dim(z)
        xy, p_xy = d.tensor_of(x, y)
        yz, p_yz = d.tensor_of(y, z)
        _, p_xy_z = d.tensor_of(xy, z)
        _, p_x_yz = d.tensor_of(x, yz)
        a = _assoc(d, x, y, z)
        om = kron(p_xy, _ident(d, z)).inverse() @ p_xy_z.inverse() @ a.inverse() @ p_x_yz @ kron(_ident(d, x), p_yz)
        O = om.entries.reshape(dx, dy, dz, dx, dy, dz)  # [i,k,q, j,l,p]
        blk = O.transpose(3, 0, 4, 1, 5, 2).reshape(dx * dx, dy * dy, dz * dz)
        ox, oy, oz = c.offsets[x], c.offsets[y], c.offsets[z]
        wbig[ox : ox + dx * dx, oy : oy + dy * dy, oz : oz + dz * dz] = blk
    for ax in range(3):
        _require_descends(c, wbig, ax, "omega")
    W = c.on_quotient(wbig, (0, 1, 2))
    return CoquasiBialgebra(
        c.coalgebra,
        LinearMap(M.reshape(n, n * n), fld),
        LinearMap(U.reshape(n, 1), fld),
        LinearMap(W.reshape(1, n**3), fld),
        name,
    )


def coend_preantipode(d: MonoidalDiagram, c: CoendCoalgebra) -> Preantipode:
    """``S(pi_X(x (x) xi)) = sum xi(w_j) ev(x (x) phi_i) pi_{X*}(f_j (x) phi^i)``."""
    fld = d.field
    n, N = c.dim, c.big_dim
    sbig = fld.zeros((n, N))
    for x, dx in d.objects.items():
        if x not in d.duals:
            raise DiagramError(f"object {x!r} has no listed dual", x)
        xs = d.duals[x][0]
        ds = d.dim(xs)
        EV = d.ev_u(x).entries.reshape(dx, ds)
        DB = d.db_u(x).entries.reshape(ds, dx)
        blk = einsum("sk,mi,asi->amk", DB, EV, c.blocks[xs]).reshape(n, dx * dx)
        sbig[:, c.offsets[x] : c.offsets[x] + dx * dx] = blk
    _require_descends(c, sbig, 1, "S")
    S = c.on_quotient(sbig, (1,))
    return Preantipode(LinearMap(S, fld))


def coend_coquasi_antipode(d: MonoidalDiagram, c: CoendCoalgebra, nu: dict) -> CoquasiHopfData:
    """``(s, alpha, beta)`` from isomorphisms ``nu[X]: U(X*) -> U(X)^*``.

    ``nu[X]`` is a ``d x d`` matrix whose rows index the dual basis of ``U(X)^*``.
    """
    fld = d.field
    n, N = c.dim, c.big_dim
    abig, bbig, sbig = fld.zeros(N), fld.zeros(N), fld.zeros((n, N))
    for x, dx in d.objects.items():
        xs = d.duals[x][0]
        v = nu[x]
        if v.shape != (dx, d.dim(xs)) or not v.is_invertible():
            raise DiagramError(f"nu for {x!r} is not an isomorphism U(X*) -> U(X)^*", x)
        vi = v.inverse()
        ev_star = d.ev_u(x) @ kron(_ident(d, x), vi)  # on X (x) X^*
        db_star = kron(v, _ident(d, x)) @ d.db_u(x)  # into X^* (x) X
        o = c.offsets[x]
        abig[o : o + dx * dx] = db_star.entries[:, 0]
        bbig[o : o + dx * dx] = ev_star.entries[0]
        Rs = einsum("is,ast,tj->aij", v.entries, c.blocks[xs].transpose(0, 2, 1), vi.entries)
        sbig[:, o : o + dx * dx] = Rs.reshape(n, dx * dx)
    _require_descends(c, abig, -1, "alpha")
    _require_descends(c, bbig, -1, "beta")
    _require_descends(c, sbig, 1, "s")
    alpha = c.on_quotient(abig, (0,))
    beta = c.on_quotient(bbig, (0,))
    s = c.on_quotient(sbig, (1,))
    return CoquasiHopfData(LinearMap(s, fld), LinearMap.row(alpha, fld), LinearMap.row(beta, fld))


def identity_nu(d: MonoidalDiagram) -> dict:
    """``nu = id`` when every ``U(X*)`` is written in the dual basis of ``U(X)``."""
    return {x: LinearMap.identity(dx, d.field) for x, dx in d.objects.items()}


@dataclass
class Reconstruction:
    coend: CoendCoalgebra
    h: CoquasiBialgebra
    S: Preantipode
    report: Report


def reconstruct(d: MonoidalDiagram, name: str = "H") -> Reconstruction:
    """Coend, its coquasi-bialgebra structure and preantipode, fully validated."""
    c = coend_coalgebra(d)
    h = coend_bialgebra(d, c, name)
    rep = Report("reconstruction")
    rep.merge(validate_coquasi(h))
    S = coend_preantipode(d, c)
    rep.merge(check_preantipode(h, S))
    for x in d.objects:
        if x in d.duals:
            xs = d.duals[x][0]
            dd = DualComoduleData(c.delta_univ(x, h), c.delta_univ(xs, h), d.ev_u(x), d.db_u(x))
            rep.merge(check_dual(dd), f"{x}: ")
    return Reconstruction(c, h, S, rep)


# the canonical map -------------------------------------------------------------


def can_map(
    d: MonoidalDiagram,
    c: CoendCoalgebra,
    b: CoquasiBialgebra,
    comodules: dict,
    h: CoquasiBialgebra | None = None,
    s_h: Preantipode | None = None,
    s_b: Preantipode | None = None,
) -> tuple[LinearMap, Report]:
    """``can(pi_X(x (x) xi)) = sum x_{-1} xi(x_0)`` into ``B``.

    ``comodules[X]`` is the ``B``-coaction on ``U(X)``; every listed morphism
    must be colinear.  With ``h`` the report covers the full morphism axioms,
    otherwise only the coalgebra part.
    """
    fld = d.field
    for x, dx in d.objects.items():
        v = comodules.get(x)
        if v is None or v.dim != dx or v.h is not b:
            raise DiagramError(f"object {x!r} carries no {dx}-dimensional B-coaction", x)
    for m in d.morphisms:
        if not is_colinear(m.matrix, comodules[m.src], comodules[m.dst]):
            raise DiagramError(f"morphism {m.name!r} is not B-colinear", m.name)
    N = c.big_dim
    cbig = fld.zeros((b.dim, N))
    for x, dx in d.objects.items():
        o = c.offsets[x]
        cbig[:, o : o + dx * dx] = comodules[x].R.transpose(0, 2, 1).reshape(b.dim, dx * dx)
    _require_descends(c, cbig, 1, "can")
    can = LinearMap(c.on_quotient(cbig, (1,)), fld)
    if h is not None:
        rep = check_morphism(can, h, b, s_h, s_b)
    else:
        rep = Report("coalgebra morphism")
        F = can.entries
        rep.compare("comultiplicative", einsum("kx,pqk->xpq", F, b.D), einsum("abx,pa,qb->xpq", c.coalgebra.D, F, F), 1)
        rep.compare("counital", einsum("k,kx->x", b.E, F), c.coalgebra.E, 1)
    rep.subject = "can"
    if can.shape[0] == can.shape[1] and can.is_invertible():
        rep.flag("Galois")
    return can, rep


def transport_report(can: LinearMap, h: CoquasiBialgebra, b: CoquasiBialgebra, s_h: Preantipode, s_b: Preantipode) -> Report:
    """Pull ``B``'s structure back along a bijective ``can`` and compare with ``H`` entrywise."""
    rep = Report("can transport")
    if not (can.shape[0] == can.shape[1] and can.is_invertible()):
        rep.fail("can bijective", ())
        return rep
    b2, Pi = base_change(b, can)
    rep.compare("Delta", b2.coalgebra.delta.entries.T, h.coalgebra.delta.entries.T, 1)
    rep.compare("counit", b2.coalgebra.counit.entries, h.coalgebra.counit.entries)
    rep.compare("m", b2.mult.entries.T, h.mult.entries.T, 1)
    rep.compare("u", b2.unit.entries, h.unit.entries)
    rep.compare("omega", b2.W, h.W, 3)
    rep.compare("S", (Pi @ s_b.s_map @ can).entries.T, s_h.s_map.entries.T, 1)
    return rep


# diagram builders ---------------------------------------------------------------


def comodule_diagram(
    b: CoquasiBialgebra,
    objects: dict,
    unit: str,
    tensor: dict,
    duals: dict,
    morphisms: list | None = None,
) -> MonoidalDiagram:
    """A diagram inside ``B``-comodules, with ``U`` the forgetful functor.

    ``objects`` maps names to ``Comodule``; ``tensor[(x, y)] = (z, phi)``
    with ``phi: X (x) Y -> Z`` a colinear isomorphism; ``duals[x] = (x*,
    ev, db)`` in comodule terms (``ev: X (x) X* -> k``, ``db: k -> X* (x) X``).
    The unit object must be the trivial comodule with ``phi0 = 1``.
    Associator witnesses are the ``omega``-associators transported through
    ``phi``.
    """
    fld = b.field
    dims = {x: v.dim for x, v in objects.items()}
    one = LinearMap.identity(1, fld)
    d = MonoidalDiagram(fld, dims, list(morphisms or []), (unit, one), dict(tensor))
    names = list(objects)
    for x, y, z in product(names, repeat=3):
        if (x, y) not in tensor or (y, z) not in tensor:
            continue
        xy, p_xy = tensor[(x, y)]
        yz, p_yz = tensor[(y, z)]
        if (xy, z) not in tensor or (x, yz) not in tensor:
            continue
        _, p_xy_z = tensor[(xy, z)]
        _, p_x_yz = tensor[(x, yz)]
        aB = associator(objects[x], objects[y], objects[z])
        ix, iz = LinearMap.identity(dims[x], fld), LinearMap.identity(dims[z], fld)
        d.associators[(x, y, z)] = p_x_yz @ kron(ix, p_yz) @ aB @ kron(p_xy, iz).inverse() @ p_xy_z.inverse()
    for x, (xs, ev, db) in duals.items():
        _, p1 = tensor[(x, xs)]
        _, p2 = tensor[(xs, x)]
        d.duals[x] = (xs, ev @ p1.inverse(), p2 @ db)
    return d


def grading_diagram(b: CoquasiBialgebra, group, grouplikes: list, name_prefix: str = "g") -> tuple[MonoidalDiagram, dict]:
    """Diagram of the one-dimensional comodules ``k_g`` of a twisted group algebra.

    ``grouplikes[a]`` is the group-like vector of group element ``a``.  Returns
    the diagram and the ``B``-comodules on its objects.
    """
    fld = b.field
    G = group.order
    name = [f"{name_prefix}{a}" for a in range(G)]
    lines = {name[a]: line_comodule(b, grouplikes[a], name[a]) for a in range(G)}
    one = LinearMap.identity(1, fld)
    tensor = {(name[x], name[y]): (name[group.mul(x, y)], one) for x in range(G) for y in range(G)}
    duals = {}
    for g in range(G):
        gi = group.inv(g)
        v, vs = lines[name[g]], lines[name[gi]]
        # (ev (x) X) a^{-1}_{X,X*,X} (X (x) db) = id with db = 1
        w = associator(v, vs, v, inverse=True).entries[0, 0]
        duals[name[g]] = (name[gi], LinearMap([[fld.one / w]], fld), one)
    e = [a for a in range(G) if group.mul(a, a) == a][0]
    return comodule_diagram(b, lines, name[e], tensor, duals), lines


def entry_grading_diagram(entry) -> tuple[MonoidalDiagram, dict]:
    """Grading diagram of a twisted-group zoo entry (any basis)."""
    if entry.group is None:
        raise ValueError(f"{entry.name} is not a twisted group algebra")
    gl = [v for _, v in sorted(entry.grouplikes, key=lambda t: t[0])]
    return grading_diagram(entry.h, entry.group, gl)


def regular_diagram(c: Coalgebra, name: str = "B") -> tuple[MonoidalDiagram, Comodule]:
    """The regular comodule with its endomorphisms ``c -> c1 f(c2)`` for ``f`` in a basis of ``C^*``."""
    fld, n = c.field, c.dim
    morphs = [Morphism(f"act{t}", name, name, LinearMap(np.ascontiguousarray(c.D[:, t, :]), fld)) for t in range(n)]
    d = MonoidalDiagram(fld, {name: n}, morphs)
    return d, Comodule(_coalgebra_only(c), c.delta, name)


def close_morphisms(d: MonoidalDiagram, cap: int = 64) -> MonoidalDiagram:
    """Append composites of listed morphisms until nothing new appears or ``cap`` is hit."""
    morphs = list(d.morphisms)
    seen = {(m.src, m.dst, tuple(m.matrix.entries.ravel())) for m in morphs}
    grew = True
    while grew and len(morphs) < cap:
        grew = False
        for f, g in product(list(morphs), repeat=2):
            if f.dst != g.src or len(morphs) >= cap:
                continue
            mat = g.matrix @ f.matrix
            key = (f.src, g.dst, tuple(mat.entries.ravel()))
            if key not in seen:
                seen.add(key)
                morphs.append(Morphism(f"{g.name}.{f.name}", f.src, g.dst, mat))
                grew = True
    return MonoidalDiagram(d.field, dict(d.objects), morphs, d.unit, dict(d.tensor), dict(d.associators), dict(d.duals))
