import numpy as np
import pytest

from oracle import to_lists

from coquasi import zoo as cz
from coquasi.coalg import Coalgebra
from coquasi.comodcat import line_comodule, regular_comodule, trivial_comodule
from coquasi.cqb import check_preantipode, validate_coquasi, validate_coquasi_hopf
from coquasi.exactla import QQ, LinearMap
from coquasi.recon import (
    DiagramError,
    MonoidalDiagram,
    Morphism,
    can_map,
    close_morphisms,
    coend_bialgebra,
    coend_coalgebra,
    coend_coquasi_antipode,
    coend_preantipode,
    comodule_diagram,
    entry_grading_diagram,
    identity_nu,
    reconstruct,
    regular_diagram,
    transport_report,
    validate_diagram,
)


def one_object():
    one = LinearMap([[1]])
    return MonoidalDiagram(QQ, {"I": 1}, [], ("I", one), {("I", "I"): ("I", one)}, {("I", "I", "I"): one}, {"I": ("I", one, one)})


def divided_powers():
    # Delta(1) = 1 (x) 1, Delta(x) = 1 (x) x + x (x) 1
    delta = QQ.zeros((4, 2))
    delta[0, 0] = delta[1, 1] = delta[2, 1] = QQ.one
    return Coalgebra(LinearMap(delta), LinearMap([[1, 0]]))


def test_one_object_gives_ground_field():
    d = one_object()
    assert validate_diagram(d).passed
    r = reconstruct(d)
    assert r.h.dim == 1 and r.report.passed
    assert "ordinary bialgebra" in validate_coquasi(r.h).flags
    assert r.S.s_map == LinearMap.identity(1)


def test_two_lines_give_grouplikes(z2w):
    d, _ = entry_grading_diagram(z2w)
    c = coend_coalgebra(d)
    assert c.dim == 2 and c.relations.shape[0] == 0
    # each block is a group-like element
    for x in d.objects:
        p = c.proj(x).entries[:, 0]
        assert np.all(np.einsum("ijk,k->ij", c.coalgebra.D, p) == np.multiply.outer(p, p))


def test_regular_diagram_collapses_to_b():
    b = divided_powers()
    d, v = regular_diagram(b)
    c = coend_coalgebra(d)
    assert c.dim == 2
    can, rep = can_map(d, c, v.h, {"B": v})
    assert rep.passed and "Galois" in rep.flags


def test_regular_diagram_without_endomorphisms_is_bigger():
    b = divided_powers()
    d, _ = regular_diagram(b)
    bare = MonoidalDiagram(QQ, dict(d.objects), [])
    assert coend_coalgebra(bare).dim == 4


def test_closing_morphisms_changes_nothing():
    b = divided_powers()
    d, _ = regular_diagram(b)
    d2 = close_morphisms(d)
    assert len(d2.morphisms) >= len(d.morphisms)
    assert coend_coalgebra(d2).dim == coend_coalgebra(d).dim


def test_grading_reconstructs_cocycle(z2w):
    d, _ = entry_grading_diagram(z2w)
    c = coend_coalgebra(d)
    h = coend_bialgebra(d, c)
    can, _ = can_map(d, c, z2w.h, {x: line_comodule(z2w.h, g) for x, (_, g) in zip(d.objects, z2w.grouplikes)})
    assert can == LinearMap.identity(2)
    assert np.all(h.W == z2w.cocycle)
    assert h.mult == z2w.h.mult


def test_strict_diagram_is_bialgebra(z2):
    d, _ = entry_grading_diagram(z2)
    assert all(a == LinearMap.identity(1) for a in d.associators.values())
    rep = validate_coquasi(reconstruct(d).h)
    assert rep.passed and "ordinary bialgebra" in rep.flags


def test_running_example_preantipode(z2w):
    r = reconstruct(entry_grading_diagram(z2w)[0])
    assert to_lists(r.S.s_map) == [[1, 0], [0, -1]]


def test_trivial_cocycle_gives_inverse():
    e = cz.z4_omega()
    g = e.group
    e = cz.group_entry("Z4", g, cz.trivial_cocycle(g))
    r = reconstruct(entry_grading_diagram(e)[0])
    for a in range(4):
        assert r.S.s_map.entries[g.inv(a), a] == 1


def test_rescaled_duals_give_same_s():
    e = cz.z4_omega()
    d, _ = entry_grading_diagram(e)
    S = coend_preantipode(d, coend_coalgebra(d)).s_map
    for x, lam in zip(d.objects, ["3", "-1/2", "7", "5/11"]):
        d = d.rescale_dual(x, lam)
        assert validate_diagram(d).passed
        assert coend_preantipode(d, coend_coalgebra(d)).s_map == S


def test_coquasi_antipode_from_identity_nu(z2w):
    d, _ = entry_grading_diagram(z2w)
    c = coend_coalgebra(d)
    h = coend_bialgebra(d, c)
    q = coend_coquasi_antipode(d, c, identity_nu(d))
    assert validate_coquasi_hopf(h, q).passed
    assert list(q.alpha.entries[0]) == [1, 1]
    assert list(q.beta.entries[0]) == [1, -1]


def test_trivial_object_over_b_is_not_surjective(z2w):
    d = one_object()
    c = coend_coalgebra(d)
    can, rep = can_map(d, c, z2w.h, {"I": trivial_comodule(z2w.h)})
    assert can.shape == (2, 1) and list(can.entries[:, 0]) == [1, 0]
    assert "Galois" not in rep.flags


def test_non_colinear_morphism_rejected(z2w):
    d, lines = entry_grading_diagram(z2w)
    names = list(d.objects)
    d.morphisms.append(Morphism("bad", names[0], names[1], LinearMap([[1]])))
    c = coend_coalgebra(d)
    with pytest.raises(DiagramError):
        can_map(d, c, z2w.h, lines)


def test_nontrivial_phi_is_transported():
    e = cz.z4_omega()
    G = e.group
    lines = {f"g{a}": line_comodule(e.h, e.grouplikes[a][1]) for a in range(4)}
    rng = np.random.default_rng(5)
    tensor = {}
    for x in range(4):
        for y in range(4):
            s = QQ(1) if 0 in (x, y) else QQ(int(rng.integers(1, 6)) * int(rng.choice([-1, 1])))
            tensor[(f"g{x}", f"g{y}")] = (f"g{G.mul(x, y)}", LinearMap([[s]]))
    duals = {}
    from coquasi.comodcat import associator

    for a in range(4):
        ai = G.inv(a)
        w = associator(lines[f"g{a}"], lines[f"g{ai}"], lines[f"g{a}"], inverse=True).entries[0, 0]
        duals[f"g{a}"] = (f"g{ai}", LinearMap([[1 / w]]), LinearMap([[1]]))
    d = comodule_diagram(e.h, lines, "g0", tensor, duals)
    assert validate_diagram(d).passed
    r = reconstruct(d)
    assert r.report.passed
    can, rep = can_map(d, r.coend, e.h, lines, r.h, r.S, e.S)
    assert rep.passed and "Galois" in rep.flags
    assert transport_report(can, r.h, e.h, r.S, e.S).passed


def test_broken_associator_fails_zigzag(z2w):
    d, _ = entry_grading_diagram(z2w)
    d.associators[("g1", "g1", "g1")] = LinearMap([[1]])
    rep = validate_diagram(d)
    assert not rep.passed


def test_broken_associator_fails_pentagon():
    e = cz.z4_omega()
    d, _ = entry_grading_diagram(e)
    d.associators[("g1", "g2", "g3")] = d.associators[("g1", "g2", "g3")].scale(QQ(3))
    rep = validate_diagram(d)
    assert any("pentagon" in a for a in rep.failed_axioms())


def test_rebased_entries_transport():
    for e in (cz.z2_omega(), cz.random_rebase(cz.z4_omega(), np.random.default_rng(2))):
        d, lines = entry_grading_diagram(e)
        r = reconstruct(d)
        can, rep = can_map(d, r.coend, e.h, lines, r.h, r.S, e.S)
        assert rep.passed and "Galois" in rep.flags
        assert transport_report(can, r.h, e.h, r.S, e.S).passed
