import numpy as np
import pytest

from coquasi import zoo as cz
from coquasi.cqb import check_preantipode, solve_preantipode, validate_coquasi
from coquasi.exactla import GF, QQ


def test_running_example_solver_agreement():
    h, s, _ = cz.gen_group_coquasi(cz.ZooSpec(cz.cyclic(2), cz.cyclic_cocycle(2, 1, -1)))
    assert solve_preantipode(h).s_map == s.s_map


@pytest.mark.parametrize("g", [cz.cyclic(3), cz.cyclic(5), cz.symmetric3(), cz.direct_product(cz.cyclic(2), cz.cyclic(3))])
def test_trivial_cocycle_is_hopf(g):
    h, s, _ = cz.gen_group_coquasi(cz.ZooSpec(g, cz.trivial_cocycle(g)))
    assert "ordinary bialgebra" in validate_coquasi(h).flags
    for a in range(g.order):
        assert s.S[g.inv(a), a] == 1
    assert check_preantipode(h, s).passed


def test_product_cocycle_validates():
    z2 = cz.cyclic_cocycle(2, 1, -1)
    w = cz.product_cocycle(z2, z2)
    h, s, _ = cz.gen_group_coquasi(cz.ZooSpec(cz.direct_product(cz.cyclic(2), cz.cyclic(2)), w))
    assert validate_coquasi(h).passed and check_preantipode(h, s).passed


def test_cocycle_violation_names_tuple():
    g = cz.cyclic(3)
    w = cz.trivial_cocycle(g)
    w[1, 1, 1] = QQ(2)
    with pytest.raises(cz.CocycleError) as err:
        cz.gen_group_coquasi(cz.ZooSpec(g, w))
    f = err.value.report.failures[0]
    assert f.axiom == "cocycle" and len(f.index) == 4


def test_unnormalized_cocycle_rejected():
    g = cz.cyclic(2)
    w = cz.trivial_cocycle(g)
    w[0, 1, 1] = QQ(-1)
    with pytest.raises(cz.CocycleError):
        cz.gen_group_coquasi(cz.ZooSpec(g, w))


def test_cyclic_cocycle_needs_root_of_unity():
    with pytest.raises(ValueError):
        cz.cyclic_cocycle(3, 1, -1)
    assert cz.check_cocycle(cz.cyclic(4), cz.cyclic_cocycle(4, 1, 2, GF(5))).passed


def test_group_tables_validate():
    for g in (cz.cyclic(6), cz.symmetric3(), cz.direct_product(cz.cyclic(2), cz.cyclic(2))):
        g.validate()


def test_coboundaries_are_cocycles():
    rng = np.random.default_rng(0)
    for g in (cz.cyclic(3), cz.symmetric3()):
        w = cz.coboundary(g, cz.random_cochain(g, QQ, rng))
        assert cz.check_cocycle(g, w).passed


def test_catalogue_validates(catalogue):
    for e in catalogue:
        assert validate_coquasi(e.h).passed, e.name
        assert check_preantipode(e.h, e.S).passed, e.name


def test_random_population_is_deterministic():
    a = cz.random_population(5, seed=3)
    b = cz.random_population(5, seed=3)
    assert [e.h.mult == f.h.mult for e, f in zip(a, b)] == [True] * 5
