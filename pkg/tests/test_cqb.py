import numpy as np
import pytest

from oracle import Data, brute_preantipode, coquasi_violations, preantipode_violations, to_lists

from coquasi import zoo as cz
from coquasi.coalg import Coalgebra
from coquasi.cqb import (
    CoquasiBialgebra,
    CoquasiHopfData,
    Preantipode,
    check_morphism,
    check_preantipode,
    epsilon_s_identities,
    hat_epsilon,
    hat_epsilon_roundtrip,
    hopf_antipode_identities,
    preantipode_from_antipode,
    solve_preantipode,
    validate_coquasi,
    validate_coquasi_hopf,
)
from coquasi.exactla import QQ, LinearMap

# S(e_j) read off by hand from S(g) = omega(g, g^-1, g)^-1 g^-1
S_Z2_OMEGA = [[1, 0], [0, -1]]
# Z4, omega(a,b,c) = (-1)^(a floor((b+c)/4)): omega(1,3,1) = omega(3,1,3) = -1, omega(2,2,2) = 1
S_Z4_OMEGA = [[1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0], [0, -1, 0, 0]]


def with_cocycle(entry, w):
    h, _, _ = cz.gen_group_coquasi(cz.ZooSpec(entry.group, w, QQ), check=False)
    return h


def test_z2_omega_validates(z2w):
    rep = validate_coquasi(z2w.h)
    assert rep.passed and "ordinary bialgebra" not in rep.flags
    assert not coquasi_violations(Data(z2w.h))


def test_z2_omega_bad_unit_slot(z2w):
    w = z2w.cocycle.copy()
    w[1, 1, 0] = QQ(-1)
    rep = validate_coquasi(with_cocycle(z2w, w))
    assert not rep.passed
    assert rep.failed_axioms() == ["3-cocycle"]


def test_middle_unit_slot_is_named(z2w):
    w = z2w.cocycle.copy()
    w[1, 0, 1] = QQ(-1)
    assert validate_coquasi(with_cocycle(z2w, w)).has_failure("omega unital")


def test_trivial_omega_flagged(z2):
    rep = validate_coquasi(z2.h)
    assert rep.passed and "ordinary bialgebra" in rep.flags


def test_hopf_antipode_is_preantipode(z2):
    assert check_preantipode(z2.h, LinearMap([[1, 0], [0, 1]])).passed


def test_running_example_preantipode(z2w):
    assert check_preantipode(z2w.h, LinearMap(S_Z2_OMEGA)).passed


def test_identity_fails_third_axiom(z2w):
    rep = check_preantipode(z2w.h, LinearMap.identity(2))
    assert rep.failed_axioms() == ["preantipode axiom 3"]
    assert rep.failures[0].index == (1,)
    assert preantipode_violations(Data(z2w.h), [[1, 0], [0, 1]]) == {"axiom 3"}


def test_solver_matches_brute_force(z2w):
    s = solve_preantipode(z2w.h)
    assert to_lists(s.s_map) == S_Z2_OMEGA
    S, nullity = brute_preantipode(Data(z2w.h))
    assert S == S_Z2_OMEGA and nullity == 0


def test_ground_field_preantipode():
    s = solve_preantipode(cz.trivial_entry().h)
    assert s.s_map == LinearMap.identity(1)


def test_z4_closed_form():
    e = cz.z4_omega()
    assert to_lists(solve_preantipode(e.h).s_map) == S_Z4_OMEGA
    assert check_preantipode(e.h, LinearMap(S_Z4_OMEGA)).passed


def test_no_preantipode_detected():
    # monoid algebra of {1, x} with x^2 = x: a bialgebra with no preantipode
    delta = QQ.zeros((4, 2))
    delta[0, 0] = delta[3, 1] = QQ.one
    mult = QQ.zeros((2, 4))
    mult[0, 0] = mult[1, 1] = mult[1, 2] = mult[1, 3] = QQ.one
    omega = LinearMap([[1] * 8])
    h = CoquasiBialgebra(Coalgebra(LinearMap(delta), LinearMap([[1, 1]])), LinearMap(mult), LinearMap([[1], [0]]), omega)
    assert validate_coquasi(h).passed
    assert solve_preantipode(h) is None
    assert brute_preantipode(Data(h)) is None


def test_beta_s_alpha_hopf_case(z2):
    assert preantipode_from_antipode(z2.h, z2.hopf).s_map == z2.hopf.s


def test_beta_s_alpha_running_example(z2w):
    assert to_lists(preantipode_from_antipode(z2w.h, z2w.hopf).s_map) == S_Z2_OMEGA


def test_coquasi_hopf_data(z2w, z2):
    assert validate_coquasi_hopf(z2w.h, z2w.hopf).passed
    assert validate_coquasi_hopf(z2.h, z2.hopf).passed
    assert z2.hopf.alpha == z2.h.coalgebra.counit and z2.hopf.beta == z2.h.coalgebra.counit


def test_perturbed_beta_fails_at_x(z2w):
    q = z2w.hopf
    b = q.beta.copy_array()
    b[0, 1] += 1
    rep = validate_coquasi_hopf(z2w.h, CoquasiHopfData(q.s, q.alpha, LinearMap(b)))
    assert not rep.passed
    # on group-likes the beta identity itself is linear and blind to beta;
    # the first omega identity involving beta is the one that trips
    assert rep.failed_axioms()[0] == "omega five-fold"
    assert rep.failures[0].index == (1,)


def test_identity_morphism(z2w):
    rep = check_morphism(LinearMap.identity(2), z2w.h, z2w.h, z2w.S, z2w.S)
    assert rep.passed


def test_inversion_automorphism(z2w):
    # g -> g^-1 is the identity on Z2
    f = LinearMap([[1, 0], [0, 1]])
    assert check_morphism(f, z2w.h, z2w.h, z2w.S, z2w.S).passed


def test_klein_automorphism_intertwines_preantipode():
    e = cz.klein_product()
    # the cocycle lives on the first factor, so (a, b) -> (a, a + b) preserves it
    perm = [0, 1, 3, 2]
    f = QQ.zeros((4, 4))
    for g, t in enumerate(perm):
        f[t, g] = QQ.one
    rep = check_morphism(LinearMap(f), e.h, e.h, e.S, e.S)
    assert rep.passed


def test_counit_breaking_map(z2w):
    k = cz.trivial_entry()
    f = LinearMap([[1, 0]])
    rep = check_morphism(f, z2w.h, k.h)
    assert rep.has_failure("omega compatible")
    # x |-> 0 also kills x * x = 1, so multiplicativity cannot hold either
    assert rep.has_failure("multiplicative")


def test_rebased_morphism_intertwines():
    e = cz.z4_omega()
    rb = cz.rebase(e, LinearMap([[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 1, -1], [0, 0, 0, 1]]))
    rep = check_morphism(rb.basis_change, e.h, rb.h, e.S, rb.S)
    assert rep.passed and "preantipode intertwined" in rep.checked


@pytest.mark.parametrize("make", [cz.trivial_entry, cz.z2_omega, cz.z2_hopf])
def test_hat_epsilon(make):
    e = make()
    assert hat_epsilon_roundtrip(e.h, e.S).passed


def test_hat_epsilon_coinvariants(z2w):
    he = hat_epsilon(z2w.h, z2w.S)
    assert he.coinvariants.dim == 2
    assert he.eps_hat.shape == (4, 4)


def test_epsilon_s_hopf(z2):
    rep = epsilon_s_identities(z2.h, z2.S)
    assert rep.passed and "ordinary antipode" in rep.flags


def test_epsilon_s_running_example(z2w):
    rep = epsilon_s_identities(z2w.h, z2w.S)
    assert rep.passed and "ordinary antipode" not in rep.flags
    eS = z2w.h.E @ z2w.S.S
    assert list(eS) == [1, -1]
    # h1 S(h2) = -1 at x, so S is not an antipode
    assert not hopf_antipode_identities(z2w.h, z2w.S).passed


def test_epsilon_s_ground_field():
    e = cz.trivial_entry()
    assert epsilon_s_identities(e.h, e.S).passed


def test_fp_entries_validate():
    for e in (cz.z4_fp5(), cz.z3_fp7()):
        assert validate_coquasi(e.h).passed
        assert check_preantipode(e.h, e.S).passed
        assert solve_preantipode(e.h).s_map == e.S.s_map
