"""End-to-end acceptance checks, one test per criterion, all at exact arithmetic.

Each test records a PASS/FAIL line in ``RESULTS``; the conftest prints them
at the end of the run, and ``python tests/test_acceptance.py`` prints them
directly.
"""

import sys
import time

import numpy as np
import pytest

from coquasi import zoo as cz
from coquasi.comodcat import Comodule, check_comodule, check_dual, dual_comodule, sample_comodules
from coquasi.cqb import (
    CoquasiBialgebra,
    Preantipode,
    check_morphism,
    check_preantipode,
    hat_epsilon_roundtrip,
    hopf_antipode_identities,
    preantipode_from_antipode,
    preantipode_system,
    solve_preantipode,
    validate_coquasi,
)
from coquasi.exactla import QQ, LinearMap, solve_affine
from coquasi.qb import (
    QuasiBialgebra,
    appendix_report,
    finite_dual,
    function_algebra,
    quasi_zoo,
    validate_quasi,
)
from coquasi.recon import (
    can_map,
    coend_bialgebra,
    coend_coalgebra,
    coend_preantipode,
    entry_grading_diagram,
    reconstruct,
    transport_report,
)

RESULTS: dict[int, str] = {}


def record(n: int, ok: bool, detail: str = "") -> None:
    RESULTS[n] = f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}" + (f"  ({detail})" if detail else "")
    assert ok, RESULTS[n]


@pytest.fixture(scope="module")
def catalogue():
    return cz.zoo(include_large=True)


@pytest.fixture(scope="module")
def quasi():
    return quasi_zoo()


def test_01_coend_preantipode_on_grading_diagrams():
    bad, worst = [], 0.0
    for mk in (cz.z2_omega, cz.z4_omega, cz.klein_omega):
        d, _ = entry_grading_diagram(mk())
        t = time.perf_counter()
        c = coend_coalgebra(d)
        s = coend_preantipode(d, c)
        dt = time.perf_counter() - t
        worst = max(worst, dt)
        rep = check_preantipode(coend_bialgebra(d, c), s)
        if not rep.passed or rep.failures or dt >= 1.0:
            bad.append(mk.__name__)
    record(1, not bad, f"slowest {worst:.3f}s" + (f"; failing {bad}" if bad else ""))


def test_02_can_transport(catalogue):
    bad, count = [], 0
    for e in catalogue:
        if e.group is None:
            continue
        count += 1
        d, lines = entry_grading_diagram(e)
        r = reconstruct(d)
        can, rep = can_map(d, r.coend, e.h, lines, r.h, r.S, e.S)
        if not (rep.passed and "Galois" in rep.flags and transport_report(can, r.h, e.h, r.S, e.S).passed):
            bad.append(e.name)
    record(2, not bad and count > 0, f"{count} twisted group algebras" + (f"; failing {bad}" if bad else ""))


def test_03_uniqueness(catalogue):
    population = list(catalogue) + cz.random_population(100, seed=7)
    bad = []
    for e in population:
        A, b = preantipode_system(e.h)
        sol = solve_affine(A, b, e.field)
        if sol is None or sol.nullspace.dim != 0:
            bad.append(e.name)
    record(3, not bad, f"{len(population)} systems" + (f"; failing {bad}" if bad else ""))


def test_04_beta_s_alpha(catalogue):
    hopf = [e for e in catalogue if e.hopf is not None]
    bad = [e.name for e in hopf if preantipode_from_antipode(e.h, e.hopf).s_map != solve_preantipode(e.h).s_map]
    record(4, hopf and not bad, f"{len(hopf)} coquasi-Hopf members" + (f"; failing {bad}" if bad else ""))


def test_05_trivial_omega_is_hopf(catalogue):
    population = list(catalogue) + cz.random_population(20, seed=11)
    trivial = [e for e in population if e.h.is_trivial_omega()]
    bad = []
    for e in trivial:
        s = solve_preantipode(e.h)
        if s is None or not hopf_antipode_identities(e.h, s).passed:
            bad.append(e.name)
    record(5, trivial and not bad, f"{len(trivial)} members with trivial omega" + (f"; failing {bad}" if bad else ""))


def test_06_dual_independence():
    rng = np.random.default_rng(3)
    bad = []
    for mk in (cz.z2_omega, cz.z4_omega, cz.klein_omega):
        d, _ = entry_grading_diagram(mk())
        base = coend_preantipode(d, coend_coalgebra(d)).s_map
        for _ in range(10):
            x = list(d.objects)[int(rng.integers(len(d.objects)))]
            lam = QQ(int(rng.integers(1, 30)) * (1 if rng.integers(2) else -1)) / int(rng.integers(1, 30))
            d2 = d.rescale_dual(x, lam)
            if coend_preantipode(d2, coend_coalgebra(d2)).s_map != base:
                bad.append((mk.__name__, x, str(lam)))
    record(6, not bad, "30 rescalings" + (f"; failing {bad}" if bad else ""))


def test_07_rigidity_witness(catalogue):
    rng = np.random.default_rng(5)
    bad, count = [], 0
    for e in catalogue:
        for v in sample_comodules(e.h, e.grouplikes, 4, rng):
            count += 1
            if not check_dual(dual_comodule(v, e.S)).passed:
                bad.append((e.name, v.name))
    record(7, not bad, f"{count} comodules" + (f"; failing {bad}" if bad else ""))


def test_08_hat_epsilon(catalogue):
    bad = [e.name for e in catalogue if not hat_epsilon_roundtrip(e.h, e.S).passed]
    record(8, not bad, f"{len(catalogue)} members" + (f"; failing {bad}" if bad else ""))


def _trivial_phi_reduction(a, s):
    """``S(ab) = S(b) S(1) S(a)`` on all basis pairs."""
    S, M = s.S, a.M
    s1 = S @ a.U
    lhs = np.einsum("kab,tk->abt", M, S)
    sbs1 = np.einsum("kij,ib,j->bk", M, S, s1)
    rhs = np.einsum("tij,bi,ja->abt", M, sbs1, S)
    return bool(np.all(lhs == rhs))


def test_09_appendix(quasi):
    bad, reduced = [], 0
    for q in quasi:
        ok = appendix_report(q.a, q.S).passed
        if q.a.is_trivial_phi():
            reduced += 1
            ok = ok and _trivial_phi_reduction(q.a, q.S)
        if not ok:
            bad.append(q.name)
    record(9, not bad and reduced > 0, f"{len(quasi)} quasi members, {reduced} with trivial Phi" + (f"; failing {bad}" if bad else ""))


def test_10_finite_dual(quasi):
    bad = []
    for q in quasi:
        h, sh = finite_dual(q.a, q.S)
        if not (validate_coquasi(h).passed and check_preantipode(h, sh).passed):
            bad.append(q.name)
    z = cz.z2_omega()
    a, s = function_algebra(z.group, z.cocycle, QQ)
    h, sh = finite_dual(a, s)
    iso = check_morphism(LinearMap.identity(2), h, z.h, sh, z.S).passed and LinearMap.identity(2).is_invertible()
    record(10, not bad and iso, f"{len(quasi)} quasi members; k^Z2_Phi pairing {'ok' if iso else 'broken'}" + (f"; failing {bad}" if bad else ""))


# negative controls -------------------------------------------------------------


def _bump(fld):
    return QQ(1) / 7 if fld is QQ else fld.one


def _omega_mutants(entries, rng):
    for e in entries:
        h = e.h
        W = h.omega.entries.copy()
        for pos in rng.choice(W.shape[1], size=min(2, W.shape[1]), replace=False):
            W2 = W.copy()
            W2[0, pos] = W2[0, pos] + _bump(h.field)
            h2 = CoquasiBialgebra(h.coalgebra, h.mult, h.unit, LinearMap(W2, h.field), h.name)
            yield f"omega {e.name}[{pos}]", validate_coquasi(h2)


def _s_mutants(entries, rng):
    for e in entries:
        S = e.S.s_map.entries
        for pos in rng.choice(S.size, size=min(2, S.size), replace=False):
            S2 = S.copy().reshape(-1)
            S2[pos] = S2[pos] + _bump(e.field)
            yield f"S {e.name}[{pos}]", check_preantipode(e.h, Preantipode(LinearMap(S2.reshape(S.shape), e.field)))


def _phi_mutants(quasi, rng):
    for q in quasi:
        a = q.a
        for pos in rng.choice(a.phi.size, size=min(2, a.phi.size), replace=False):
            F = a.phi.copy().reshape(-1)
            F[pos] = F[pos] + _bump(a.field)
            a2 = QuasiBialgebra(a.algebra, a.delta, a.counit, F.reshape(a.phi.shape), a.name)
            yield f"Phi {q.name}[{pos}]", validate_quasi(a2)


def _rho_mutants(entries, rng):
    for e in entries:
        for v in sample_comodules(e.h, e.grouplikes, 4)[1:4]:
            rho = v.rho.entries.reshape(-1).copy()
            pos = int(rng.integers(rho.size))
            rho[pos] = rho[pos] + _bump(e.field)
            v2 = Comodule(e.h, LinearMap(rho.reshape(v.rho.shape), e.field), v.name)
            yield f"rho {e.name}/{v.name}[{pos}]", check_comodule(v2)


def test_11_mutation_suite(catalogue, quasi):
    rng = np.random.default_rng(11)
    small = [e for e in catalogue if e.h.dim <= 4]
    mutants = []
    mutants += list(_omega_mutants(small, rng))
    mutants += list(_s_mutants(catalogue, rng))
    mutants += list(_phi_mutants([q for q in quasi if q.a.dim <= 4], rng))
    mutants += list(_rho_mutants(small, rng))
    false_passes = [name for name, rep in mutants if rep.passed or not rep.failed_axioms()]
    record(11, len(mutants) >= 50 and not false_passes, f"{len(mutants)} mutants, {len(false_passes)} false passes" + (f": {false_passes}" if false_passes else ""))


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
