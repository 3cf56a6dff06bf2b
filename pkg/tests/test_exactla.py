from fractions import Fraction

import numpy as np
import pytest

from coquasi.exactla import (
    GF,
    QQ,
    FieldMismatchError,
    Fp,
    LinearMap,
    Subspace,
    kron,
    nullspace,
    parse_field,
    quotient,
    rref,
    solve_affine,
    vec,
)


def test_kron_identities():
    assert kron(LinearMap.identity(2), LinearMap.identity(3)) == LinearMap.identity(6)


def test_kron_scalars():
    out = kron(LinearMap([[2]]), LinearMap([[3]]))
    assert out.entries[0, 0] == 6 and out.shape == (1, 1)


def test_kron_index_order():
    # index(e_i (x) f_j) = i * dim W + j
    a = LinearMap([[1, 2], [3, 4]])
    b = LinearMap([[0, 1], [1, 0]])
    k = kron(a, b).entries
    for i, j, p, q in np.ndindex(2, 2, 2, 2):
        assert k[i * 2 + p, j * 2 + q] == a.entries[i, j] * b.entries[p, q]


def test_solve_identity():
    sol = solve_affine(QQ.eye(2), vec([1, 0]))
    assert list(sol.particular) == [1, 0]
    assert sol.nullspace.dim == 0


def test_solve_inconsistent():
    assert solve_affine(QQ.zeros((2, 2)), vec([1, 0])) is None


def test_solve_rank_one():
    sol = solve_affine(QQ.array([[1, 1], [2, 2]]), vec([3, 6]))
    assert list(sol.particular) == [3, 0]
    assert sol.nullspace.dim == 1
    assert vec([1, -1]) in sol.nullspace


def test_quotient_by_zero():
    q = quotient(3, Subspace.zero(3))
    assert q.proj == LinearMap.identity(3) and q.section == LinearMap.identity(3)


def test_quotient_by_line():
    q = quotient(2, Subspace.span([vec([1, -1])], 2))
    assert q.dim == 1
    assert q.proj.entries[0, 0] == q.proj.entries[0, 1]


def test_quotient_by_everything():
    assert quotient(3, Subspace.full(3)).dim == 0


def test_rref_leftmost_pivots():
    rows, piv = rref(QQ.array([[0, 2, 4], [1, 1, 1], [1, 3, 5]]), QQ)
    assert piv == [0, 1]
    assert [list(r) for r in rows] == [[1, 0, -1], [0, 1, 2]]


def test_nullspace_fp():
    f = GF(5)
    ns = nullspace(f.array([[1, 2], [2, 4]]), f)
    assert ns.dim == 1
    assert f.array([-2, 1]) in ns


def test_inverse_roundtrip():
    a = LinearMap([[2, 1], [1, 1]])
    assert a @ a.inverse() == LinearMap.identity(2)


def test_rational_scalars_lowest_terms():
    assert QQ.format(QQ("6/4")) == "3/2"
    assert QQ.format(QQ(Fraction(-4, 2))) == "-2"


def test_floats_rejected():
    with pytest.raises(TypeError):
        QQ(0.5)


def test_fp_arithmetic():
    a, b = Fp(3, 7), Fp(5, 7)
    assert a * b == 1 and a + b == 1 and a / b == Fp(2, 7)


def test_fp_mismatch():
    with pytest.raises(FieldMismatchError):
        Fp(1, 5) + Fp(1, 7)


def test_parse_field():
    assert parse_field("rational") == QQ
    assert parse_field("fp:11") == GF(11)
    with pytest.raises(ValueError):
        parse_field("fp:9")
