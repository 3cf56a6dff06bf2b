"""Coalgebras, algebras and the convolution product.

Structure constants are read as tensors:

* ``D[i, j, k]``: coefficient of ``e_i (x) e_j`` in ``Delta(e_k)``
* ``E[k]``: ``eps(e_k)``
* ``M[k, i, j]``: coefficient of ``e_k`` in ``e_i e_j``
* ``U[k]``: coefficient of ``e_k`` in the unit
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .exactla import QQ, Field, LinearMap, is_zero, kron, same_field, solve_affine
from .report import Report


class NotInvertibleError(ValueError):
    """A convolution inverse does not exist; ``side`` says which identity failed."""

    def __init__(self, side: str, message: str = ""):
        super().__init__(message or f"no convolution inverse ({side} identity fails)")
        self.side = side


_PATHS: dict = {}


def einsum(spec: str, *ops):
    """``np.einsum`` with a cached pairwise contraction order.

    numpy's default optimizer refuses intermediates larger than the inputs,
    which on object arrays means one huge nested loop.
    """
    if len(ops) <= 2:
        return np.einsum(spec, *ops)
    key = (spec, tuple(o.shape for o in ops))
    path = _PATHS.get(key)
    if path is None:
        path = np.einsum_path(spec, *ops, optimize=("greedy", 2**40))[0]
        _PATHS[key] = path
    return np.einsum(spec, *ops, optimize=path)


@dataclass(frozen=True, eq=False)
class Coalgebra:
    delta: LinearMap
    counit: LinearMap

    def __post_init__(self):
        n = self.delta.dom_dim
        if self.delta.cod_dim != n * n:
            raise ValueError(f"Delta must be {n*n}x{n}, got {self.delta.shape}")
        if self.counit.shape != (1, n):
            raise ValueError(f"counit must be 1x{n}, got {self.counit.shape}")
        same_field(self.delta.field, self.counit.field)

    @property
    def dim(self) -> int:
        return self.delta.dom_dim

    @property
    def field(self) -> Field:
        return self.delta.field

    @cached_property
    def D(self) -> np.ndarray:
        n = self.dim
        return self.delta.entries.reshape(n, n, n)

    @cached_property
    def E(self) -> np.ndarray:
        return self.counit.entries[0]

    @cached_property
    def D3(self) -> np.ndarray:
        """``D3[a, b, c, x]``: coefficient of ``a (x) b (x) c`` in the double coproduct of ``x``."""
        return einsum("abi,icx->abcx", self.D, self.D)

    def __eq__(self, other):
        return isinstance(other, Coalgebra) and self.delta == other.delta and self.counit == other.counit

    __hash__ = object.__hash__


@dataclass(frozen=True, eq=False)
class Algebra:
    mult: LinearMap
    unit: LinearMap

    def __post_init__(self):
        n = self.mult.cod_dim
        if self.mult.dom_dim != n * n:
            raise ValueError(f"m must be {n}x{n*n}, got {self.mult.shape}")
        if self.unit.shape != (n, 1):
            raise ValueError(f"unit must be {n}x1, got {self.unit.shape}")
        same_field(self.mult.field, self.unit.field)

    @property
    def dim(self) -> int:
        return self.mult.cod_dim

    @property
    def field(self) -> Field:
        return self.mult.field

    @cached_property
    def M(self) -> np.ndarray:
        n = self.dim
        return self.mult.entries.reshape(n, n, n)

    @cached_property
    def U(self) -> np.ndarray:
        return self.unit.entries[:, 0]

    def __eq__(self, other):
        return isinstance(other, Algebra) and self.mult == other.mult and self.unit == other.unit

    __hash__ = object.__hash__


def ground_algebra(field: Field = QQ) -> Algebra:
    """The field itself as a one-dimensional algebra."""
    return Algebra(LinearMap.identity(1, field), LinearMap.identity(1, field))


def check_coalgebra(c: Coalgebra) -> Report:
    rep = Report("coalgebra")
    n, D, E = c.dim, c.D, c.E
    eye = c.field.eye(n)
    lhs = einsum("abi,ick->kabc", D, D)
    rhs = einsum("ajk,bcj->kabc", D, D)
    rep.compare("coassociativity", lhs, rhs, 1)
    rep.compare("left counit", einsum("a,abk->kb", E, D), eye, 1)
    rep.compare("right counit", einsum("b,abk->ka", E, D), eye, 1)
    return rep


def check_algebra(a: Algebra) -> Report:
    rep = Report("algebra")
    n, M, U = a.dim, a.M, a.U
    eye = a.field.eye(n)
    lhs = einsum("sij,tsk->ijkt", M, M)
    rhs = einsum("sjk,tis->ijkt", M, M)
    rep.compare("associativity", lhs, rhs, 3)
    rep.compare("left unit", einsum("i,tij->jt", U, M), eye, 1)
    rep.compare("right unit", einsum("j,tij->it", U, M), eye, 1)
    return rep


def dual_algebra(c: Coalgebra) -> Algebra:
    """The dual algebra ``C*`` (transposed structure maps)."""
    return Algebra(c.delta.T, c.counit.T)


def dual_coalgebra(a: Algebra) -> Coalgebra:
    return Coalgebra(a.mult.T, a.unit.T)


def tensor_power(c: Coalgebra, k: int) -> Coalgebra:
    """``C`` tensored ``k`` times, with ``Delta`` routed through the middle-four interchange."""
    n, fld = c.dim, c.field
    delta, counit = c.delta, c.counit
    for j in range(1, k):
        m = n**j
        big = kron(delta, c.delta)
        # (a1 b1) (a2 b2) <- a1 a2 b1 b2 : swap the middle factors
        perm = np.arange(m * m * n * n).reshape(m, m, n, n).transpose(0, 2, 1, 3).reshape(-1)
        delta = LinearMap(big.entries[perm], fld)
        counit = kron(counit, c.counit)
    return Coalgebra(delta, counit)


def convolve(f: LinearMap, g: LinearMap, c: Coalgebra, a: Algebra) -> LinearMap:
    """``m o (f (x) g) o Delta`` for ``f, g: C -> A``."""
    for h in (f, g):
        if h.shape != (a.dim, c.dim):
            raise ValueError(f"expected a {a.dim}x{c.dim} map, got {h.shape}")
    out = einsum("kij,ia,jb,abx->kx", a.M, f.entries, g.entries, c.D)
    return LinearMap(out, c.field)


def convolve_bimodule(f: LinearMap, phi: LinearMap, g: LinearMap, c: Coalgebra, a: Algebra) -> LinearMap:
    """``x -> sum f(x1) phi(x2) g(x3)``."""
    return convolve(convolve(f, phi, c, a), g, c, a)


def convolution_unit(c: Coalgebra, a: Algebra) -> LinearMap:
    return LinearMap(np.multiply.outer(a.U, c.E), c.field)


def convolution_inverse(f: LinearMap, c: Coalgebra) -> LinearMap:
    """Two-sided convolution inverse of a functional ``f: C -> k``.

    Solves ``f * g = eps`` for a right inverse and then checks ``g * f = eps``.
    Raises ``NotInvertibleError`` otherwise.
    """
    if f.shape != (1, c.dim):
        raise ValueError(f"expected a 1x{c.dim} functional, got {f.shape}")
    k = ground_algebra(c.field)
    # (f*g)(x) = sum_ab f(a) g(b) D[a,b,x]
    system = einsum("a,abx->xb", f.entries[0], c.D)
    sol = solve_affine(system, c.E, c.field)
    if sol is None:
        raise NotInvertibleError("right")
    g = LinearMap.row(sol.particular, c.field)
    if convolve(g, f, c, k) != c.counit:
        raise NotInvertibleError("left")
    return g


def convolve_forms(f: np.ndarray, g: np.ndarray, D: np.ndarray) -> np.ndarray:
    """Convolution of ``k``-linear forms on ``C`` (arrays of shape ``(n,)*k``).

    Same result as ``convolve`` on the tensor-power coalgebra, without
    building its coproduct matrix.
    """
    k = f.ndim
    letters = "abcdefghijklmnopqrstuvwxyz"
    fa, ga, xa = letters[:k], letters[k : 2 * k], letters[2 * k : 3 * k]
    terms = [fa, ga] + [fa[i] + ga[i] + xa[i] for i in range(k)]
    return einsum(",".join(terms) + "->" + xa, f, g, *([D] * k))


def counit_form(E: np.ndarray, k: int) -> np.ndarray:
    out = E
    for _ in range(k - 1):
        out = np.multiply.outer(out, E)
    return out


def form_convolution_inverse(f: np.ndarray, c: Coalgebra) -> np.ndarray:
    """Convolution inverse of a ``k``-form on ``C``, certified on both sides."""
    k, n = f.ndim, c.dim
    letters = "abcdefghijklmnopqrstuvwxyz"
    fa, ga, xa = letters[:k], letters[k : 2 * k], letters[2 * k : 3 * k]
    terms = [fa] + [fa[i] + ga[i] + xa[i] for i in range(k)]
    system = einsum(",".join(terms) + "->" + xa + ga, f, *([c.D] * k))
    unit = counit_form(c.E, k)
    sol = solve_affine(system.reshape(n**k, n**k), unit.reshape(-1), c.field)
    if sol is None:
        raise NotInvertibleError("right")
    g = sol.particular.reshape((n,) * k)
    if not is_zero(convolve_forms(g, f, c.D) - unit):
        raise NotInvertibleError("left")
    return g
