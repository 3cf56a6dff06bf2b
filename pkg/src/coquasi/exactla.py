"""Exact linear algebra over the rationals and prime fields.

Matrices are numpy object arrays holding ``gmpy2.mpq`` or ``Fp`` entries.
A ``LinearMap`` of shape ``(cod, dom)`` sends the basis vector ``e_j`` of
the domain to column ``j``.  Tensor products use Kronecker order:
``index(e_i (x) f_j) = i * dim(W) + j``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np
from gmpy2 import mpq

_MPQ = type(mpq(0))
RATIONAL_TYPES = (Fraction, _MPQ)


class FieldMismatchError(TypeError):
    """Raised when scalars from different fields meet in one operation."""


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class Fp:
    """Residue class modulo a prime ``p``, stored as ``0 <= v < p``."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = int(v) % p
        self.p = p

    def _other(self, other):
        if isinstance(other, Fp):
            if other.p != self.p:
                raise FieldMismatchError(f"GF({self.p}) vs GF({other.p})")
            return other.v
        if isinstance(other, (bool, np.bool_)):
            return int(other)
        if isinstance(other, (int, np.integer)):
            return int(other)
        if isinstance(other, RATIONAL_TYPES):
            raise FieldMismatchError(f"GF({self.p}) vs QQ")
        return None

    def __add__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else Fp(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else Fp(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else Fp(o - self.v, self.p)

    def __mul__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else Fp(self.v * o, self.p)

    __rmul__ = __mul__

    def inverse(self) -> "Fp":
        if self.v == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.p})")
        return Fp(pow(self.v, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self * Fp(o, self.p).inverse()

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Fp(o, self.p) * self.inverse()

    def __neg__(self):
        return Fp(-self.v, self.p)

    def __pos__(self):
        return self

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return Fp(pow(self.v, e, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, Fp):
            return self.p == other.p and self.v == other.v
        if isinstance(other, (int, np.integer)) and not isinstance(other, bool):
            return self.v == int(other) % self.p
        if isinstance(other, RATIONAL_TYPES):
            raise FieldMismatchError(f"GF({self.p}) vs QQ")
        return NotImplemented

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return f"Fp({self.v}, {self.p})"


class Field:
    """Base class for the two supported ground fields."""

    name = "field"

    def __call__(self, x):
        raise NotImplementedError

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def array(self, data) -> np.ndarray:
        arr = np.array(data, dtype=object)
        if arr.size == 0:
            return arr
        return np.frompyfunc(self, 1, 1)(arr).astype(object)

    def zeros(self, shape) -> np.ndarray:
        arr = np.empty(shape, dtype=object)
        arr.fill(self.zero)
        return arr

    def eye(self, n: int) -> np.ndarray:
        arr = self.zeros((n, n))
        for i in range(n):
            arr[i, i] = self.one
        return arr

    def parse(self, obj):
        raise NotImplementedError

    def format(self, x):
        raise NotImplementedError

    def random(self, rng: np.random.Generator, bound: int = 3, nonzero: bool = False):
        raise NotImplementedError


class RationalField(Field):
    """Rationals, held as ``gmpy2.mpq`` (always in lowest terms)."""

    name = "QQ"

    def __call__(self, x):
        if type(x) is _MPQ:
            return x
        if isinstance(x, Fp):
            raise FieldMismatchError("cannot coerce a GF(p) residue into QQ")
        if isinstance(x, (bool, np.bool_, np.integer)):
            return mpq(int(x))
        if isinstance(x, (int, Fraction)):
            return mpq(x)
        if isinstance(x, str):
            return mpq(Fraction(x.strip()))
        if isinstance(x, float):
            raise TypeError("floating point scalars are not accepted")
        return mpq(x)

    def parse(self, obj):
        if isinstance(obj, dict):
            raise FieldMismatchError("prime-field scalar given where a rational was expected")
        if isinstance(obj, float):
            raise TypeError("floating point scalars are not accepted")
        return self(obj)

    def format(self, x) -> str:
        x = self(x)
        if x.denominator == 1:
            return str(x.numerator)
        return f"{x.numerator}/{x.denominator}"

    def random(self, rng, bound=3, nonzero=False):
        while True:
            num = int(rng.integers(-bound, bound + 1))
            den = int(rng.integers(1, bound + 1))
            x = mpq(num, den)
            if x or not nonzero:
                return x

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


class PrimeField(Field):
    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.name = f"GF({p})"

    def __call__(self, x):
        if isinstance(x, Fp):
            if x.p != self.p:
                raise FieldMismatchError(f"GF({x.p}) residue in GF({self.p})")
            return x
        if isinstance(x, (bool, np.bool_, int, np.integer)):
            return Fp(int(x), self.p)
        if isinstance(x, str):
            x = Fraction(x.strip())
        if isinstance(x, RATIONAL_TYPES):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"{x} has no image in GF({self.p})")
            return Fp(x.numerator, self.p) / Fp(x.denominator, self.p)
        raise TypeError(f"cannot coerce {x!r} into GF({self.p})")

    def parse(self, obj):
        if isinstance(obj, dict):
            if int(obj["p"]) != self.p:
                raise FieldMismatchError(f"GF({obj['p']}) scalar in GF({self.p}) data")
            v = int(obj["v"])
            if not 0 <= v < self.p:
                raise ValueError(f"residue {v} out of range for p={self.p}")
            return Fp(v, self.p)
        return self(obj)

    def format(self, x):
        x = self(x)
        return {"p": self.p, "v": x.v}

    def random(self, rng, bound=3, nonzero=False):
        lo = 1 if nonzero else 0
        return Fp(int(rng.integers(lo, self.p)), self.p)

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


QQ = RationalField()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def parse_field(text: str) -> Field:
    """``"rational"``/``"QQ"`` or ``"fp:<p>"``."""
    t = text.strip().lower()
    if t in ("rational", "qq", "q"):
        return QQ
    if t.startswith("fp:"):
        return GF(int(t[3:]))
    if t.startswith("gf(") and t.endswith(")"):
        return GF(int(t[3:-1]))
    raise ValueError(f"unknown field {text!r}")


def field_name(field: Field) -> str:
    return "rational" if field == QQ else f"fp:{field.p}"


def field_of(x) -> Field:
    if isinstance(x, Fp):
        return GF(x.p)
    return QQ


def _infer_field(arr: np.ndarray) -> Field:
    for x in arr.flat:
        if isinstance(x, Fp):
            return GF(x.p)
    return QQ


def same_field(*fields: Field) -> Field:
    f0 = fields[0]
    for f in fields[1:]:
        if f != f0:
            raise FieldMismatchError(f"{f0!r} vs {f!r}")
    return f0


def nonzero_mask(arr: np.ndarray) -> np.ndarray:
    return np.asarray(arr != 0, dtype=bool)


def is_zero(arr: np.ndarray) -> bool:
    return not nonzero_mask(arr).any()


class LinearMap:
    """Immutable dense matrix with exact entries, shape ``(cod_dim, dom_dim)``."""

    __slots__ = ("entries", "field")

    def __init__(self, entries, field: Field | None = None):
        arr = np.array(entries, dtype=object)
        if arr.ndim != 2:
            raise ValueError(f"LinearMap needs a 2-d array, got shape {arr.shape}")
        if field is None:
            field = _infer_field(arr)
        arr = field.array(arr) if arr.size else arr.reshape(arr.shape)
        arr.flags.writeable = False
        self.entries = arr
        self.field = field

    @classmethod
    def identity(cls, n: int, field: Field = QQ) -> "LinearMap":
        return cls(field.eye(n), field)

    @classmethod
    def zeros(cls, cod: int, dom: int, field: Field = QQ) -> "LinearMap":
        return cls(field.zeros((cod, dom)), field)

    @classmethod
    def column(cls, v, field: Field | None = None) -> "LinearMap":
        return cls(np.array(v, dtype=object).reshape(-1, 1), field)

    @classmethod
    def row(cls, v, field: Field | None = None) -> "LinearMap":
        return cls(np.array(v, dtype=object).reshape(1, -1), field)

    @property
    def cod_dim(self) -> int:
        return self.entries.shape[0]

    @property
    def dom_dim(self) -> int:
        return self.entries.shape[1]

    @property
    def shape(self):
        return self.entries.shape

    @property
    def T(self) -> "LinearMap":
        return LinearMap(self.entries.T, self.field)

    def copy_array(self) -> np.ndarray:
        return np.array(self.entries, dtype=object)

    def __matmul__(self, other):
        if isinstance(other, LinearMap):
            same_field(self.field, other.field)
            if self.dom_dim != other.cod_dim:
                raise ValueError(f"cannot compose {self.shape} with {other.shape}")
            if self.dom_dim == 0:
                return LinearMap.zeros(self.cod_dim, other.dom_dim, self.field)
            return LinearMap(self.entries @ other.entries, self.field)
        v = np.asarray(other, dtype=object)
        if v.shape[0] != self.dom_dim:
            raise ValueError(f"vector of length {v.shape[0]} for map with domain {self.dom_dim}")
        if self.dom_dim == 0:
            return self.field.zeros((self.cod_dim,) + v.shape[1:])
        return self.field.array(self.entries @ v)

    def _check_same(self, other):
        same_field(self.field, other.field)
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "LinearMap") -> "LinearMap":
        self._check_same(other)
        return LinearMap(self.entries + other.entries, self.field)

    def __sub__(self, other: "LinearMap") -> "LinearMap":
        self._check_same(other)
        return LinearMap(self.entries - other.entries, self.field)

    def __neg__(self) -> "LinearMap":
        return LinearMap(-self.entries, self.field)

    def scale(self, c) -> "LinearMap":
        return LinearMap(self.entries * self.field(c), self.field)

    def __eq__(self, other):
        if not isinstance(other, LinearMap):
            return NotImplemented
        if self.field != other.field or self.shape != other.shape:
            return False
        return bool(np.all(self.entries == other.entries))

    def __hash__(self):
        return hash((self.shape, tuple(self.entries.flat)))

    def is_zero(self) -> bool:
        return is_zero(self.entries)

    def rank(self) -> int:
        return len(rref(self.entries, self.field)[1])

    def is_invertible(self) -> bool:
        return self.cod_dim == self.dom_dim and self.rank() == self.dom_dim

    def inverse(self) -> "LinearMap":
        """Two-sided inverse; raises ``ValueError`` if singular."""
        n = self.dom_dim
        if self.cod_dim != n:
            raise ValueError("only square maps can be inverted")
        aug = np.concatenate([self.entries, self.field.eye(n)], axis=1)
        r, piv = rref(aug, self.field)
        if piv[:n] != list(range(n)):
            raise ValueError("map is singular")
        return LinearMap(r[:n, n:], self.field)

    def kron(self, other: "LinearMap") -> "LinearMap":
        return kron(self, other)

    def __repr__(self):
        rows = [[_short(x) for x in row] for row in self.entries]
        return f"LinearMap({self.cod_dim}x{self.dom_dim}, {self.field!r}, {rows})"


def _short(x):
    if isinstance(x, Fp):
        return x.v
    if isinstance(x, RATIONAL_TYPES):
        return str(x)
    return x


def as_map(x, field: Field | None = None) -> LinearMap:
    return x if isinstance(x, LinearMap) else LinearMap(x, field)


def kron(f: LinearMap, g: LinearMap) -> LinearMap:
    """Tensor product of maps in Kronecker order."""
    fld = same_field(f.field, g.field)
    return LinearMap(np.kron(f.entries, g.entries), fld)


def kron_all(maps: Sequence[LinearMap]) -> LinearMap:
    out = maps[0]
    for m in maps[1:]:
        out = kron(out, m)
    return out


def rref(a, field: Field) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form with leftmost pivots.

    Returns the nonzero rows and the list of pivot columns.
    """
    a = field.array(np.array(a, dtype=object))
    if a.ndim != 2:
        raise ValueError("rref needs a 2-d array")
    m, n = a.shape
    if m == 0 or n == 0:
        return field.zeros((0, n)), []
    a = a.copy()
    live = nonzero_mask(a)
    pivots: list[int] = []
    r = 0
    for c in range(n):
        if r == m:
            break
        cand = np.flatnonzero(live[r:, c])
        if cand.size == 0:
            continue
        k = r + int(cand[0])
        if k != r:
            a[[r, k]] = a[[k, r]]
            live[[r, k]] = live[[k, r]]
        piv = a[r, c]
        cols = np.flatnonzero(live[r])
        if piv != 1:
            inv = field.one / piv
            a[r, cols] = a[r, cols] * inv
        rows = np.flatnonzero(live[:, c])
        rows = rows[rows != r]
        if rows.size:
            factors = a[rows, c]
            block = a[np.ix_(rows, cols)] - np.multiply.outer(factors, a[r, cols])
            a[np.ix_(rows, cols)] = block
            live[np.ix_(rows, cols)] = nonzero_mask(block)
        pivots.append(c)
        r += 1
    return a[:r], pivots


@dataclass(frozen=True)
class Subspace:
    """Subspace of ``field**ambient_dim`` held by its RREF basis rows."""

    ambient_dim: int
    rows: np.ndarray
    pivots: tuple
    field: Field

    @classmethod
    def span(cls, vectors, ambient_dim: int, field: Field = QQ) -> "Subspace":
        vecs = np.array(vectors, dtype=object).reshape(-1, ambient_dim)
        r, piv = rref(vecs, field)
        r.flags.writeable = False
        return cls(ambient_dim, r, tuple(piv), field)

    @classmethod
    def zero(cls, ambient_dim: int, field: Field = QQ) -> "Subspace":
        return cls.span(field.zeros((0, ambient_dim)), ambient_dim, field)

    @classmethod
    def full(cls, ambient_dim: int, field: Field = QQ) -> "Subspace":
        return cls.span(field.eye(ambient_dim), ambient_dim, field)

    @property
    def dim(self) -> int:
        return self.rows.shape[0]

    @property
    def basis(self) -> list[np.ndarray]:
        return [np.array(row, dtype=object) for row in self.rows]

    def matrix(self) -> LinearMap:
        """Basis vectors as the columns of an ``ambient x dim`` map."""
        if self.dim == 0:
            return LinearMap.zeros(self.ambient_dim, 0, self.field)
        return LinearMap(self.rows.T, self.field)

    def coordinates(self, v) -> np.ndarray | None:
        """Coordinates of ``v`` in the echelon basis, or ``None`` if ``v`` is outside."""
        v = self.field.array(np.asarray(v, dtype=object).reshape(self.ambient_dim))
        coords = v[list(self.pivots)] if self.pivots else self.field.zeros(0)
        recon = coords @ self.rows if self.dim else self.field.zeros(self.ambient_dim)
        if not np.all(recon == v):
            return None
        return self.field.array(coords)

    def __contains__(self, v) -> bool:
        return self.coordinates(v) is not None

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.ambient_dim == other.ambient_dim
            and self.pivots == other.pivots
            and bool(np.all(self.rows == other.rows))
        )

    def __hash__(self):
        return hash((self.ambient_dim, self.pivots))


def nullspace(a, field: Field) -> Subspace:
    """Kernel of the matrix ``a`` (acting on column vectors)."""
    a = np.array(a.entries if isinstance(a, LinearMap) else a, dtype=object)
    n = a.shape[1]
    r, piv = rref(a, field)
    free = [c for c in range(n) if c not in set(piv)]
    vecs = field.zeros((len(free), n))
    for t, f in enumerate(free):
        vecs[t, f] = field.one
        for row, c in enumerate(piv):
            vecs[t, c] = -r[row, f]
    return Subspace.span(vecs, n, field)


@dataclass(frozen=True)
class AffineSolution:
    particular: np.ndarray
    nullspace: Subspace


def solve_affine(a, b, field: Field | None = None) -> AffineSolution | None:
    """Solve ``a x = b`` exactly; ``None`` when the system is inconsistent.

    The particular solution sets every free variable to zero.
    """
    if isinstance(a, LinearMap):
        field = field or a.field
        a = a.entries
    field = field or QQ
    a = np.array(a, dtype=object)
    b = np.asarray(b, dtype=object).reshape(-1)
    if a.shape[0] != b.shape[0]:
        raise ValueError(f"A has {a.shape[0]} rows but b has length {b.shape[0]}")
    n = a.shape[1]
    aug = np.concatenate([a, b.reshape(-1, 1)], axis=1)
    r, piv = rref(aug, field)
    if piv and piv[-1] == n:
        return None
    x = field.zeros(n)
    for row, c in enumerate(piv):
        x[c] = r[row, n]
    free = [c for c in range(n) if c not in set(piv)]
    vecs = field.zeros((len(free), n))
    for t, f in enumerate(free):
        vecs[t, f] = field.one
        for row, c in enumerate(piv):
            vecs[t, c] = -r[row, f]
    return AffineSolution(x, Subspace.span(vecs, n, field))


@dataclass(frozen=True)
class Quotient:
    proj: LinearMap
    section: LinearMap
    relations: Subspace

    @property
    def dim(self) -> int:
        return self.proj.cod_dim


def quotient(ambient_dim: int, relations: Subspace) -> Quotient:
    """Quotient of ``field**ambient_dim`` by ``relations``.

    The quotient basis is the images of the non-pivot coordinates, in
    increasing order; ``section`` sends each of them back to its coordinate.
    """
    if relations.ambient_dim != ambient_dim:
        raise ValueError("relations live in a different ambient space")
    field = relations.field
    pivots = list(relations.pivots)
    free = [c for c in range(ambient_dim) if c not in set(pivots)]
    q = len(free)
    proj = field.zeros((q, ambient_dim))
    section = field.zeros((ambient_dim, q))
    for t, c in enumerate(free):
        proj[t, c] = field.one
        section[c, t] = field.one
    for row, c in enumerate(pivots):
        for t, f in enumerate(free):
            proj[t, c] = -relations.rows[row, f]
    return Quotient(LinearMap(proj, field), LinearMap(section, field), relations)


def matrix_inverse(a: np.ndarray, field: Field) -> np.ndarray:
    return LinearMap(a, field).inverse().copy_array()


def random_invertible(n: int, field: Field, rng: np.random.Generator, steps: int | None = None) -> LinearMap:
    """Product of elementary matrices; over QQ it has integer entries and determinant 1."""
    m = field.eye(n)
    steps = steps if steps is not None else 2 * n
    for _ in range(steps):
        if n < 2:
            break
        i, j = rng.choice(n, size=2, replace=False)
        c = field(int(rng.integers(-2, 3)) or 1)
        m[i] = m[i] + c * m[j]
    perm = rng.permutation(n)
    return LinearMap(m[perm], field)


def vec(values: Iterable, field: Field = QQ) -> np.ndarray:
    return field.array(list(values))
