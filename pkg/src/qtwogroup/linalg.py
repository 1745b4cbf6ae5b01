"""Exact linear algebra on tensor-power bases.

Vectors are sparse dicts ``{index: nonzero scalar}``.  A :class:`LinearMap`
is presented column by column: ``f.col(j)`` is the image of the basis
vector ``e_j``.  Tensor indices are row-major: ``e_i (x) e_j`` in an
``n (x) m`` space has flat index ``i*m + j``.

``compose``, ``kron`` and the factor permutations return lazy maps whose
columns are computed on demand; call :meth:`LinearMap.materialize` to
freeze one into a :class:`Matrix`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Callable, Iterable, Sequence

from .fields import Field, FieldMismatch, same_field

Vec = dict


class DimensionMismatch(ValueError):
    pass


# ---------------------------------------------------------------- vectors


def vec_axpy(acc: Vec, c, v: Vec, field: Field) -> Vec:
    """acc += c*v in place (zeros removed)."""
    if c == 0:
        return acc
    p = field.p
    get = acc.get
    if p is not None:
        for k, x in v.items():
            y = (get(k, 0) + c * x) % p
            if y:
                acc[k] = y
            else:
                acc.pop(k, None)
    else:
        norm = field.norm
        for k, x in v.items():
            y = norm(get(k, 0) + c * x)
            if y:
                acc[k] = y
            else:
                acc.pop(k, None)
    return acc


def vec_add(u: Vec, v: Vec, field: Field) -> Vec:
    return vec_axpy(dict(u), 1, v, field)


def vec_sub(u: Vec, v: Vec, field: Field) -> Vec:
    return vec_axpy(dict(u), field.neg(1), v, field)


def vec_scale(c, v: Vec, field: Field) -> Vec:
    if c == 0:
        return {}
    return {k: field.mul(c, x) for k, x in v.items()}


def vec_tensor(u: Vec, v: Vec, m: int, field: Field) -> Vec:
    """u (x) v where v lives in an m-dimensional space."""
    p = field.p
    if p is not None:
        return {i * m + k: (a * b) % p for i, a in u.items() for k, b in v.items()}
    norm = field.norm
    return {i * m + k: norm(a * b) for i, a in u.items() for k, b in v.items()}


def basis_vec(i: int) -> Vec:
    return {i: 1}


def unravel(j: int, dims: Sequence[int]) -> tuple[int, ...]:
    out = []
    for d in reversed(dims):
        j, r = divmod(j, d)
        out.append(r)
    return tuple(reversed(out))


def ravel(idx: Sequence[int], dims: Sequence[int]) -> int:
    j = 0
    for i, d in zip(idx, dims):
        j = j * d + i
    return j


def prod(dims: Iterable[int]) -> int:
    return reduce(lambda a, b: a * b, dims, 1)


# ---------------------------------------------------------------- maps


class LinearMap:
    """Abstract exact linear map ``cols``-dim -> ``rows``-dim."""

    def __init__(self, rows: int, cols: int, field: Field):
        self.rows = rows
        self.cols = cols
        self.field = field

    def col(self, j: int) -> Vec:
        raise NotImplementedError

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def apply(self, v: Vec) -> Vec:
        out: Vec = {}
        for j, c in v.items():
            vec_axpy(out, c, self.col(j), self.field)
        return out

    def __call__(self, v: Vec) -> Vec:
        return self.apply(v)

    def columns(self):
        for j in range(self.cols):
            yield self.col(j)

    def materialize(self) -> "Matrix":
        return Matrix(self.rows, self.cols, self.field, [dict(c) for c in self.columns()])

    def entry(self, i: int, j: int):
        return self.col(j).get(i, 0)

    def to_dense(self) -> list[list]:
        out = [[0] * self.cols for _ in range(self.rows)]
        for j in range(self.cols):
            for i, x in self.col(j).items():
                out[i][j] = x
        return out

    def transpose(self) -> "Matrix":
        cols: list[Vec] = [{} for _ in range(self.rows)]
        for j in range(self.cols):
            for i, x in self.col(j).items():
                cols[i][j] = x
        return Matrix(self.cols, self.rows, self.field, cols)

    def row_vectors(self) -> list[Vec]:
        return self.transpose()._cols

    def first_difference(self, other: "LinearMap") -> int | None:
        _check_same_shape(self, other)
        for j in range(self.cols):
            if self.col(j) != other.col(j):
                return j
        return None

    def __eq__(self, other):
        if not isinstance(other, LinearMap):
            return NotImplemented
        if self.shape != other.shape or self.field != other.field:
            return False
        return self.first_difference(other) is None

    __hash__ = None

    def is_zero(self) -> bool:
        return all(not self.col(j) for j in range(self.cols))

    def __matmul__(self, other: "LinearMap") -> "LinearMap":
        return compose(self, other)

    def __add__(self, other):
        return lincomb([(1, self), (1, other)])

    def __sub__(self, other):
        return lincomb([(1, self), (-1, other)])

    def __neg__(self):
        return lincomb([(-1, self)])

    def scaled(self, c) -> "LinearMap":
        return lincomb([(c, self)])

    def __repr__(self):
        return f"<{type(self).__name__} {self.rows}x{self.cols} over {self.field.name}>"


class Matrix(LinearMap):
    """Explicit map with stored sparse columns."""

    def __init__(self, rows: int, cols: int, field: Field, columns: Sequence[Vec]):
        super().__init__(rows, cols, field)
        if len(columns) != cols:
            raise DimensionMismatch(f"expected {cols} columns, got {len(columns)}")
        for c in columns:
            for i in c:
                if not 0 <= i < rows:
                    raise DimensionMismatch(f"row index {i} out of range for {rows} rows")
        self._cols = tuple(columns)

    def col(self, j: int) -> Vec:
        return self._cols[j]

    def materialize(self) -> "Matrix":
        return self

    def nnz(self) -> int:
        return sum(len(c) for c in self._cols)


class _Composed(LinearMap):
    def __init__(self, f: LinearMap, g: LinearMap):
        super().__init__(f.rows, g.cols, f.field)
        self.f, self.g = f, g

    def col(self, j):
        return self.f.apply(self.g.col(j))


class _Kron(LinearMap):
    def __init__(self, f: LinearMap, g: LinearMap):
        super().__init__(f.rows * g.rows, f.cols * g.cols, f.field)
        self.f, self.g = f, g

    def col(self, j):
        j1, j2 = divmod(j, self.g.cols)
        return vec_tensor(self.f.col(j1), self.g.col(j2), self.g.rows, self.field)

    def apply(self, v):
        # group by the left factor to reuse f's columns
        g, f, field = self.g, self.f, self.field
        by_left: dict[int, Vec] = {}
        for j, c in v.items():
            j1, j2 = divmod(j, g.cols)
            by_left.setdefault(j1, {})[j2] = c
        out: Vec = {}
        for j1, w in by_left.items():
            gw = g.apply(w)
            if gw:
                vec_axpy(out, 1, vec_tensor(f.col(j1), gw, g.rows, field), field)
        return out


class _Permutation(LinearMap):
    def __init__(self, dims: Sequence[int], perm: Sequence[int], field: Field):
        n = prod(dims)
        super().__init__(n, n, field)
        self.dims = tuple(dims)
        self.perm = tuple(perm)
        self.out_dims = tuple(dims[k] for k in perm)

    def target(self, j: int) -> int:
        idx = unravel(j, self.dims)
        return ravel([idx[k] for k in self.perm], self.out_dims)

    def col(self, j):
        return {self.target(j): 1}

    def apply(self, v):
        return {self.target(j): c for j, c in v.items()}


class _LinComb(LinearMap):
    def __init__(self, terms: Sequence[tuple[object, LinearMap]]):
        f0 = terms[0][1]
        super().__init__(f0.rows, f0.cols, f0.field)
        self.terms = [(f0.field(c) if not isinstance(c, int) else f0.field.norm(c), f) for c, f in terms]

    def col(self, j):
        out: Vec = {}
        for c, f in self.terms:
            vec_axpy(out, c, f.col(j), self.field)
        return out


class FunctionMap(LinearMap):
    """Map given by a Python function on basis indices."""

    def __init__(self, rows: int, cols: int, field: Field, fn: Callable[[int], Vec], cache: bool = False):
        super().__init__(rows, cols, field)
        self.fn = fn
        self._cache: dict[int, Vec] | None = {} if cache else None

    def col(self, j):
        if self._cache is None:
            return self.fn(j)
        c = self._cache.get(j)
        if c is None:
            c = self._cache[j] = self.fn(j)
        return c


def _check_same_shape(f: LinearMap, g: LinearMap):
    same_field(f.field, g.field)
    if f.shape != g.shape:
        raise DimensionMismatch(f"shape mismatch: {f.shape} vs {g.shape}")


def compose(f: LinearMap, g: LinearMap) -> LinearMap:
    """f . g (apply g first)."""
    if f.field != g.field:
        raise FieldMismatch(f"field mismatch: {f.field.name} vs {g.field.name}")
    if f.cols != g.rows:
        raise DimensionMismatch(f"cannot compose {f.rows}x{f.cols} after {g.rows}x{g.cols}")
    return _Composed(f, g)


def chain(*maps: LinearMap) -> LinearMap:
    """chain(f, g, h) == f . g . h"""
    return reduce(compose, maps)


def kron(*maps: LinearMap) -> LinearMap:
    if not maps:
        raise ValueError("kron of nothing")
    for m in maps[1:]:
        if m.field != maps[0].field:
            raise FieldMismatch(f"field mismatch: {maps[0].field.name} vs {m.field.name}")
    return reduce(_Kron, maps)


def lincomb(terms: Sequence[tuple[object, LinearMap]]) -> LinearMap:
    for _, f in terms[1:]:
        _check_same_shape(terms[0][1], f)
    return _LinComb(terms)


def identity(n: int, field: Field) -> Matrix:
    return Matrix(n, n, field, [{j: 1} for j in range(n)])


def zero_map(rows: int, cols: int, field: Field) -> Matrix:
    return Matrix(rows, cols, field, [{} for _ in range(cols)])


def permute_factors(dims: Sequence[int], perm: Sequence[int], field: Field) -> LinearMap:
    """Reorder tensor factors: output factor k is input factor ``perm[k]``."""
    if sorted(perm) != list(range(len(dims))):
        raise ValueError(f"{perm} is not a permutation of {len(dims)} factors")
    return _Permutation(dims, perm, field)


def flip(n: int, m: int, field: Field) -> LinearMap:
    """e_i (x) e_j  ->  e_j (x) e_i  on n (x) m."""
    return _Permutation((n, m), (1, 0), field)


def from_dense(rows: Sequence[Sequence], field: Field) -> Matrix:
    nr = len(rows)
    nc = len(rows[0]) if nr else 0
    cols = [{} for _ in range(nc)]
    for i, r in enumerate(rows):
        if len(r) != nc:
            raise DimensionMismatch("ragged dense matrix")
        for j, x in enumerate(r):
            x = field(x)
            if x:
                cols[j][i] = x
    return Matrix(nr, nc, field, cols)


def from_columns(rows: int, columns: Sequence[Vec], field: Field) -> Matrix:
    return Matrix(rows, len(columns), field, [dict(c) for c in columns])


def from_function(rows: int, cols: int, field: Field, fn: Callable[[int], Vec]) -> Matrix:
    return Matrix(rows, cols, field, [fn(j) for j in range(cols)])


# ---------------------------------------------------------------- elimination


def _primitive(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for x in row.values():
        g = gcd(g, x)
        if g == 1:
            return row
    if g > 1:
        return {k: x // g for k, x in row.items()}
    return row


def _integral(row: Vec) -> dict[int, int]:
    den = 1
    for x in row.values():
        if type(x) is Fraction:
            den = den * x.denominator // gcd(den, x.denominator)
    if den == 1:
        return _primitive({k: int(x) for k, x in row.items()})
    return _primitive({k: int(x * den) for k, x in row.items()})


def _echelon_q(rows: Iterable[Vec]) -> dict[int, dict[int, int]]:
    # fraction-free forward elimination with content removal
    pivots: dict[int, dict[int, int]] = {}
    for r in rows:
        if not r:
            continue
        r = _integral(r)
        while r:
            c = min(r)
            pr = pivots.get(c)
            if pr is None:
                pivots[c] = r
                break
            lead, a = pr[c], r[c]
            g = gcd(lead, a)
            lead, a = lead // g, a // g
            new = {k: lead * x for k, x in r.items()}
            for k, x in pr.items():
                y = new.get(k, 0) - a * x
                if y:
                    new[k] = y
                else:
                    new.pop(k, None)
            r = _primitive(new)
    return pivots


def _echelon_p(rows: Iterable[Vec], p: int) -> dict[int, dict[int, int]]:
    pivots: dict[int, dict[int, int]] = {}
    for r in rows:
        if not r:
            continue
        r = dict(r)
        while r:
            c = min(r)
            pr = pivots.get(c)
            if pr is None:
                inv = pow(r[c], -1, p)
                pivots[c] = {k: (x * inv) % p for k, x in r.items()}
                break
            a = r[c]
            for k, x in pr.items():
                y = (r.get(k, 0) - a * x) % p
                if y:
                    r[k] = y
                else:
                    r.pop(k, None)
    return pivots


def rref(rows: Iterable[Vec], field: Field) -> list[Vec]:
    """Reduced row-echelon basis of the span of ``rows``, sorted by pivot column.

    Each returned row has leading entry 1 and zeros in every other row's
    pivot column, so the output depends only on the span.
    """
    if field.p is not None:
        piv = _echelon_p(rows, field.p)
    else:
        piv = {c: {k: field.norm(Fraction(x, r[c])) for k, x in r.items()} for c, r in _echelon_q(rows).items()}
    reduced: dict[int, Vec] = {}
    for c in sorted(piv, reverse=True):
        row = dict(piv[c])
        for c2 in [k for k in row if k != c and k in reduced]:
            a = row.get(c2)
            if a:
                vec_axpy(row, field.neg(a), reduced[c2], field)
        reduced[c] = row
    return [reduced[c] for c in sorted(reduced)]


def rank(f: LinearMap) -> int:
    return len(rref(f.row_vectors(), f.field))


@dataclass(frozen=True, eq=False)
class SubspaceBasis:
    """Canonical (reduced row-echelon) basis of a subspace."""

    ambient_dim: int
    vectors: tuple
    field: Field

    @classmethod
    def span(cls, vectors: Iterable[Vec], ambient_dim: int, field: Field) -> "SubspaceBasis":
        vs = list(vectors)
        for v in vs:
            if v and max(v) >= ambient_dim:
                raise DimensionMismatch(f"vector index {max(v)} outside ambient dim {ambient_dim}")
        return cls(ambient_dim, tuple(rref(vs, field)), field)

    @property
    def dim(self) -> int:
        return len(self.vectors)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(min(v) for v in self.vectors)

    def __len__(self):
        return len(self.vectors)

    def __eq__(self, other):
        if not isinstance(other, SubspaceBasis):
            return NotImplemented
        return subspace_equal(self, other)

    __hash__ = None

    def reduce(self, v: Vec) -> Vec:
        r = dict(v)
        f = self.field
        for b in self.vectors:
            a = r.get(min(b))
            if a:
                vec_axpy(r, f.neg(a), b, f)
        return r

    def contains(self, v: Vec) -> bool:
        return not self.reduce(v)

    def inclusion(self) -> Matrix:
        return Matrix(self.ambient_dim, self.dim, self.field, list(self.vectors))

    def coordinates(self, v: Vec) -> Vec | None:
        """Coordinates of v in this basis, or None if v is not in the span."""
        if not self.contains(v):
            return None
        return {k: v[min(b)] for k, b in enumerate(self.vectors) if v.get(min(b))}


def kernel_basis(f: LinearMap) -> SubspaceBasis:
    """Canonical basis of ker f."""
    field = f.field
    rows = rref(f.row_vectors(), field)
    pivot_of = {min(r): r for r in rows}
    free = [j for j in range(f.cols) if j not in pivot_of]
    # column j of the reduced system, read off per pivot row
    by_col: dict[int, list[tuple[int, object]]] = {}
    for c, r in pivot_of.items():
        for k, x in r.items():
            if k != c:
                by_col.setdefault(k, []).append((c, x))
    vecs = []
    for j in free:
        v = {j: 1}
        for c, x in by_col.get(j, ()):
            v[c] = field.neg(x)
        vecs.append(v)
    return SubspaceBasis.span(vecs, f.cols, field)


def image_basis(f: LinearMap) -> SubspaceBasis:
    return SubspaceBasis.span(f.columns(), f.rows, f.field)


def subspace_equal(a: SubspaceBasis, b: SubspaceBasis) -> bool:
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatch(f"ambient dims differ: {a.ambient_dim} vs {b.ambient_dim}")
    same_field(a.field, b.field)
    if a.dim != b.dim:
        return False
    # equal ranks, so mutual containment reduces to one direction
    return all(a.contains(v) for v in b.vectors)


def subspace_contains(a: SubspaceBasis, v: Vec) -> bool:
    if v and max(v) >= a.ambient_dim:
        raise DimensionMismatch(f"vector index {max(v)} outside ambient dim {a.ambient_dim}")
    return a.contains(v)


def solve(a: LinearMap, b: Vec) -> Vec | None:
    """Some x with a(x) == b, or None when the system is infeasible."""
    n = a.cols
    rows = a.row_vectors()
    aug = [dict(r) for r in rows]
    for i, x in b.items():
        aug[i][n] = x
    red = rref(aug, a.field)
    x: Vec = {}
    for r in red:
        c = min(r)
        if c == n:
            return None
        if r.get(n):
            x[c] = r[n]
    return x


class SingularMap(ArithmeticError):
    pass


def inverse(f: LinearMap) -> Matrix:
    if f.rows != f.cols:
        raise DimensionMismatch(f"cannot invert a {f.rows}x{f.cols} map")
    n = f.rows
    aug = [dict(r) for r in f.row_vectors()]
    for i in range(n):
        aug[i][n + i] = 1
    red = rref(aug, f.field)
    if len(red) < n or any(min(r) != i for i, r in enumerate(red[:n])):
        raise SingularMap("map is not invertible")
    cols: list[Vec] = [{} for _ in range(n)]
    for i, r in enumerate(red):
        for k, x in r.items():
            if k >= n:
                cols[k - n][i] = x
    return Matrix(n, n, f.field, cols)


def is_invertible(f: LinearMap) -> bool:
    return f.rows == f.cols and rank(f) == f.rows
