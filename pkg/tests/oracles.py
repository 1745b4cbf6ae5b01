"""Independent reference computations for the tests.

Nothing here imports the package's elimination code.  Dense matrices are plain
lists of Fractions, or numpy int64 arrays reduced mod a prime.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

import numpy as np

LARGE_PRIME = 2_147_483_647  # 2^31 - 1, products stay below 2^63


def dense(f) -> list[list]:
    """Dense list-of-rows copy of a package LinearMap."""
    out = [[0] * f.cols for _ in range(f.rows)]
    for j in range(f.cols):
        for i, x in f.col(j).items():
            out[i][j] = x
    return out


def rank_fraction(rows: list[list]) -> int:
    """Textbook Gauss-Jordan over Q."""
    a = [[Fraction(x) for x in r] for r in rows]
    if not a:
        return 0
    m, n = len(a), len(a[0])
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(m):
            if i != r and a[i][c] != 0:
                k = a[i][c]
                a[i] = [x - k * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == m:
            break
    return r


def nullspace_fraction(rows: list[list], ncols: int) -> list[list[Fraction]]:
    """Basis of the right kernel over Q, one vector per free column."""
    a = [[Fraction(x) for x in r] for r in rows]
    m = len(a)
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, m) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(m):
            if i != r and a[i][c] != 0:
                k = a[i][c]
                a[i] = [x - k * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    basis = []
    for free in (c for c in range(ncols) if c not in pivots):
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for row, pc in enumerate(pivots):
            v[pc] = -a[row][free]
        basis.append(v)
    return basis


def rank_mod_p(mat: np.ndarray, p: int) -> int:
    """Rank of an integer matrix mod p, vectorised row reduction."""
    a = np.array(mat, dtype=np.int64) % p
    m, n = a.shape
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, c]), -1, p)
        a[r] = (a[r] * inv) % p
        col = a[:, c].copy()
        col[r] = 0
        rows = np.nonzero(col)[0]
        if rows.size:
            a[rows] = (a[rows] - np.outer(col[rows], a[r])) % p
        r += 1
    return r


def to_integer_matrix(rows: list[list], field_p: int | None) -> tuple[np.ndarray, int]:
    """Integer numpy matrix with the same kernel, and the prime to reduce by.

    Over F_p the entries are already residues.  Over Q every row is scaled by
    the lcm of its denominators and reduced mod a large prime.
    """
    if field_p is not None:
        return np.array(rows, dtype=np.int64), field_p
    out = []
    for r in rows:
        den = lcm(*(Fraction(x).denominator for x in r)) if r else 1
        out.append([int(Fraction(x) * den) for x in r])
    big = max((abs(x) for r in out for x in r), default=0)
    assert big < LARGE_PRIME, "entries too large for the int64 oracle"
    return np.array(out, dtype=np.int64), LARGE_PRIME


def kernel_dim_bounds(rows: list[list], ncols: int, field_p: int | None) -> int:
    """Kernel dimension over the field (exact over F_p, an upper bound over Q)."""
    if not rows:
        return ncols
    mat, p = to_integer_matrix(rows, field_p)
    return ncols - rank_mod_p(mat, p)


def dense_kron(a: list[list], b: list[list]) -> list[list]:
    return np.kron(np.array(a, dtype=object), np.array(b, dtype=object)).tolist()


def dense_matmul(a: list[list], b: list[list]) -> list[list]:
    return (np.array(a, dtype=object) @ np.array(b, dtype=object)).tolist()


def dense_identity(n: int) -> list[list]:
    return np.identity(n, dtype=np.int64).astype(object).tolist()


def _scaled(mats: list[list[list]], field_p: int | None) -> list[np.ndarray]:
    """Integer copies of the matrices, all scaled by one common denominator over Q."""
    if field_p is not None:
        return [np.array([[int(x) % field_p for x in r] for r in m], dtype=np.int64) for m in mats]
    den = lcm(*(Fraction(x).denominator for m in mats for r in m for x in r))
    return [np.array([[int(Fraction(x) * den) for x in r] for r in m], dtype=np.int64) for m in mats]


def cotensor_matrix(delta_R: list[list], delta_L: list[list], n: int, field_p: int | None) -> np.ndarray:
    """Dense integer (Delta_R (x) id - id (x) Delta_L) on M (x) M, up to a nonzero scalar.

    Delta_R: M -> M (x) C and Delta_L: M -> C (x) M are dense and row-major.
    """
    dR, dL = _scaled([delta_R, delta_L], field_p)
    eye = np.identity(n, dtype=np.int64)
    return np.kron(dR, eye) - np.kron(eye, dL)


def basis_matrix(vectors: list[dict], ambient: int, field_p: int | None) -> np.ndarray:
    """Columns are the given sparse vectors, each scaled to integers over Q."""
    out = np.zeros((ambient, len(vectors)), dtype=np.int64)
    for k, v in enumerate(vectors):
        if field_p is None:
            den = lcm(*(Fraction(x).denominator for x in v.values())) if v else 1
            for i, x in v.items():
                out[i, k] = int(Fraction(x) * den)
        else:
            for i, x in v.items():
                out[i, k] = int(x) % field_p
    return out


def cotensor_dimension(delta_R, delta_L, n: int, basis: list[dict], field_p: int | None) -> dict:
    """Naive dense nullspace count for the cotensor, plus a check of a claimed basis.

    ``oracle`` is n^2 minus the rank mod p: exact over F_p and an upper bound
    over Q.  ``basis_in_kernel`` is an exact integer product (guarded against
    overflow); ``basis_rank`` is taken mod p, a lower bound for the rank over Q.
    Together, oracle == len(basis) == basis_rank certifies the dimension.
    """
    A = cotensor_matrix(delta_R, delta_L, n, field_p)
    p = field_p or LARGE_PRIME
    upper = n * n - rank_mod_p(A, p)
    V = basis_matrix(basis, n * n, field_p)
    if V.size and A.size:
        bound = int(np.abs(A).max()) * int(np.abs(V).max()) * A.shape[1]
        assert bound < 2**62, "integer product could overflow"
        prod = A @ V
        in_kernel = not np.any(prod % field_p) if field_p else not np.any(prod)
        brank = rank_mod_p(V, p)
    else:
        in_kernel, brank = True, 0
    return {"oracle": upper, "basis_in_kernel": in_kernel, "basis_rank": brank}


# ---------------------------------------------------------------- group-level structure constants


def double_product(G, a: int, g: int, b: int, h: int) -> tuple[int, int] | None:
    """(delta_a (x) g)(delta_b (x) h) in D(G): delta_a (x) gh when a = g b g^-1, else zero."""
    if a != G.mul(G.mul(g, b), G.inv(g)):
        return None
    return a, G.mul(g, h)


def group_algebra_dense_mul(G) -> list[list]:
    n = G.order
    rows = [[0] * (n * n) for _ in range(n)]
    for a in range(n):
        for b in range(n):
            rows[G.mul(a, b)][a * n + b] = 1
    return rows
