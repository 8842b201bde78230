"""Linear algebra over the prime field F_p for small p.

Scalars are plain Python ints in ``[0, p)``, vectors and matrices are integer
numpy arrays taken modulo ``p``.  Every routine takes the modulus explicitly
and returns freshly allocated arrays; nothing is mutated in place.

Supported moduli are the small primes 2, 3, 5 and 7: exhaustive codeword
scans elsewhere in the package cap problem sizes long before larger fields
become interesting.

Elimination is deterministic: the pivot for each column is the first row with
a nonzero entry, and pivots are normalized to 1, so reduced forms are
reproducible across runs.
"""

from __future__ import annotations

from typing import Iterator, Optional

import numpy as np

PRIMES = (2, 3, 5, 7)

#: Default cap on the number of vectors an exhaustive span scan may visit.
DEFAULT_ENUM_BUDGET = 2**20


def check_modulus(p: int) -> int:
    if p not in PRIMES:
        raise ValueError(f"modulus must be one of {PRIMES}, got {p}")
    return p


def as_matrix(m, p: int) -> np.ndarray:
    """Coerce to a 2-d int64 array reduced mod p."""
    check_modulus(p)
    a = np.asarray(m, dtype=np.int64)
    if a.ndim != 2:
        raise ValueError(f"expected a 2-d array, got shape {a.shape}")
    return a % p


def as_vector(v, p: int) -> np.ndarray:
    check_modulus(p)
    a = np.asarray(v, dtype=np.int64)
    if a.ndim != 1:
        raise ValueError(f"expected a 1-d array, got shape {a.shape}")
    return a % p


def inv_scalar(a: int, p: int) -> int:
    """Multiplicative inverse of a nonzero scalar mod prime p."""
    a %= p
    if a == 0:
        raise ZeroDivisionError("0 has no inverse")
    return pow(a, p - 2, p)


def rref(m, p: int) -> tuple[np.ndarray, int, list[int]]:
    """Reduced row echelon form.

    Returns ``(r, rank, pivot_columns)`` where ``r`` is row-equivalent to
    ``m``, fully reduced, with pivot entries normalized to 1 and zero rows
    (if any) at the bottom.  ``pivot_columns`` is strictly increasing.
    """
    a = as_matrix(m, p)
    rows, cols = a.shape
    a = a.copy()
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        pivot_row = r + int(nz[0])
        if pivot_row != r:
            a[[r, pivot_row]] = a[[pivot_row, r]]
        a[r] = (a[r] * inv_scalar(int(a[r, c]), p)) % p
        # Clear the column everywhere else in one vectorized pass.
        factors = a[:, c].copy()
        factors[r] = 0
        a = (a - np.outer(factors, a[r])) % p
        pivots.append(c)
        r += 1
    return a, len(pivots), pivots


def rank(m, p: int) -> int:
    return rref(m, p)[1]


def kernel(m, p: int) -> np.ndarray:
    """Basis of the right null space, one vector per row.

    The basis vectors carry a 1 in "their" free column and are returned in
    reduced form; the row count is ``cols - rank(m)``.
    """
    a = as_matrix(m, p)
    rows, cols = a.shape
    r, rk, pivots = rref(a, p)
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for i, fc in enumerate(free):
        basis[i, fc] = 1
        for row_idx, pc in enumerate(pivots):
            basis[i, pc] = (-r[row_idx, fc]) % p
    return basis


def solve(m, b, p: int) -> Optional[np.ndarray]:
    """One solution ``x`` of ``m @ x = b`` mod p, or None if none exists."""
    a = as_matrix(m, p)
    rhs = as_vector(b, p)
    if rhs.shape[0] != a.shape[0]:
        raise ValueError(f"rhs length {rhs.shape[0]} != row count {a.shape[0]}")
    aug = np.concatenate([a, rhs[:, None]], axis=1)
    r, _, pivots = rref(aug, p)
    cols = a.shape[1]
    if cols in pivots:
        return None
    x = np.zeros(cols, dtype=np.int64)
    for row_idx, pc in enumerate(pivots):
        x[pc] = r[row_idx, cols]
    return x


def in_row_space(m, v, p: int) -> bool:
    """Whether v lies in the row space of m."""
    a = as_matrix(m, p)
    w = as_vector(v, p)
    if a.shape[0] == 0:
        return not w.any()
    return solve(a.T, w, p) is not None


def row_space_equal(a, b, p: int) -> bool:
    ra = rref(a, p)[0]
    rb = rref(b, p)[0]
    ra = ra[np.any(ra, axis=1)]
    rb = rb[np.any(rb, axis=1)]
    return ra.shape == rb.shape and bool(np.array_equal(ra, rb))


def span_size(dim: int, p: int) -> int:
    return p**dim


def iter_span(basis, p: int, chunk: int = 1 << 14) -> Iterator[np.ndarray]:
    """Yield all p**dim vectors of the span of ``basis`` in blocks.

    Coefficient tuples are enumerated in mixed-radix order (last coefficient
    fastest), so the zero vector is always the first entry of the first
    block.  Callers enforce their own budgets before iterating.
    """
    a = as_matrix(basis, p)
    dim = a.shape[0]
    total = span_size(dim, p)
    if dim == 0:
        yield np.zeros((1, a.shape[1]), dtype=np.int64)
        return
    radix = p ** np.arange(dim - 1, -1, -1, dtype=np.int64)
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        coeffs = (idx[:, None] // radix[None, :]) % p
        yield (coeffs @ a) % p
