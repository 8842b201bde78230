import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from advshare import gfp


def brute_kernel_dim(m, p):
    """Count solutions of m @ v = 0 by scanning all p**cols vectors."""
    m = np.asarray(m)
    cols = m.shape[1]
    count = 0
    for v in itertools.product(range(p), repeat=cols):
        if not ((m @ np.array(v)) % p).any():
            count += 1
    dim = 0
    while p**dim < count:
        dim += 1
    assert p**dim == count
    return dim


def test_rref_zero_matrix():
    r, rank, pivots = gfp.rref(np.zeros((3, 4), dtype=int), 2)
    assert rank == 0 and pivots == []
    assert not r.any()


def test_rref_identity():
    r, rank, pivots = gfp.rref(np.eye(3, dtype=int), 2)
    assert rank == 3 and pivots == [0, 1, 2]
    assert np.array_equal(r, np.eye(3, dtype=int))


def test_rref_disjoint_support_rows(four_qubit):
    _, rank, _ = gfp.rref(four_qubit.check_matrix, 2)
    assert rank == 2


def test_kernel_identity():
    assert gfp.kernel(np.eye(3, dtype=int), 3).shape == (0, 3)


def test_kernel_parity_row():
    basis = gfp.kernel([[1, 1]], 2)
    assert basis.shape == (1, 2)
    assert np.array_equal(basis[0], [1, 1])


def test_kernel_dimension_matches_exhaustive_count(four_qubit):
    h = four_qubit.check_matrix
    basis = gfp.kernel(h, 2)
    assert basis.shape[0] == 6
    assert brute_kernel_dim(h, 2) == 6
    assert not ((h @ basis.T) % 2).any()
    assert gfp.rank(basis, 2) == 6


def test_solve_identity():
    b = np.array([1, 0, 2])
    x = gfp.solve(np.eye(3, dtype=int), b, 3)
    assert np.array_equal(x, b)


def test_solve_forced_pair():
    x = gfp.solve([[1, 1]], [1], 2)
    assert x is not None and int(x.sum() % 2) == 1


def test_solve_inconsistent():
    assert gfp.solve([[0, 0]], [1], 2) is None


def test_solve_dimension_mismatch():
    with pytest.raises(ValueError):
        gfp.solve([[1, 0]], [1, 1], 2)


def test_modulus_restricted_to_small_primes():
    with pytest.raises(ValueError):
        gfp.rref([[1]], 4)
    with pytest.raises(ValueError):
        gfp.rref([[1]], 11)


@st.composite
def matrices(draw):
    p = draw(st.sampled_from(gfp.PRIMES))
    rows = draw(st.integers(1, 5))
    cols = draw(st.integers(1, 6))
    data = draw(
        st.lists(
            st.lists(st.integers(0, p - 1), min_size=cols, max_size=cols),
            min_size=rows,
            max_size=rows,
        )
    )
    return np.array(data, dtype=np.int64), p


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_rank_nullity_and_row_space(mp):
    m, p = mp
    r, rank, pivots = gfp.rref(m, p)
    assert gfp.rank(r, p) == rank
    assert pivots == sorted(pivots) and len(set(pivots)) == len(pivots)
    for row_idx, pc in enumerate(pivots):
        assert r[row_idx, pc] == 1
    basis = gfp.kernel(m, p)
    assert rank + basis.shape[0] == m.shape[1]
    if basis.size:
        assert not ((m @ basis.T) % p).any()
    # every original row stays in the reduced row space and vice versa
    for row in m:
        assert gfp.in_row_space(r, row, p)
    for row in r[:rank]:
        assert gfp.in_row_space(m, row, p)


@settings(max_examples=150, deadline=None)
@given(matrices(), st.randoms(use_true_random=False))
def test_solve_substitution(mp, pyrandom):
    m, p = mp
    x_true = np.array([pyrandom.randrange(p) for _ in range(m.shape[1])])
    b = (m @ x_true) % p
    x = gfp.solve(m, b, p)
    assert x is not None
    assert np.array_equal((m @ x) % p, b)


def test_iter_span_covers_everything():
    basis = np.array([[1, 0, 1], [0, 1, 1]])
    seen = {tuple(v) for block in gfp.iter_span(basis, 2) for v in block}
    expected = {tuple((a * basis[0] + b * basis[1]) % 2) for a in range(2) for b in range(2)}
    assert seen == expected
