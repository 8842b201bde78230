import itertools

import numpy as np
import pytest

from advshare import gfp
from advshare.errors import BudgetExceededError
from advshare.symplectic import (
    SymplecticCode,
    SymplecticVector,
    min_symplectic_weight,
    product_matrix,
    puncture,
    shorten,
    symplectic_dual,
    symplectic_product,
    symplectic_weight,
)

EXAMPLE6_DUAL_BASIS = [
    [0, 0, 1, 1, 0, 0, 0, 0],
    [0, 1, 0, 1, 0, 0, 0, 0],
    [1, 0, 0, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 1, 1],
    [0, 0, 0, 0, 0, 1, 0, 1],
    [0, 0, 0, 0, 1, 0, 0, 1],
]


def brute_dual(code):
    """Dual by scanning all p**(2n) vectors."""
    vecs = []
    for v in itertools.product(range(code.p), repeat=2 * code.n):
        v = np.array(v, dtype=np.int64)
        prods = (
            code.generators[:, : code.n] @ v[code.n :]
            - code.generators[:, code.n :] @ v[: code.n]
        ) % code.p
        if not prods.any():
            vecs.append(v)
    return SymplecticCode.from_rows(np.array(vecs).reshape(len(vecs), -1), code.p, code.n)


def brute_shorten(code, shares):
    """Shortening by scanning every codeword."""
    keep = [j for j in range(1, code.n + 1) if j not in set(shares)]
    cols = [j - 1 for j in keep] + [code.n + j - 1 for j in keep]
    rows = []
    for block in gfp.iter_span(code.generators, code.p):
        for v in block:
            zeroed = all(
                v[j - 1] == 0 and v[code.n + j - 1] == 0 for j in shares
            )
            if zeroed:
                rows.append(v[cols])
    return SymplecticCode.from_rows(
        np.array(rows).reshape(len(rows), -1), code.p, len(keep)
    )


def support_min_weight(code):
    """Minimum weight via share-support subsets, smallest first.

    Independent of the all-codeword scan: for each candidate support, tests
    whether the code meets the coordinate subspace nontrivially.
    """
    for size in range(1, code.n + 1):
        for support in itertools.combinations(range(1, code.n + 1), size):
            outside = [j for j in range(1, code.n + 1) if j not in set(support)]
            cols = [j - 1 for j in outside] + [code.n + j - 1 for j in outside]
            if cols:
                coeffs = gfp.kernel(code.generators[:, cols].T, code.p)
            else:
                coeffs = np.eye(code.dim, dtype=np.int64)
            if coeffs.shape[0]:
                vecs = (coeffs @ code.generators) % code.p
                weights = symplectic_weight(vecs, code.n)
                if (weights == size).any():
                    return size
    raise AssertionError("no nonzero codeword found")


def random_code(p, n, dim, rng):
    rows = np.zeros((0, 2 * n), dtype=np.int64)
    while rows.shape[0] < dim:
        cand = rng.integers(0, p, 2 * n)
        stacked = np.vstack([rows, cand])
        if gfp.rank(stacked, p) == stacked.shape[0]:
            rows = stacked
    return SymplecticCode.from_rows(rows, p, n)


def test_self_product_vanishes(rng):
    for p in (2, 3, 5):
        v = SymplecticVector.from_vec(rng.integers(0, p, 8), p)
        assert symplectic_product(v, v) == 0


def test_product_on_all_x_all_z_rows():
    u = SymplecticVector(2, [1, 1, 1, 1], [0, 0, 0, 0])
    v = SymplecticVector(2, [0, 0, 0, 0], [1, 1, 1, 1])
    assert symplectic_product(u, v) == 0  # 4 mod 2


def test_product_single_coordinate_qutrit():
    u = SymplecticVector(3, [1, 0], [0, 0])
    v = SymplecticVector(3, [0, 0], [1, 0])
    assert symplectic_product(u, v) == 1


def test_antisymmetry(rng):
    for _ in range(50):
        p = int(rng.choice([2, 3, 5]))
        u = SymplecticVector.from_vec(rng.integers(0, p, 6), p)
        v = SymplecticVector.from_vec(rng.integers(0, p, 6), p)
        assert (symplectic_product(u, v) + symplectic_product(v, u)) % p == 0


def test_dual_of_zero_space():
    dual = symplectic_dual(SymplecticCode.zero(3, 2))
    assert dual.dim == 4


def test_dual_of_four_qubit_matches_printed_basis(four_qubit):
    dual = symplectic_dual(four_qubit.f_space())
    assert dual.dim == 6
    for row in EXAMPLE6_DUAL_BASIS:
        assert dual.contains(row)
    assert dual == SymplecticCode.from_rows(np.array(EXAMPLE6_DUAL_BASIS), 2, 4)


def test_dual_dimensions_and_double_dual(rng):
    for _ in range(12):
        p = int(rng.choice([2, 3]))
        n = int(rng.integers(1, 4))
        dim = int(rng.integers(0, 2 * n + 1))
        code = random_code(p, n, dim, rng)
        dual = symplectic_dual(code)
        assert code.dim + dual.dim == 2 * n
        assert dual == brute_dual(code)
        assert symplectic_dual(dual) == code


def test_shorten_empty_set_is_identity(four_qubit):
    code = four_qubit.f_space()
    assert shorten(code, []) == code


def test_shorten_four_qubit_on_share_4(four_qubit):
    shortened = shorten(four_qubit.f_space(), [4])
    assert shortened.dim == 0
    assert shortened.n == 3


def test_shorten_matches_exhaustive_and_dimension_bound(rng):
    for _ in range(12):
        p = int(rng.choice([2, 3]))
        n = int(rng.integers(1, 5))
        dim = int(rng.integers(0, min(2 * n, 5) + 1))
        code = random_code(p, n, dim, rng)
        for size in range(n + 1):
            for shares in itertools.combinations(range(1, n + 1), size):
                got = shorten(code, shares)
                assert got == brute_shorten(code, shares)
                assert got.dim >= code.dim - 2 * size
                # every shortened codeword lifts back into the original code
                for row in got.generators:
                    lifted = np.zeros(2 * n, dtype=np.int64)
                    keep = [j for j in range(1, n + 1) if j not in set(shares)]
                    for idx, j in enumerate(keep):
                        lifted[j - 1] = row[idx]
                        lifted[n + j - 1] = row[len(keep) + idx]
                    assert code.contains(lifted)


def test_puncture_plain_deletion():
    code = SymplecticCode.from_rows([[0, 0, 1, 1, 0, 0, 0, 0]], 2, 4)
    punc = puncture(code, [4])
    assert punc.n == 3
    assert np.array_equal(punc.generators, [[0, 0, 1, 0, 0, 0]])


def test_puncture_empty_set(four_qubit):
    code = four_qubit.f_space()
    assert puncture(code, []) == code


def test_shorten_puncture_duality(four_qubit, rng):
    code = four_qubit.f_space()
    dual = symplectic_dual(code)
    assert shorten(code, [4]) == symplectic_dual(puncture(dual, [4]))
    for _ in range(8):
        p = int(rng.choice([2, 3]))
        n = int(rng.integers(1, 4))
        c = random_code(p, n, int(rng.integers(0, 2 * n + 1)), rng)
        for size in range(n + 1):
            for shares in itertools.combinations(range(1, n + 1), size):
                lhs = shorten(c, shares)
                rhs = symplectic_dual(puncture(symplectic_dual(c), shares))
                assert lhs == rhs


def test_min_weight_four_qubit_dual(four_qubit):
    dual = symplectic_dual(four_qubit.f_space())
    assert min_symplectic_weight(dual) == 2


def test_min_weight_single_generator():
    code = SymplecticCode.from_rows([[1, 1, 1, 1, 0, 0, 0, 0]], 2, 4)
    assert min_symplectic_weight(code) == 4


def test_min_weight_five_qubit_dual(five_qubit):
    dual = symplectic_dual(five_qubit.f_space())
    assert dual.dim == 6
    assert min_symplectic_weight(dual) == 3


def test_min_weight_budget_refusal(five_qubit):
    dual = symplectic_dual(five_qubit.f_space())
    with pytest.raises(BudgetExceededError, match="enumeration limit"):
        min_symplectic_weight(dual, budget=10)


def test_min_weight_zero_space_rejected():
    with pytest.raises(ValueError):
        min_symplectic_weight(SymplecticCode.zero(2, 2))


def test_min_weight_against_support_oracle(rng, four_qubit, five_qubit):
    cases = [symplectic_dual(four_qubit.f_space()), symplectic_dual(five_qubit.f_space())]
    for _ in range(10):
        p = int(rng.choice([2, 3]))
        n = int(rng.integers(1, 4))
        code = random_code(p, n, int(rng.integers(1, 2 * n + 1)), rng)
        cases.append(code)
    for code in cases:
        assert min_symplectic_weight(code) == support_min_weight(code)


def test_product_matrix_consistency(rng):
    p = 3
    a = rng.integers(0, p, (3, 8))
    b = rng.integers(0, p, (2, 8))
    table = product_matrix(a, b, p)
    for i in range(3):
        for j in range(2):
            u = SymplecticVector.from_vec(a[i], p)
            v = SymplecticVector.from_vec(b[j], p)
            assert table[i, j] == symplectic_product(u, v)
