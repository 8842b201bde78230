import itertools

import numpy as np
import pytest

from advshare import gfp
from advshare.advance import (
    construct_eaqecc,
    dual_min_weight,
    enumerate_advance_shareable,
    gram_matrix,
    is_advance_shareable,
    is_advance_shareable_sufficient,
    normal_form,
)
from advshare.errors import NotAdvanceShareableError
from advshare.pauli import PauliOperator, random_stabilizer, validate_stabilizer
from advshare.symplectic import shorten

# Sufficient-check converse failure: two independent XX/ZZ blocks plus an
# idle share.  The idle share puts weight-1 vectors in the dual, so the
# weight criterion rejects every J, yet {1} (for instance) shortens cleanly.
CONVERSE_GAP_ROWS = [
    [1, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 1, 0, 0, 0],
    [0, 0, 1, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 1, 1, 0],
]


def reference_mu(h_prime, shares, n, p):
    """Recompute each x-pivot from the published two-row sum formula."""
    c = len(shares)
    out = []
    for i, j in enumerate(shares):
        total = 0
        for col in range(1, n + 1):
            if col == j:
                continue
            total += int(h_prime[i, col - 1]) * int(h_prime[c + i, n + col - 1])
            total -= int(h_prime[c + i, col - 1]) * int(h_prime[i, n + col - 1])
        out.append(total % p)
    return out


def assert_normal_form_invariants(code, nf):
    p, n, c = nf.p, nf.n, nf.m
    assert gfp.row_space_equal(nf.h_prime, code.check_matrix, p)
    for i, j in enumerate(nf.shares):
        assert nf.mu[i] != 0
        assert int(nf.h_prime[i, j - 1]) == nf.mu[i]
        assert int(nf.h_prime[c + i, n + j - 1]) == (p - 1) % p
        for other in nf.shares:
            if other != j:
                assert nf.h_prime[i, other - 1] == 0
                assert nf.h_prime[i, n + other - 1] == 0
                assert nf.h_prime[c + i, other - 1] == 0
                assert nf.h_prime[c + i, n + other - 1] == 0
        assert nf.h_prime[i, n + j - 1] == 0
        assert nf.h_prime[c + i, j - 1] == 0
    for r in range(2 * c, nf.h_prime.shape[0]):
        for j in nf.shares:
            assert nf.h_prime[r, j - 1] == 0
            assert nf.h_prime[r, n + j - 1] == 0
    assert list(nf.mu) == reference_mu(nf.h_prime, nf.shares, n, p)


def test_exact_criterion_on_example(four_qubit):
    assert is_advance_shareable(four_qubit, [4])
    shortened = shorten(four_qubit.f_space(), [4])
    assert shortened.dim == four_qubit.num_checks - 2


def test_exact_criterion_empty_set(four_qubit):
    assert is_advance_shareable(four_qubit, [])


def test_exact_criterion_impossible_size(four_qubit):
    assert not is_advance_shareable(four_qubit, [1, 2])


def test_sufficient_on_example(four_qubit):
    assert dual_min_weight(four_qubit) == 2
    assert is_advance_shareable_sufficient(four_qubit, [4])
    for pair in itertools.combinations(range(1, 5), 2):
        assert not is_advance_shareable_sufficient(four_qubit, pair)


def test_sufficient_five_qubit_pairs(five_qubit):
    for pair in itertools.combinations(range(1, 6), 2):
        assert is_advance_shareable_sufficient(five_qubit, pair)
        assert is_advance_shareable(five_qubit, pair)


def test_sufficient_converse_fails_on_gap_code():
    code = validate_stabilizer(CONVERSE_GAP_ROWS, 2, 5)
    assert dual_min_weight(code) == 1
    assert not is_advance_shareable_sufficient(code, [1])
    assert is_advance_shareable(code, [1])
    # the construction still goes through
    plan = construct_eaqecc(code, [1])
    assert plan.parameters() == (4, 1, 1)


def test_normal_form_on_example(four_qubit):
    nf = normal_form(four_qubit, [4])
    assert nf.mu == (1,)
    assert np.array_equal(nf.h_prime, four_qubit.check_matrix)
    assert_normal_form_invariants(four_qubit, nf)


def test_normal_form_empty_set(four_qubit):
    nf = normal_form(four_qubit, [])
    assert nf.mu == ()
    assert gfp.row_space_equal(nf.h_prime, four_qubit.check_matrix, 2)


def test_normal_form_rejects_unshareable(four_qubit):
    with pytest.raises(NotAdvanceShareableError):
        normal_form(four_qubit, [1, 2])


def test_normal_form_invariants_randomized(rng):
    hits = 0
    for _ in range(40):
        p = int(rng.choice([2, 3]))
        n = 4
        rows = int(rng.integers(1, n + 1))
        code = random_stabilizer(p, n, rows, rng)
        for size in range(n + 1):
            for shares in itertools.combinations(range(1, n + 1), size):
                if is_advance_shareable(code, shares):
                    nf = normal_form(code, shares)
                    assert_normal_form_invariants(code, nf)
                    hits += 1
                else:
                    with pytest.raises(NotAdvanceShareableError):
                        normal_form(code, shares)
    assert hits > 50


def test_plan_matches_worked_example(four_qubit):
    plan = construct_eaqecc(four_qubit, [4])
    assert plan.parameters() == (3, 2, 1)
    assert plan.ell == 0
    assert plan.source_generators == (
        PauliOperator(2, [1, 1, 1], [0, 0, 0]),
        PauliOperator(2, [0, 0, 0], [1, 1, 1]),
    )
    assert plan.target_generators == (
        PauliOperator(2, [1, 0, 0], [0, 0, 0]),
        PauliOperator(2, [0, 0, 0], [1, 0, 0]),
    )
    assert plan.x_positions == {4: 1}
    assert plan.z_positions == {}
    assert plan.epr_pairs == ((4, 1),)
    assert plan.secret_shares == (2, 3)


def test_plan_empty_share_set(four_qubit):
    plan = construct_eaqecc(four_qubit, [])
    assert plan.c == 0
    assert plan.ell == 2
    assert plan.epr_pairs == ()
    assert plan.zero_shares == (1, 2)
    assert plan.secret_shares == (3, 4)
    for tgt in plan.target_generators:
        assert not tgt.x.any()
        assert int(np.count_nonzero(tgt.z)) == 1


def test_plan_gram_preservation_randomized(rng):
    checked = 0
    for _ in range(30):
        p = int(rng.choice([2, 3]))
        n = int(rng.integers(2, 6))
        rows = int(rng.integers(1, n + 1))
        code = random_stabilizer(p, n, rows, rng)
        for size in range(1, n + 1):
            for shares in itertools.combinations(range(1, n + 1), size):
                if is_advance_shareable(code, shares):
                    plan = construct_eaqecc(code, shares)
                    assert np.array_equal(
                        gram_matrix(plan.source_generators),
                        gram_matrix(plan.target_generators),
                    )
                    positions = list(plan.x_positions.values()) + list(
                        plan.z_positions.values()
                    )
                    assert len(positions) == len(set(positions))
                    assert plan.ell == code.num_checks - 2 * size
                    checked += 1
    assert checked > 30


def test_enumerate_on_example(four_qubit):
    singles = enumerate_advance_shareable(four_qubit, 1)
    assert [s.shares for s in singles] == [(1,), (2,), (3,), (4,)]
    assert all(s.dimension_criterion and s.weight_criterion for s in singles)
    pairs_too = enumerate_advance_shareable(four_qubit, 2)
    assert [s.shares for s in pairs_too] == [(1,), (2,), (3,), (4,)]


def test_enumerate_five_qubit(five_qubit):
    sets = enumerate_advance_shareable(five_qubit, 2)
    assert len(sets) == 15
    assert all(s.weight_criterion for s in sets)
    names = [s.shares for s in sets]
    assert names == sorted(names)
