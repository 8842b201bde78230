"""Advance-shareability analysis and entanglement-assisted code planning.

A share set J can be handed out before the secret exists exactly when
shortening the stabilizer's symplectic row space on J drops its dimension by
the full ``2|J|``.  Equivalently, the 2|J| columns owned by J (x and z parts
together) have full column rank in the check matrix, and row reduction can
then isolate, for each j in J, one row carrying the only nonzero x entry on
J's columns (value ``mu_j``) and one row carrying the only nonzero z entry
(normalized to -1).  Restricting those reduced rows to the complement of J
yields the generators of a smaller, non-commuting group; pairing it with a
sparse single-wire group of identical commutation structure gives an
entanglement-assisted code that corrects erasures exactly as well as the
original stabilizer.

A cheaper sufficient test: J is shareable whenever |J| is strictly below the
minimum symplectic weight of the dual of the row space.  The converse fails
in general (see the test suite for a recorded counterexample).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from . import gfp, symplectic
from .errors import NotAdvanceShareableError
from .pauli import PauliOperator, StabilizerCode, commutation_exponent
from .symplectic import SymplecticCode, min_symplectic_weight, shorten, symplectic_dual


def _validated_shares(shares: Iterable[int], n: int) -> tuple[int, ...]:
    js = tuple(sorted(set(int(j) for j in shares)))
    for j in js:
        if not 1 <= j <= n:
            raise ValueError(f"share index {j} outside 1..{n}")
    return js


def is_advance_shareable(code: StabilizerCode, shares: Iterable[int]) -> bool:
    """Exact criterion: shortening on J removes 2|J| dimensions."""
    js = _validated_shares(shares, code.n)
    if not js:
        return True
    if 2 * len(js) > code.num_checks:
        return False
    shortened = shorten(code.f_space(), js)
    return shortened.dim == code.num_checks - 2 * len(js)


def dual_min_weight(
    code: StabilizerCode, budget: int = gfp.DEFAULT_ENUM_BUDGET
) -> int:
    """Minimum symplectic weight of the dual of the check row space."""
    return min_symplectic_weight(symplectic_dual(code.f_space()), budget=budget)


def is_advance_shareable_sufficient(
    code: StabilizerCode, shares: Iterable[int], budget: int = gfp.DEFAULT_ENUM_BUDGET
) -> bool:
    """One-directional shortcut: |J| below the dual minimum weight.

    True implies :func:`is_advance_shareable`; False decides nothing.
    """
    js = _validated_shares(shares, code.n)
    if not js:
        return True
    return len(js) < dual_min_weight(code, budget=budget)


@dataclass(frozen=True)
class NormalForm:
    """Row-reduced check matrix isolating the share set J.

    Within ``h_prime`` (row-equivalent to the input check matrix, columns in
    the original order), row ``i`` (0-based, ``i < m``) holds the x pivot
    ``mu[i]`` on share ``shares[i]`` and zeros on every other J-owned
    column; row ``m + i`` holds the z pivot ``-1`` on share ``shares[i]``;
    all later rows vanish on J-owned columns.
    """

    p: int
    n: int
    shares: tuple[int, ...]
    h_prime: np.ndarray = field(repr=False)
    mu: tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.shares)


def _mu_from_rows(
    x_row: np.ndarray, z_row: np.ndarray, n: int, skip_share: int, p: int
) -> int:
    """The pivot value forced on the x row by orthogonality against the z row.

    Sums x_row[j] * z_row[n+j] - z_row[j] * x_row[n+j] over all shares
    except ``skip_share``.
    """
    j = skip_share - 1
    ax, az = x_row[:n].copy(), x_row[n:].copy()
    bx, bz = z_row[:n].copy(), z_row[n:].copy()
    ax[j] = az[j] = bx[j] = bz[j] = 0
    return int((ax @ bz - az @ bx) % p)


def normal_form(code: StabilizerCode, shares: Iterable[int]) -> NormalForm:
    """Compute the J-isolating normal form of the check matrix.

    Raises :class:`NotAdvanceShareableError` when the J-owned columns do not
    reach rank 2|J|.  The x pivots land wherever elimination puts them (here:
    1, since pivots are normalized); each is checked against the value forced
    by row orthogonality and must be nonzero.
    """
    js = _validated_shares(shares, code.n)
    p, n = code.p, code.n
    c = len(js)
    if c == 0:
        r, _, _ = gfp.rref(code.check_matrix, p)
        return NormalForm(p, n, (), r, ())
    x_cols = [j - 1 for j in js]
    z_cols = [n + j - 1 for j in js]
    owned = x_cols + z_cols
    rest = [col for col in range(2 * n) if col not in set(owned)]
    perm = owned + rest
    reduced, rank, pivots = gfp.rref(code.check_matrix[:, perm], p)
    if pivots[: 2 * c] != list(range(2 * c)):
        raise NotAdvanceShareableError(
            f"shares {js}: J-owned columns have rank {sum(1 for t in pivots if t < 2 * c)}"
            f" < {2 * c}"
        )
    h_prime = np.empty_like(reduced)
    h_prime[:, perm] = reduced
    # Z-pivot rows are scaled to carry exactly -1 on their share column.
    h_prime[c : 2 * c] = (-h_prime[c : 2 * c]) % p
    mu = []
    for i, j in enumerate(js):
        pivot = int(h_prime[i, j - 1])
        forced = _mu_from_rows(h_prime[i], h_prime[c + i], n, j, p)
        if pivot != forced or pivot == 0:
            raise RuntimeError(
                f"normal form invariant violated on share {j}: "
                f"pivot {pivot}, forced value {forced}"
            )
        mu.append(pivot)
    return NormalForm(p, n, js, h_prime, tuple(mu))


@dataclass(frozen=True)
class EAQECCPlan:
    """Everything needed to encode with |J| pre-shared entangled pairs.

    ``source_generators`` are the normal-form rows restricted to the
    complement of J: they generate the group the encoding unitary must
    realize.  ``target_generators`` live on the same ``n - |J|`` wires but
    act on single wires only: X^{mu_i} and Z on wire ``x_positions[j_i]``
    for each pair, plus a bare Z on ``z_positions[r]`` for every remaining
    row.  Both tuples have identical pairwise commutation exponents.

    Positions are 1-based share labels.  Wire ``w`` of the smaller system
    corresponds to ``complement[w]``.
    """

    p: int
    n: int
    k: int
    shares: tuple[int, ...]
    normal: NormalForm
    source_generators: tuple[PauliOperator, ...]
    target_generators: tuple[PauliOperator, ...]
    x_positions: dict[int, int]
    z_positions: dict[int, int]

    @property
    def c(self) -> int:
        return len(self.shares)

    @property
    def ell(self) -> int:
        return self.n - self.k - 2 * self.c

    @property
    def complement(self) -> tuple[int, ...]:
        in_j = set(self.shares)
        return tuple(j for j in range(1, self.n + 1) if j not in in_j)

    @property
    def epr_pairs(self) -> tuple[tuple[int, int], ...]:
        """(advance share, sender share) pairs holding entangled states."""
        return tuple((j, self.x_positions[j]) for j in self.shares)

    @property
    def zero_shares(self) -> tuple[int, ...]:
        return tuple(self.z_positions[r] for r in sorted(self.z_positions))

    @property
    def secret_shares(self) -> tuple[int, ...]:
        used = set(self.x_positions.values()) | set(self.z_positions.values())
        return tuple(j for j in self.complement if j not in used)

    def wire_of_share(self, share: int) -> int:
        return self.complement.index(share)

    def parameters(self) -> tuple[int, int, int]:
        """(length, logical qudits, entangled pairs) of the assisted code."""
        return (self.n - self.c, self.k, self.c)


def gram_matrix(generators: Sequence[PauliOperator]) -> np.ndarray:
    g = np.zeros((len(generators), len(generators)), dtype=np.int64)
    for i, a in enumerate(generators):
        for j, b in enumerate(generators):
            g[i, j] = commutation_exponent(a, b)
    return g


def construct_eaqecc(code: StabilizerCode, shares: Iterable[int]) -> EAQECCPlan:
    """Build the entanglement-assisted encoding plan for share set J.

    Wire positions are assigned greedily: the smallest complement shares
    host the pair wires (in J order), the next smallest host the bare-Z
    ancilla wires, and whatever remains carries the secret.
    """
    nf = normal_form(code, shares)
    p, n, c = nf.p, nf.n, nf.m
    js = nf.shares
    rows = code.num_checks
    complement = tuple(j for j in range(1, n + 1) if j not in set(js))
    m = len(complement)
    keep_x = [j - 1 for j in complement]
    keep_z = [n + j - 1 for j in complement]

    source = tuple(
        PauliOperator(p, nf.h_prime[i, keep_x], nf.h_prime[i, keep_z])
        for i in range(rows)
    )

    x_positions = {js[i]: complement[i] for i in range(c)}
    z_positions = {r: complement[c + (r - 2 * c)] for r in range(2 * c, rows)}

    target = []
    for i in range(c):
        wire = complement.index(x_positions[js[i]])
        xv = np.zeros(m, dtype=np.int64)
        xv[wire] = nf.mu[i]
        target.append(PauliOperator(p, xv, np.zeros(m, dtype=np.int64)))
    for i in range(c):
        wire = complement.index(x_positions[js[i]])
        zv = np.zeros(m, dtype=np.int64)
        zv[wire] = 1
        target.append(PauliOperator(p, np.zeros(m, dtype=np.int64), zv))
    for r in range(2 * c, rows):
        wire = complement.index(z_positions[r])
        zv = np.zeros(m, dtype=np.int64)
        zv[wire] = 1
        target.append(PauliOperator(p, np.zeros(m, dtype=np.int64), zv))

    plan = EAQECCPlan(
        p=p,
        n=n,
        k=code.k,
        shares=js,
        normal=nf,
        source_generators=source,
        target_generators=tuple(target),
        x_positions=x_positions,
        z_positions=z_positions,
    )
    if not np.array_equal(gram_matrix(plan.source_generators), gram_matrix(plan.target_generators)):
        raise RuntimeError(
            "commutation structure of restricted generators does not match the"
            " single-wire pattern; normal form is inconsistent"
        )
    return plan


@dataclass(frozen=True)
class ShareableSet:
    """One advance-shareable set with its certificates."""

    shares: tuple[int, ...]
    #: exact shortening-dimension criterion (always True for listed sets)
    dimension_criterion: bool
    #: weight-based sufficient criterion, |J| < d_min of the dual
    weight_criterion: bool


def enumerate_advance_shareable(
    code: StabilizerCode, max_size: int, budget: int = gfp.DEFAULT_ENUM_BUDGET
) -> list[ShareableSet]:
    """All nonempty shareable J with |J| <= max_size, lexicographically.

    Sets beyond ``floor((n-k)/2)`` shares can never pass, so ``max_size`` is
    effectively capped there.  Each result notes whether the weight shortcut
    alone would have certified it.
    """
    max_size = min(max_size, code.n)
    threshold = dual_min_weight(code, budget=budget) if max_size >= 1 else 0
    found = []
    candidates = []
    for size in range(1, max_size + 1):
        candidates.extend(itertools.combinations(range(1, code.n + 1), size))
    for js in sorted(candidates):
        if is_advance_shareable(code, js):
            found.append(
                ShareableSet(
                    shares=js,
                    dimension_criterion=True,
                    weight_criterion=len(js) < threshold,
                )
            )
    return found
