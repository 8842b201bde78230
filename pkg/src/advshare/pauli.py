"""The generalized Pauli group on n qudits of prime dimension p.

Single-qudit generators act on the computational basis as

    X |i> = |i + 1 mod p>        Z |i> = w^i |i>

with ``w = exp(2*pi*1j/p)`` (so ``w = -1`` for qubits).  A group element is
kept in the canonical form ``w^t X(a) Z(b)`` with ``t`` mod p and exponent
vectors ``a, b`` in F_p^n; multiplication reorders factors with the rule
``Z(b) X(c) = w^{<b,c>} X(c) Z(b)``.

Stripping the phase gives the homomorphism onto F_p^{2n}: ``w^t X(a) Z(b)``
maps to the symplectic vector ``(a | b)``.  Commutation is then read off the
symplectic product: ``P Q = w^e Q P`` with ``e = -<f(P), f(Q)>_s``.

Wire order for dense matrices matches tensor-factor order: qudit 0 is the
leftmost Kronecker factor.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from . import gfp, symplectic
from .errors import BudgetExceededError, DependentRowsError, NotCommutativeError
from .symplectic import SymplecticCode, SymplecticVector


def omega(p: int) -> complex:
    return np.exp(2j * np.pi / p)


def zeta(p: int) -> complex:
    """Primitive 2p-th root of unity; omega(p) == zeta(p)**2.

    Odd powers of zeta appear only for p = 2, where quadratic-phase gates
    and operators with odd x.z overlap step outside the group <w>.
    """
    return np.exp(1j * np.pi / p)


@dataclass(frozen=True)
class PauliOperator:
    """Canonical form w^phase * X(x) Z(z) on n qudits."""

    p: int
    x: np.ndarray
    z: np.ndarray
    phase: int = 0

    def __post_init__(self):
        object.__setattr__(self, "x", gfp.as_vector(self.x, self.p))
        object.__setattr__(self, "z", gfp.as_vector(self.z, self.p))
        if self.x.shape != self.z.shape:
            raise ValueError("x and z exponent vectors must have equal length")
        object.__setattr__(self, "phase", int(self.phase) % self.p)

    @property
    def n(self) -> int:
        return int(self.x.shape[0])

    def is_identity(self) -> bool:
        return self.phase == 0 and not self.x.any() and not self.z.any()

    def __eq__(self, other) -> bool:
        if not isinstance(other, PauliOperator):
            return NotImplemented
        return (
            self.p == other.p
            and self.phase == other.phase
            and np.array_equal(self.x, other.x)
            and np.array_equal(self.z, other.z)
        )

    def __str__(self) -> str:
        terms = []
        for a, b in zip(self.x, self.z):
            if a == 0 and b == 0:
                terms.append("I")
            else:
                s = ""
                if a:
                    s += "X" if a == 1 else f"X^{a}"
                if b:
                    s += "Z" if b == 1 else f"Z^{b}"
                terms.append(s)
        head = "" if self.phase == 0 else f"w^{self.phase} "
        return head + "(" + " ".join(terms) + ")"


def identity(p: int, n: int) -> PauliOperator:
    return PauliOperator(p, np.zeros(n, dtype=np.int64), np.zeros(n, dtype=np.int64))


def single(p: int, n: int, wire: int, x: int = 0, z: int = 0) -> PauliOperator:
    """X^x Z^z on one wire (0-based), identity elsewhere."""
    xv = np.zeros(n, dtype=np.int64)
    zv = np.zeros(n, dtype=np.int64)
    xv[wire] = x
    zv[wire] = z
    return PauliOperator(p, xv, zv)


def _check_pair(a: PauliOperator, b: PauliOperator) -> None:
    if a.p != b.p or a.n != b.n:
        raise ValueError("operands must share modulus and qudit count")


def pauli_mul(a: PauliOperator, b: PauliOperator) -> PauliOperator:
    """Canonical form of the matrix product a @ b."""
    _check_pair(a, b)
    phase = a.phase + b.phase + int(a.z @ b.x)
    return PauliOperator(a.p, a.x + b.x, a.z + b.z, phase)


def pauli_inverse(a: PauliOperator) -> PauliOperator:
    """Canonical form of the inverse (equivalently the adjoint) of a."""
    phase = -a.phase + int(a.x @ a.z)
    return PauliOperator(a.p, -a.x, -a.z, phase)


def commutation_exponent(a: PauliOperator, b: PauliOperator) -> int:
    """The exponent e with a b = w^e b a; zero iff the operators commute."""
    _check_pair(a, b)
    return int((a.z @ b.x - b.z @ a.x) % a.p)


def f_map(a: PauliOperator) -> SymplecticVector:
    """Strip the phase: w^t X(a) Z(b) -> (a | b)."""
    return SymplecticVector(a.p, a.x, a.z)


def f_inv(v: SymplecticVector, phase: int = 0) -> PauliOperator:
    return PauliOperator(v.p, v.x, v.z, phase)


def weight(a: PauliOperator) -> int:
    """Number of qudits acted on non-trivially."""
    return int(np.count_nonzero((a.x != 0) | (a.z != 0)))


def half_turn_parity(a: PauliOperator) -> int:
    """1 if the operator's eigenvalues are i * <w>, else 0.

    Only p = 2 operators with odd x.z overlap have the extra factor of i;
    every eigenvalue of a Pauli is zeta**(2j + parity) for some j.
    """
    if a.p != 2:
        return 0
    return int(a.x @ a.z) % 2


@functools.lru_cache(maxsize=None)
def _single_qudit_matrices(p: int) -> tuple[np.ndarray, np.ndarray]:
    x = np.zeros((p, p), dtype=complex)
    for i in range(p):
        x[(i + 1) % p, i] = 1.0
    z = np.diag(omega(p) ** np.arange(p))
    return x, z


def to_matrix(a: PauliOperator, budget: int = 2**12) -> np.ndarray:
    """Dense complex matrix of the operator; dimension p**n must fit budget."""
    dim = a.p**a.n
    if dim > budget:
        raise BudgetExceededError(f"dense dimension {dim} exceeds budget {budget}")
    xm, zm = _single_qudit_matrices(a.p)
    out = np.array([[omega(a.p) ** a.phase]])
    for q in range(a.n):
        factor = np.linalg.matrix_power(xm, int(a.x[q])) @ np.linalg.matrix_power(
            zm, int(a.z[q])
        )
        out = np.kron(out, factor)
    return out


@dataclass
class StabilizerCode:
    """A validated stabilizer over F_p given by its check matrix.

    The check matrix has one row per independent generator and 2n columns
    in ``(x | z)`` order; rows are pairwise symplectically orthogonal.
    ``k = n - rows`` logical qudits.  Use :func:`validate_stabilizer` to
    construct one from untrusted input.
    """

    p: int
    n: int
    check_matrix: np.ndarray = field(repr=False)
    _distance: Optional[int] = field(default=None, repr=False, compare=False)

    @property
    def num_checks(self) -> int:
        return int(self.check_matrix.shape[0])

    @property
    def k(self) -> int:
        return self.n - self.num_checks

    def generator(self, i: int) -> PauliOperator:
        """The i-th (0-based) check row as a phase-free Pauli."""
        row = self.check_matrix[i]
        return PauliOperator(self.p, row[: self.n], row[self.n :])

    def generators(self) -> list[PauliOperator]:
        return [self.generator(i) for i in range(self.num_checks)]

    def f_space(self) -> SymplecticCode:
        """Row space of the check matrix as a symplectic code."""
        return SymplecticCode(self.p, self.n, self.check_matrix)

    def __eq__(self, other) -> bool:
        if not isinstance(other, StabilizerCode):
            return NotImplemented
        return (
            self.p == other.p
            and self.n == other.n
            and np.array_equal(self.check_matrix, other.check_matrix)
        )


def validate_stabilizer(check_matrix, p: int, n: int) -> StabilizerCode:
    """Validate a candidate check matrix and wrap it.

    Rejects dependent rows outright (the row count defines k downstream, so
    silently reducing would hide caller errors) and reports the first
    non-commuting row pair by 1-based indices.
    """
    h = gfp.as_matrix(check_matrix, p) if np.size(check_matrix) else np.zeros(
        (0, 2 * n), dtype=np.int64
    )
    if h.shape[0] == 0:
        h = h.reshape(0, 2 * n)
    if h.shape[1] != 2 * n:
        raise ValueError(f"check matrix needs {2 * n} columns, got {h.shape[1]}")
    if h.shape[0] > n:
        raise DependentRowsError(
            f"{h.shape[0]} generators on {n} qudits cannot be independent and commuting"
        )
    if gfp.rank(h, p) != h.shape[0]:
        raise DependentRowsError("rows dependent: remove redundant generators")
    products = symplectic.product_matrix(h, h, p)
    bad = np.argwhere(products != 0)
    if bad.size:
        i, j = int(bad[0][0]), int(bad[0][1])
        raise NotCommutativeError(min(i, j) + 1, max(i, j) + 1)
    return StabilizerCode(p, n, h)


def code_distance(
    code: StabilizerCode, budget: int = gfp.DEFAULT_ENUM_BUDGET
) -> int:
    """Minimum symplectic weight over the dual of f(S) minus f(S) itself.

    This is the code's erasure-correction figure: fewer than d erased
    qudits are always recoverable.  Requires k >= 1; the scan is exhaustive
    over the dual space and refuses when it exceeds the budget.
    """
    if code._distance is not None:
        return code._distance
    if code.k < 1:
        raise ValueError("distance undefined for k = 0 (no logical qudits)")
    dual = symplectic.symplectic_dual(code.f_space())
    total = gfp.span_size(dual.dim, code.p)
    if total > budget:
        raise BudgetExceededError(
            f"enumeration limit: {code.p}**{dual.dim} = {total} dual codewords "
            f"exceeds budget {budget}"
        )
    h_rref, _, h_pivots = gfp.rref(code.check_matrix, code.p)
    best = code.n + 1
    for block in gfp.iter_span(dual.generators, code.p):
        # Membership in f(S): reduce by the RREF of H and compare.
        reconstructed = (block[:, h_pivots] @ h_rref) % code.p
        outside = np.any(block != reconstructed, axis=1)
        w = symplectic.symplectic_weight(block[outside], code.n)
        if w.size:
            best = min(best, int(w.min()))
    if best > code.n:
        raise RuntimeError("no dual vector outside f(S) found despite k >= 1")
    code._distance = best
    return best


def random_stabilizer(
    p: int, n: int, num_checks: int, rng: np.random.Generator
) -> StabilizerCode:
    """A uniformly-flavored random stabilizer with the given check count.

    Grows the check matrix one row at a time, sampling each new row from
    the symplectic orthogonal complement of the rows so far and rejecting
    dependent draws.  Requires ``num_checks <= n``.
    """
    gfp.check_modulus(p)
    if not 0 <= num_checks <= n:
        raise ValueError("need 0 <= num_checks <= n")
    rows = np.zeros((0, 2 * n), dtype=np.int64)
    while rows.shape[0] < num_checks:
        if rows.shape[0] == 0:
            candidates = np.eye(2 * n, dtype=np.int64)
        else:
            gx, gz = rows[:, :n], rows[:, n:]
            constraint = np.concatenate([(-gz) % p, gx], axis=1)
            candidates = gfp.kernel(constraint, p)
        coeffs = rng.integers(0, p, size=candidates.shape[0])
        candidate = (coeffs @ candidates) % p
        if not candidate.any():
            continue
        stacked = np.concatenate([rows, candidate[None, :]], axis=0)
        if gfp.rank(stacked, p) == stacked.shape[0]:
            rows = stacked
    return validate_stabilizer(rows, p, n)
