"""Clifford circuits on m qudits of prime dimension and their synthesis.

Gate set (q, q' are 0-based wires, parameters live in F_p):

==========  =========================================  ======================
text form   unitary                                    action on (x, z)
==========  =========================================  ======================
``F q``     Fourier: |j> -> sum_k w^{jk} |k> / sqrt p  (x, z) -> (-z, x)
``P q g``   diagonal quadratic phase (see below)       (x, z) -> (x, z + g*x)
``MUL q g`` |j> -> |g*j mod p>, g invertible           (x, z) -> (g*x, z/g)
``SUM q q'``|a, b> -> |a, a + b mod p>                 x' += x;  z -= z'
``X q a``   X^a                                        identity
``Z q b``   Z^b                                        identity
==========  =========================================  ======================

For odd p the phase gate multiplies |j> by w^{g * j(j-1)/2}; for p = 2 it is
diag(1, i^g).  Conjugating a Pauli through a circuit therefore stays inside
the group generated by zeta = exp(i*pi/p) (a 2p-th root of unity): phases
are tracked exactly as integer exponents of zeta, which are even whenever
the result is a plain w power.

Synthesis completes the f-images of two generator tuples with equal
commutation structure to symplectic bases, forms the change-of-basis matrix,
peels it into elementary gates column pair by column pair, and finishes with
a Pauli layer that zeroes every representable phase.  The returned circuit U
satisfies U g_i U^dag = phase_i * b_i for each source/target pair, with
phase_i an exact root of unity.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import gfp
from .errors import BudgetExceededError, DependentRowsError, GramMismatchError
from .pauli import PauliOperator, omega, zeta

DEFAULT_DENSE_BUDGET = 2**12

GATE_KINDS = ("F", "P", "MUL", "SUM", "X", "Z")


@dataclass(frozen=True)
class Gate:
    kind: str
    qudits: tuple[int, ...]
    param: int = 0

    def __str__(self) -> str:
        fields = [self.kind, *map(str, self.qudits)]
        if self.kind in ("P", "MUL", "X", "Z"):
            fields.append(str(self.param))
        return " ".join(fields)


def gate(kind: str, *qudits: int, param: int = 0) -> Gate:
    if kind not in GATE_KINDS:
        raise ValueError(f"unknown gate kind {kind!r}")
    return Gate(kind, tuple(int(q) for q in qudits), int(param))


@dataclass(frozen=True)
class CliffordCircuit:
    """An ordered gate list on m qudits of dimension p."""

    p: int
    m: int
    gates: tuple[Gate, ...] = ()

    def __post_init__(self):
        gfp.check_modulus(self.p)
        for g in self.gates:
            for q in g.qudits:
                if not 0 <= q < self.m:
                    raise ValueError(f"gate {g} addresses wire {q} outside 0..{self.m - 1}")
            if g.kind == "MUL" and g.param % self.p == 0:
                raise ValueError("MUL parameter must be invertible")
            if g.kind == "SUM" and g.qudits[0] == g.qudits[1]:
                raise ValueError("SUM control and target must differ")

    def __len__(self) -> int:
        return len(self.gates)

    def then(self, *gates_: Gate) -> "CliffordCircuit":
        return CliffordCircuit(self.p, self.m, self.gates + tuple(gates_))

    def inverse(self) -> "CliffordCircuit":
        inv: list[Gate] = []
        for g in reversed(self.gates):
            inv.extend(_inverse_gates(g, self.p))
        return CliffordCircuit(self.p, self.m, tuple(inv))

    def to_text(self) -> str:
        return "\n".join(str(g) for g in self.gates)

    @classmethod
    def from_text(cls, text: str, p: int, m: int) -> "CliffordCircuit":
        gates_: list[Gate] = []
        for raw in text.splitlines():
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            kind = parts[0].upper()
            if kind == "SUM":
                gates_.append(gate(kind, int(parts[1]), int(parts[2])))
            elif kind == "F":
                gates_.append(gate(kind, int(parts[1])))
            elif kind in ("P", "MUL", "X", "Z"):
                gates_.append(gate(kind, int(parts[1]), param=int(parts[2])))
            else:
                raise ValueError(f"unknown gate line {raw!r}")
        return cls(p, m, tuple(gates_))


def _inverse_gates(g: Gate, p: int) -> list[Gate]:
    if g.kind == "F":
        order = 2 if p == 2 else 4
        return [g] * (order - 1)
    if g.kind == "P":
        if p == 2:
            return [g] * 3 if g.param % 4 else []
        return [Gate("P", g.qudits, (-g.param) % p)]
    if g.kind == "MUL":
        return [Gate("MUL", g.qudits, gfp.inv_scalar(g.param, p))]
    if g.kind == "SUM":
        return [g] * (p - 1)
    if g.kind in ("X", "Z"):
        return [Gate(g.kind, g.qudits, (-g.param) % p)]
    raise ValueError(g.kind)


# ---------------------------------------------------------------------------
# symbolic conjugation


@dataclass(frozen=True)
class PhasedPauli:
    """A Pauli with an exact phase zeta**tau, tau mod 2p.

    Even tau means the operator is w^{tau/2} X(x) Z(z); odd tau (possible
    only for p = 2) carries an extra factor of i.
    """

    p: int
    x: np.ndarray
    z: np.ndarray
    tau: int = 0

    def __post_init__(self):
        object.__setattr__(self, "x", gfp.as_vector(self.x, self.p))
        object.__setattr__(self, "z", gfp.as_vector(self.z, self.p))
        object.__setattr__(self, "tau", int(self.tau) % (2 * self.p))

    @classmethod
    def from_pauli(cls, a: PauliOperator) -> "PhasedPauli":
        return cls(a.p, a.x, a.z, 2 * a.phase)

    def phase_complex(self) -> complex:
        return zeta(self.p) ** self.tau

    def as_pauli(self) -> PauliOperator:
        if self.tau % 2:
            raise ValueError("phase is an odd zeta power, not representable as w^t")
        return PauliOperator(self.p, self.x, self.z, self.tau // 2)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PhasedPauli):
            return NotImplemented
        return (
            self.p == other.p
            and self.tau == other.tau
            and np.array_equal(self.x, other.x)
            and np.array_equal(self.z, other.z)
        )


def _conjugate_gate(g: Gate, op: PhasedPauli) -> PhasedPauli:
    p = op.p
    x, z, tau = op.x.copy(), op.z.copy(), op.tau
    if g.kind == "F":
        q = g.qudits[0]
        a, b = int(x[q]), int(z[q])
        x[q], z[q] = (-b) % p, a
        tau -= 2 * a * b
    elif g.kind == "P":
        q, gam = g.qudits[0], g.param % p
        a = int(x[q])
        z[q] = (z[q] + gam * a) % p
        if p == 2:
            tau += g.param * a
        else:
            tau += gam * a * (a - 1)
    elif g.kind == "MUL":
        q, gam = g.qudits[0], g.param % p
        x[q] = (x[q] * gam) % p
        z[q] = (z[q] * gfp.inv_scalar(gam, p)) % p
    elif g.kind == "SUM":
        qc, qt = g.qudits
        x[qt] = (x[qt] + x[qc]) % p
        z[qc] = (z[qc] - z[qt]) % p
    elif g.kind == "X":
        q = g.qudits[0]
        tau -= 2 * g.param * int(z[q])
    elif g.kind == "Z":
        q = g.qudits[0]
        tau += 2 * g.param * int(x[q])
    else:
        raise ValueError(g.kind)
    return PhasedPauli(p, x, z, tau)


def conjugate_pauli(
    circuit: CliffordCircuit, op: PauliOperator | PhasedPauli
) -> PhasedPauli:
    """Exact canonical form of U op U^dag for the circuit's unitary U."""
    cur = PhasedPauli.from_pauli(op) if isinstance(op, PauliOperator) else op
    if cur.p != circuit.p or cur.x.shape[0] != circuit.m:
        raise ValueError("operator and circuit must share p and wire count")
    for g in circuit.gates:
        cur = _conjugate_gate(g, cur)
    return cur


def symplectic_matrix(circuit: CliffordCircuit) -> np.ndarray:
    """The 2m x 2m matrix of the circuit's action on f-images (columns)."""
    m, p = circuit.m, circuit.p
    out = np.zeros((2 * m, 2 * m), dtype=np.int64)
    for col in range(2 * m):
        x = np.zeros(m, dtype=np.int64)
        z = np.zeros(m, dtype=np.int64)
        if col < m:
            x[col] = 1
        else:
            z[col - m] = 1
        img = conjugate_pauli(circuit, PhasedPauli(p, x, z))
        out[:m, col] = img.x
        out[m:, col] = img.z
    return out


def standard_form(m: int) -> np.ndarray:
    """Matrix of the symplectic product: <u, v>_s = u^T Omega v."""
    omega_m = np.zeros((2 * m, 2 * m), dtype=np.int64)
    omega_m[:m, m:] = np.eye(m, dtype=np.int64)
    omega_m[m:, :m] = -np.eye(m, dtype=np.int64)
    return omega_m


# ---------------------------------------------------------------------------
# dense realization


def _gate_tensor(arr: np.ndarray, g: Gate, p: int, axes: Sequence[int]) -> np.ndarray:
    """Apply one gate to a complex tensor whose listed axes are qudits."""
    if g.kind == "F":
        q = axes[0]
        f = omega(p) ** np.outer(np.arange(p), np.arange(p)) / np.sqrt(p)
        arr = np.tensordot(f, arr, axes=([1], [q]))
        return np.moveaxis(arr, 0, q)
    if g.kind in ("P", "Z"):
        q = axes[0]
        j = np.arange(p)
        if g.kind == "Z":
            diag = omega(p) ** (g.param * j)
        elif p == 2:
            diag = zeta(2) ** (g.param * j)
        else:
            diag = omega(p) ** ((g.param * (j * (j - 1) // 2)) % p)
        shape = [1] * arr.ndim
        shape[q] = p
        return arr * diag.reshape(shape)
    if g.kind == "X":
        return np.roll(arr, g.param % p, axis=axes[0])
    if g.kind == "MUL":
        gam_inv = gfp.inv_scalar(g.param, p)
        idx = (gam_inv * np.arange(p)) % p
        return np.take(arr, idx, axis=axes[0])
    if g.kind == "SUM":
        qc, qt = axes
        moved = np.moveaxis(arr, qc, 0)
        slices = [np.roll(moved[a], a, axis=qt - 1 if qt > qc else qt) for a in range(p)]
        return np.moveaxis(np.stack(slices, axis=0), 0, qc)
    raise ValueError(g.kind)


def apply_circuit_tensor(
    arr: np.ndarray, circuit: CliffordCircuit, axes: Sequence[int] | None = None
) -> np.ndarray:
    """Apply the circuit to a tensor; axes[w] is the tensor axis of wire w."""
    if axes is None:
        axes = list(range(circuit.m))
    out = np.asarray(arr, dtype=complex)
    for g in circuit.gates:
        out = _gate_tensor(out, g, circuit.p, [axes[q] for q in g.qudits])
    return out


def to_unitary(
    circuit: CliffordCircuit, budget: int = DEFAULT_DENSE_BUDGET
) -> np.ndarray:
    """Dense unitary of the circuit, dimension p**m."""
    dim = circuit.p**circuit.m
    if dim > budget:
        raise BudgetExceededError(f"dense dimension {dim} exceeds budget {budget}")
    eye = np.eye(dim, dtype=complex).reshape((circuit.p,) * circuit.m + (dim,))
    out = apply_circuit_tensor(eye, circuit)
    return out.reshape(dim, dim)


# ---------------------------------------------------------------------------
# symplectic basis completion


def _sp(gram: np.ndarray, u: np.ndarray, v: np.ndarray, p: int) -> int:
    return int((u @ gram @ v) % p)


def _span_reduction(gram: np.ndarray, p: int):
    """Hyperbolic pairs and radical of a tuple, in coefficient space.

    Works entirely from the Gram matrix, so running it on two tuples with
    equal Grams yields identical coefficients.
    """
    r = gram.shape[0]
    pairs: list[tuple[np.ndarray, np.ndarray]] = []
    radical: list[np.ndarray] = []
    for i in range(r):
        w = np.zeros(r, dtype=np.int64)
        w[i] = 1
        for a, b in pairs:
            w = (w - _sp(gram, w, b, p) * a + _sp(gram, w, a, p) * b) % p
        partner = None
        for idx, c in enumerate(radical):
            gam = _sp(gram, c, w, p)
            if gam:
                partner = (idx, gam)
                break
        if partner is not None:
            idx, gam = partner
            c = radical.pop(idx)
            b_new = (w * gfp.inv_scalar(gam, p)) % p
            radical = [
                (d - _sp(gram, d, b_new, p) * c + _sp(gram, d, c, p) * b_new) % p
                for d in radical
            ]
            pairs.append((c, b_new))
        elif w.any():
            radical.append(w)
        else:
            raise DependentRowsError("generator f-images are linearly dependent")
    return pairs, radical


def _orthogonality_rows(vectors: Sequence[np.ndarray], p: int) -> np.ndarray:
    """Rows r with r @ d = <v, d>_s for each constraint vector v."""
    rows = []
    for v in vectors:
        m = v.shape[0] // 2
        rows.append(np.concatenate([(-v[m:]) % p, v[:m]]))
    return np.array(rows, dtype=np.int64).reshape(len(rows), -1)


def _complete_basis(vectors: np.ndarray, gram: np.ndarray, p: int) -> np.ndarray:
    """Extend a tuple to a full symplectic basis with canonical Gram.

    The output rows come in hyperbolic pairs: first the pairs found inside
    the span, then each radical vector with a solved partner, then fresh
    pairs from the orthogonal complement.  The arrangement (hence the Gram
    of the result) depends only on the input Gram.
    """
    two_m = vectors.shape[1]
    pairs, radical = _span_reduction(gram, p)
    basis: list[np.ndarray] = []
    for a, b in pairs:
        basis.append((a @ vectors) % p)
        basis.append((b @ vectors) % p)
    radical_vecs = [(c @ vectors) % p for c in radical]
    for j, c in enumerate(radical_vecs):
        constraints = basis + radical_vecs[j:]
        rows = _orthogonality_rows(constraints, p)
        rhs = np.zeros(len(constraints), dtype=np.int64)
        rhs[len(basis)] = 1  # <c, d> = 1, everything else orthogonal
        d = gfp.solve(rows, rhs, p)
        if d is None:
            raise RuntimeError("symplectic completion failed: partner system inconsistent")
        basis.append(c)
        basis.append(d)
    while len(basis) < two_m:
        rows = _orthogonality_rows(basis, p)
        if rows.size == 0:
            e = np.zeros(two_m, dtype=np.int64)
            e[0] = 1
        else:
            null = gfp.kernel(rows, p)
            e = null[0]
        rows2 = _orthogonality_rows(basis + [e], p)
        rhs = np.zeros(len(basis) + 1, dtype=np.int64)
        rhs[-1] = 1
        f = gfp.solve(rows2, rhs, p)
        if f is None:
            raise RuntimeError("symplectic completion failed: no partner for fresh vector")
        basis.append(e)
        basis.append(f)
    return np.array(basis, dtype=np.int64)


def _inv_matrix(m: np.ndarray, p: int) -> np.ndarray:
    size = m.shape[0]
    aug = np.concatenate([m % p, np.eye(size, dtype=np.int64)], axis=1)
    r, rk, _ = gfp.rref(aug, p)
    if rk < size:
        raise ValueError("matrix is singular")
    return r[:, size:]


# ---------------------------------------------------------------------------
# decomposition of a symplectic matrix into gates


def _action(g: Gate, m: int, p: int) -> np.ndarray:
    """Symplectic matrix of a single gate (acts on column vectors)."""
    a = np.eye(2 * m, dtype=np.int64)
    if g.kind == "F":
        q = g.qudits[0]
        a[q, q] = 0
        a[m + q, m + q] = 0
        a[q, m + q] = (-1) % p
        a[m + q, q] = 1
    elif g.kind == "P":
        q = g.qudits[0]
        a[m + q, q] = g.param % p
    elif g.kind == "MUL":
        q = g.qudits[0]
        a[q, q] = g.param % p
        a[m + q, m + q] = gfp.inv_scalar(g.param, p)
    elif g.kind == "SUM":
        qc, qt = g.qudits
        a[qt, qc] = 1
        a[m + qc, m + qt] = (-1) % p
    return a % p


def _decompose_symplectic(matrix: np.ndarray, m: int, p: int) -> list[Gate]:
    """Elementary gates realizing a symplectic matrix.

    Reduces the matrix to the identity by left-applying gate actions, one
    column pair per wire, then returns the inverses in reverse order.
    """
    cur = matrix.copy() % p
    ops: list[Gate] = []

    def apply(g: Gate, times: int = 1):
        nonlocal cur
        act = _action(g, m, p)
        for _ in range(times % (4 * p)):
            cur = (act @ cur) % p
            ops.append(g)

    for q in range(m):
        col = cur[:, q]
        if not col[q:m].any():
            w = q + int(np.nonzero(col[m + q :])[0][0])
            apply(Gate("F", (w,)))
        col = cur[:, q]
        if col[q] == 0:
            w = q + int(np.nonzero(col[q + 1 : m])[0][0]) + 1
            apply(Gate("SUM", (w, q)))
        if cur[q, q] != 1:
            apply(Gate("MUL", (q,), gfp.inv_scalar(int(cur[q, q]), p)))
        for w in range(q + 1, m):
            if cur[w, q]:
                apply(Gate("SUM", (q, w)), times=p - int(cur[w, q]))
        for w in range(q + 1, m):
            if cur[m + w, q]:
                apply(Gate("F", (w,)))
                apply(Gate("SUM", (q, w)), times=p - int(cur[w, q]))
        if cur[m + q, q]:
            apply(Gate("P", (q,), (p - int(cur[m + q, q])) % p))
        if cur[q, q] != 1 or cur[:, q].sum() != 1:
            raise RuntimeError(f"column {q} not reduced to a unit vector")

        col2 = cur[:, m + q]
        if col2[m + q] != 1:
            raise RuntimeError("symplectic pairing broken during reduction")
        for w in range(q + 1, m):
            if cur[m + w, m + q]:
                apply(Gate("SUM", (w, q)), times=int(cur[m + w, m + q]))
            if cur[w, m + q]:
                apply(Gate("F", (w,)))
                apply(Gate("SUM", (w, q)), times=int(cur[m + w, m + q]))
        if cur[q, m + q]:
            gam = int(cur[q, m + q])
            f_inv_count = 1 if p == 2 else 3
            apply(Gate("F", (q,)), times=f_inv_count)
            apply(Gate("P", (q,), gam))
            apply(Gate("F", (q,)))
        if not (cur[:, m + q] == np.eye(2 * m, dtype=np.int64)[:, m + q]).all():
            raise RuntimeError(f"column {m + q} not reduced to a unit vector")

    if not np.array_equal(cur, np.eye(2 * m, dtype=np.int64)):
        raise RuntimeError("reduction did not reach the identity")
    gates_: list[Gate] = []
    for g in reversed(ops):
        gates_.extend(_inverse_gates(g, p))
    return gates_


# ---------------------------------------------------------------------------
# synthesis


def _f_rows(ops: Sequence[PauliOperator]) -> np.ndarray:
    return np.array([np.concatenate([a.x, a.z]) for a in ops], dtype=np.int64).reshape(
        len(ops), -1
    )


def synthesize(
    source: Sequence[PauliOperator],
    target: Sequence[PauliOperator],
    m: int | None = None,
    p: int | None = None,
) -> CliffordCircuit:
    """A circuit whose unitary conjugates each source_i into target_i.

    Parameters
    ----------
    source, target : sequences of PauliOperator
        Equal-length tuples on the same wires.  Each tuple's f-images must
        be linearly independent, and the two pairwise commutation-exponent
        matrices must agree entry by entry.
    m, p : int, optional
        Wire count and dimension; inferred from the operators when omitted.

    Returns
    -------
    CliffordCircuit
        U with ``U source_i U^dag = phase_i * target_i``.  Phases are exact
        roots of unity and are normalized to 1 whenever the two operators
        have compatible spectra (always, for plan-derived generator pairs);
        query them with :func:`conjugate_pauli`.

    Raises
    ------
    GramMismatchError
        If the commutation matrices differ.
    DependentRowsError
        If either tuple has dependent f-images.
    """
    if len(source) != len(target):
        raise ValueError("source and target must have equal length")
    if not source:
        if m is None or p is None:
            raise ValueError("empty tuples require explicit m and p")
        return CliffordCircuit(p, m)
    p = source[0].p if p is None else p
    m = source[0].n if m is None else m
    for a in (*source, *target):
        if a.p != p or a.n != m:
            raise ValueError("all operators must share p and wire count")
    if len(source) > 2 * m:
        raise ValueError(f"{len(source)} generators cannot be independent on {m} wires")

    u_rows = _f_rows(source)
    v_rows = _f_rows(target)
    omega_m = standard_form(m)
    gram_u = (u_rows @ omega_m @ u_rows.T) % p
    gram_v = (v_rows @ omega_m @ v_rows.T) % p
    if not np.array_equal(gram_u, gram_v):
        raise GramMismatchError(
            "source and target commutation-exponent matrices differ"
        )
    if gfp.rank(u_rows, p) < len(source) or gfp.rank(v_rows, p) < len(target):
        raise DependentRowsError("generator f-images are linearly dependent")

    # Commutation exponents are the negated symplectic products, so equal
    # Grams of f-images and equal commutation matrices coincide.
    basis_u = _complete_basis(u_rows, gram_u, p)
    basis_v = _complete_basis(v_rows, gram_v, p)
    t_matrix = (basis_v.T @ _inv_matrix(basis_u.T, p)) % p
    if not np.array_equal((t_matrix.T @ omega_m @ t_matrix) % p, omega_m % p):
        raise RuntimeError("change of basis is not symplectic")
    for u, v in zip(u_rows, v_rows):
        if not np.array_equal((t_matrix @ u) % p, v):
            raise RuntimeError("change of basis does not map source images to target")

    circuit = CliffordCircuit(p, m, tuple(_decompose_symplectic(t_matrix, m, p)))

    # Zero out every representable phase with a trailing Pauli layer.
    residues = []
    for src, tgt in zip(source, target):
        img = conjugate_pauli(circuit, src)
        if not (np.array_equal(img.x, tgt.x) and np.array_equal(img.z, tgt.z)):
            raise RuntimeError("decomposed circuit does not realize the basis change")
        residues.append((img.tau - 2 * tgt.phase) % (2 * p))
    fixable = [i for i, r in enumerate(residues) if r % 2 == 0]
    if fixable:
        rows = _orthogonality_rows([v_rows[i] for i in fixable], p)
        # Conjugating an operator with image v by the Pauli layer of image w
        # shifts its w-exponent by <v, w>_s = rows @ w.
        rhs = np.array([(-residues[i] // 2) % p for i in fixable], dtype=np.int64)
        correction = gfp.solve(rows, rhs, p)
        if correction is None:
            raise RuntimeError("phase correction system inconsistent")
        extra = []
        for q in range(m):
            if correction[q]:
                extra.append(Gate("X", (q,), int(correction[q])))
            if correction[m + q]:
                extra.append(Gate("Z", (q,), int(correction[m + q])))
        circuit = circuit.then(*extra)
    return circuit


def encoding_circuit(plan) -> CliffordCircuit:
    """The encoding unitary of an EAQECC plan.

    Conjugates the plan's single-wire preparation generators into its code
    generators, so applying the circuit to the easily prepared state (pair
    halves, |0> ancillas, secret) yields a codeword frame.
    """
    return synthesize(
        plan.target_generators,
        plan.source_generators,
        m=plan.n - plan.c,
        p=plan.p,
    )
