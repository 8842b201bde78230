"""Shared helper: random Clifford circuits for stress tests."""

from advshare.clifford import CliffordCircuit, Gate


def random_circuit(p, m, length, rng):
    gates = []
    while len(gates) < length:
        kind = rng.choice(["F", "P", "MUL", "SUM", "X", "Z"])
        q = int(rng.integers(m))
        if kind == "SUM":
            if m < 2:
                continue
            q2 = int(rng.integers(m - 1))
            q2 = q2 + 1 if q2 >= q else q2
            gates.append(Gate("SUM", (q, q2)))
        elif kind == "F":
            gates.append(Gate("F", (q,)))
        elif kind == "MUL":
            gates.append(Gate("MUL", (q,), int(rng.integers(1, p))))
        elif kind == "P":
            hi = 4 if p == 2 else p
            gates.append(Gate("P", (q,), int(rng.integers(hi))))
        else:
            gates.append(Gate(kind, (q,), int(rng.integers(p))))
    return CliffordCircuit(p, m, tuple(gates))
