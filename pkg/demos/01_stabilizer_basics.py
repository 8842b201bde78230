#!/usr/bin/env python3
"""Stabilizer codes from check matrices: validation, parameters, distance.

A check matrix has one row per generator and columns split as (x | z):
entry j of the x part is the X exponent on share j, entry j of the z part
the Z exponent.  Rows must be independent and pairwise symplectically
orthogonal (the operators commute).
"""

import numpy as np

from advshare import code_distance, dual_min_weight, validate_stabilizer
from advshare.errors import NotCommutativeError
from advshare.pauli import to_matrix

# The running example: all-X and all-Z generators on four qubits.
H = [
    [1, 1, 1, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 1, 1, 1],
]
code = validate_stabilizer(H, p=2, n=4)
print(f"accepted: n={code.n}, k={code.k}, p={code.p}")
print(f"distance d = {code_distance(code)}  (corrects any d-1 = 1 erasure)")
print(f"dual minimum symplectic weight = {dual_min_weight(code)}")

# The generators as matrices, for the skeptical reader.
m1 = to_matrix(code.generator(0))
m2 = to_matrix(code.generator(1))
print("generators commute:", np.abs(m1 @ m2 - m2 @ m1).max() < 1e-12)

# Anticommuting rows are rejected with the offending pair named.
try:
    validate_stabilizer([[1, 0, 0, 0], [0, 0, 1, 0]], p=2, n=2)
except NotCommutativeError as err:
    print("rejected as expected:", err)

# A qutrit example: the same pattern over F_3.
qutrit = validate_stabilizer([[1, 1, 1, 0, 0, 0], [0, 0, 0, 1, 1, 1]], p=3, n=3)
print(f"qutrit code: n={qutrit.n}, k={qutrit.k}, d={code_distance(qutrit)}")
