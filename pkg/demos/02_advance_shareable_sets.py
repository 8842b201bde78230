#!/usr/bin/env python3
"""Which shares can be handed out before the secret exists?

A share set J is advance shareable exactly when shortening the check row
space on J removes 2|J| dimensions.  A cheaper sufficient test compares
|J| against the minimum symplectic weight of the dual space; it can be
pessimistic, as the last example shows.
"""

from advshare import (
    dual_min_weight,
    enumerate_advance_shareable,
    is_advance_shareable,
    is_advance_shareable_sufficient,
    normal_form,
    shorten,
    validate_stabilizer,
)

code = validate_stabilizer(
    [[1, 1, 1, 1, 0, 0, 0, 0], [0, 0, 0, 0, 1, 1, 1, 1]], p=2, n=4
)

# The exact criterion, spelled out for J = {4}:
space = code.f_space()
shortened = shorten(space, [4])
print(f"dim f(S) = {space.dim}, dim shortened on {{4}} = {shortened.dim}")
print("advance shareable {4}:", is_advance_shareable(code, [4]))
print("advance shareable {1,2}:", is_advance_shareable(code, [1, 2]))

# The normal form behind the criterion: for each chosen share one row keeps
# the only x entry (value mu) and one row the only z entry (-1).
nf = normal_form(code, [4])
print("mu =", nf.mu)
print(nf.h_prime)

# Batch enumeration with both certificates per set.
for entry in enumerate_advance_shareable(code, max_size=2):
    print(entry.shares, "weight-certified:", entry.weight_criterion)

# The weight shortcut is only sufficient.  Two independent XX/ZZ blocks
# plus an idle share: the idle share drops the dual weight to 1, so the
# shortcut certifies nothing, yet {1} is perfectly shareable.
gap = validate_stabilizer(
    [
        [1, 1, 0, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 1, 1, 0, 0, 0],
        [0, 0, 1, 1, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 1, 1, 0],
    ],
    p=2,
    n=5,
)
print("gap code dual weight:", dual_min_weight(gap))
print("shortcut certifies {1}:", is_advance_shareable_sufficient(gap, [1]))
print("exact criterion on {1}:", is_advance_shareable(gap, [1]))
