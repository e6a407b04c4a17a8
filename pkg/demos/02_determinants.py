"""Closed-form determinants against the elimination oracle.

The delta matrix of increments (i_1, ..., i_n) has determinant equal
to the plain product of the increments; the theta companion drops the
second increment from the product. Both facts are checked here against
fraction-free Gaussian elimination, which computes the same numbers
the slow exact way.
"""

import random

from minmatrix import (
    build_delta_matrix,
    build_min_matrix,
    build_theta_matrix,
    delta_det_closed,
    det_bareiss,
    theta_det_closed,
)

print("det(A_n) is always 1:")
for n in (1, 5, 25, 100):
    print(f"   n={n:3d}: {det_bareiss(build_min_matrix(n))}")

inc = [2, 3, 4]
print(f"\nDelta determinant of {inc}:")
print("   closed form (product):", delta_det_closed(inc))
print("   elimination oracle:   ", det_bareiss(build_delta_matrix(inc)))

inc = [3, 1, 2, 5]
print(f"\nTheta determinant of {inc} (note the 1 in slot 2 is irrelevant):")
print("   closed form:        ", theta_det_closed(inc))
print("   elimination oracle: ", det_bareiss(build_theta_matrix(inc)))

print("\nRandom cross-check, including negative increments:")
rng = random.Random(0)
mismatches = 0
for _ in range(500):
    inc = [rng.randint(-4, 9) for _ in range(rng.randint(1, 10))]
    if delta_det_closed(inc) != det_bareiss(build_delta_matrix(inc)):
        mismatches += 1
print(f"   500 trials, {mismatches} mismatches")
